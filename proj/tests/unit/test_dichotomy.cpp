#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "surfmin/dichotomy.hpp"

using namespace surfmin;

namespace {

VertexSet range(int a, int b) {
    VertexSet s;
    for (int i = a; i < b; ++i) s.insert(i);
    return s;
}

void check_witness(const Graph& g, const DichotomyOutcome& o, const PatternId& want) {
    REQUIRE(o.tag == DichotomyOutcome::Tag::Witness);
    CHECK(o.pattern == want);
    CHECK(oracle::model_ok(g, pattern_graph(o.pattern).graph, o.model.branch_sets));
}

}  // namespace

TEST_SUITE("dichotomy") {

TEST_CASE("star_comb examples") {
    Graph star;
    for (int i = 1; i <= 5; ++i) star.add_edge(0, i);
    auto a = star_comb(star, range(1, 6), 5);
    REQUIRE(a.found());
    CHECK(a.structure.kind == CombStructure::Kind::Star);
    CHECK(a.structure.carrier.paths.front().front() == 0);

    Graph p = path_graph(12);
    VertexSet every_other;
    for (int i = 0; i < 12; i += 2) every_other.insert(i);
    auto b = star_comb(p, every_other, 4);
    REQUIRE(b.found());
    CHECK(b.structure.kind == CombStructure::Kind::Comb);
    CHECK(verify_structure(p, every_other, b.structure).ok);

    Graph bt = oracle::binary_tree(4);
    auto c = star_comb(bt, range(15, 31), 4);
    REQUIRE(c.found());
    CHECK(verify_structure(bt, range(15, 31), c.structure).ok);

    CHECK_THROWS(star_comb(disjoint_copies(path_graph(2), 2), {0, 2}, 1));
}

TEST_CASE("two_star_search examples") {
    Graph star;
    for (int i = 1; i <= 6; ++i) star.add_edge(0, i);
    auto a = two_star_search(star, range(1, 7), 3, 1);
    REQUIRE(a.found());
    CHECK(a.structure.kind == CombStructure::Kind::DominatingSet);
    CHECK(a.structure.designated == std::vector<Vertex>{0});

    Graph sub = oracle::subdivided_star(6);
    auto b = two_star_search(sub, range(7, 13), 6, 2);
    REQUIRE(b.found());
    CHECK(b.structure.kind == CombStructure::Kind::TwoStar);
    CHECK(verify_structure(sub, range(7, 13), b.structure).ok);

    Graph p = path_graph(20);
    auto c = two_star_search(p, p.vertex_set(), 4, 2);
    REQUIRE(c.found());
    CHECK(c.structure.kind == CombStructure::Kind::Comb);
    CHECK(verify_structure(p, p.vertex_set(), c.structure).ok);
}

TEST_CASE("two_connected_structures examples") {
    Graph k26 = complete_bipartite(2, 6);
    auto a = two_connected_structures(k26, range(2, 8), 5);
    REQUIRE(a.found());
    CHECK(a.structure.kind == CombStructure::Kind::DoubleStar);

    Graph cl = oracle::circular_ladder(6);
    auto b = two_connected_structures(cl, cl.vertex_set(), 4);
    REQUIRE(b.found());
    CHECK(b.structure.kind == CombStructure::Kind::Ladder);
    CHECK(verify_structure(cl, cl.vertex_set(), b.structure).ok);

    Graph w = oracle::wheel(6);
    auto c = two_connected_structures(w, range(1, 7), 5);
    REQUIRE(c.found());
    CHECK(c.structure.kind == CombStructure::Kind::Fan);
    CHECK(c.structure.designated == std::vector<Vertex>{0});

    CHECK_THROWS_AS(two_connected_structures(path_graph(4), {0, 3}, 1), std::invalid_argument);
}

TEST_CASE("verify_structure catches broken carriers") {
    Graph star;
    for (int i = 1; i <= 4; ++i) star.add_edge(0, i);
    auto a = star_comb(star, range(1, 5), 4);
    REQUIRE(a.found());
    CombStructure s = a.structure;
    s.level = 5;
    CHECK(!verify_structure(star, range(1, 5), s).ok);
    CHECK(!verify_structure(star, range(1, 3), a.structure).ok);
}

TEST_CASE("forest_edge_dichotomy examples") {
    std::mt19937 rng(1);
    auto a = forest_edge_dichotomy(oracle::random_tree(10, rng), 2, 0);
    REQUIRE(a.tag == DichotomyOutcome::Tag::Flaw);
    CHECK(a.flaw_edges.empty());

    Graph tri = disjoint_copies(complete_graph(3), 3);
    check_witness(tri, forest_edge_dichotomy(tri, 3, 2), PatternId::of_aux(AuxKind::OmegaK3, 3));

    Graph k28 = complete_bipartite(2, 8);
    check_witness(k28, forest_edge_dichotomy(k28, 4, 2), PatternId::of_aux(AuxKind::K2w, 4));
    CHECK(find_minor(k28, complete_bipartite(2, 4)).found());

    Graph bq = oracle::bouquet(complete_graph(3), 3, 0);
    check_witness(bq, forest_edge_dichotomy(bq, 3, 1), PatternId::of_aux(AuxKind::VeeK3, 3));
}

TEST_CASE("forest_edge flaw is exactly the cycle rank") {
    std::mt19937 rng(2);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracle::random_graph(8, 0.3, rng);
        const int rank = oracle::cycle_rank(g);
        for (int k : {rank - 1, rank}) {
            if (k < 0) continue;
            auto o = forest_edge_dichotomy(g, 2, k, Deadline::after_seconds(10));
            CHECK((o.tag == DichotomyOutcome::Tag::Flaw) == (k >= rank));
            if (o.tag == DichotomyOutcome::Tag::Flaw) {
                CHECK(static_cast<int>(o.flaw_edges.size()) == rank);
                CHECK(oracle::cycle_rank(g.without_edges(o.flaw_edges)) == 0);
            }
        }
    }
}

TEST_CASE("forest_contract_dichotomy examples") {
    Graph k28 = complete_bipartite(2, 8);
    auto a = forest_contract_dichotomy(k28, 3, 2);
    REQUIRE(a.tag == DichotomyOutcome::Tag::Flaw);
    CHECK(a.flaw_edges.size() <= 2);
    CHECK(oracle::cycle_rank(contract(k28, a.flaw_edges)) == 0);
    // one contraction is never enough
    auto b = forest_contract_dichotomy(k28, 10, 1);
    CHECK(b.tag != DichotomyOutcome::Tag::Flaw);
    for (const auto& e : k28.edges()) CHECK(oracle::cycle_rank(contract(k28, {e})) > 0);

    Graph bq = oracle::bouquet(complete_graph(3), 3, 0);
    check_witness(bq, forest_contract_dichotomy(bq, 3, 1), PatternId::of_aux(AuxKind::VeeK3, 3));

    Graph tri = disjoint_copies(complete_graph(3), 3);
    check_witness(tri, forest_contract_dichotomy(tri, 3, 2), PatternId::of_aux(AuxKind::OmegaK3, 3));
    auto c = forest_contract_dichotomy(tri, 3, 3);
    REQUIRE(c.tag == DichotomyOutcome::Tag::Flaw);
    CHECK(c.flaw_edges.size() == 3);
}

TEST_CASE("almost_outerplanar_dichotomy examples") {
    Graph c6 = cycle_graph(6);
    c6.add_edge(0, 3);
    auto a = almost_outerplanar_dichotomy(c6, 2, 0);
    REQUIRE(a.tag == DichotomyOutcome::Tag::Flaw);
    CHECK(a.flaw_edges.empty());

    Graph k4s = disjoint_copies(complete_graph(4), 3);
    check_witness(k4s, almost_outerplanar_dichotomy(k4s, 3, 2), PatternId::of_aux(AuxKind::OmegaK4, 3));

    Graph g1 = aux_pattern(AuxKind::G1, 3);
    check_witness(g1, almost_outerplanar_dichotomy(g1, 3, 1), PatternId::of_aux(AuxKind::G1, 3));
    Graph g2 = aux_pattern(AuxKind::G2, 3);
    check_witness(g2, almost_outerplanar_dichotomy(g2, 3, 1), PatternId::of_aux(AuxKind::G2, 3));

    auto f = almost_outerplanar_dichotomy(k4s, 3, 3);
    REQUIRE(f.tag == DichotomyOutcome::Tag::Flaw);
    CHECK(verify_outcome(k4s, f, BaseClass::Outerplanar).ok);
}

TEST_CASE("planar_vertex_flaws examples") {
    auto a = planar_vertex_flaws(oracle::wheel(7), 2, 0);
    REQUIRE(a.tag == DichotomyOutcome::Tag::Flaw);
    CHECK(a.flaw_vertices.empty());

    Graph s1 = sigma(1, 3);
    check_witness(s1, planar_vertex_flaws(s1, 3, 2), PatternId::sigma(1, 3));

    auto k6 = planar_vertex_flaws(complete_graph(6), 2, 3);
    REQUIRE(k6.tag == DichotomyOutcome::Tag::Flaw);
    CHECK(k6.flaw_vertices.size() == 2);
    // no single vertex suffices
    for (Vertex v = 0; v < 6; ++v) CHECK(oracle::has_kuratowski_subdivision(complete_graph(6).without_vertices({v})));
    CHECK(!oracle::has_kuratowski_subdivision(complete_graph(6).without_vertices(k6.flaw_vertices)));
}

TEST_CASE("outcomes verify on random graphs") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        Graph g = oracle::random_graph(7, 0.45, rng);
        const int k = static_cast<int>(rng() % 3);
        auto e = forest_edge_dichotomy(g, 2, k, Deadline::after_seconds(5));
        if (e.tag != DichotomyOutcome::Tag::Exhausted) CHECK(verify_outcome(g, e, BaseClass::Forest).ok);
        auto c = forest_contract_dichotomy(g, 2, k, Deadline::after_seconds(5));
        if (c.tag != DichotomyOutcome::Tag::Exhausted) CHECK(verify_outcome(g, c, BaseClass::Forest).ok);
        auto o = almost_outerplanar_dichotomy(g, 2, k, Deadline::after_seconds(5));
        if (o.tag != DichotomyOutcome::Tag::Exhausted) CHECK(verify_outcome(g, o, BaseClass::Outerplanar).ok);
        auto p = planar_vertex_flaws(g, 2, k, Deadline::after_seconds(5));
        if (p.tag != DichotomyOutcome::Tag::Exhausted) CHECK(verify_outcome(g, p, BaseClass::Planar).ok);
    }
}

TEST_CASE("classify examples") {
    auto a = classify(sigma(3, 3), 3, 2, 3, Deadline::after_seconds(60));
    REQUIRE(!a.witnesses.empty());
    CHECK(a.witnesses.front().index == 3);
    CHECK(oracle::model_ok(sigma(3, 3), sigma(3, 3), a.witnesses.front().model.branch_sets));

    MarkedGraph u5 = u_pattern(5, false, 3);
    Graph c = cone(u5.graph, u5.marked).first;
    auto b = classify(c, 3, 2, 3, Deadline::after_seconds(60));
    bool eight = false;
    for (const auto& w : b.witnesses) eight = eight || (w.index == 8 && w.level == 3);
    CHECK(eight);

    auto p = classify(oracle::wheel(6), 2, 2, 1);
    CHECK(p.witnesses.empty());
    REQUIRE(p.decomposition.has_value());
    CHECK(p.decomposition->pieces.size() == 1);
    CHECK(p.definitive());
}

}

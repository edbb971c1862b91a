#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "surfmin/decomposition.hpp"
#include "surfmin/patterns.hpp"

using namespace surfmin;

namespace {

// Planar outgrowth: a path of `len` new vertices hung on `at`.
Graph with_tail(Graph g, Vertex at, int len) {
    Vertex prev = at, next = g.max_vertex() + 1;
    for (int i = 0; i < len; ++i) {
        g.add_edge(prev, next);
        prev = next++;
    }
    return g;
}

// Union of pieces, pairwise overlaps inside the core, every piece planar.
void check_decomposition(const Graph& g, const Decomposition& d) {
    Graph u;
    for (const Graph& p : d.pieces) {
        CHECK(!oracle::has_kuratowski_subdivision(p));
        for (Vertex v : p.vertices()) u.add_vertex(v);
        for (const auto& [a, b] : p.edges()) {
            CHECK(g.has_edge(a, b));
            u.add_edge(a, b);
        }
    }
    CHECK(u == g);
    for (std::size_t i = 0; i < d.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < d.pieces.size(); ++j)
            for (Vertex v : d.pieces[i].vertices())
                if (d.pieces[j].has_vertex(v)) CHECK(d.core.has_vertex(v));
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("verify_decomposition examples") {
    Graph w = oracle::wheel(5);
    Decomposition one{{w}, Graph{}, 0};
    CHECK(verify_decomposition(w, one, SIZE_MAX).ok);

    Graph two = disjoint_copies(complete_graph(5), 2);
    Decomposition bad{{complete_graph(5), complete_graph(5, 5)}, Graph{}, 0};
    auto r = verify_decomposition(two, bad, SIZE_MAX);
    CHECK(!r.ok);
    int planarity_violations = 0;
    for (const auto& v : r.violations) planarity_violations += v.find("planar") != std::string::npos;
    CHECK(planarity_violations == 2);

    Graph bq = oracle::bouquet(complete_graph(4), 2, 0);
    Decomposition blocks{{bq.induced({0, 1, 2, 3}), bq.induced({0, 5, 6, 7})}, Graph{}, 0};
    CHECK(verify_decomposition(bq, blocks, 1).ok);
    CHECK(!verify_decomposition(bq, blocks, 0).ok);

    Decomposition missing{{bq.induced({0, 1, 2, 3})}, Graph{}, 0};
    CHECK(!verify_decomposition(bq, missing, 1).ok);
}

TEST_CASE("genus_bound examples") {
    Graph w = oracle::wheel(5);
    Decomposition one{{w}, Graph{}, 0};
    auto a = genus_bound(one, 1);
    CHECK(a.bound == 0);

    // K4 and a claw sharing three vertices
    Graph claw;
    claw.add_edge(0, 5);
    claw.add_edge(1, 5);
    claw.add_edge(2, 5);
    Decomposition three{{complete_graph(4), claw}, Graph{}, 0};
    auto b = genus_bound(three, 1);
    CHECK(b.identifications == 3);
    CHECK(b.bound == 3);

    // two K5 pieces sharing an edge
    Decomposition sig{{complete_graph(5), sigma(5, 2).induced({0, 1, 5, 6, 7})}, Graph{}, 0};
    REQUIRE(isomorphic(sig.pieces[1], complete_graph(5)));
    auto c = genus_bound(sig, 2);
    CHECK(c.bound == 4);
}

TEST_CASE("planar hosts decompose into themselves") {
    Graph w = oracle::wheel(6);
    auto r = decompose(w, 1);
    REQUIRE(r.status == GenusStatus::Exact);
    CHECK(r.genus == 0);
    REQUIRE(r.decomposition.pieces.size() == 1);
    CHECK(r.decomposition.pieces[0] == w);
}

TEST_CASE("decompose corpus") {
    std::vector<std::pair<const char*, Graph>> corpus;
    corpus.push_back({"K5 with tail", with_tail(complete_graph(5), 0, 6)});
    Graph k33c = complete_bipartite(3, 3);
    for (int i = 0; i < 4; ++i) k33c.add_edge(10 + i, 10 + (i + 1) % 4);
    k33c.add_edge(0, 10);
    k33c.add_edge(3, 12);
    corpus.push_back({"K33 with cycle", k33c});
    corpus.push_back({"K6", complete_graph(6)});
    corpus.push_back({"sigma5(2) with tail", with_tail(sigma(5, 2), 2, 3)});
    Graph mixed = disjoint_union(complete_bipartite(3, 3), complete_graph(5), 6);
    corpus.push_back({"K33 and K5", mixed});
    for (const auto& [name, g] : corpus) {
        INFO(name);
        auto r = decompose(g, 2, Deadline::after_seconds(60));
        REQUIRE(r.status == GenusStatus::Exact);
        const Decomposition& d = r.decomposition;
        auto rep = verify_decomposition(g, d, d.core.num_vertices());
        CHECK(rep.ok);
        check_decomposition(g, d);
        CHECK(d.pieces.size() >= 2);
        auto b = genus_bound(d, 1);
        CHECK(b.bound >= r.genus);
    }
}

TEST_CASE("contraction_planarize") {
    auto empty = contraction_planarize(oracle::wheel(5), 2, 1);
    CHECK(empty.kind == PlanarizeResult::Kind::Found);
    CHECK(empty.edges.empty());

    // a bouquet of two K5 needs one contraction per K5
    Graph bq = oracle::bouquet(complete_graph(5), 2, 0);
    auto one = contraction_planarize(bq, 1, 2);
    CHECK(one.kind == PlanarizeResult::Kind::NotFoundWithinK);
    auto two = contraction_planarize(bq, 2, 2);
    REQUIRE(two.kind == PlanarizeResult::Kind::Found);
    CHECK(two.edges.size() <= 2);
    CHECK(!oracle::has_kuratowski_subdivision(contract(bq, two.edges)));

    Graph joined = disjoint_copies(complete_graph(5), 2);
    joined.add_edge(0, 5);
    CHECK(contraction_planarize(joined, 1, 2).kind == PlanarizeResult::Kind::NotFoundWithinK);
    auto j2 = contraction_planarize(joined, 2, 2);
    REQUIRE(j2.kind == PlanarizeResult::Kind::Found);
    CHECK(!oracle::has_kuratowski_subdivision(contract(joined, j2.edges)));
}

}

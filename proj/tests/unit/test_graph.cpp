#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "surfmin/embedding.hpp"
#include "surfmin/graph.hpp"

using namespace surfmin;

TEST_SUITE("graph") {

TEST_CASE("builders reject loops and keep edges normalised") {
    Graph g;
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    g.add_edge(5, 2);
    g.add_edge(2, 5);
    CHECK(g.num_edges() == 1);
    CHECK(g.edges().front() == Edge{2, 5});
    CHECK(g.num_vertices() == 2);
}

TEST_CASE("identify_vertices collapses loops and parallels") {
    // path a-b-c, identify a and c
    Graph p3 = path_graph(3);
    Graph q = identify_vertices(p3, 0, 2);
    CHECK(q.num_vertices() == 2);
    CHECK(q.num_edges() == 1);
    CHECK(q.has_edge(0, 1));

    Graph two = disjoint_union(complete_graph(3), complete_graph(3), 3);
    Graph b = identify_vertices(two, 0, 3);
    CHECK(b.num_vertices() == 5);
    CHECK(b.num_edges() == 6);

    Graph c4 = cycle_graph(4);
    Graph r = identify_vertices(c4, 0, 2);
    CHECK(r.num_vertices() == 3);
    CHECK(r.num_edges() == 2);

    CHECK_THROWS_AS(identify_vertices(c4, 0, 9), std::invalid_argument);
    CHECK_THROWS_AS(identify_vertices(c4, 1, 1), std::invalid_argument);
}

TEST_CASE("cone examples") {
    auto [w, cv] = cone(cycle_graph(4), cycle_graph(4).vertex_set());
    CHECK(w.num_vertices() == 5);
    CHECK(w.num_edges() == 8);
    CHECK(w.degree(cv) == 4);

    auto [k5, c2] = cone(complete_graph(4), complete_graph(4).vertex_set());
    CHECK(isomorphic(k5, complete_graph(5)));

    auto [one, c3] = cone(Graph{}, {});
    CHECK(one.num_vertices() == 1);
    CHECK(one.num_edges() == 0);
    CHECK(one.has_vertex(c3));

    CHECK_THROWS_AS(cone(cycle_graph(4), {7}), std::invalid_argument);
}

TEST_CASE("cone restricted to the host is the host") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph g = oracle::random_graph(7, 0.4, rng);
        VertexSet u;
        for (Vertex v : g.vertices())
            if (rng() % 2) u.insert(v);
        auto [c, cv] = cone(g, u);
        CHECK(c.without_vertices({cv}) == g);
        CHECK(c.neighbors(cv) == u);
    }
}

TEST_CASE("contract examples") {
    Graph k2 = contract(complete_graph(3), {{0, 1}});
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.num_edges() == 1);

    Graph k4 = contract(complete_graph(5), {{0, 1}});
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);

    std::mt19937 rng(5);
    Graph t = oracle::random_tree(9, rng);
    const auto tree_edges = t.edges();
    EdgeSet all(tree_edges.begin(), tree_edges.end());
    Graph point = contract(t, all);
    CHECK(point.num_vertices() == 1);

    CHECK_THROWS_AS(contract(complete_graph(3), {{0, 7}}), std::invalid_argument);
}

TEST_CASE("contraction composes") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        Graph g = oracle::random_graph(8, 0.35, rng);
        auto es = g.edges();
        if (es.size() < 2) continue;
        std::shuffle(es.begin(), es.end(), rng);
        EdgeSet f1(es.begin(), es.begin() + 1), f2(es.begin() + 1, es.begin() + std::min<std::size_t>(3, es.size()));
        auto map1 = contraction_map(g, f1);
        Graph once = contract(g, f1);
        EdgeSet image;
        for (const auto& [u, v] : f2)
            if (map1[u] != map1[v]) image.insert(make_edge(map1[u], map1[v]));
        Graph twice = contract(once, image);
        EdgeSet both = f1;
        both.insert(f2.begin(), f2.end());
        CHECK(isomorphic(twice, contract(g, both)));
    }
}

TEST_CASE("blocks examples") {
    Graph bq = oracle::bouquet(complete_graph(3), 2, 0);
    auto bs = blocks(bq);
    CHECK(bs.blocks.size() == 2);
    CHECK(bs.cut_vertices == VertexSet{0});

    Graph tree = path_graph(5);
    auto bt = blocks(tree);
    CHECK(bt.blocks.size() == 4);
    CHECK(bt.cut_vertices == VertexSet{1, 2, 3});

    auto bk = blocks(complete_graph(4));
    CHECK(bk.blocks.size() == 1);
    CHECK(bk.cut_vertices.empty());
}

TEST_CASE("cycle rank agrees with union-find count") {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.3, rng);
        CHECK(static_cast<int>(cycle_rank(g)) == oracle::cycle_rank(g));
        CHECK(is_forest(g) == (oracle::cycle_rank(g) == 0));
        CHECK(static_cast<int>(connected_components(g).size()) == oracle::components(g));
    }
}

TEST_CASE("minimal_connecting_forest examples") {
    Graph p = path_graph(6);
    EdgeSet f = minimal_connecting_forest(p, {0, 5});
    CHECK(f.size() == 5);

    Graph two = disjoint_union(path_graph(3), path_graph(3), 10);
    EdgeSet f2 = minimal_connecting_forest(two, {0, 2, 10, 12});
    CHECK(f2.size() == 4);
    CHECK(oracle::components(two.edge_subgraph(f2)) == 2);

    // spider with legs of length 3 around centre 0
    Graph s;
    for (int leg = 0; leg < 4; ++leg) {
        s.add_edge(0, 10 * leg + 1);
        s.add_edge(10 * leg + 1, 10 * leg + 2);
        s.add_edge(10 * leg + 2, 10 * leg + 3);
    }
    EdgeSet f3 = minimal_connecting_forest(s, {2, 12, 22});
    CHECK(f3.size() == 6);
    CHECK(f3.count({0, 1}));
    CHECK(!f3.count({30, 31}));
}

TEST_CASE("minimal_connecting_forest is minimal on random graphs") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        Graph g = oracle::random_graph(9, 0.3, rng);
        VertexSet s;
        for (Vertex v : g.vertices())
            if (rng() % 3 == 0) s.insert(v);
        EdgeSet f = minimal_connecting_forest(g, s);
        Graph fg = g.edge_subgraph(f);
        CHECK(oracle::cycle_rank(fg) == 0);
        auto same = [&](const Graph& h, Vertex a, Vertex b) {
            return h.has_vertex(a) && h.has_vertex(b) && !oracle::separates(h, {a}, {b}, {});
        };
        for (Vertex a : s)
            for (Vertex b : s)
                if (a < b && same(g, a, b)) CHECK(same(fg, a, b));
        // every forest edge is needed
        for (const auto& e : f) {
            EdgeSet less = f;
            less.erase(e);
            Graph lg = g.edge_subgraph(less);
            for (Vertex v : s) lg.add_vertex(v);
            bool broken = false;
            for (Vertex a : s)
                for (Vertex b : s)
                    if (a < b && same(g, a, b) && !same(lg, a, b)) broken = true;
            CHECK(broken);
        }
    }
}

TEST_CASE("max_disjoint_paths examples") {
    Graph k23 = complete_bipartite(2, 3);
    auto r = max_disjoint_paths(k23, {0}, {1}, true);
    CHECK(r.size() == 3);
    CHECK(r.separator.size() == 3);

    auto trivial = max_disjoint_paths(path_graph(4), {0, 1}, {1, 3}, false);
    bool has_trivial = false;
    for (const auto& p : trivial.paths.paths) has_trivial = has_trivial || p.size() == 1;
    CHECK(has_trivial);
    CHECK(trivial.size() == trivial.separator.size());

    auto one = max_disjoint_paths(path_graph(5), {0}, {4}, true);
    CHECK(one.size() == 1);
    CHECK(one.separator.size() == 1);
    CHECK(oracle::separates(path_graph(5), {0}, {4}, one.separator));
}

TEST_CASE("Menger duality on random graphs") {
    std::mt19937 rng(29);
    for (int t = 0; t < 150; ++t) {
        Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 7), 0.35, rng);
        VertexSet a, b;
        for (Vertex v : g.vertices()) {
            int r = static_cast<int>(rng() % 4);
            if (r == 0) a.insert(v);
            if (r == 1) b.insert(v);
        }
        if (a.empty() || b.empty()) continue;
        auto res = max_disjoint_paths(g, a, b, false);
        CHECK(res.size() == res.separator.size());
        CHECK(valid_path_system(g, res.paths));
        CHECK(oracle::separates(g, a, b, res.separator));
    }
}

TEST_CASE("isolated and empty inputs") {
    Graph e;
    CHECK(cycle_rank(e) == 0);
    CHECK(connected_components(e).empty());
    CHECK(blocks(e).blocks.empty());
    CHECK(minimal_connecting_forest(e, {}).empty());
    Graph iso;
    iso.add_vertex(4);
    CHECK(is_forest(iso));
    CHECK(contract(iso, {}) == iso);
}

TEST_CASE("identification raises genus by at most one") {
    std::mt19937 rng(31);
    for (int t = 0; t < 25; ++t) {
        Graph g = oracle::random_graph(7, 0.45, rng);
        if (!oracle::connected(g)) continue;
        auto vs = g.vertices();
        Vertex v = vs[rng() % vs.size()], w = vs[rng() % vs.size()];
        if (v == w) continue;
        Graph h = identify_vertices(g, v, w);
        CHECK(h.num_vertices() == g.num_vertices() - 1);
        int before = oracle::exhaustive_genus(g, 2e5);
        int after = oracle::exhaustive_genus(h, 2e5);
        if (before < 0 || after < 0) continue;
        CHECK(after <= before + 1);
    }
}

}

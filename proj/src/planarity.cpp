// Planarity via Boost's Boyer-Myrvold test, with the Kuratowski subgraph
// reduced to a branch-vertex / path witness.
#include <algorithm>
#include <deque>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "surfmin/embedding.hpp"

namespace surfmin {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

struct Converted {
    BGraph bg;
    std::vector<Vertex> ids;
};

Converted convert(const Graph& g) {
    Converted c{BGraph(g.num_vertices()), g.vertices()};
    std::map<Vertex, int> idx;
    for (std::size_t i = 0; i < c.ids.size(); ++i) idx[c.ids[i]] = static_cast<int>(i);
    int ei = 0;
    for (const auto& [u, v] : g.edges()) {
        auto [e, ok] = boost::add_edge(idx[u], idx[v], c.bg);
        (void)ok;
        boost::put(boost::edge_index, c.bg, e, ei++);
    }
    return c;
}

// Greedy edge deletion down to a minimal non-planar subgraph.
Graph minimal_nonplanar(const Graph& g) {
    Graph h = g;
    for (const auto& [u, v] : g.edges()) {
        h.remove_edge(u, v);
        if (is_planar(h)) h.add_edge(u, v);
    }
    VertexSet iso;
    for (Vertex v : h.vertices())
        if (h.degree(v) == 0) iso.insert(v);
    return h.without_vertices(iso);
}

}  // namespace

std::pair<Vertex, Vertex> KuratowskiWitness::pair_of(std::size_t i) const {
    if (kind == Kind::K5) {
        std::size_t k = 0;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b, ++k)
                if (k == i) return {branch[a], branch[b]};
    } else {
        return {branch[i / 3], branch[3 + i % 3]};
    }
    throw std::out_of_range("KuratowskiWitness::pair_of");
}

VertexSet KuratowskiWitness::support() const {
    VertexSet s(branch.begin(), branch.end());
    for (const auto& p : paths.paths) s.insert(p.begin(), p.end());
    return s;
}

Graph KuratowskiWitness::subgraph() const {
    Graph k;
    for (Vertex b : branch) k.add_vertex(b);
    for (const auto& p : paths.paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) k.add_edge(p[i], p[i + 1]);
    return k;
}

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    const std::size_t nb = w.kind == KuratowskiWitness::Kind::K5 ? 5 : 6;
    const std::size_t np = w.kind == KuratowskiWitness::Kind::K5 ? 10 : 9;
    if (w.branch.size() != nb) return fail("wrong number of branch vertices");
    if (w.paths.paths.size() != np) return fail("wrong number of paths");
    VertexSet br(w.branch.begin(), w.branch.end());
    if (br.size() != nb) return fail("branch vertices repeat");
    std::map<Vertex, int> interior_use;
    for (std::size_t i = 0; i < np; ++i) {
        const auto& p = w.paths.paths[i];
        auto [x, y] = w.pair_of(i);
        if (p.size() < 2) return fail("path too short");
        bool fwd = p.front() == x && p.back() == y;
        bool bwd = p.front() == y && p.back() == x;
        if (!fwd && !bwd) return fail("path endpoints do not match branch pair");
        VertexSet seen;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!seen.insert(p[j]).second) return fail("path repeats a vertex");
            if (j + 1 < p.size() && !g.has_edge(p[j], p[j + 1])) return fail("path uses a non-edge");
            if (j > 0 && j + 1 < p.size()) {
                if (br.count(p[j])) return fail("path passes through a branch vertex");
                if (++interior_use[p[j]] > 1) return fail("paths share an interior vertex");
            }
        }
    }
    return true;
}

bool witness_from_subdivision(const Graph& k, KuratowskiWitness& out) {
    std::vector<Vertex> br;
    for (Vertex v : k.vertices()) {
        std::size_t d = k.degree(v);
        if (d == 0 || d == 1) return false;
        if (d >= 3) br.push_back(v);
    }
    KuratowskiWitness w;
    if (br.size() == 5) {
        for (Vertex b : br)
            if (k.degree(b) != 4) return false;
        w.kind = KuratowskiWitness::Kind::K5;
    } else if (br.size() == 6) {
        for (Vertex b : br)
            if (k.degree(b) != 3) return false;
        w.kind = KuratowskiWitness::Kind::K33;
    } else {
        return false;
    }
    VertexSet brs(br.begin(), br.end());
    // Walk every branch edge to the next branch vertex.
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> found;
    for (Vertex b : br)
        for (Vertex n : k.neighbors(b)) {
            std::vector<Vertex> p{b};
            Vertex prev = b, cur = n;
            while (!brs.count(cur)) {
                p.push_back(cur);
                Vertex nxt = -1;
                for (Vertex z : k.neighbors(cur))
                    if (z != prev) nxt = z;
                prev = cur;
                cur = nxt;
                if (cur == -1) return false;
            }
            p.push_back(cur);
            if (cur == b) return false;
            auto key = std::minmax(b, cur);
            if (found.count({key.first, key.second}) && b < cur) return false;  // parallel branch paths
            if (b < cur) found[{key.first, key.second}] = p;
        }
    if (w.kind == KuratowskiWitness::Kind::K5) {
        if (found.size() != 10) return false;
        w.branch = br;
    } else {
        if (found.size() != 9) return false;
        // two-colour the branch vertices
        std::map<Vertex, int> side{{br[0], 0}};
        std::deque<Vertex> q{br[0]};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (const auto& [key, _] : found) {
                Vertex y = key.first == x ? key.second : key.second == x ? key.first : -1;
                if (y < 0) continue;
                if (!side.count(y)) {
                    side[y] = 1 - side[x];
                    q.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
        std::vector<Vertex> a, b;
        for (Vertex v : br) (side[v] == 0 ? a : b).push_back(v);
        if (a.size() != 3 || b.size() != 3) return false;
        w.branch = a;
        w.branch.insert(w.branch.end(), b.begin(), b.end());
    }
    w.paths.fully_disjoint = false;
    for (std::size_t i = 0; i < (w.kind == KuratowskiWitness::Kind::K5 ? 10u : 9u); ++i) {
        auto [x, y] = w.pair_of(i);
        auto key = std::minmax(x, y);
        auto it = found.find({key.first, key.second});
        if (it == found.end()) return false;
        std::vector<Vertex> p = it->second;
        if (p.front() != x) std::reverse(p.begin(), p.end());
        w.paths.paths.push_back(p);
    }
    out = w;
    return true;
}

bool is_planar(const Graph& g) {
    if (g.num_vertices() <= 4) return true;
    if (g.num_edges() > 3 * g.num_vertices() - 6) return false;
    Converted c = convert(g);
    return boost::boyer_myrvold_planarity_test(c.bg);
}

PlanarityResult planarity(const Graph& g) {
    PlanarityResult res;
    Converted c = convert(g);
    std::vector<std::vector<BEdge>> storage(boost::num_vertices(c.bg));
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, c.bg));
    std::vector<BEdge> kedges;
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = c.bg,
                                                      boost::boyer_myrvold_params::embedding = embedding,
                                                      boost::boyer_myrvold_params::kuratowski_subgraph =
                                                          std::back_inserter(kedges));
    if (planar) {
        res.planar = true;
        for (std::size_t i = 0; i < storage.size(); ++i) {
            Vertex v = c.ids[i];
            std::vector<Vertex> l;
            for (const BEdge& e : storage[i]) {
                auto s = boost::source(e, c.bg), t = boost::target(e, c.bg);
                l.push_back(c.ids[static_cast<std::size_t>(s) == i ? t : s]);
            }
            res.rotation.order[v] = l;
        }
        if (rotation_genus(g, res.rotation) != 0) throw std::logic_error("planarity: embedding is not planar");
        return res;
    }
    res.planar = false;
    Graph k;
    for (const BEdge& e : kedges) k.add_edge(c.ids[boost::source(e, c.bg)], c.ids[boost::target(e, c.bg)]);
    if (!witness_from_subdivision(k, res.witness)) {
        if (!witness_from_subdivision(minimal_nonplanar(k.num_edges() ? k : g), res.witness))
            throw std::logic_error("planarity: could not extract a Kuratowski subdivision");
    }
    std::string why;
    if (!verify_kuratowski(g, res.witness, &why)) throw std::logic_error("planarity: witness fails: " + why);
    return res;
}

}  // namespace surfmin

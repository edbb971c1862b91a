// Star/comb, 2-star and 2-connected structure searches. Every structure is
// run through verify_structure before it is returned.
#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "surfmin/dichotomy.hpp"

namespace surfmin {

const char* to_string(CombStructure::Kind k) {
    switch (k) {
        case CombStructure::Kind::Star: return "star";
        case CombStructure::Kind::Comb: return "comb";
        case CombStructure::Kind::TwoStar: return "two-star";
        case CombStructure::Kind::DoubleStar: return "double-star";
        case CombStructure::Kind::Ladder: return "ladder";
        case CombStructure::Kind::Fan: return "fan";
        case CombStructure::Kind::DominatingSet: return "dominating-set";
    }
    return "?";
}

namespace {

using Path = std::vector<Vertex>;
using Kind = CombStructure::Kind;

struct Checker {
    const Graph& g;
    ModelReport rep;
    void fail(const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    }
    bool path(const Path& p, const std::string& what) {
        if (p.empty()) {
            fail(what + " is empty");
            return false;
        }
        VertexSet seen;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!g.has_vertex(p[i])) {
                fail(what + " uses unknown vertex " + std::to_string(p[i]));
                return false;
            }
            if (!seen.insert(p[i]).second) {
                fail(what + " repeats vertex " + std::to_string(p[i]));
                return false;
            }
            if (i > 0 && !g.has_edge(p[i - 1], p[i])) {
                fail(what + " uses non-edge " + std::to_string(p[i - 1]) + "-" + std::to_string(p[i]));
                return false;
            }
        }
        return true;
    }
};

// Vertices of p excluding the listed positions.
VertexSet body(const Path& p, bool drop_first, bool drop_last) {
    VertexSet s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if ((drop_first && i == 0) || (drop_last && i + 1 == p.size())) continue;
        s.insert(p[i]);
    }
    return s;
}

std::size_t marked_on(const std::vector<Path>& ps, const VertexSet& u) {
    VertexSet all;
    for (const Path& p : ps) all.insert(p.begin(), p.end());
    return static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [&](Vertex v) { return u.count(v) != 0; }));
}

// Adds s to `used`; false when some vertex was already there.
bool claim(VertexSet& used, const VertexSet& s) {
    for (Vertex v : s)
        if (!used.insert(v).second) return false;
    return true;
}

}  // namespace

ModelReport verify_structure(const Graph& g, const VertexSet& u, const CombStructure& s) {
    Checker ck{g, {}};
    const auto& ps = s.carrier.paths;
    const auto need = static_cast<std::size_t>(std::max(s.level, 0));
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!ck.path(ps[i], "path " + std::to_string(i))) return ck.rep;
    switch (s.kind) {
        case Kind::Star:
        case Kind::TwoStar: {
            if (s.designated.size() != 1) {
                ck.fail("star needs one centre");
                break;
            }
            Vertex c = s.designated[0];
            if (ps.size() < need) ck.fail("too few star paths");
            VertexSet used;
            for (const Path& p : ps) {
                if (p.front() != c) ck.fail("star path does not start at the centre");
                if (p.size() < (s.kind == Kind::TwoStar ? 3u : 2u)) ck.fail("star path too short");
                if (!u.count(p.back())) ck.fail("star leaf " + std::to_string(p.back()) + " is not marked");
                if (!claim(used, body(p, true, false))) ck.fail("star paths meet outside the centre");
            }
            break;
        }
        case Kind::Comb: {
            if (ps.empty()) {
                ck.fail("comb without spine");
                break;
            }
            VertexSet spine(ps[0].begin(), ps[0].end());
            if (ps.size() < need + 1) ck.fail("too few teeth");
            VertexSet used;
            for (std::size_t i = 1; i < ps.size(); ++i) {
                const Path& t = ps[i];
                if (!spine.count(t.front())) ck.fail("tooth does not start on the spine");
                for (std::size_t j = 1; j < t.size(); ++j)
                    if (spine.count(t[j])) ck.fail("tooth returns to the spine");
                if (!u.count(t.back())) ck.fail("tooth end " + std::to_string(t.back()) + " is not marked");
                if (!claim(used, body(t, false, false))) ck.fail("teeth are not disjoint");
            }
            break;
        }
        case Kind::DoubleStar: {
            if (s.designated.size() != 2 || s.designated[0] == s.designated[1]) {
                ck.fail("double-star needs two distinct hubs");
                break;
            }
            Vertex x = s.designated[0], y = s.designated[1];
            if (ps.size() < need) ck.fail("too few double-star paths");
            VertexSet used{x, y};
            for (const Path& p : ps) {
                if (p.front() != x || p.back() != y) ck.fail("double-star path does not join the hubs");
                VertexSet in = body(p, true, true);
                if (in.empty()) ck.fail("double-star path without interior");
                if (std::none_of(in.begin(), in.end(), [&](Vertex v) { return u.count(v) != 0; }))
                    ck.fail("double-star path without a marked interior vertex");
                if (!claim(used, in)) ck.fail("double-star interiors meet");
            }
            break;
        }
        case Kind::Ladder: {
            if (ps.size() < 2) {
                ck.fail("ladder without rails");
                break;
            }
            VertexSet r0(ps[0].begin(), ps[0].end()), r1(ps[1].begin(), ps[1].end());
            VertexSet used = r0;
            if (!claim(used, r1)) ck.fail("rails meet");
            VertexSet rung_used;
            if (ps.size() < need + 2) ck.fail("too few rungs");
            for (std::size_t i = 2; i < ps.size(); ++i) {
                const Path& p = ps[i];
                if (p.size() < 2 || !r0.count(p.front()) || !r1.count(p.back())) ck.fail("rung does not join the rails");
                if (!claim(rung_used, body(p, false, false))) ck.fail("rungs meet");
                for (Vertex v : body(p, true, true))
                    if (used.count(v)) ck.fail("rung interior touches a rail");
            }
            if (marked_on(ps, u) < need) ck.fail("too few marked vertices on the ladder");
            break;
        }
        case Kind::Fan: {
            if (s.designated.size() != 1 || ps.empty()) {
                ck.fail("fan needs an apex and a rail");
                break;
            }
            Vertex d = s.designated[0];
            VertexSet rail(ps[0].begin(), ps[0].end());
            if (rail.count(d)) ck.fail("apex lies on the rail");
            if (ps.size() < need + 1) ck.fail("too few fan paths");
            VertexSet used;
            for (std::size_t i = 1; i < ps.size(); ++i) {
                const Path& p = ps[i];
                if (p.size() < 2 || p.front() != d || !rail.count(p.back())) ck.fail("fan path does not join apex and rail");
                for (Vertex v : body(p, true, true))
                    if (rail.count(v)) ck.fail("fan path interior touches the rail");
                if (!claim(used, body(p, true, false))) ck.fail("fan paths meet outside the apex");
            }
            if (marked_on(ps, u) < need) ck.fail("too few marked vertices on the fan");
            break;
        }
        case Kind::DominatingSet: {
            if (s.designated.size() > need) ck.fail("dominating set larger than the bound");
            VertexSet cover;
            for (Vertex v : s.designated) {
                if (!g.has_vertex(v)) {
                    ck.fail("unknown dominating vertex");
                    continue;
                }
                cover.insert(v);
                cover.insert(g.neighbors(v).begin(), g.neighbors(v).end());
            }
            for (Vertex v : u)
                if (!cover.count(v)) ck.fail("marked vertex " + std::to_string(v) + " is not dominated");
            break;
        }
    }
    return ck.rep;
}

namespace {

// BFS from `from` inside `allowed`; path to the nearest marked vertex.
Path nearest_marked(const Graph& t, Vertex from, const VertexSet& u, const VertexSet& allowed) {
    std::map<Vertex, Vertex> parent{{from, from}};
    std::deque<Vertex> q{from};
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (u.count(v)) {
            Path p;
            for (Vertex x = v; x != from; x = parent[x]) p.push_back(x);
            p.push_back(from);
            std::reverse(p.begin(), p.end());
            return p;
        }
        for (Vertex w : t.neighbors(v))
            if (allowed.count(w) && !parent.count(w)) {
                parent[w] = v;
                q.push_back(w);
            }
    }
    return {};
}

StructureResult finish(const Graph& g, const VertexSet& u, CombStructure s) {
    ModelReport rep = verify_structure(g, u, s);
    if (!rep.ok) throw std::logic_error("structure search produced an invalid " + std::string(to_string(s.kind)) + ": " +
                                        rep.violations.front());
    return {SearchStatus::Found, std::move(s)};
}

std::optional<CombStructure> tree_star(const Graph& t, const VertexSet& u, int n) {
    for (Vertex v : t.vertices()) {
        if (static_cast<int>(t.degree(v)) < n) continue;
        Graph rest = t.without_vertices({v});
        std::vector<Path> paths;
        for (Vertex w : t.neighbors(v)) {
            VertexSet comp;
            for (const VertexSet& c : connected_components(rest))
                if (c.count(w)) comp = c;
            Path p = nearest_marked(t, w, u, comp);
            if (p.empty()) continue;
            p.insert(p.begin(), v);
            paths.push_back(p);
            if (static_cast<int>(paths.size()) == n) {
                CombStructure s{Kind::Star, n, {}, {v}};
                s.carrier.paths = paths;
                s.carrier.fully_disjoint = false;
                return s;
            }
        }
    }
    return std::nullopt;
}

// Best comb whose spine is a path of the tree; a spine vertex carries at most
// one tooth, itself when marked or a path into a marked branch off the spine.
std::optional<CombStructure> tree_comb(const Graph& t, const VertexSet& u, int n) {
    std::vector<Vertex> ends;
    for (Vertex v : t.vertices())
        if (t.degree(v) <= 1) ends.push_back(v);
    for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i; j < ends.size(); ++j) {
            Path spine = i == j ? Path{ends[i]} : shortest_path(t, ends[i], ends[j]);
            if (spine.empty()) continue;
            VertexSet on(spine.begin(), spine.end());
            Graph off = t.without_vertices(on);
            auto comps = connected_components(off);
            std::vector<Path> teeth;
            for (Vertex s : spine) {
                if (u.count(s)) {
                    teeth.push_back({s});
                    continue;
                }
                for (Vertex w : t.neighbors(s)) {
                    if (on.count(w)) continue;
                    VertexSet comp;
                    for (const VertexSet& c : comps)
                        if (c.count(w)) comp = c;
                    Path p = nearest_marked(t, w, u, comp);
                    if (p.empty()) continue;
                    p.insert(p.begin(), s);
                    teeth.push_back(p);
                    break;
                }
            }
            if (static_cast<int>(teeth.size()) >= n) {
                CombStructure s{Kind::Comb, n, {}, {}};
                s.carrier.paths.push_back(spine);
                s.carrier.paths.insert(s.carrier.paths.end(), teeth.begin(), teeth.begin() + n);
                return s;
            }
        }
    }
    return std::nullopt;
}

Graph steiner_tree(const Graph& g, const VertexSet& u) {
    Graph t = g.edge_subgraph(minimal_connecting_forest(g, u));
    for (Vertex v : u) t.add_vertex(v);
    return t;
}

void check_inputs(const Graph& g, const VertexSet& u, int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": level must be >= 1");
    for (Vertex v : u)
        if (!g.has_vertex(v)) throw std::invalid_argument(std::string(who) + ": marked vertex not in graph");
}

// Deepest root-leaf path of a DFS tree.
Path dfs_path(const Graph& g, Vertex root) {
    std::map<Vertex, Vertex> parent{{root, root}};
    std::map<Vertex, int> depth{{root, 0}};
    std::vector<std::pair<Vertex, VertexSet::const_iterator>> stack{{root, g.neighbors(root).begin()}};
    Vertex deepest = root;
    while (!stack.empty()) {
        auto& [v, it] = stack.back();
        if (it == g.neighbors(v).end()) {
            stack.pop_back();
            continue;
        }
        Vertex w = *it++;
        if (parent.count(w)) continue;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        if (depth[w] > depth[deepest]) deepest = w;
        stack.push_back({w, g.neighbors(w).begin()});
    }
    Path p;
    for (Vertex x = deepest; x != root; x = parent[x]) p.push_back(x);
    p.push_back(root);
    std::reverse(p.begin(), p.end());
    return p;
}

std::vector<Vertex> roots_of(const Graph& g) {
    std::vector<Vertex> vs = g.vertices();
    if (vs.size() > 16) vs.resize(16);
    return vs;
}

}  // namespace

StructureResult star_comb(const Graph& g, const VertexSet& u, int n) {
    check_inputs(g, u, n, "star_comb");
    if (!is_connected(g)) throw std::invalid_argument("star_comb: graph must be connected");
    Graph t = steiner_tree(g, u);
    if (auto s = tree_star(t, u, n)) return finish(g, u, *s);
    if (auto s = tree_comb(t, u, n)) return finish(g, u, *s);
    return {};
}

StructureResult two_star_search(const Graph& g, const VertexSet& u, int n, int d) {
    check_inputs(g, u, n, "two_star_search");
    if (!is_connected(g)) throw std::invalid_argument("two_star_search: graph must be connected");
    // greedy cover of u by closed neighbourhoods
    {
        VertexSet left = u;
        std::vector<Vertex> dom;
        while (!left.empty() && static_cast<int>(dom.size()) <= d) {
            Vertex best = -1;
            std::size_t best_cover = 0;
            for (Vertex v : g.vertices()) {
                std::size_t c = left.count(v);
                for (Vertex w : g.neighbors(v)) c += left.count(w);
                if (c > best_cover) {
                    best_cover = c;
                    best = v;
                }
            }
            dom.push_back(best);
            left.erase(best);
            for (Vertex w : g.neighbors(best)) left.erase(w);
        }
        if (left.empty() && static_cast<int>(dom.size()) <= d)
            return finish(g, u, CombStructure{Kind::DominatingSet, d, {}, dom});
    }
    for (Vertex c : g.vertices()) {
        VertexSet targets;
        for (Vertex v : u)
            if (v != c && !g.has_edge(c, v)) targets.insert(v);
        if (static_cast<int>(targets.size()) < n || static_cast<int>(g.degree(c)) < n) continue;
        MengerResult m = max_disjoint_paths(g.without_vertices({c}), g.neighbors(c), targets, false);
        if (static_cast<int>(m.size()) < n) continue;
        CombStructure s{Kind::TwoStar, n, {}, {c}};
        s.carrier.fully_disjoint = false;
        for (int i = 0; i < n; ++i) {
            Path p = m.paths.paths[i];
            p.insert(p.begin(), c);
            s.carrier.paths.push_back(p);
        }
        return finish(g, u, s);
    }
    if (auto s = tree_comb(steiner_tree(g, u), u, n)) return finish(g, u, *s);
    return {};
}

namespace {

using Found = std::optional<CombStructure>;

Found double_star_at(const Graph& g, const VertexSet& u, int n, Vertex x, Vertex y) {
    if (static_cast<int>(std::min(g.degree(x), g.degree(y))) < n) return std::nullopt;
    MengerResult m = max_disjoint_paths(g, {x}, {y}, true);
    CombStructure s{Kind::DoubleStar, n, {}, {x, y}};
    s.carrier.fully_disjoint = false;
    for (const Path& p : m.paths.paths) {
        if (p.size() < 3) continue;
        if (std::any_of(p.begin() + 1, p.end() - 1, [&](Vertex v) { return u.count(v) != 0; }))
            s.carrier.paths.push_back(p);
        if (static_cast<int>(s.carrier.paths.size()) == n) return s;
    }
    return std::nullopt;
}

Found fan_at(const Graph& g, const VertexSet& u, int n, Vertex d, const Deadline& dl) {
    if (static_cast<int>(g.degree(d)) < n) return std::nullopt;
    Graph rest = g.without_vertices({d});
    for (Vertex r : roots_of(rest)) {
        if (dl.expired()) return std::nullopt;
        Path rail = dfs_path(rest, r);
        MengerResult m = max_disjoint_paths(rest, g.neighbors(d), VertexSet(rail.begin(), rail.end()), false);
        if (static_cast<int>(m.size()) < n) continue;
        CombStructure s{Kind::Fan, n, {}, {d}};
        s.carrier.fully_disjoint = false;
        s.carrier.paths.push_back(rail);
        for (Path p : m.paths.paths) {
            p.insert(p.begin(), d);
            s.carrier.paths.push_back(p);
        }
        if (marked_on(s.carrier.paths, u) >= static_cast<std::size_t>(n)) return s;
    }
    return std::nullopt;
}

Found ladder_from(const Graph& g, const VertexSet& u, int n, Vertex r, const Deadline& dl) {
    Path p = dfs_path(g, r);
    for (std::size_t cut = 1; cut < p.size(); ++cut) {
        if (dl.expired()) return std::nullopt;
        Path r0(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(cut)), r1(p.begin() + static_cast<std::ptrdiff_t>(cut), p.end());
        MengerResult m = max_disjoint_paths(g, VertexSet(r0.begin(), r0.end()), VertexSet(r1.begin(), r1.end()), false);
        if (static_cast<int>(m.size()) < n) continue;
        CombStructure s{Kind::Ladder, n, {}, {}};
        s.carrier.paths = {r0, r1};
        for (const Path& q : m.paths.paths) s.carrier.paths.push_back(q);
        if (marked_on(s.carrier.paths, u) >= static_cast<std::size_t>(n)) return s;
    }
    return std::nullopt;
}

// DFS spanning tree, the finite stand-in for a normal spanning tree.
Graph dfs_tree(const Graph& g, Vertex root) {
    Graph t;
    t.add_vertex(root);
    std::set<Vertex> seen{root};
    std::vector<std::pair<Vertex, VertexSet::const_iterator>> stack{{root, g.neighbors(root).begin()}};
    while (!stack.empty()) {
        auto& [v, it] = stack.back();
        if (it == g.neighbors(v).end()) {
            stack.pop_back();
            continue;
        }
        Vertex w = *it++;
        if (!seen.insert(w).second) continue;
        t.add_edge(v, w);
        stack.push_back({w, g.neighbors(w).begin()});
    }
    return t;
}

// Disjoint paths from d to the spine that skip d's own spine neighbours. Ladder
// vertices have degree at most three, so an apex needs three such paths.
int spine_reach(const Graph& g, const Path& spine, Vertex d) {
    VertexSet skip{d};
    for (std::size_t i = 0; i < spine.size(); ++i) {
        if (spine[i] != d) continue;
        if (i > 0) skip.insert(spine[i - 1]);
        if (i + 1 < spine.size()) skip.insert(spine[i + 1]);
    }
    VertexSet from, to;
    for (Vertex w : g.neighbors(d))
        if (!skip.count(w)) from.insert(w);
    for (Vertex v : spine)
        if (!skip.count(v)) to.insert(v);
    if (from.empty() || to.empty()) return 0;
    return static_cast<int>(max_disjoint_paths(g.without_vertices({d}), from, to, false).size());
}

// Star/comb case split on a DFS tree: a star of the tree grows into a
// double-star or a fan, a comb into a fan when its spine is dominated and into
// a ladder otherwise.
Found tree_route(const Graph& g, const VertexSet& u, int n, const Deadline& dl) {
    Vertex root = *g.vertex_set().begin();
    Graph t = dfs_tree(g, root);
    Graph span = t.edge_subgraph(minimal_connecting_forest(t, u));
    for (Vertex v : u) span.add_vertex(v);
    auto star = tree_star(span, u, n);
    auto comb = tree_comb(span, u, n);
    // the larger of the two structures decides; ties go to the star
    int star_size = n, comb_size = n;
    while (star && tree_star(span, u, star_size + 1)) ++star_size;
    while (comb && tree_comb(span, u, comb_size + 1)) ++comb_size;
    if (star && (!comb || star_size >= comb_size)) {
        Vertex x = star->designated.front();
        for (Vertex y : g.vertices()) {
            if (dl.expired()) return std::nullopt;
            if (y == x) continue;
            if (auto s = double_star_at(g, u, n, x, y)) return s;
        }
        if (auto s = fan_at(g, u, n, x, dl)) return s;
        return std::nullopt;
    }
    if (!comb) return std::nullopt;
    comb = tree_comb(span, u, comb_size);
    const Path& spine = comb->carrier.paths.front();
    for (Vertex d : g.vertices()) {
        if (dl.expired()) return std::nullopt;
        if (spine_reach(g, spine, d) >= std::max(n, 3))
            if (auto s = fan_at(g, u, n, d, dl)) return s;
    }
    return ladder_from(g, u, n, root, dl);
}

}  // namespace

StructureResult two_connected_structures(const Graph& g, const VertexSet& u, int n, const Deadline& dl) {
    check_inputs(g, u, n, "two_connected_structures");
    if (!is_two_connected(g)) throw std::invalid_argument("two_connected_structures: graph must be 2-connected");
    if (auto s = tree_route(g, u, n, dl)) return finish(g, u, *s);
    if (dl.expired()) return {SearchStatus::Timeout, {}};
    // the route can miss at finite size; fall back to every candidate
    const std::vector<Vertex> vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            if (dl.expired()) return {SearchStatus::Timeout, {}};
            if (auto s = double_star_at(g, u, n, vs[a], vs[b])) return finish(g, u, *s);
        }
    for (Vertex d : vs)
        if (auto s = fan_at(g, u, n, d, dl)) return finish(g, u, *s);
    for (Vertex r : roots_of(g))
        if (auto s = ladder_from(g, u, n, r, dl)) return finish(g, u, *s);
    if (dl.expired()) return {SearchStatus::Timeout, {}};
    return {};
}

}  // namespace surfmin

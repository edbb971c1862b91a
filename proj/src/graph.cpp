#include "surfmin/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

namespace surfmin {

namespace {
const VertexSet kEmpty;
}

void Graph::add_vertex(Vertex v) {
    if (v < 0) throw std::invalid_argument("negative vertex id " + std::to_string(v));
    adj_.try_emplace(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++m_;
    }
}

void Graph::remove_edge(Vertex u, Vertex v) {
    auto it = adj_.find(u);
    if (it == adj_.end() || it->second.erase(v) == 0) return;
    adj_[v].erase(u);
    --m_;
}

void Graph::remove_vertex(Vertex v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) return;
    for (Vertex w : it->second) adj_[w].erase(v);
    m_ -= it->second.size();
    adj_.erase(it);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) return kEmpty;
    return it->second;
}

std::vector<Vertex> Graph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (const auto& [v, ns] : adj_)
        for (Vertex w : ns)
            if (v < w) out.emplace_back(v, w);
    return out;
}

VertexSet Graph::vertex_set() const {
    VertexSet s;
    for (const auto& [v, _] : adj_) s.insert(s.end(), v);
    return s;
}

Vertex Graph::max_vertex() const { return adj_.empty() ? -1 : adj_.rbegin()->first; }

Graph Graph::induced(const VertexSet& keep) const {
    Graph h;
    for (Vertex v : keep)
        if (has_vertex(v)) h.add_vertex(v);
    for (Vertex v : keep) {
        auto it = adj_.find(v);
        if (it == adj_.end()) continue;
        for (Vertex w : it->second)
            if (v < w && keep.count(w)) h.add_edge(v, w);
    }
    return h;
}

Graph Graph::without_vertices(const VertexSet& drop) const {
    Graph h = *this;
    for (Vertex v : drop) h.remove_vertex(v);
    return h;
}

Graph Graph::without_edges(const EdgeSet& drop) const {
    Graph h = *this;
    for (const auto& [u, v] : drop) h.remove_edge(u, v);
    return h;
}

Graph Graph::edge_subgraph(const EdgeSet& keep) const {
    Graph h;
    for (const auto& [u, v] : keep)
        if (has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph graph_from_edges(const std::vector<Edge>& edges, const std::vector<Vertex>& extra_vertices) {
    Graph g;
    for (Vertex v : extra_vertices) g.add_vertex(v);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void MarkedGraph::validate() const {
    for (Vertex v : marked)
        if (!graph.has_vertex(v)) throw std::invalid_argument("marked vertex " + std::to_string(v) + " not in graph");
}

bool valid_path_system(const Graph& g, const PathSystem& ps, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    std::map<Vertex, int> interior_use, any_use;
    for (const auto& p : ps.paths) {
        if (p.empty()) return fail("empty path");
        VertexSet seen;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!g.has_vertex(p[i])) return fail("vertex not in host");
            if (!seen.insert(p[i]).second) return fail("path not simple");
            if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) return fail("missing edge");
            ++any_use[p[i]];
            if (i > 0 && i + 1 < p.size()) ++interior_use[p[i]];
        }
    }
    for (const auto& [v, c] : any_use) {
        if (ps.fully_disjoint && c > 1) return fail("paths share vertex " + std::to_string(v));
        if (!ps.fully_disjoint && interior_use.count(v) && c > 1)
            return fail("interior vertex " + std::to_string(v) + " shared");
    }
    return true;
}

// surgery ----------------------------------------------------------------

Graph identify_vertices(const Graph& g, Vertex v, Vertex w) {
    if (!g.has_vertex(v) || !g.has_vertex(w)) throw std::invalid_argument("identify_vertices: unknown vertex");
    if (v == w) throw std::invalid_argument("identify_vertices: v == w");
    Graph h = g;
    h.remove_vertex(w);
    for (Vertex x : g.neighbors(w))
        if (x != v) h.add_edge(v, x);
    return h;
}

std::pair<Graph, Vertex> cone(const Graph& g, const VertexSet& u) {
    for (Vertex x : u)
        if (!g.has_vertex(x)) throw std::invalid_argument("cone: marked vertex not in graph");
    Graph h = g;
    Vertex c = g.max_vertex() + 1;
    h.add_vertex(c);
    for (Vertex x : u) h.add_edge(c, x);
    return {h, c};
}

std::map<Vertex, Vertex> contraction_map(const Graph& g, const EdgeSet& f) {
    std::map<Vertex, Vertex> parent;
    for (Vertex v : g.vertices()) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [a, b] : f) {
        if (!g.has_edge(a, b)) throw std::invalid_argument("contract: edge not in graph");
        Vertex ra = find(a), rb = find(b);
        if (ra == rb) continue;
        if (ra < rb) parent[rb] = ra;
        else parent[ra] = rb;
    }
    std::map<Vertex, Vertex> rep;
    for (Vertex v : g.vertices()) rep[v] = find(v);
    return rep;
}

Graph contract(const Graph& g, const EdgeSet& f) {
    auto rep = contraction_map(g, f);
    Graph h;
    for (const auto& [v, r] : rep) h.add_vertex(r);
    for (const auto& [a, b] : g.edges())
        if (rep[a] != rep[b]) h.add_edge(rep[a], rep[b]);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b, Vertex offset_b) {
    Graph h = a;
    for (Vertex v : b.vertices()) {
        if (h.has_vertex(v + offset_b)) throw std::invalid_argument("disjoint_union: id clash");
        h.add_vertex(v + offset_b);
    }
    for (const auto& [u, v] : b.edges()) h.add_edge(u + offset_b, v + offset_b);
    return h;
}

Graph complete_graph(int n, Vertex first) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(first + i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(first + i, first + j);
    return g;
}

Graph complete_bipartite(int a, int b, Vertex first) {
    Graph g;
    for (int i = 0; i < a + b; ++i) g.add_vertex(first + i);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(first + i, first + a + j);
    return g;
}

Graph cycle_graph(int n, Vertex first) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(first + i, first + (i + 1) % n);
    return g;
}

Graph path_graph(int n, Vertex first) {
    Graph g;
    if (n >= 1) g.add_vertex(first);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(first + i, first + i + 1);
    return g;
}

// structure ---------------------------------------------------------------

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (Vertex s : g.vertices()) {
        if (seen.count(s)) continue;
        VertexSet comp;
        std::deque<Vertex> q{s};
        seen.insert(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            comp.insert(x);
            for (Vertex y : g.neighbors(x))
                if (seen.insert(y).second) q.push_back(y);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::size_t cycle_rank(const Graph& g) {
    return g.num_edges() + connected_components(g).size() - g.num_vertices();
}

bool is_forest(const Graph& g) { return cycle_rank(g) == 0; }

Graph two_core(const Graph& g) {
    Graph h = g;
    std::deque<Vertex> q;
    for (Vertex v : h.vertices())
        if (h.degree(v) <= 1) q.push_back(v);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (!h.has_vertex(v)) continue;
        std::vector<Vertex> ns(h.neighbors(v).begin(), h.neighbors(v).end());
        h.remove_vertex(v);
        for (Vertex w : ns)
            if (h.degree(w) <= 1) q.push_back(w);
    }
    return h;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const VertexSet& avoid) {
    if (!g.has_vertex(s) || !g.has_vertex(t) || avoid.count(s) || avoid.count(t)) return {};
    std::map<Vertex, Vertex> pred{{s, s}};
    std::deque<Vertex> q{s};
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (x == t) break;
        for (Vertex y : g.neighbors(x))
            if (!avoid.count(y) && !pred.count(y)) {
                pred[y] = x;
                q.push_back(y);
            }
    }
    if (!pred.count(t)) return {};
    std::vector<Vertex> p{t};
    while (p.back() != s) p.push_back(pred[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
}

std::vector<Vertex> shortest_cycle(const Graph& g, const VertexSet& avoid) {
    // For each edge uv: shortest u-v path avoiding the edge closes a cycle.
    std::vector<Vertex> best;
    Graph h = g.without_vertices(avoid);
    for (const auto& [u, v] : h.edges()) {
        h.remove_edge(u, v);
        auto p = shortest_path(h, u, v);
        h.add_edge(u, v);
        if (!p.empty() && (best.empty() || p.size() < best.size())) {
            best = p;
            if (best.size() == 3) break;
        }
    }
    return best;
}

int girth(const Graph& g) { return static_cast<int>(shortest_cycle(g).size()); }

EdgeSet spanning_forest(const Graph& g) {
    EdgeSet f;
    VertexSet seen;
    for (Vertex s : g.vertices()) {
        if (seen.count(s)) continue;
        seen.insert(s);
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x))
                if (seen.insert(y).second) {
                    f.insert(make_edge(x, y));
                    q.push_back(y);
                }
        }
    }
    return f;
}

std::vector<VertexSet> BlockStructure::block_vertices() const {
    std::vector<VertexSet> out;
    for (const auto& b : blocks) {
        VertexSet s;
        for (const auto& [u, v] : b) {
            s.insert(u);
            s.insert(v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

BlockStructure blocks(const Graph& g) {
    // Iterative Hopcroft-Tarjan with an edge stack.
    BlockStructure bs;
    std::map<Vertex, int> disc, low;
    int timer = 0;
    std::vector<Edge> estack;
    for (Vertex root : g.vertices()) {
        if (disc.count(root)) continue;
        struct Frame {
            Vertex v, parent;
            std::vector<Vertex> nbrs;
            std::size_t i;
        };
        std::vector<Frame> st;
        disc[root] = low[root] = timer++;
        st.push_back({root, -1, {g.neighbors(root).begin(), g.neighbors(root).end()}, 0});
        int root_children = 0;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < f.nbrs.size()) {
                Vertex w = f.nbrs[f.i++];
                if (!disc.count(w)) {
                    estack.push_back(make_edge(f.v, w));
                    disc[w] = low[w] = timer++;
                    if (f.v == root) ++root_children;
                    Vertex pv = f.v;
                    st.push_back({w, pv, {g.neighbors(w).begin(), g.neighbors(w).end()}, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    estack.push_back(make_edge(f.v, w));
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Vertex v = f.v, p = f.parent;
                st.pop_back();
                if (p == -1) break;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    if (p != root) bs.cut_vertices.insert(p);
                    EdgeSet block;
                    Edge stop = make_edge(p, v);
                    while (!estack.empty()) {
                        Edge e = estack.back();
                        estack.pop_back();
                        block.insert(e);
                        if (e == stop) break;
                    }
                    bs.blocks.push_back(std::move(block));
                }
            }
        }
        if (root_children > 1) bs.cut_vertices.insert(root);
    }
    return bs;
}

bool is_two_connected(const Graph& g) {
    if (g.num_vertices() < 3 || !is_connected(g)) return false;
    return blocks(g).blocks.size() == 1;
}

EdgeSet minimal_connecting_forest(const Graph& g, const VertexSet& s) {
    EdgeSet out;
    for (const auto& comp : connected_components(g)) {
        VertexSet terms;
        for (Vertex v : comp)
            if (s.count(v)) terms.insert(v);
        if (terms.size() < 2) continue;
        // BFS tree from the smallest terminal, then prune non-terminal leaves.
        Vertex root = *terms.begin();
        std::map<Vertex, Vertex> pred{{root, -1}};
        std::deque<Vertex> q{root};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x))
                if (!pred.count(y)) {
                    pred[y] = x;
                    q.push_back(y);
                }
        }
        VertexSet keep;
        for (Vertex t : terms)
            for (Vertex z = t; z != -1 && keep.insert(z).second; z = pred[z]) {
            }
        for (Vertex z : keep)
            if (pred[z] != -1) out.insert(make_edge(z, pred[z]));
    }
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<std::size_t> da, db;
    for (Vertex v : a.vertices()) da.push_back(a.degree(v));
    for (Vertex v : b.vertices()) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    auto to_boost = [](const Graph& g) {
        std::map<Vertex, int> idx;
        for (Vertex v : g.vertices()) idx.emplace(v, static_cast<int>(idx.size()));
        BG bg(g.num_vertices());
        for (const auto& [u, v] : g.edges()) boost::add_edge(idx[u], idx[v], bg);
        return bg;
    };
    BG ba = to_boost(a), bb = to_boost(b);
    return boost::isomorphism(ba, bb);
}

// Menger ------------------------------------------------------------------

namespace {

// Unit-capacity max flow (Edmonds-Karp) on a small explicit network.
struct FlowNet {
    struct Arc {
        int to, cap, rev, orig;
    };
    std::vector<std::vector<Arc>> adj;
    explicit FlowNet(int n) : adj(n) {}
    int add(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size()), cap});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1, 0});
        return static_cast<int>(adj[u].size()) - 1;
    }
    int maxflow(int s, int t) {
        int flow = 0;
        for (;;) {
            std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
            std::deque<int> q{s};
            pred[s] = {s, -1};
            while (!q.empty() && pred[t].first == -1) {
                int x = q.front();
                q.pop_front();
                for (int i = 0; i < static_cast<int>(adj[x].size()); ++i) {
                    const Arc& a = adj[x][i];
                    if (a.cap > 0 && pred[a.to].first == -1) {
                        pred[a.to] = {x, i};
                        q.push_back(a.to);
                    }
                }
            }
            if (pred[t].first == -1) return flow;
            for (int y = t; y != s;) {
                auto [x, i] = pred[y];
                Arc& a = adj[x][i];
                a.cap -= 1;
                adj[y][a.rev].cap += 1;
                y = x;
            }
            ++flow;
        }
    }
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const Arc& a : adj[x])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push_back(a.to);
                }
        }
        return seen;
    }
    // Splits the current flow into s-t walks of nodes.
    std::vector<std::vector<int>> decompose(int s, int t) {
        std::vector<std::vector<int>> out;
        for (;;) {
            std::vector<int> walk{s};
            int x = s;
            while (x != t) {
                int next = -1;
                for (auto& a : adj[x])
                    if (a.orig > 0 && a.orig - a.cap > 0) {
                        ++a.cap;  // consume one unit
                        next = a.to;
                        break;
                    }
                if (next < 0) return out;
                x = next;
                walk.push_back(x);
            }
            out.push_back(std::move(walk));
        }
    }
};

constexpr int kInf = 1 << 20;

}  // namespace

MengerResult max_disjoint_paths(const Graph& g, const VertexSet& a_in, const VertexSet& b_in, bool internal_only) {
    MengerResult res;
    res.paths.fully_disjoint = !internal_only;
    VertexSet a, b;
    for (Vertex v : a_in)
        if (g.has_vertex(v)) a.insert(v);
    for (Vertex v : b_in)
        if (g.has_vertex(v)) b.insert(v);

    // Shared vertices: trivial paths, and part of every separator.
    VertexSet both;
    for (Vertex v : a)
        if (b.count(v)) both.insert(v);
    for (Vertex v : both) {
        res.paths.paths.push_back({v});
        res.separator.insert(v);
    }
    Graph h = g.without_vertices(both);
    for (Vertex v : both) {
        a.erase(v);
        b.erase(v);
    }
    if (a.empty() || b.empty()) return res;

    std::vector<Vertex> vs = h.vertices();
    std::map<Vertex, int> idx;
    for (Vertex v : vs) idx.emplace(v, static_cast<int>(idx.size()));
    const int n = static_cast<int>(vs.size());
    const int S = 2 * n, T = 2 * n + 1;
    FlowNet net(2 * n + 2);
    auto in = [&](Vertex v) { return 2 * idx[v]; };
    auto out = [&](Vertex v) { return 2 * idx[v] + 1; };
    std::map<Edge, std::pair<int, int>> direct_arc;  // internal mode a-b edges

    for (Vertex v : vs) {
        bool terminal = a.count(v) || b.count(v);
        if (!internal_only) net.add(in(v), out(v), 1);
        else if (!terminal) net.add(in(v), out(v), 1);
    }
    for (Vertex v : a) net.add(S, internal_only ? out(v) : in(v), kInf);
    for (Vertex v : b) net.add(internal_only ? in(v) : out(v), T, kInf);
    for (const auto& [u, v] : h.edges()) {
        for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
            if (internal_only) {
                // interiors avoid the terminal sets: no arcs into a, none out of b
                if (a.count(y) || b.count(x)) continue;
                bool direct = a.count(x) && b.count(y);
                int i = net.add(out(x), in(y), direct ? 1 : kInf);
                if (direct) direct_arc[make_edge(x, y)] = {out(x), i};
            } else {
                net.add(out(x), in(y), kInf);
            }
        }
    }
    net.maxflow(S, T);

    auto seen = net.reachable(S);
    auto node_vertex = [&](int node) { return vs[node / 2]; };
    for (const auto& walk : net.decompose(S, T)) {
        std::vector<Vertex> p;
        for (int node : walk) {
            if (node == S || node == T) continue;
            Vertex v = node_vertex(node);
            if (p.empty() || p.back() != v) p.push_back(v);
        }
        res.paths.paths.push_back(p);
    }

    // Full mode: trim so each path touches a only first and b only last.
    if (!internal_only) {
        for (auto& p : res.paths.paths) {
            if (p.size() <= 1) continue;
            std::size_t last_a = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (a.count(p[i])) last_a = i;
            std::size_t first_b = p.size() - 1;
            for (std::size_t i = last_a; i < p.size(); ++i)
                if (b.count(p[i])) {
                    first_b = i;
                    break;
                }
            p = std::vector<Vertex>(p.begin() + last_a, p.begin() + first_b + 1);
        }
    }

    // Minimum cut from the residual graph (computed before decomposition).
    for (Vertex v : vs) {
        if (internal_only && (a.count(v) || b.count(v))) continue;
        if (seen[in(v)] && !seen[out(v)]) res.separator.insert(v);
    }
    if (internal_only)
        for (const auto& [e, arc] : direct_arc) {
            int x = arc.first;
            int y = net.adj[x][arc.second].to;
            if (seen[x] && !seen[y]) res.separator_edges.insert(e);
        }
    return res;
}

}  // namespace surfmin

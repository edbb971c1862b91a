#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surfmin {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second
using VertexSet = std::set<Vertex>;
using EdgeSet = std::set<Edge>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Finite simple undirected graph. Builders mutate; every algorithm in the
// library takes graphs by const reference and returns fresh values.
class Graph {
public:
    Graph() = default;

    void add_vertex(Vertex v);
    void add_edge(Vertex u, Vertex v);  // adds missing endpoints; loop -> invalid_argument
    void remove_edge(Vertex u, Vertex v);
    void remove_vertex(Vertex v);

    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return m_; }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    const VertexSet& neighbors(Vertex v) const;

    std::vector<Vertex> vertices() const;  // ascending
    std::vector<Edge> edges() const;       // lexicographic
    VertexSet vertex_set() const;
    Vertex max_vertex() const;  // -1 when empty

    const std::map<Vertex, VertexSet>& adjacency() const { return adj_; }

    Graph induced(const VertexSet& keep) const;
    Graph without_vertices(const VertexSet& drop) const;
    Graph without_edges(const EdgeSet& drop) const;
    Graph edge_subgraph(const EdgeSet& keep) const;  // vertices = endpoints only

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::map<Vertex, VertexSet> adj_;
    std::size_t m_ = 0;
};

Graph graph_from_edges(const std::vector<Edge>& edges, const std::vector<Vertex>& extra_vertices = {});

struct MarkedGraph {
    Graph graph;
    VertexSet marked;

    void validate() const;  // marked subset of vertices
};

struct PathSystem {
    std::vector<std::vector<Vertex>> paths;
    bool fully_disjoint = true;  // false: only interiors are disjoint
};

// Checks path simplicity, edges against the host and the declared disjointness.
bool valid_path_system(const Graph& g, const PathSystem& ps, std::string* why = nullptr);

// surgery ----------------------------------------------------------------

Graph identify_vertices(const Graph& g, Vertex v, Vertex w);
std::pair<Graph, Vertex> cone(const Graph& g, const VertexSet& u);
Graph contract(const Graph& g, const EdgeSet& f);
// Representative (smallest id of each contracted class) for every vertex.
std::map<Vertex, Vertex> contraction_map(const Graph& g, const EdgeSet& f);

Graph disjoint_union(const Graph& a, const Graph& b, Vertex offset_b);
Graph complete_graph(int n, Vertex first = 0);
Graph complete_bipartite(int a, int b, Vertex first = 0);  // sides [first, first+a) and the rest
Graph cycle_graph(int n, Vertex first = 0);
Graph path_graph(int n, Vertex first = 0);

// structure ---------------------------------------------------------------

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
std::size_t cycle_rank(const Graph& g);
Graph two_core(const Graph& g);
int girth(const Graph& g);  // 0 for forests
std::vector<Vertex> shortest_cycle(const Graph& g, const VertexSet& avoid = {});
std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const VertexSet& avoid = {});
EdgeSet spanning_forest(const Graph& g);

struct BlockStructure {
    std::vector<EdgeSet> blocks;  // maximal 2-connected blocks and bridges
    VertexSet cut_vertices;
    std::vector<VertexSet> block_vertices() const;
};
BlockStructure blocks(const Graph& g);
bool is_two_connected(const Graph& g);

EdgeSet minimal_connecting_forest(const Graph& g, const VertexSet& s);

// Boost-backed isomorphism test.
bool isomorphic(const Graph& a, const Graph& b);

// Menger ------------------------------------------------------------------

struct MengerResult {
    PathSystem paths;
    VertexSet separator;
    EdgeSet separator_edges;  // internal mode only: direct a-b edges
    std::size_t size() const { return paths.paths.size(); }
};

// Full mode: vertex-disjoint a-b paths, each meeting a only at its first and b
// only at its last vertex; shared vertices of a and b give trivial paths.
// Internal mode: paths may share end vertices, interiors are disjoint and avoid
// a and b; a vertex in both sets is a trivial path and belongs to the separator.
MengerResult max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b, bool internal_only);

}  // namespace surfmin

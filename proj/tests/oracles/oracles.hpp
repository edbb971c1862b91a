#pragma once

// Brute-force reference implementations. They only read vertex and edge
// lists from surfmin::Graph and never call library algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "surfmin/graph.hpp"

namespace oracle {

using surfmin::Graph;
using surfmin::Vertex;
using surfmin::VertexSet;

// Non-isomorphic graphs on exactly n vertices (ids 0..n-1), n <= 7.
std::vector<Graph> graphs_on(int n);
// All of them for 1..max_n.
std::vector<Graph> graphs_up_to(int max_n);

bool connected(const Graph& g);
int components(const Graph& g);
int cycle_rank(const Graph& g);

// Faces of the rotation given as neighbour lists in cyclic order.
int count_faces(const Graph& g, const std::map<Vertex, std::vector<Vertex>>& rot);
// Genus of a rotation, summed over components.
int rotation_genus(const Graph& g, const std::map<Vertex, std::vector<Vertex>>& rot);
// Minimum genus of a connected graph by enumerating every rotation system.
// Returns -1 when the rotation count exceeds `limit`.
int exhaustive_genus(const Graph& g, double limit = 2e7);

// Subgraph that subdivides K5 or K3,3 (branch vertices and disjoint paths).
bool has_kuratowski_subdivision(const Graph& g);

// H < G by enumerating partitions of subsets of V(G) into |V(H)| connected blocks.
bool has_minor(const Graph& g, const Graph& h);

// Branch sets disjoint, connected, adjacent along every pattern edge, and
// every marked pattern vertex owns a marked host vertex.
bool model_ok(const Graph& g, const Graph& h, const std::map<Vertex, VertexSet>& sets,
              const VertexSet& host_marked = {}, const VertexSet& pattern_marked = {});

// True when no path joins a \ s to b \ s in g - s.
bool separates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s);

Graph random_graph(int n, double p, std::mt19937& rng);
Graph random_tree(int n, std::mt19937& rng);

// fixtures
Graph petersen();
Graph wheel(int m);             // hub 0, rim 1..m
Graph circular_ladder(int m);   // rims 0..m-1 and m..2m-1
Graph subdivided_star(int m);   // centre 0, middles 1..m, leaves m+1..2m
Graph binary_tree(int depth);   // heap numbering from 0
// `copies` copies of h glued at vertex `hub`; copy c > 0 shifted by c * (max id + 1).
Graph bouquet(const Graph& h, int copies, Vertex hub);

}  // namespace oracle

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfmin/deadline.hpp"
#include "surfmin/graph.hpp"

namespace surfmin {

using Dart = std::pair<Vertex, Vertex>;  // directed edge side tail -> head

// Cyclic neighbour order at every vertex.
struct RotationSystem {
    std::map<Vertex, std::vector<Vertex>> order;

    Vertex successor(Vertex v, Vertex after) const;  // next neighbour of v after `after`
    bool operator==(const RotationSystem& o) const { return order == o.order; }
};

bool valid_rotation(const Graph& g, const RotationSystem& rot, std::string* why = nullptr);

struct FaceSet {
    std::vector<std::vector<Dart>> faces;
    int genus = 0;                       // summed over components
    std::vector<VertexSet> components;   // parallel to component_faces
    std::vector<int> component_faces;

    std::vector<std::vector<Vertex>> vertex_walks() const;
};

// Face of a dart arriving at v = (u,v): continue with (v, successor(v, u)).
FaceSet trace_faces(const Graph& g, const RotationSystem& rot);
int rotation_genus(const Graph& g, const RotationSystem& rot);

// Rotation of g restricted to the edges of a subgraph h (order preserved).
RotationSystem restrict_rotation(const RotationSystem& rot, const Graph& h);

// planarity ----------------------------------------------------------------

struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind kind = Kind::K5;
    // K5: five branch vertices. K33: sides {0,1,2} and {3,4,5}.
    std::vector<Vertex> branch;
    // One path per branch pair: K5 in order (0,1),(0,2)..(3,4); K33 as (i, 3+j).
    PathSystem paths;

    std::pair<Vertex, Vertex> pair_of(std::size_t path_index) const;
    VertexSet support() const;
    Graph subgraph() const;
};

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w, std::string* why = nullptr);

struct PlanarityResult {
    bool planar = true;
    RotationSystem rotation;    // genus-0 rotation when planar
    KuratowskiWitness witness;  // verified subdivision otherwise
};

PlanarityResult planarity(const Graph& g);
bool is_planar(const Graph& g);  // test only, no certificate work
// Builds a witness from any subgraph that is exactly a K5/K33 subdivision.
bool witness_from_subdivision(const Graph& k, KuratowskiWitness& out);

// genus ------------------------------------------------------------------

enum class GenusStatus { Exact, ExceedsBudget, Unknown };

struct GenusResult {
    GenusStatus status = GenusStatus::Unknown;
    int genus = 0;  // exact value, or best proven lower bound otherwise
    RotationSystem rotation;
    bool exact() const { return status == GenusStatus::Exact; }
};

// Euler/girth lower bound for a connected graph.
int genus_lower_bound(const Graph& g);

// Minimum orientable genus, summed over components. ExceedsBudget is only
// reported when the search was exhaustive; a timeout gives Unknown.
GenusResult min_genus(const Graph& g, int budget, const Deadline& dl = Deadline::never());

// Genus as the sum over blocks of per-block exhaustive genus.
GenusResult genus_additivity(const Graph& g, int budget, const Deadline& dl = Deadline::never());

// Exhaustive search restricted to one connected graph without block splitting.
GenusResult connected_genus_search(const Graph& g, int budget, const Deadline& dl);

struct HandleMergeResult {
    Graph graph;
    RotationSystem rotation;
    int genus_bound = 0;
    int genus = 0;  // traced genus of the returned rotation
};

// Disjoint union of the two embedded graphs followed by the listed vertex
// identifications (second vertex merged into the first). Each identification
// splices the two rotations at a pair of corners, preferring corners on a
// common face so that no handle is added.
HandleMergeResult handle_merge(const RotationSystem& a, const RotationSystem& b,
                               const std::vector<std::pair<Vertex, Vertex>>& identifications);

Graph graph_of_rotation(const RotationSystem& rot);

}  // namespace surfmin

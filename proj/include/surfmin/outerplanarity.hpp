#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "surfmin/deadline.hpp"
#include "surfmin/embedding.hpp"
#include "surfmin/minor.hpp"
#include "surfmin/patterns.hpp"

namespace surfmin {

struct ThetaWitness {
    int index = 0;                // 1..4
    MinorModel model;             // marked model of theta(index) in the host
    bool cone_on_branch = false;  // cone vertex was a branch vertex of the subdivision
};

// Thrown when a relative test is asked about a non-planar host.
class NonPlanarHost : public std::invalid_argument {
public:
    explicit NonPlanarHost(KuratowskiWitness w)
        : std::invalid_argument("host graph is not planar"), witness(std::move(w)) {}
    KuratowskiWitness witness;
};

struct UOuterResult {
    bool outerplanar = false;
    Graph cone_graph;
    Vertex cone_vertex = -1;
    RotationSystem cone_rotation;  // planar rotation of the cone when outerplanar
    ThetaWitness witness;          // otherwise
};

// Planarity of the cone over u. Requires g planar (throws NonPlanarHost).
UOuterResult is_u_outerplanar(const Graph& g, const VertexSet& u);

// Theta model read off a Kuratowski subdivision in the cone over g.marked.
ThetaWitness extract_theta(const MarkedGraph& g, const KuratowskiWitness& k, Vertex cone_v);

struct RelativeGenusResult {
    GenusStatus status = GenusStatus::Exact;  // worst status of all subcalls
    int gamma_cone = 0;
    int gamma_base = 0;
    std::vector<Vertex> critical;
};

// Critical vertices x satisfy gamma(cone(g-x)) <= gamma(g-x); they are only
// looked for when gamma_cone > gamma_base.
RelativeGenusResult relative_genus(const Graph& g, const VertexSet& u, int budget,
                                   const Deadline& dl = Deadline::never());

struct StarResult {
    bool found = false;
    PathSystem paths;     // maximum family of disjoint N(x) -> marked paths
    VertexSet separator;  // same size as paths
};

StarResult u_star_search(const MarkedGraph& g, Vertex x, int n);

struct DoubleStarResult {
    SearchStatus status = SearchStatus::NotFound;
    MinorModel model;  // marked model of u_pattern(5, false, n), hubs x and y
    VertexSet separator;
};

DoubleStarResult double_star_search(const MarkedGraph& g, Vertex x, Vertex y, int n,
                                    const Deadline& dl = Deadline::never());

struct SUOutcome {
    enum class Kind { Witness, Certificate, Exhausted };
    Kind kind = Kind::Exhausted;
    PatternId pattern;  // witness: omega-theta, u, u' or u5 at level n
    MinorModel model;   // marked model of pattern_graph(pattern)
    int cone_genus = 0;
    RotationSystem cone_rotation;  // certificate
    std::string note;
};

// Finite search for an obstruction to gamma(cone(g)) <= genus_budget.
SUOutcome su_obstruction(const MarkedGraph& g, int genus_budget, int n, const Deadline& dl = Deadline::never());

// Some theta marked minor of g. Planar hosts go through the cone's Kuratowski
// subdivision; others through the branch-set search.
SearchStatus find_theta(const MarkedGraph& g, ThetaWitness& out, const Deadline& dl = Deadline::never());

}  // namespace surfmin

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfmin/decomposition.hpp"
#include "surfmin/deadline.hpp"
#include "surfmin/graph.hpp"
#include "surfmin/minor.hpp"
#include "surfmin/outerplanarity.hpp"
#include "surfmin/patterns.hpp"

namespace surfmin {

// structures --------------------------------------------------------------

// Carrier layout by kind:
//   star, two-star: designated {centre}; one path per leaf, centre first
//   comb:           paths[0] spine, paths[1..] teeth starting on the spine
//   double-star:    designated {x, y}; x-y paths with disjoint interiors
//   ladder:         paths[0], paths[1] the rails, paths[2..] rungs
//   fan:            designated {apex}; paths[0] the rail, paths[1..] apex-rail paths
//   dominating-set: designated = D, no paths
struct CombStructure {
    enum class Kind { Star, Comb, TwoStar, DoubleStar, Ladder, Fan, DominatingSet };
    Kind kind = Kind::Star;
    int level = 0;
    PathSystem carrier;
    std::vector<Vertex> designated;
};

const char* to_string(CombStructure::Kind k);

struct StructureResult {
    SearchStatus status = SearchStatus::NotFound;  // NotFound: budget exhausted, no structure
    CombStructure structure;
    bool found() const { return status == SearchStatus::Found; }
};

// Checks the layout above against g and u at the stated level. For the
// dominating-set kind `level` is the bound on |D|.
ModelReport verify_structure(const Graph& g, const VertexSet& u, const CombStructure& s);

// Size of u beyond which star_comb always answers on trees.
inline std::size_t star_comb_threshold(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }

// Star or comb of level n in a Steiner tree of u.
StructureResult star_comb(const Graph& g, const VertexSet& u, int n);
// Dominating set of size <= d, else a two-star, else a comb.
StructureResult two_star_search(const Graph& g, const VertexSet& u, int n, int d);
// Double-star, fan or ladder of level n; g must be 2-connected.
StructureResult two_connected_structures(const Graph& g, const VertexSet& u, int n,
                                         const Deadline& dl = Deadline::never());

// dichotomies -------------------------------------------------------------

enum class FlawKind { EdgeDeletion, Contraction, VertexDeletion };

struct DichotomyOutcome {
    enum class Tag { Witness, Flaw, Exhausted };
    Tag tag = Tag::Exhausted;
    PatternId pattern;  // witness
    MinorModel model;
    FlawKind flaw_kind = FlawKind::EdgeDeletion;
    EdgeSet flaw_edges;      // deletion or contraction sets
    VertexSet flaw_vertices;
    std::string note;
};

const char* to_string(DichotomyOutcome::Tag t);

enum class BaseClass { Forest, Outerplanar, Planar };

// Witness against its pattern, or the base-class test after applying the flaw.
ModelReport verify_outcome(const Graph& g, const DichotomyOutcome& o, BaseClass base);

DichotomyOutcome forest_edge_dichotomy(const Graph& g, int n, int k, const Deadline& dl = Deadline::never());
DichotomyOutcome forest_contract_dichotomy(const Graph& g, int n, int k, const Deadline& dl = Deadline::never());
DichotomyOutcome almost_outerplanar_dichotomy(const Graph& g, int n, int k, const Deadline& dl = Deadline::never());
DichotomyOutcome planar_vertex_flaws(const Graph& g, int n, int k, const Deadline& dl = Deadline::never());

bool is_outerplanar(const Graph& g);

// classification ----------------------------------------------------------

struct SigmaWitness {
    int index = 0;
    int level = 0;
    MinorModel model;  // model of sigma(index, level) in the host
    std::string route;  // how it was found, e.g. "packing" or "u2'(3) at 7"
};

struct ClassifyStage {
    Vertex v1 = -1;
    SUOutcome outcome;
};

struct ClassifyReport {
    DichotomyOutcome flaws;
    std::vector<ClassifyStage> stages;
    std::vector<SigmaWitness> witnesses;
    std::optional<Decomposition> decomposition;  // embeddable side
    std::optional<GenusBound> bound;
    std::vector<std::string> exhausted;  // stages that ran out of budget
    bool definitive() const { return !witnesses.empty() || (decomposition.has_value() && exhausted.empty()); }
};

ClassifyReport classify(const Graph& g, int n, int k, int genus_budget, const Deadline& dl = Deadline::never());

}  // namespace surfmin

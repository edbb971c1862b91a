#pragma once

#include <string>
#include <vector>

#include "surfmin/deadline.hpp"
#include "surfmin/embedding.hpp"

namespace surfmin {

struct Decomposition {
    std::vector<Graph> pieces;
    Graph core;  // refined core H' (empty when the host is planar)
    std::size_t cap = 0;

    // Pairwise intersections of the pieces, keyed by piece indices (i < j).
    std::map<std::pair<std::size_t, std::size_t>, VertexSet> overlaps() const;
};

struct DecompositionReport {
    bool ok = true;
    std::vector<std::string> violations;
};

DecompositionReport verify_decomposition(const Graph& g, const Decomposition& d, std::size_t cap);

struct GenusBound {
    GenusStatus status = GenusStatus::Exact;
    int bound = 0;
    int identifications = 0;  // sum over vertices of (pieces containing it - 1)
};

GenusBound genus_bound(const Decomposition& d, int piece_budget, const Deadline& dl = Deadline::never());

struct DecomposeResult {
    GenusStatus status = GenusStatus::Exact;  // Exact: decomposition built
    int genus = 0;
    Decomposition decomposition;
};

// Planar pieces plus the single edges of the refined core, built component by
// component from a minimum-genus rotation.
DecomposeResult decompose(const Graph& g, int genus_budget, const Deadline& dl = Deadline::never());

struct PlanarizeResult {
    enum class Kind { Found, NotFoundWithinK, Timeout };
    Kind kind = Kind::NotFoundWithinK;
    EdgeSet edges;
    std::string method;  // "empty", "forest" or "exhaustive"
};

PlanarizeResult contraction_planarize(const Graph& g, int k, int genus_budget, const Deadline& dl = Deadline::never());

}  // namespace surfmin

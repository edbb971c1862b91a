#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfmin/deadline.hpp"
#include "surfmin/graph.hpp"

namespace surfmin {

struct MinorModel {
    std::map<Vertex, VertexSet> branch_sets;  // pattern vertex -> host vertices
    std::map<Edge, Edge> connect_edges;       // pattern edge -> host edge

    VertexSet support() const;
};

struct ModelReport {
    bool ok = true;
    std::vector<std::string> violations;
    explicit operator bool() const { return ok; }
};

// Checks every model invariant against host g and pattern h; never throws.
ModelReport verify_model(const Graph& g, const Graph& h, const MinorModel& m);
// verify_model plus: marked pattern vertices own a marked host vertex.
ModelReport verify_marked_model(const MarkedGraph& g, const MarkedGraph& h, const MinorModel& m);

// Fills connecting edges (smallest host edge per pattern edge) for the given
// branch sets; throws logic_error when a pattern edge has no host edge.
MinorModel complete_model(const Graph& g, const Graph& h, std::map<Vertex, VertexSet> sets);

// Model of h in f from models h < g and g < f.
MinorModel compose_models(const MinorModel& h_in_g, const MinorModel& g_in_f);

enum class SearchStatus { Found, NotFound, Timeout };
const char* to_string(SearchStatus s);

struct MinorSearchResult {
    SearchStatus status = SearchStatus::NotFound;
    MinorModel model;
    bool found() const { return status == SearchStatus::Found; }
};

// Each listed pattern vertex must own at least one host vertex from its set.
using MeetConstraints = std::map<Vertex, VertexSet>;

// Exhaustive branch-set search. NotFound is only reported when the search
// space was exhausted; otherwise the result is Timeout.
MinorSearchResult find_minor(const Graph& g, const Graph& h, const Deadline& dl = Deadline::never(),
                             const MeetConstraints& meet = {});
MinorSearchResult find_marked_minor(const MarkedGraph& g, const MarkedGraph& h,
                                    const Deadline& dl = Deadline::never());

struct PackResult {
    SearchStatus status = SearchStatus::NotFound;  // Found iff models.size() >= n
    std::vector<MinorModel> models;                // best found otherwise
};

PackResult pack_disjoint(const Graph& g, const Graph& h, int n, const Deadline& dl = Deadline::never());

struct BouquetResult {
    SearchStatus status = SearchStatus::NotFound;
    Vertex hub_host = -1;
    std::vector<MinorModel> models;
};

// n models of h whose supports pairwise meet exactly in one host vertex that
// lies in every model's hub branch set.
BouquetResult pack_bouquet(const Graph& g, const Graph& h, Vertex hub, int n,
                           const Deadline& dl = Deadline::never());

// n disjoint copies of h, copy c shifted by c * (max id of h + 1).
Graph disjoint_copies(const Graph& h, int n);
Vertex copy_offset(const Graph& h);

}  // namespace surfmin

#pragma once

#include <string>
#include <vector>

#include "surfmin/deadline.hpp"
#include "surfmin/graph.hpp"
#include "surfmin/minor.hpp"

namespace surfmin {

enum class Family { Theta, U, UPrime, Sigma, OmegaTheta, Aux };
enum class AuxKind { G1, G2, K2w, OmegaK3, VeeK3, OmegaK4, VeeK4, OmegaK23 };

struct PatternId {
    Family family = Family::Sigma;
    int index = 1;  // unused for Aux
    int level = 1;  // unused for Theta
    AuxKind aux = AuxKind::OmegaK3;

    static PatternId theta(int i) { return {Family::Theta, i, 0, AuxKind::OmegaK3}; }
    static PatternId u(int i, bool primed, int n) { return {primed ? Family::UPrime : Family::U, i, n, AuxKind::OmegaK3}; }
    static PatternId sigma(int i, int n) { return {Family::Sigma, i, n, AuxKind::OmegaK3}; }
    static PatternId omega_theta(int i, int n) { return {Family::OmegaTheta, i, n, AuxKind::OmegaK3}; }
    static PatternId of_aux(AuxKind k, int n) { return {Family::Aux, 0, n, k}; }

    std::string name() const;  // e.g. "sigma3(4)", "u2'(3)", "theta1", "veeK3(2)"
    bool operator==(const PatternId& o) const;
};

// Accepts the names produced by PatternId::name(); throws invalid_argument.
PatternId parse_pattern(const std::string& s);
const char* aux_name(AuxKind k);

Graph sigma(int i, int n);
MarkedGraph theta(int i);
MarkedGraph u_pattern(int i, bool primed, int n);
MarkedGraph omega_theta(int i, int n);
Graph aux_pattern(AuxKind kind, int n);
MarkedGraph pattern_graph(const PatternId& id);  // unmarked families get an empty mark set

// Vertex 0 of every theta is a marked vertex; this one is unmarked (none for theta 1).
Vertex theta_unmarked_vertex(int i);
// Ids of copy c's vertices in the bouquet patterns: theta vertex t of copy c.
Vertex u_vertex(int i, bool primed, int c, Vertex t);

struct SigmaConversion {
    int index = 0;  // sigma family
    int level = 0;
    MinorModel model;  // model of sigma(index, level) in the host
    bool isomorphic_row = false;  // the cone is the sigma graph itself
};

// x is a marked-minor model of pattern x_kind in g - cone_v where the marked
// host set is N(cone_v). Returns a verified model of the matching sigma graph.
SigmaConversion convert_to_sigma(const Graph& g, Vertex cone_v, const PatternId& x_kind, const MinorModel& model);

struct CatalogRow {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct CatalogReport {
    std::vector<CatalogRow> rows;
    bool ok() const;
};

// Pattern invariants, the twelve conversion rows and the pairwise non-minor
// checks at level 2.
CatalogReport verify_catalog(int n, const Deadline& dl = Deadline::never());
// Only the twelve conversion rows.
CatalogReport verify_conversions(int n);
// Sigma_i(2) against Sigma_j(2) for i != j.
CatalogReport verify_incomparability(const Deadline& dl = Deadline::never());

}  // namespace surfmin

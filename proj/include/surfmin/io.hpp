#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfmin/decomposition.hpp"
#include "surfmin/dichotomy.hpp"
#include "surfmin/embedding.hpp"
#include "surfmin/minor.hpp"
#include "surfmin/outerplanarity.hpp"

namespace surfmin {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    int line;
};

// Edge-list text: "u v" edges, "M u" marked, "V u" isolated vertices, '#' comments.
// Duplicate edges are collapsed and reported through `warnings`.
MarkedGraph parse_edge_list(const std::string& text, std::vector<std::string>* warnings = nullptr);
std::string write_edge_list(const MarkedGraph& g);

// Either format; JSON is recognised by a leading '{'.
MarkedGraph parse_graph_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
MarkedGraph read_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

json graph_to_json(const MarkedGraph& g);
json graph_to_json(const Graph& g);
MarkedGraph graph_from_json(const json& j);

json rotation_to_json(const Graph& g, const RotationSystem& rot);  // rotation, faces, genus
RotationSystem rotation_from_json(const json& j);

json model_to_json(const MinorModel& m);
MinorModel model_from_json(const json& j);

json kuratowski_to_json(const KuratowskiWitness& w);
KuratowskiWitness kuratowski_from_json(const json& j);

json paths_to_json(const PathSystem& p);
PathSystem paths_from_json(const json& j);

json structure_to_json(const CombStructure& s);
CombStructure structure_from_json(const json& j);

// Witness object: pattern name, the pattern graph itself and the model.
json witness_to_json(const std::string& name, const MarkedGraph& pattern, const MinorModel& m);

json outcome_to_json(const DichotomyOutcome& o, BaseClass base);
json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);
json su_outcome_to_json(const MarkedGraph& g, const SUOutcome& o);
json classify_to_json(const ClassifyReport& r);

struct CheckLine {
    std::string what;
    bool ok = false;
    std::string detail;
};

// Re-checks every certificate found in a report against the host graph:
// rotations, Kuratowski witnesses, witness models, structures, flaw sets and
// decompositions, wherever they occur in the JSON tree.
std::vector<CheckLine> verify_report(const MarkedGraph& host, const json& report);

}  // namespace surfmin

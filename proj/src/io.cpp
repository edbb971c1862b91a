#include "surfmin/io.hpp"

#include <fstream>
#include <sstream>

namespace surfmin {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Vertex parse_id(const std::string& tok, int line) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a vertex id, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected a vertex id, got '" + tok + "'");
    if (v < 0 || v > 1000000000L) throw ParseError(line, "vertex id out of range: " + tok);
    return static_cast<Vertex>(v);
}

json ids(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

json edge_list(const EdgeSet& es) {
    json a = json::array();
    for (const auto& [u, v] : es) a.push_back({u, v});
    return a;
}

EdgeSet edges_from(const json& a) {
    EdgeSet es;
    for (const auto& e : a) es.insert(make_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>()));
    return es;
}

VertexSet set_from(const json& a) {
    VertexSet s;
    for (const auto& v : a) s.insert(v.get<Vertex>());
    return s;
}

}  // namespace

MarkedGraph parse_edge_list(const std::string& text, std::vector<std::string>* warnings) {
    MarkedGraph g;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.size() != 2) throw ParseError(line, "expected 'u v', 'M u' or 'V u'");
        if (tok[0] == "M" || tok[0] == "V") {
            Vertex v = parse_id(tok[1], line);
            g.graph.add_vertex(v);
            if (tok[0] == "M") g.marked.insert(v);
            continue;
        }
        Vertex u = parse_id(tok[0], line), v = parse_id(tok[1], line);
        if (u == v) throw ParseError(line, "loop at vertex " + tok[0]);
        if (g.graph.has_edge(u, v)) {
            if (warnings) warnings->push_back("line " + std::to_string(line) + ": duplicate edge " + tok[0] + " " + tok[1]);
            continue;
        }
        g.graph.add_edge(u, v);
    }
    return g;
}

std::string write_edge_list(const MarkedGraph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.graph.edges()) out << u << ' ' << v << '\n';
    for (Vertex v : g.graph.vertices())
        if (g.graph.degree(v) == 0) out << "V " << v << '\n';
    for (Vertex v : g.marked) out << "M " << v << '\n';
    return out.str();
}

MarkedGraph parse_graph_text(const std::string& text, std::vector<std::string>* warnings) {
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(0, std::string("invalid JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return parse_edge_list(text, warnings);
}

MarkedGraph read_graph_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph_text(ss.str(), warnings);
}

// graphs ------------------------------------------------------------------

json graph_to_json(const MarkedGraph& g) {
    json j;
    j["vertices"] = g.graph.vertices();
    const auto es = g.graph.edges();
    j["edges"] = edge_list(EdgeSet(es.begin(), es.end()));
    j["marked"] = ids(g.marked);
    return j;
}

json graph_to_json(const Graph& g) { return graph_to_json(MarkedGraph{g, {}}); }

MarkedGraph graph_from_json(const json& j) {
    MarkedGraph g;
    try {
        if (j.contains("vertices"))
            for (const auto& v : j["vertices"]) g.graph.add_vertex(v.get<Vertex>());
        if (j.contains("edges"))
            for (const auto& e : j["edges"]) {
                Vertex u = e.at(0).get<Vertex>(), v = e.at(1).get<Vertex>();
                if (u == v) throw ParseError(0, "loop at vertex " + std::to_string(u));
                if (u < 0 || v < 0) throw ParseError(0, "negative vertex id");
                g.graph.add_edge(u, v);
            }
        if (j.contains("marked")) g.marked = set_from(j["marked"]);
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed graph JSON: ") + e.what());
    }
    for (Vertex v : g.marked) g.graph.add_vertex(v);
    return g;
}

// certificates -------------------------------------------------------------

json rotation_to_json(const Graph& g, const RotationSystem& rot) {
    json j;
    j["type"] = "rotation";
    json r = json::object();
    for (const auto& [v, l] : rot.order) r[std::to_string(v)] = l;
    j["rotation"] = r;
    FaceSet fs = trace_faces(g, rot);
    j["faces"] = fs.vertex_walks();
    j["genus"] = fs.genus;
    j["of"] = "host";
    return j;
}

RotationSystem rotation_from_json(const json& j) {
    RotationSystem rot;
    for (const auto& [k, l] : j.at("rotation").items()) rot.order[std::stoi(k)] = l.get<std::vector<Vertex>>();
    return rot;
}

json model_to_json(const MinorModel& m) {
    json bs = json::object(), es = json::object();
    for (const auto& [p, s] : m.branch_sets) bs[std::to_string(p)] = ids(s);
    for (const auto& [pe, he] : m.connect_edges)
        es[std::to_string(pe.first) + "-" + std::to_string(pe.second)] = {he.first, he.second};
    return {{"branch_sets", bs}, {"edges", es}};
}

MinorModel model_from_json(const json& j) {
    MinorModel m;
    for (const auto& [k, s] : j.at("branch_sets").items()) m.branch_sets[std::stoi(k)] = set_from(s);
    if (j.contains("edges"))
        for (const auto& [k, e] : j["edges"].items()) {
            auto dash = k.find('-');
            if (dash == std::string::npos) throw ParseError(0, "bad model edge key " + k);
            m.connect_edges[make_edge(std::stoi(k.substr(0, dash)), std::stoi(k.substr(dash + 1)))] =
                make_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        }
    return m;
}

json kuratowski_to_json(const KuratowskiWitness& w) {
    return {{"type", "kuratowski"},
            {"kind", w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33"},
            {"branch", w.branch},
            {"paths", w.paths.paths},
            {"of", "host"}};
}

KuratowskiWitness kuratowski_from_json(const json& j) {
    KuratowskiWitness w;
    w.kind = j.at("kind").get<std::string>() == "K5" ? KuratowskiWitness::Kind::K5 : KuratowskiWitness::Kind::K33;
    w.branch = j.at("branch").get<std::vector<Vertex>>();
    w.paths.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    return w;
}

json paths_to_json(const PathSystem& p) { return {{"paths", p.paths}, {"fully_disjoint", p.fully_disjoint}}; }

PathSystem paths_from_json(const json& j) {
    PathSystem p;
    p.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    p.fully_disjoint = j.value("fully_disjoint", true);
    return p;
}

json structure_to_json(const CombStructure& s) {
    return {{"type", "structure"},
            {"kind", to_string(s.kind)},
            {"level", s.level},
            {"designated", s.designated},
            {"carrier", paths_to_json(s.carrier)}};
}

CombStructure structure_from_json(const json& j) {
    CombStructure s;
    const std::string k = j.at("kind").get<std::string>();
    using K = CombStructure::Kind;
    bool known = false;
    for (K kind : {K::Star, K::Comb, K::TwoStar, K::DoubleStar, K::Ladder, K::Fan, K::DominatingSet})
        if (k == to_string(kind)) {
            s.kind = kind;
            known = true;
        }
    if (!known) throw ParseError(0, "unknown structure kind " + k);
    s.level = j.at("level").get<int>();
    s.designated = j.at("designated").get<std::vector<Vertex>>();
    s.carrier = paths_from_json(j.at("carrier"));
    return s;
}

json witness_to_json(const std::string& name, const MarkedGraph& pattern, const MinorModel& m) {
    return {{"type", "witness"}, {"pattern", name}, {"pattern_graph", graph_to_json(pattern)}, {"model", model_to_json(m)}};
}

namespace {

const char* base_name(BaseClass b) {
    switch (b) {
        case BaseClass::Forest: return "forest";
        case BaseClass::Outerplanar: return "outerplanar";
        case BaseClass::Planar: return "planar";
    }
    return "?";
}

const char* flaw_name(FlawKind k) {
    switch (k) {
        case FlawKind::EdgeDeletion: return "edge-deletion";
        case FlawKind::Contraction: return "contraction";
        case FlawKind::VertexDeletion: return "vertex-deletion";
    }
    return "?";
}

}  // namespace

json outcome_to_json(const DichotomyOutcome& o, BaseClass base) {
    json j{{"tag", to_string(o.tag)}, {"note", o.note}};
    if (o.tag == DichotomyOutcome::Tag::Witness)
        j["witness"] = witness_to_json(o.pattern.name(), pattern_graph(o.pattern), o.model);
    if (o.tag == DichotomyOutcome::Tag::Flaw)
        j["flaw"] = {{"type", "flaw"},
                     {"base", base_name(base)},
                     {"kind", flaw_name(o.flaw_kind)},
                     {"edges", edge_list(o.flaw_edges)},
                     {"vertices", ids(o.flaw_vertices)}};
    return j;
}

json decomposition_to_json(const Decomposition& d) {
    json pieces = json::array();
    for (const Graph& p : d.pieces) pieces.push_back(graph_to_json(p));
    json ov = json::array();
    for (const auto& [ij, s] : d.overlaps()) ov.push_back({{"pieces", {ij.first, ij.second}}, {"vertices", ids(s)}});
    return {{"type", "decomposition"}, {"pieces", pieces}, {"core", graph_to_json(d.core)}, {"cap", d.cap}, {"overlaps", ov}};
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    for (const auto& p : j.at("pieces")) d.pieces.push_back(graph_from_json(p).graph);
    if (j.contains("core")) d.core = graph_from_json(j["core"]).graph;
    d.cap = j.value("cap", std::size_t{0});
    return d;
}

json su_outcome_to_json(const MarkedGraph& g, const SUOutcome& o) {
    json j{{"note", o.note}, {"cone_genus", o.cone_genus}};
    switch (o.kind) {
        case SUOutcome::Kind::Witness: {
            j["outcome"] = "witness";
            json w = witness_to_json(o.pattern.name(), pattern_graph(o.pattern), o.model);
            w["host_marked"] = ids(g.marked);
            j["witness"] = w;
            break;
        }
        case SUOutcome::Kind::Certificate: {
            j["outcome"] = "certificate";
            auto [c, cv] = cone(g.graph, g.marked);
            json r = rotation_to_json(c, o.cone_rotation);
            r["of"] = "cone";
            r["cone_over"] = ids(g.marked);
            j["certificate"] = r;
            break;
        }
        case SUOutcome::Kind::Exhausted: j["outcome"] = "budget-exhausted"; break;
    }
    return j;
}

json classify_to_json(const ClassifyReport& r) {
    json j;
    j["planar_vertex_flaws"] = outcome_to_json(r.flaws, BaseClass::Planar);
    json stages = json::array();
    for (const auto& s : r.stages) {
        const char* kind = s.outcome.kind == SUOutcome::Kind::Witness       ? "witness"
                           : s.outcome.kind == SUOutcome::Kind::Certificate ? "certificate"
                                                                            : "budget-exhausted";
        json st{{"v1", s.v1}, {"outcome", kind}, {"note", s.outcome.note}};
        if (s.outcome.kind == SUOutcome::Kind::Witness) st["pattern"] = s.outcome.pattern.name();
        stages.push_back(st);
    }
    j["stages"] = stages;
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        json x = witness_to_json(PatternId::sigma(w.index, w.level).name(), MarkedGraph{sigma(w.index, w.level), {}}, w.model);
        x["route"] = w.route;
        ws.push_back(x);
    }
    j["witnesses"] = ws;
    if (r.decomposition) j["decomposition"] = decomposition_to_json(*r.decomposition);
    if (r.bound) j["genus_bound"] = r.bound->bound;
    j["exhausted"] = r.exhausted;
    return j;
}

// closed-loop verification --------------------------------------------------

namespace {

Graph target_of(const MarkedGraph& host, const json& node) {
    if (node.value("of", "host") == "cone") {
        VertexSet over = node.contains("cone_over") ? set_from(node["cone_over"]) : host.marked;
        return cone(host.graph, over).first;
    }
    return host.graph;
}

void visit(const MarkedGraph& host, const json& node, const std::string& where, std::vector<CheckLine>& out) {
    if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i) visit(host, node[i], where + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (!node.is_object()) return;
    const std::string type = node.contains("type") && node["type"].is_string() ? node["type"].get<std::string>() : "";
    CheckLine line{where + " " + type, false, ""};
    try {
        if (type == "witness") {
            MarkedGraph pattern = graph_from_json(node.at("pattern_graph"));
            MinorModel m = model_from_json(node.at("model"));
            line.what = where + " witness " + node.value("pattern", "");
            ModelReport rep;
            if (pattern.marked.empty()) {
                rep = verify_model(host.graph, pattern.graph, m);
            } else {
                MarkedGraph h{host.graph, node.contains("host_marked") ? set_from(node["host_marked"]) : host.marked};
                rep = verify_marked_model(h, pattern, m);
            }
            line.ok = rep.ok;
            if (!rep.ok) line.detail = rep.violations.front();
        } else if (type == "rotation") {
            Graph g = target_of(host, node);
            RotationSystem rot = rotation_from_json(node);
            std::string why;
            if (!valid_rotation(g, rot, &why)) {
                line.detail = why;
            } else {
                int genus = rotation_genus(g, rot);
                line.ok = genus == node.at("genus").get<int>();
                if (!line.ok) line.detail = "traced genus " + std::to_string(genus);
            }
        } else if (type == "kuratowski") {
            std::string why;
            line.ok = verify_kuratowski(target_of(host, node), kuratowski_from_json(node), &why);
            line.detail = why;
        } else if (type == "structure") {
            CombStructure s = structure_from_json(node);
            VertexSet u = node.contains("u") ? set_from(node["u"]) : host.marked;
            ModelReport rep = verify_structure(host.graph, u, s);
            line.ok = rep.ok;
            if (!rep.ok) line.detail = rep.violations.front();
        } else if (type == "flaw") {
            DichotomyOutcome o;
            o.tag = DichotomyOutcome::Tag::Flaw;
            const std::string kind = node.at("kind").get<std::string>();
            o.flaw_kind = kind == "contraction"       ? FlawKind::Contraction
                          : kind == "vertex-deletion" ? FlawKind::VertexDeletion
                                                      : FlawKind::EdgeDeletion;
            o.flaw_edges = edges_from(node.at("edges"));
            o.flaw_vertices = set_from(node.at("vertices"));
            const std::string b = node.at("base").get<std::string>();
            BaseClass base = b == "forest" ? BaseClass::Forest : b == "outerplanar" ? BaseClass::Outerplanar : BaseClass::Planar;
            ModelReport rep = verify_outcome(host.graph, o, base);
            line.ok = rep.ok;
            if (!rep.ok) line.detail = rep.violations.front();
        } else if (type == "decomposition") {
            Decomposition d = decomposition_from_json(node);
            DecompositionReport rep = verify_decomposition(host.graph, d, d.cap);
            line.ok = rep.ok;
            if (!rep.ok) line.detail = rep.violations.front();
        } else if (type == "contraction") {
            EdgeSet f = edges_from(node.at("edges"));
            line.ok = true;
            for (const auto& [u, v] : f)
                if (!host.graph.has_edge(u, v)) line.ok = false;
            line.ok = line.ok && static_cast<int>(f.size()) <= node.at("k").get<int>() && is_planar(contract(host.graph, f));
            if (!line.ok) line.detail = "contraction does not planarize within k";
        }
    } catch (const std::exception& e) {
        line.ok = false;
        line.detail = e.what();
    }
    if (!type.empty()) out.push_back(line);
    for (const auto& [k, v] : node.items())
        if (v.is_structured() && k != "pattern_graph" && k != "pieces" && k != "core") visit(host, v, where + "." + k, out);
}

}  // namespace

std::vector<CheckLine> verify_report(const MarkedGraph& host, const json& report) {
    std::vector<CheckLine> out;
    visit(host, report, "$", out);
    return out;
}

}  // namespace surfmin

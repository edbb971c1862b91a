// Command-line front end. Every subcommand prints one report; the exit status
// is 0 for a definitive answer, 2 when a budget or timeout ran out, 1 on error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "surfmin/io.hpp"

using namespace surfmin;

namespace {

enum Exit { kDefinitive = 0, kError = 1, kExhausted = 2 };

struct Common {
    bool json_out = false;
    double timeout = 0;
    int budget = 0;
    int n = 0;
    int k = 0;
};

std::vector<std::string> g_warnings;

MarkedGraph load(const std::string& path) {
    MarkedGraph g = read_graph_file(path, &g_warnings);
    g.validate();
    return g;
}

Deadline deadline(const Common& c) { return Deadline::after_seconds(c.timeout); }

std::string human(const json& j, int depth = 0) {
    std::ostringstream out;
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    for (const auto& [k, v] : j.items()) {
        if (v.is_object() && v.contains("type")) {
            out << pad << k << ": <" << v["type"].get<std::string>() << ">\n";
        } else if (v.is_object()) {
            out << pad << k << ":\n" << human(v, depth + 1);
        } else if (v.is_array()) {
            bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
            if (flat)
                out << pad << k << ": " << v.dump() << "\n";
            else
                out << pad << k << ": " << v.size() << " entries\n";
        } else {
            out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
    return out.str();
}

int emit(const Common& c, const std::string& command, int code, json result) {
    json report{{"command", command},
                {"status", code == kDefinitive ? "definitive" : code == kExhausted ? "budget-exhausted" : "error"},
                {"result", std::move(result)}};
    if (!g_warnings.empty()) report["warnings"] = g_warnings;
    if (c.json_out)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human(report);
    return code;
}

int status_of(SearchStatus s) { return s == SearchStatus::Timeout ? kExhausted : kDefinitive; }

void bounded(CLI::App* app, Common& c, bool budget, bool level, bool flaws, bool timeout) {
    if (budget) app->add_option("--budget", c.budget, "genus budget")->required()->check(CLI::Range(0, 16));
    if (level) app->add_option("-n,--level", c.n, "witness level")->required()->check(CLI::Range(1, 64));
    if (flaws) app->add_option("-k,--flaws", c.k, "largest flaw set")->required()->check(CLI::Range(0, 64));
    if (timeout)
        app->add_option("--timeout", c.timeout, "seconds")->required()->check(CLI::Range(0.001, 86400.0));
}

const char* genus_status(GenusStatus s) {
    switch (s) {
        case GenusStatus::Exact: return "exact";
        case GenusStatus::ExceedsBudget: return "exceeds-budget";
        case GenusStatus::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface minors toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_flag("--json", c.json_out, "emit the JSON report");
    std::string file, second;
    std::function<int()> run;

    auto with_file = [&](CLI::App* sub) { sub->add_option("graph", file, "graph file")->required(); };

    // planar
    auto* planar = app.add_subcommand("planar", "planarity with certificate");
    with_file(planar);
    planar->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            PlanarityResult r = planarity(g.graph);
            json res{{"planar", r.planar}};
            if (r.planar)
                res["rotation"] = rotation_to_json(g.graph, r.rotation);
            else
                res["kuratowski"] = kuratowski_to_json(r.witness);
            return emit(c, "planar", kDefinitive, res);
        };
    });

    // genus
    auto* genus = app.add_subcommand("genus", "minimum orientable genus");
    with_file(genus);
    bounded(genus, c, true, false, false, true);
    genus->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            GenusResult r = min_genus(g.graph, c.budget, deadline(c));
            json res{{"search", genus_status(r.status)}};
            if (r.exact()) {
                res["genus"] = r.genus;
                res["rotation"] = rotation_to_json(g.graph, r.rotation);
                return emit(c, "genus", kDefinitive, res);
            }
            res["lower_bound"] = r.genus;
            return emit(c, "genus", kExhausted, res);
        };
    });

    // minor / marked-minor
    for (bool marked : {false, true}) {
        const std::string name = marked ? "marked-minor" : "minor";
        auto* sub = app.add_subcommand(name, marked ? "marked minor containment" : "minor containment");
        with_file(sub);
        sub->add_option("pattern", second, "pattern graph file or catalog name")->required();
        bounded(sub, c, false, false, false, true);
        sub->callback([&, marked, name] {
            run = [&, marked, name] {
                MarkedGraph g = load(file);
                MarkedGraph h;
                std::string label = second;
                if (std::ifstream(second).good()) {
                    h = load(second);
                } else {
                    PatternId id = parse_pattern(second);
                    h = pattern_graph(id);
                    label = id.name();
                }
                MinorSearchResult r = marked ? find_marked_minor(g, h, deadline(c)) : find_minor(g.graph, h.graph, deadline(c));
                json res{{"search", to_string(r.status)}};
                if (r.found()) {
                    MarkedGraph shown = marked ? h : MarkedGraph{h.graph, {}};
                    json w = witness_to_json(label, shown, r.model);
                    if (marked) w["host_marked"] = json(std::vector<Vertex>(g.marked.begin(), g.marked.end()));
                    res["witness"] = w;
                }
                return emit(c, name, status_of(r.status), res);
            };
        });
    }

    // outerplanar
    auto* outer = app.add_subcommand("outerplanar", "U-outerplanarity; U = marked vertices, or all when none are marked");
    with_file(outer);
    outer->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            VertexSet u = g.marked.empty() ? g.graph.vertex_set() : g.marked;
            json uj = std::vector<Vertex>(u.begin(), u.end());
            try {
                UOuterResult r = is_u_outerplanar(g.graph, u);
                json res{{"outerplanar", r.outerplanar}, {"host_planar", true}, {"u", uj}};
                if (r.outerplanar) {
                    json rot = rotation_to_json(r.cone_graph, r.cone_rotation);
                    rot["of"] = "cone";
                    rot["cone_over"] = uj;
                    res["cone_rotation"] = rot;
                } else {
                    json w = witness_to_json(PatternId::theta(r.witness.index).name(), theta(r.witness.index), r.witness.model);
                    w["host_marked"] = uj;
                    res["witness"] = w;
                    res["cone_on_branch"] = r.witness.cone_on_branch;
                }
                return emit(c, "outerplanar", kDefinitive, res);
            } catch (const NonPlanarHost& e) {
                return emit(c, "outerplanar", kDefinitive,
                            {{"outerplanar", false}, {"host_planar", false}, {"u", uj}, {"kuratowski", kuratowski_to_json(e.witness)}});
            }
        };
    });

    // su-obstruct
    auto* su = app.add_subcommand("su-obstruct", "obstruction to a cone genus within budget; U = marked vertices");
    with_file(su);
    bounded(su, c, true, true, false, true);
    su->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            SUOutcome o = su_obstruction(g, c.budget, c.n, deadline(c));
            return emit(c, "su-obstruct", o.kind == SUOutcome::Kind::Exhausted ? kExhausted : kDefinitive,
                        su_outcome_to_json(g, o));
        };
    });

    // decompose
    int planarize_k = -1;
    auto* dec = app.add_subcommand("decompose", "decomposition into planar pieces");
    with_file(dec);
    bounded(dec, c, true, false, false, true);
    dec->add_option("--planarize", planarize_k, "also look for a planarizing contraction of at most this many edges")
        ->check(CLI::Range(0, 16));
    dec->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            Deadline dl = deadline(c);
            DecomposeResult r = decompose(g.graph, c.budget, dl);
            json res{{"search", genus_status(r.status)}};
            if (r.status != GenusStatus::Exact) return emit(c, "decompose", kExhausted, res);
            GenusBound b = genus_bound(r.decomposition, c.budget, dl);
            res["genus"] = r.genus;
            res["genus_bound"] = b.bound;
            res["identifications"] = b.identifications;
            res["decomposition"] = decomposition_to_json(r.decomposition);
            int code = kDefinitive;
            if (planarize_k >= 0) {
                PlanarizeResult p = contraction_planarize(g.graph, planarize_k, c.budget, dl);
                json pj{{"method", p.method}};
                if (p.kind == PlanarizeResult::Kind::Found) {
                    json e = json::array();
                    for (const auto& [u, v] : p.edges) e.push_back({u, v});
                    pj["contraction"] = {{"type", "contraction"}, {"edges", e}, {"k", planarize_k}};
                    pj["found"] = true;
                } else {
                    pj["found"] = false;
                    if (p.kind == PlanarizeResult::Kind::Timeout) code = kExhausted;
                }
                res["planarize"] = pj;
            }
            return emit(c, "decompose", code, res);
        };
    });

    // dichotomy
    auto* dich = app.add_subcommand("dichotomy", "witness or small flaw set");
    std::string engine;
    dich->add_option("engine", engine, "forest-del | forest-con | outerplanar | planar-v")
        ->required()
        ->check(CLI::IsMember({"forest-del", "forest-con", "outerplanar", "planar-v"}));
    with_file(dich);
    bounded(dich, c, false, true, true, true);
    dich->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            Deadline dl = deadline(c);
            DichotomyOutcome o;
            BaseClass base = BaseClass::Forest;
            if (engine == "forest-del") {
                o = forest_edge_dichotomy(g.graph, c.n, c.k, dl);
            } else if (engine == "forest-con") {
                o = forest_contract_dichotomy(g.graph, c.n, c.k, dl);
            } else if (engine == "outerplanar") {
                o = almost_outerplanar_dichotomy(g.graph, c.n, c.k, dl);
                base = BaseClass::Outerplanar;
            } else {
                o = planar_vertex_flaws(g.graph, c.n, c.k, dl);
                base = BaseClass::Planar;
            }
            return emit(c, "dichotomy " + engine, o.tag == DichotomyOutcome::Tag::Exhausted ? kExhausted : kDefinitive,
                        outcome_to_json(o, base));
        };
    });

    // classify
    auto* cls = app.add_subcommand("classify", "obstruction witnesses or an embeddability certificate");
    with_file(cls);
    bounded(cls, c, true, true, true, true);
    cls->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            ClassifyReport r = classify(g.graph, c.n, c.k, c.budget, deadline(c));
            return emit(c, "classify", r.definitive() ? kDefinitive : kExhausted, classify_to_json(r));
        };
    });

    // pattern
    std::string pattern_name, format = "edges";
    auto* pat = app.add_subcommand("pattern", "print a catalog graph");
    pat->add_option("name", pattern_name, "e.g. sigma3(2), theta4, u2'(3), omega-theta1(2), veeK4(3)")->required();
    pat->add_option("--format", format, "edges | json")->check(CLI::IsMember({"edges", "json"}));
    pat->callback([&] {
        run = [&] {
            PatternId id = parse_pattern(pattern_name);
            if (id.family != Family::Theta && (id.level < 1 || id.level > 64))
                throw std::invalid_argument("pattern level must be in 1..64");
            MarkedGraph g = pattern_graph(id);
            if (format == "json")
                std::cout << graph_to_json(g).dump(2) << "\n";
            else
                std::cout << "# " << id.name() << "\n" << write_edge_list(g);
            return int(kDefinitive);
        };
    });

    // starcomb
    std::string mode = "star-comb";
    int dom = 1;
    auto* sc = app.add_subcommand("starcomb", "star/comb and related structures on the marked vertices");
    with_file(sc);
    bounded(sc, c, false, true, false, true);
    sc->add_option("--mode", mode, "star-comb | two-star | two-connected")
        ->check(CLI::IsMember({"star-comb", "two-star", "two-connected"}));
    sc->add_option("-d,--dominating", dom, "largest dominating set (two-star mode)")->check(CLI::Range(0, 64));
    sc->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            StructureResult r = mode == "star-comb" ? star_comb(g.graph, g.marked, c.n)
                                : mode == "two-star" ? two_star_search(g.graph, g.marked, c.n, dom)
                                                     : two_connected_structures(g.graph, g.marked, c.n, deadline(c));
            json res{{"search", r.found() ? "found" : r.status == SearchStatus::Timeout ? "timeout" : "budget-exhausted"}};
            if (r.found()) res["structure"] = structure_to_json(r.structure);
            return emit(c, "starcomb", r.found() ? kDefinitive : kExhausted, res);
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "re-check every certificate in a report against the graph");
    with_file(ver);
    ver->add_option("report", second, "JSON report")->required()->check(CLI::ExistingFile);
    ver->callback([&] {
        run = [&] {
            MarkedGraph g = load(file);
            std::ifstream f(second);
            json rep = json::parse(f);
            auto lines = verify_report(g, rep);
            bool all = std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
            json res{{"checks", json::array()}, {"ok", all}};
            for (const auto& l : lines) res["checks"].push_back({{"what", l.what}, {"ok", l.ok}, {"detail", l.detail}});
            emit(c, "verify", kDefinitive, res);
            return int(all ? kDefinitive : kError);
        };
    });

    // catalog-check
    auto* cat = app.add_subcommand("catalog-check", "pattern invariants, conversion rows and incomparability");
    bounded(cat, c, false, true, false, true);
    cat->callback([&] {
        run = [&] {
            CatalogReport r = verify_catalog(c.n, deadline(c));
            json rows = json::array();
            for (const auto& row : r.rows) rows.push_back({{"row", row.name}, {"ok", row.ok}, {"detail", row.detail}});
            emit(c, "catalog-check", kDefinitive, {{"rows", rows}, {"ok", r.ok()}});
            return int(r.ok() ? kDefinitive : kError);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kError;
    }
    try {
        return run();
    } catch (const std::exception& e) {
        json err{{"command", argc > 1 ? argv[1] : ""}, {"status", "error"}, {"error", e.what()}};
        if (c.json_out)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}

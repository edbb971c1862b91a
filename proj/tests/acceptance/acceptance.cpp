// Acceptance runner: `surfmin_acceptance N` checks criterion N (1..9), or all
// of them without an argument. One [PASS]/[FAIL] line per criterion; details
// of failing cases go to stdout above it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "../oracles/oracles.hpp"
#include "surfmin/decomposition.hpp"
#include "surfmin/dichotomy.hpp"
#include "surfmin/embedding.hpp"
#include "surfmin/minor.hpp"
#include "surfmin/outerplanarity.hpp"
#include "surfmin/patterns.hpp"

using namespace surfmin;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (notes.size() < 25) notes.push_back(what);
        }
    }
    bool ok() const { return failures == 0; }
};

std::string label(const Graph& g) {
    std::ostringstream os;
    os << "{";
    for (const auto& [u, v] : g.edges()) os << u << "-" << v << " ";
    os << "|V|=" << g.num_vertices() << "}";
    return os.str();
}

MinorModel identity_model(const MarkedGraph& m) {
    std::map<Vertex, VertexSet> sets;
    for (Vertex v : m.graph.vertices()) sets[v] = {v};
    return complete_model(m.graph, m.graph, sets);
}

// ---------------------------------------------------------------------------

Tally genus_engine() {
    Tally t;
    auto timed = [&](const char* name, const Graph& g, int want, bool additive) {
        auto t0 = Clock::now();
        GenusResult r = additive ? genus_additivity(g, want + 1) : min_genus(g, want + 1);
        double s = since(t0);
        t.expect(r.exact() && r.genus == want, std::string(name) + ": genus " + std::to_string(r.genus));
        t.expect(oracle::rotation_genus(g, r.rotation.order) == want, std::string(name) + ": returned rotation traces wrong");
        t.expect(s < 30.0, std::string(name) + ": took " + std::to_string(s) + " s");
        // certified lower bound: nothing fits one handle lower
        GenusResult below = min_genus(g, want - 1);
        t.expect(below.status == GenusStatus::ExceedsBudget, std::string(name) + ": budget " + std::to_string(want - 1) + " not refuted");
    };
    timed("K5", complete_graph(5), 1, false);
    timed("K33", complete_bipartite(3, 3), 1, false);
    timed("2K5", disjoint_copies(complete_graph(5), 2), 2, true);
    timed("bouquet of 2 K5", oracle::bouquet(complete_graph(5), 2, 0), 2, true);
    // independent exhaustive enumeration for the two connected cases
    t.expect(oracle::exhaustive_genus(complete_graph(5)) == 1, "oracle disagrees on K5");
    t.expect(oracle::exhaustive_genus(complete_bipartite(3, 3)) == 1, "oracle disagrees on K33");
    return t;
}

Tally planarity_totality() {
    Tally t;
    auto t0 = Clock::now();
    auto graphs = oracle::graphs_up_to(7);
    t.expect(graphs.size() == 1252, "enumerated " + std::to_string(graphs.size()) + " graphs on at most 7 vertices");
    t.expect(oracle::graphs_on(7).size() == 1044, "graphs on exactly 7 vertices miscounted");
    for (const Graph& g : graphs) {
        PlanarityResult r = planarity(g);
        const bool subdivision = oracle::has_kuratowski_subdivision(g);
        if (r.planar) {
            t.expect(oracle::rotation_genus(g, r.rotation.order) == 0, "rotation not planar " + label(g));
            t.expect(!subdivision, "planar answer but oracle finds a subdivision " + label(g));
        } else {
            std::string why;
            t.expect(verify_kuratowski(g, r.witness, &why), "witness fails " + label(g) + ": " + why);
            t.expect(subdivision, "non-planar answer but oracle finds no subdivision " + label(g));
            // the witness support must itself be a subdivision the oracle recognises
            t.expect(oracle::has_kuratowski_subdivision(r.witness.subgraph()), "witness subgraph rejected " + label(g));
        }
    }
    double s = since(t0);
    t.expect(s < 60.0, "took " + std::to_string(s) + " s");
    return t;
}

Tally outerplanarity_equivalence() {
    Tally t;
    auto graphs = oracle::graphs_up_to(7);
    const Graph k4 = complete_graph(4), k23 = complete_bipartite(2, 3);
    long extracted = 0;
    for (const Graph& g : graphs) {
        if (oracle::connected(g)) {
            const bool forbidden = oracle::has_minor(g, k4) || oracle::has_minor(g, k23);
            try {
                UOuterResult r = is_u_outerplanar(g, g.vertex_set());
                t.expect(r.outerplanar == !forbidden, "cone planarity disagrees with K4/K23 oracle " + label(g));
            } catch (const NonPlanarHost&) {
                // a non-planar host has a K4 minor
                t.expect(forbidden, "non-planar host without K4/K23 minor " + label(g));
            }
        }
        if (!is_planar(g)) continue;
        auto vs = g.vertices();
        for (unsigned mask = 1; mask < (1u << vs.size()); ++mask) {
            MarkedGraph m{g, {}};
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (mask >> i & 1u) m.marked.insert(vs[i]);
            auto [c, cv] = cone(g, m.marked);
            PlanarityResult pr = planarity(c);
            if (pr.planar) continue;
            ++extracted;
            ThetaWitness w = extract_theta(m, pr.witness, cv);
            const bool on_branch =
                std::find(pr.witness.branch.begin(), pr.witness.branch.end(), cv) != pr.witness.branch.end();
            const bool k5 = pr.witness.kind == KuratowskiWitness::Kind::K5;
            const int want = k5 ? (on_branch ? 1 : 2) : (on_branch ? 3 : 4);
            t.expect(w.index == want, "theta index " + std::to_string(w.index) + " for case " + std::to_string(want) + " " + label(g));
            MarkedGraph th = theta(w.index);
            t.expect(oracle::model_ok(g, th.graph, w.model.branch_sets, m.marked, th.marked),
                     "theta model fails " + label(g));
        }
    }
    t.expect(extracted > 0, "no marked graph with a non-planar cone");
    std::printf("  %ld marked graphs with non-planar cones\n", extracted);
    return t;
}

Tally catalog_consistency() {
    Tally t;
    auto t0 = Clock::now();
    struct Row {
        PatternId x;
        int index;
        bool iso;
    };
    for (int n : {2, 3}) {
        std::vector<Row> rows = {{PatternId::u(1, false, n), 5, true},        {PatternId::u(2, false, n), 3, false},
                                 {PatternId::u(2, true, n), 6, false},        {PatternId::u(3, false, n), 6, true},
                                 {PatternId::u(3, true, n), 7, true},         {PatternId::u(4, false, n), 4, false},
                                 {PatternId::u(4, true, n), 6, false},        {PatternId::u(5, false, n), 8, true},
                                 {PatternId::omega_theta(1, n), 3, true},     {PatternId::omega_theta(2, n), 3, false},
                                 {PatternId::omega_theta(3, n), 4, true},     {PatternId::omega_theta(4, n), 4, false}};
        for (const Row& row : rows) {
            const std::string name = "cone(" + row.x.name() + ")";
            MarkedGraph xg = pattern_graph(row.x);
            auto [c, cv] = cone(xg.graph, xg.marked);
            try {
                SigmaConversion sc = convert_to_sigma(c, cv, row.x, identity_model(xg));
                t.expect(sc.index == row.index, name + ": sigma" + std::to_string(sc.index));
                t.expect(sc.level == n, name + ": reaches level " + std::to_string(sc.level) + " only");
                Graph target = sigma(sc.index, sc.level);
                t.expect(oracle::model_ok(c, target, sc.model.branch_sets), name + ": model fails");
                if (row.iso) t.expect(isomorphic(c, target), name + ": not isomorphic");
            } catch (const std::exception& e) {
                t.expect(false, name + ": " + e.what());
            }
        }
        // the library's own report, for the record
        for (const auto& r : verify_conversions(n).rows)
            if (!r.ok) t.expect(false, "library row " + r.name + ": " + r.detail);
    }
    double s = since(t0);
    t.expect(s < 120.0, "took " + std::to_string(s) + " s");
    return t;
}

Tally incomparability() {
    Tally t;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            if (i == j) continue;
            const Graph h = sigma(i, 2), g = sigma(j, 2);
            MinorSearchResult r = find_minor(g, h, Deadline::after_seconds(60));
            const std::string name = "sigma" + std::to_string(i) + "(2) < sigma" + std::to_string(j) + "(2)";
            if (r.found()) {
                // a found model is a genuine counterexample once it checks out
                t.expect(false, name + (oracle::model_ok(g, h, r.model.branch_sets) ? " (model verified)" : " (model invalid)"));
            } else {
                t.expect(r.status == SearchStatus::NotFound, name + ": search timed out");
            }
        }
    return t;
}

Tally decomposition_round_trip() {
    Tally t;
    auto tail = [](Graph g, Vertex at, int len) {
        Vertex prev = at, next = g.max_vertex() + 1;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        return g;
    };
    std::vector<std::pair<std::string, Graph>> corpus;
    corpus.push_back({"K5 + tail", tail(complete_graph(5), 0, 6)});
    Graph k5w = complete_graph(5);
    for (int i = 0; i < 5; ++i) k5w.add_edge(10 + i, 10 + (i + 1) % 5);
    k5w.add_edge(1, 10);
    k5w.add_edge(1, 12);
    corpus.push_back({"K5 + pentagon on a vertex", k5w});
    Graph k33 = complete_bipartite(3, 3);
    for (int i = 0; i < 4; ++i) k33.add_edge(10 + i, 10 + (i + 1) % 4);
    k33.add_edge(0, 10);
    k33.add_edge(3, 12);
    corpus.push_back({"K33 + cycle across an edge", k33});
    corpus.push_back({"K33 + tails", tail(tail(complete_bipartite(3, 3), 1, 3), 4, 2)});
    corpus.push_back({"sigma5(2) + tail", tail(sigma(5, 2), 2, 3)});
    Graph s5w = sigma(5, 2);
    s5w.add_edge(3, 20);
    s5w.add_edge(20, 21);
    s5w.add_edge(21, 3);
    corpus.push_back({"sigma5(2) + triangle", s5w});
    corpus.push_back({"K6", complete_graph(6)});
    corpus.push_back({"K33 and K5", disjoint_union(complete_bipartite(3, 3), complete_graph(5), 6)});
    corpus.push_back({"wheel", oracle::wheel(7)});
    for (const auto& [name, g] : corpus) {
        auto t0 = Clock::now();
        DecomposeResult r = decompose(g, 2, Deadline::after_seconds(120));
        if (r.status != GenusStatus::Exact) {
            t.expect(false, name + ": decompose did not finish");
            continue;
        }
        const Decomposition& d = r.decomposition;
        DecompositionReport rep = verify_decomposition(g, d, d.core.num_vertices());
        t.expect(rep.ok, name + ": " + (rep.violations.empty() ? std::string() : rep.violations.front()));
        // independent re-check: union, planar pieces, overlaps in the core
        Graph u;
        for (const Graph& p : d.pieces) {
            t.expect(!oracle::has_kuratowski_subdivision(p), name + ": non-planar piece " + label(p));
            for (Vertex v : p.vertices()) u.add_vertex(v);
            for (const auto& [a, b] : p.edges()) u.add_edge(a, b);
        }
        t.expect(u == g, name + ": pieces do not cover the host exactly");
        for (std::size_t i = 0; i < d.pieces.size(); ++i)
            for (std::size_t j = i + 1; j < d.pieces.size(); ++j)
                for (Vertex v : d.pieces[i].vertices())
                    if (d.pieces[j].has_vertex(v)) t.expect(d.core.has_vertex(v), name + ": overlap outside the core");
        GenusResult gamma = min_genus(g, 3);
        t.expect(gamma.exact() && gamma.genus == r.genus, name + ": genus not certified");
        t.expect(oracle::rotation_genus(g, gamma.rotation.order) == gamma.genus, name + ": genus rotation traces wrong");
        GenusBound b = genus_bound(d, 1);
        t.expect(b.bound >= gamma.genus, name + ": bound " + std::to_string(b.bound) + " below genus");
        std::printf("  %-28s genus %d  pieces %3zu  cap %2zu  bound %3d  %.2f s\n", name.c_str(), r.genus,
                    d.pieces.size(), d.cap, b.bound, since(t0));
    }
    return t;
}

Tally dichotomy_soundness() {
    Tally t;
    auto graphs = oracle::graphs_up_to(7);
    // exactness of the forest-edge flaw branch
    for (const Graph& g : graphs) {
        const int rank = oracle::cycle_rank(g);
        for (int k = 0; k <= rank + 1; ++k) {
            DichotomyOutcome o = forest_edge_dichotomy(g, 2, k, Deadline::after_seconds(10));
            const bool flaw = o.tag == DichotomyOutcome::Tag::Flaw;
            t.expect(flaw == (rank <= k), "forest-edge flaw branch wrong at k=" + std::to_string(k) + " " + label(g));
            if (flaw) t.expect(oracle::cycle_rank(g.without_edges(o.flaw_edges)) == 0, "flaw leaves a cycle " + label(g));
        }
    }
    // every outcome of every engine re-verifies, checked independently
    long witnesses = 0;
    auto check = [&](const Graph& g, const DichotomyOutcome& o, BaseClass base, const char* engine) {
        if (o.tag == DichotomyOutcome::Tag::Witness) {
            ++witnesses;
            t.expect(oracle::model_ok(g, pattern_graph(o.pattern).graph, o.model.branch_sets),
                     std::string(engine) + " witness " + o.pattern.name() + " fails " + label(g));
        } else if (o.tag == DichotomyOutcome::Tag::Flaw) {
            t.expect(verify_outcome(g, o, base).ok, std::string(engine) + " flaw fails " + label(g));
            if (base == BaseClass::Forest) {
                Graph after = o.flaw_kind == FlawKind::Contraction ? contract(g, o.flaw_edges) : g.without_edges(o.flaw_edges);
                t.expect(oracle::cycle_rank(after) == 0, std::string(engine) + " flaw leaves a cycle " + label(g));
            }
            if (base == BaseClass::Planar)
                t.expect(!oracle::has_kuratowski_subdivision(g.without_vertices(o.flaw_vertices)),
                         std::string(engine) + " flaw leaves a subdivision " + label(g));
            if (base == BaseClass::Outerplanar) {
                Graph after = g.without_edges(o.flaw_edges);
                t.expect(!oracle::has_minor(after, complete_graph(4)) && !oracle::has_minor(after, complete_bipartite(2, 3)),
                         std::string(engine) + " flaw leaves a K4/K23 minor " + label(g));
            }
        }
    };
    for (const Graph& g : graphs)
        for (int k : {0, 1}) {
            check(g, forest_edge_dichotomy(g, 2, k, Deadline::after_seconds(10)), BaseClass::Forest, "forest-del");
            check(g, forest_contract_dichotomy(g, 2, k, Deadline::after_seconds(10)), BaseClass::Forest, "forest-con");
            check(g, almost_outerplanar_dichotomy(g, 2, k, Deadline::after_seconds(10)), BaseClass::Outerplanar, "outerplanar");
            check(g, planar_vertex_flaws(g, 1, k, Deadline::after_seconds(10)), BaseClass::Planar, "planar-v");
        }
    std::printf("  %ld witnesses re-verified\n", witnesses);
    // self-recognition of the catalog
    for (int i = 1; i <= 8; ++i)
        for (int n = 1; n <= 3; ++n) {
            const Graph g = sigma(i, n);
            ClassifyReport r = classify(g, n, 2, 3, Deadline::after_seconds(120));
            bool hit = false;
            for (const SigmaWitness& w : r.witnesses) {
                const Graph target = sigma(w.index, w.level);
                if (!oracle::model_ok(g, target, w.model.branch_sets)) {
                    t.expect(false, "classify witness fails on sigma" + std::to_string(i) + "(" + std::to_string(n) + ")");
                    continue;
                }
                hit = hit || (w.index == i && w.level == n) || (w.level == n && isomorphic(target, g));
            }
            t.expect(hit, "classify does not recognise sigma" + std::to_string(i) + "(" + std::to_string(n) + ")" +
                              (is_planar(g) ? " (planar input)" : ""));
        }
    return t;
}

// No a-b path with interior outside a, b and the separator survives once the
// separator vertices and the direct a-b edges are removed.
bool internal_blocked(const Graph& g, const VertexSet& a, const VertexSet& b, const MengerResult& m) {
    const Graph cut = g.without_edges(m.separator_edges);
    auto interior = [&](Vertex w) { return !a.count(w) && !b.count(w) && !m.separator.count(w); };
    auto end_b = [&](Vertex w) { return b.count(w) && !m.separator.count(w); };
    std::set<Vertex> seen;
    std::vector<Vertex> stack;
    for (Vertex x : a) {
        if (m.separator.count(x)) continue;
        for (Vertex w : cut.neighbors(x)) {
            if (end_b(w)) return false;
            if (interior(w) && seen.insert(w).second) stack.push_back(w);
        }
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : cut.neighbors(v)) {
            if (end_b(w)) return false;
            if (interior(w) && seen.insert(w).second) stack.push_back(w);
        }
    }
    return true;
}

Tally menger_duality() {
    Tally t;
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        std::uniform_real_distribution<double> pd(0.1, 0.6);
        Graph g = oracle::random_graph(n, pd(rng), rng);
        VertexSet a, b;
        for (Vertex v : g.vertices()) {
            int r = static_cast<int>(rng() % 5);
            if (r == 0) a.insert(v);
            if (r == 1) b.insert(v);
        }
        if (a.empty()) a.insert(0);
        if (b.empty()) b.insert(n - 1);
        const bool internal = rng() % 2;
        MengerResult m = max_disjoint_paths(g, a, b, internal);
        const std::string tag = "trial " + std::to_string(trial) + " " + label(g);
        t.expect(valid_path_system(g, m.paths), tag + ": invalid path system");
        for (const auto& p : m.paths.paths) t.expect(a.count(p.front()) && b.count(p.back()), tag + ": path ends outside a/b");
        if (!internal) {
            t.expect(m.size() == m.separator.size(), tag + ": sizes differ");
            t.expect(oracle::separates(g, a, b, m.separator), tag + ": separator misses a path");
        } else {
            t.expect(m.size() == m.separator.size() + m.separator_edges.size(), tag + ": internal sizes differ");
            t.expect(internal_blocked(g, a, b, m), tag + ": internal separator misses a path");
        }
        // u_star_search from a random centre
        const Vertex x = static_cast<Vertex>(rng() % n);
        StarResult s = u_star_search({g, b}, x, n);
        t.expect(s.paths.paths.size() == s.separator.size(), tag + ": u-star sizes differ");
        VertexSet targets = b;
        targets.erase(x);
        if (!g.neighbors(x).empty() && !targets.empty())
            t.expect(oracle::separates(g.without_vertices({x}), g.neighbors(x), targets, s.separator),
                     tag + ": u-star separator misses a path");
    }
    return t;
}

Tally structure_searches() {
    Tally t;
    std::mt19937 rng(77);
    long trees = 0;
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            const int size = n * n + static_cast<int>(rng() % 30) + 1;
            Graph tree = oracle::random_tree(size, rng);
            std::vector<Vertex> vs = tree.vertices();
            std::shuffle(vs.begin(), vs.end(), rng);
            const std::size_t want = static_cast<std::size_t>(n * n) + rng() % (vs.size() - static_cast<std::size_t>(n * n) + 1);
            VertexSet u(vs.begin(), vs.begin() + static_cast<long>(want));
            ++trees;
            StructureResult r = star_comb(tree, u, n);
            const std::string tag = "n=" + std::to_string(n) + " tree " + label(tree);
            t.expect(r.found(), tag + ": no structure");
            if (!r.found()) continue;
            t.expect(verify_structure(tree, u, r.structure).ok, tag + ": structure fails");
            // independent check of the carrier
            const auto& ps = r.structure.carrier.paths;
            if (r.structure.kind == CombStructure::Kind::Star) {
                VertexSet seen;
                int leaves = 0;
                for (const auto& p : ps) {
                    t.expect(p.front() == ps.front().front(), tag + ": star paths do not share the centre");
                    for (std::size_t i = 1; i < p.size(); ++i) t.expect(seen.insert(p[i]).second, tag + ": star paths meet");
                    for (std::size_t i = 1; i < p.size(); ++i) t.expect(tree.has_edge(p[i - 1], p[i]), tag + ": non-edge");
                    leaves += u.count(p.back()) && p.size() > 1;
                }
                t.expect(leaves >= n, tag + ": star too small");
            } else {
                t.expect(r.structure.kind == CombStructure::Kind::Comb, tag + ": unexpected kind");
                VertexSet spine(ps.front().begin(), ps.front().end());
                VertexSet used;
                int teeth = 0;
                for (std::size_t i = 1; i < ps.size(); ++i) {
                    const auto& p = ps[i];
                    t.expect(spine.count(p.front()), tag + ": tooth off the spine");
                    for (std::size_t j = 0; j < p.size(); ++j) {
                        t.expect(used.insert(p[j]).second, tag + ": teeth meet");
                        if (j > 0) t.expect(!spine.count(p[j]) && tree.has_edge(p[j - 1], p[j]), tag + ": bad tooth");
                    }
                    teeth += u.count(p.back());
                }
                t.expect(teeth >= n, tag + ": comb too small");
            }
        }
    std::printf("  %ld random trees\n", trees);
    for (int m = 3; m <= 8; ++m)
        for (int n = 1; n < m; ++n) {
            VertexSet side, rim;
            for (int i = 2; i < m + 2; ++i) side.insert(i);
            for (int i = 1; i <= m; ++i) rim.insert(i);
            Graph k2m = complete_bipartite(2, m), cl = oracle::circular_ladder(m), w = oracle::wheel(m);
            struct Case {
                const char* name;
                const Graph& g;
                VertexSet u;
                CombStructure::Kind kind;
            };
            for (const Case& c : {Case{"K2m", k2m, side, CombStructure::Kind::DoubleStar},
                                  Case{"CL", cl, cl.vertex_set(), CombStructure::Kind::Ladder},
                                  Case{"W", w, rim, CombStructure::Kind::Fan}}) {
                const std::string tag = std::string(c.name) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                StructureResult r = two_connected_structures(c.g, c.u, n, Deadline::after_seconds(20));
                t.expect(r.found(), tag + ": nothing found");
                if (!r.found()) continue;
                t.expect(verify_structure(c.g, c.u, r.structure).ok, tag + ": structure fails");
                t.expect(r.structure.kind == c.kind, tag + ": got " + to_string(r.structure.kind));
            }
        }
    return t;
}

struct Criterion {
    const char* title;
    std::function<Tally()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"genus engine certifies K5, K33, 2K5, bouquet of 2 K5", genus_engine},
        {"planarity totality on all graphs up to 7 vertices", planarity_totality},
        {"outerplanarity equivalence and theta extraction", outerplanarity_equivalence},
        {"catalog conversion rows at levels 2 and 3", catalog_consistency},
        {"incomparability of the level-2 obstructions", incomparability},
        {"decomposition round trip", decomposition_round_trip},
        {"dichotomy soundness and exactness, classify self-recognition", dichotomy_soundness},
        {"Menger duality on 1000 random graphs", menger_duality},
        {"star-comb and 2-connected structure searches", structure_searches},
    };
    return all;
}

bool run(int which) {
    const Criterion& c = criteria()[static_cast<std::size_t>(which - 1)];
    auto t0 = Clock::now();
    Tally t;
    try {
        t = c.run();
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    for (const auto& n : t.notes) std::printf("  - %s\n", n.c_str());
    if (t.failures > 25) std::printf("  ... and %ld more\n", t.failures - 25);
    std::printf("[%s] %d %s (%ld checks, %ld failed, %.1f s)\n", t.ok() ? "PASS" : "FAIL", which, c.title, t.checks,
                t.failures, since(t0));
    std::fflush(stdout);
    return t.ok();
}

}  // namespace

int main(int argc, char** argv) {
    const int count = static_cast<int>(criteria().size());
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [1..%d]\n", argv[0], count);
        return 1;
    }
    if (argc == 2) {
        int which = std::atoi(argv[1]);
        if (which < 1 || which > count) {
            std::fprintf(stderr, "criterion must be 1..%d\n", count);
            return 1;
        }
        return run(which) ? 0 : 1;
    }
    bool all = true;
    for (int i = 1; i <= count; ++i) all = run(i) && all;
    return all ? 0 : 1;
}

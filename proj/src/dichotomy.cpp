// Dichotomy engines. Each engine first looks for a small flaw set, and only
// when that fails searches for a level-n witness; a witness is assembled as a
// model of the generated pattern and verified before it is returned.
#include "surfmin/dichotomy.hpp"

#include <algorithm>
#include <functional>

namespace surfmin {

const char* to_string(DichotomyOutcome::Tag t) {
    switch (t) {
        case DichotomyOutcome::Tag::Witness: return "witness";
        case DichotomyOutcome::Tag::Flaw: return "flaw-set";
        case DichotomyOutcome::Tag::Exhausted: return "budget-exhausted";
    }
    return "?";
}

bool is_outerplanar(const Graph& g) { return is_planar(cone(g, g.vertex_set()).first); }

namespace {

using Path = std::vector<Vertex>;
using Tag = DichotomyOutcome::Tag;

// Exhaustive subset search is only attempted below this many candidates.
constexpr double kSubsetLimit = 200000;

// Hosts small enough for the exact minor search as a last resort.
constexpr std::size_t kExactMinorHost = 16;

double subsets_up_to(std::size_t m, int k) {
    double total = 0, c = 1;
    for (int i = 1; i <= k && static_cast<std::size_t>(i) <= m; ++i) {
        c = c * static_cast<double>(m - static_cast<std::size_t>(i) + 1) / i;
        total += c;
    }
    return total;
}

// Smallest subset (size 1..k) of items passing `ok`; empty optional if none.
template <class T>
std::optional<std::vector<T>> smallest_subset(const std::vector<T>& items, int k, const Deadline& dl,
                                              const std::function<bool(const std::vector<T>&)>& ok, bool& timed_out) {
    std::vector<T> cur;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) return ok(cur);
        for (std::size_t i = from; i < items.size(); ++i) {
            if (dl.poll()) {
                timed_out = true;
                return false;
            }
            cur.push_back(items[i]);
            if (rec(i + 1, left - 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= k && !timed_out; ++size) {
        cur.clear();
        if (rec(0, size)) return cur;
    }
    return std::nullopt;
}

DichotomyOutcome witness(const Graph& g, PatternId id, std::map<Vertex, VertexSet> sets, std::string note) {
    DichotomyOutcome o;
    o.tag = Tag::Witness;
    o.pattern = id;
    Graph h = pattern_graph(id).graph;
    o.model = complete_model(g, h, std::move(sets));
    ModelReport rep = verify_model(g, h, o.model);
    if (!rep.ok) throw std::logic_error("dichotomy witness " + id.name() + " fails: " + rep.violations.front());
    o.note = std::move(note);
    return o;
}

DichotomyOutcome from_model(const Graph& g, PatternId id, const MinorModel& m, std::string note) {
    return witness(g, id, m.branch_sets, std::move(note));
}

// cycles ------------------------------------------------------------------

std::vector<Path> disjoint_cycles(const Graph& g, int n) {
    std::vector<Path> out;
    VertexSet used;
    while (static_cast<int>(out.size()) < n) {
        Path c = shortest_cycle(g, used);
        if (c.empty()) break;
        used.insert(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

std::map<Vertex, VertexSet> cycles_as_triangles(const std::vector<Path>& cs) {
    std::map<Vertex, VertexSet> sets;
    const Vertex off = copy_offset(complete_graph(3));
    for (std::size_t c = 0; c < cs.size(); ++c) {
        const Path& p = cs[c];
        Vertex base = static_cast<Vertex>(c) * off;
        sets[base] = {p[0]};
        sets[base + 1] = {p[1]};
        sets[base + 2] = VertexSet(p.begin() + 2, p.end());
    }
    return sets;
}

// Cycles through v meeting only at v: shortest neighbour-to-neighbour paths.
std::vector<Path> cycles_through(const Graph& g, Vertex v, int n) {
    std::vector<Path> out;
    VertexSet used{v};
    while (static_cast<int>(out.size()) < n) {
        Path best;
        std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        for (std::size_t a = 0; a < nb.size(); ++a) {
            if (used.count(nb[a])) continue;
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (used.count(nb[b])) continue;
                Path p = shortest_path(g, nb[a], nb[b], used);
                if (!p.empty() && (best.empty() || p.size() < best.size())) best = p;
            }
        }
        if (best.empty()) break;
        used.insert(best.begin(), best.end());
        out.push_back(best);
    }
    return out;
}

std::optional<DichotomyOutcome> triangle_packing(const Graph& g, int n) {
    auto cs = disjoint_cycles(g, n);
    if (static_cast<int>(cs.size()) < n) return std::nullopt;
    return witness(g, PatternId::of_aux(AuxKind::OmegaK3, n), cycles_as_triangles(cs), "greedy disjoint cycles");
}

std::optional<DichotomyOutcome> triangle_bouquet(const Graph& g, int n) {
    for (Vertex v : g.vertices()) {
        if (static_cast<int>(g.degree(v)) < 2 * n) continue;
        auto ps = cycles_through(g, v, n);
        if (static_cast<int>(ps.size()) < n) continue;
        std::map<Vertex, VertexSet> sets{{0, {v}}};
        for (int c = 0; c < n; ++c) {
            const Path& p = ps[static_cast<std::size_t>(c)];
            sets[1 + 2 * c] = {p[0]};
            sets[2 + 2 * c] = VertexSet(p.begin() + 1, p.end());
        }
        return witness(g, PatternId::of_aux(AuxKind::VeeK3, n), sets, "cycles through hub " + std::to_string(v));
    }
    return std::nullopt;
}

std::optional<DichotomyOutcome> k2n_paths(const Graph& g, int n) {
    const auto vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            Vertex x = vs[a], y = vs[b];
            if (static_cast<int>(std::min(g.degree(x), g.degree(y))) < n) continue;
            MengerResult m = max_disjoint_paths(g, {x}, {y}, true);
            std::map<Vertex, VertexSet> sets{{0, {x}}, {1, {y}}};
            int leaves = 0;
            for (const Path& p : m.paths.paths) {
                if (p.size() < 3 || leaves == n) continue;
                sets[2 + leaves++] = VertexSet(p.begin() + 1, p.end() - 1);
            }
            if (leaves == n)
                return witness(g, PatternId::of_aux(AuxKind::K2w, n), sets,
                               "hubs " + std::to_string(x) + " and " + std::to_string(y));
        }
    return std::nullopt;
}

// Exact search for the listed patterns in preference order; small hosts only.
std::optional<DichotomyOutcome> exact_fallback(const Graph& g, const std::vector<PatternId>& ids, const Deadline& dl,
                                               bool& timed_out) {
    if (g.num_vertices() > kExactMinorHost) return std::nullopt;
    for (const PatternId& id : ids) {
        MinorSearchResult r = find_minor(g, pattern_graph(id).graph, dl);
        if (r.found()) return from_model(g, id, r.model, "exact minor search");
        if (r.status == SearchStatus::Timeout) timed_out = true;
    }
    return std::nullopt;
}

DichotomyOutcome exhausted(std::string why) {
    DichotomyOutcome o;
    o.tag = Tag::Exhausted;
    o.note = std::move(why);
    return o;
}

// packings ------------------------------------------------------------------

std::optional<DichotomyOutcome> disjoint_pack(const Graph& g, const Graph& h, PatternId id, int n, const Deadline& dl,
                                              bool& timed_out) {
    PackResult r = pack_disjoint(g, h, n, dl);
    if (r.status == SearchStatus::Timeout) timed_out = true;
    if (r.status != SearchStatus::Found) return std::nullopt;
    std::map<Vertex, VertexSet> sets;
    const Vertex off = copy_offset(h);
    for (int c = 0; c < n; ++c)
        for (const auto& [t, s] : r.models[static_cast<std::size_t>(c)].branch_sets) sets[c * off + t] = s;
    return witness(g, id, sets, "disjoint packing");
}

std::optional<DichotomyOutcome> bouquet_pack(const Graph& g, const Graph& h, Vertex hub, PatternId id, int n,
                                             const Deadline& dl, bool& timed_out) {
    std::vector<Vertex> rest;
    for (Vertex v : h.vertices())
        if (v != hub) rest.push_back(v);
    BouquetResult r = pack_bouquet(g, h, hub, n, dl);
    if (r.status == SearchStatus::Timeout) timed_out = true;
    if (r.status != SearchStatus::Found) return std::nullopt;
    std::map<Vertex, VertexSet> sets;
    for (int c = 0; c < n; ++c) {
        const MinorModel& m = r.models[static_cast<std::size_t>(c)];
        sets[0].insert(m.branch_sets.at(hub).begin(), m.branch_sets.at(hub).end());
        for (std::size_t i = 0; i < rest.size(); ++i)
            sets[1 + c * static_cast<Vertex>(rest.size()) + static_cast<Vertex>(i)] = m.branch_sets.at(rest[i]);
    }
    return witness(g, id, sets, "bouquet at " + std::to_string(r.hub_host));
}

DichotomyOutcome flaw(FlawKind kind, EdgeSet edges, VertexSet vertices, std::string note) {
    DichotomyOutcome o;
    o.tag = Tag::Flaw;
    o.flaw_kind = kind;
    o.flaw_edges = std::move(edges);
    o.flaw_vertices = std::move(vertices);
    o.note = std::move(note);
    return o;
}

// greedy flaw sets --------------------------------------------------------

EdgeSet greedy_contraction(const Graph& g) {
    EdgeSet f;
    for (;;) {
        Graph q = contract(g, f);
        if (is_forest(q)) break;
        std::map<Vertex, Vertex> rep = contraction_map(g, f);
        Edge pick{-1, -1};
        std::size_t best = 0;
        for (const auto& [a, b] : q.edges()) {
            const VertexSet &na = q.neighbors(a), &nb = q.neighbors(b);
            std::size_t common = static_cast<std::size_t>(
                std::count_if(na.begin(), na.end(), [&](Vertex w) { return nb.count(w) != 0; }));
            if (common > best) {
                best = common;
                pick = {a, b};
            }
        }
        if (best == 0) {
            Path c = shortest_cycle(q);
            pick = make_edge(c[0], c[1]);
        }
        for (const auto& [x, y] : g.edges())
            if (make_edge(rep.at(x), rep.at(y)) == pick) {
                f.insert({x, y});
                break;
            }
    }
    for (auto it = f.begin(); it != f.end();) {
        EdgeSet less = f;
        less.erase(*it);
        if (is_forest(contract(g, less)))
            it = f.erase(it);
        else
            ++it;
    }
    return f;
}

// One edge of an obstruction to outerplanarity, preferring an edge whose
// removal finishes the job.
Edge outerplanar_breaker(const Graph& h) {
    Graph sub;
    PlanarityResult pr = planarity(h);
    if (!pr.planar) {
        sub = pr.witness.subgraph();
    } else {
        auto [c, cv] = cone(h, h.vertex_set());
        sub = planarity(c).witness.subgraph();
        if (sub.has_vertex(cv)) sub.remove_vertex(cv);
    }
    Edge best{-1, -1};
    std::size_t best_deg = 0;
    for (const auto& [u, v] : sub.edges()) {
        if (!h.has_edge(u, v)) continue;
        if (is_outerplanar(h.without_edges({{u, v}}))) return {u, v};
        std::size_t d = h.degree(u) + h.degree(v);
        if (d > best_deg) {
            best_deg = d;
            best = {u, v};
        }
    }
    return best;
}

EdgeSet greedy_outerplanar_deletion(const Graph& g) {
    EdgeSet f;
    Graph h = g;
    while (!is_outerplanar(h)) {
        Edge e = outerplanar_breaker(h);
        f.insert(e);
        h.remove_edge(e.first, e.second);
    }
    for (auto it = f.begin(); it != f.end();) {
        EdgeSet less = f;
        less.erase(*it);
        if (is_outerplanar(g.without_edges(less)))
            it = f.erase(it);
        else
            ++it;
    }
    return f;
}

VertexSet greedy_planarizing_vertices(const Graph& g) {
    VertexSet w;
    Graph h = g;
    for (;;) {
        PlanarityResult pr = planarity(h);
        if (pr.planar) break;
        Vertex pick = -1;
        for (Vertex b : pr.witness.branch)
            if (is_planar(h.without_vertices({b}))) {
                pick = b;
                break;
            }
        if (pick < 0) {
            for (Vertex b : pr.witness.branch)
                if (pick < 0 || h.degree(b) > h.degree(pick)) pick = b;
        }
        w.insert(pick);
        h.remove_vertex(pick);
    }
    for (auto it = w.begin(); it != w.end();) {
        VertexSet less = w;
        less.erase(*it);
        if (is_planar(g.without_vertices(less)))
            it = w.erase(it);
        else
            ++it;
    }
    return w;
}

}  // namespace

ModelReport verify_outcome(const Graph& g, const DichotomyOutcome& o, BaseClass base) {
    ModelReport rep;
    auto fail = [&](std::string s) {
        rep.ok = false;
        rep.violations.push_back(std::move(s));
    };
    if (o.tag == Tag::Witness) return verify_model(g, pattern_graph(o.pattern).graph, o.model);
    if (o.tag == Tag::Exhausted) return rep;
    for (const auto& [u, v] : o.flaw_edges)
        if (!g.has_edge(u, v)) fail("flaw edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
    for (Vertex v : o.flaw_vertices)
        if (!g.has_vertex(v)) fail("flaw vertex " + std::to_string(v) + " not in graph");
    if (!rep.ok) return rep;
    Graph h;
    switch (o.flaw_kind) {
        case FlawKind::EdgeDeletion: h = g.without_edges(o.flaw_edges); break;
        case FlawKind::Contraction: h = contract(g, o.flaw_edges); break;
        case FlawKind::VertexDeletion: h = g.without_vertices(o.flaw_vertices); break;
    }
    bool in = base == BaseClass::Forest ? is_forest(h) : base == BaseClass::Outerplanar ? is_outerplanar(h) : is_planar(h);
    if (!in) fail("graph after applying the flaw set is not in the base class");
    return rep;
}

DichotomyOutcome forest_edge_dichotomy(const Graph& g, int n, int k, const Deadline& dl) {
    if (n < 1 || k < 0) throw std::invalid_argument("forest_edge_dichotomy: need n >= 1 and k >= 0");
    EdgeSet tree = spanning_forest(g);
    EdgeSet extra;
    for (const auto& e : g.edges())
        if (!tree.count(e)) extra.insert(e);
    if (static_cast<int>(extra.size()) <= k)
        return flaw(FlawKind::EdgeDeletion, extra, {}, "edges outside a spanning forest");
    if (auto w = triangle_packing(g, n)) return *w;
    if (auto w = triangle_bouquet(g, n)) return *w;
    if (auto w = k2n_paths(g, n)) return *w;
    bool timed_out = false;
    if (auto w = exact_fallback(g,
                                {PatternId::of_aux(AuxKind::OmegaK3, n), PatternId::of_aux(AuxKind::VeeK3, n),
                                 PatternId::of_aux(AuxKind::K2w, n)},
                                dl, timed_out))
        return *w;
    return exhausted("cycle rank " + std::to_string(extra.size()) + " exceeds k and no level-" + std::to_string(n) +
                     " witness was found" + (timed_out ? " before the deadline" : ""));
}

DichotomyOutcome forest_contract_dichotomy(const Graph& g, int n, int k, const Deadline& dl) {
    if (n < 1 || k < 0) throw std::invalid_argument("forest_contract_dichotomy: need n >= 1 and k >= 0");
    EdgeSet f = greedy_contraction(g);
    if (static_cast<int>(f.size()) <= k) return flaw(FlawKind::Contraction, f, {}, "greedy contraction");
    bool timed_out = false;
    if (subsets_up_to(g.num_edges(), k) <= kSubsetLimit) {
        std::vector<Edge> es = g.edges();
        std::function<bool(const std::vector<Edge>&)> ok = [&](const std::vector<Edge>& s) {
            return is_forest(contract(g, EdgeSet(s.begin(), s.end())));
        };
        if (auto s = smallest_subset(es, k, dl, ok, timed_out))
            return flaw(FlawKind::Contraction, EdgeSet(s->begin(), s->end()), {}, "exhaustive contraction search");
    }
    if (auto w = triangle_packing(g, n)) return *w;
    if (auto w = triangle_bouquet(g, n)) return *w;
    if (auto w = exact_fallback(g, {PatternId::of_aux(AuxKind::OmegaK3, n), PatternId::of_aux(AuxKind::VeeK3, n)}, dl,
                                timed_out))
        return *w;
    return exhausted("greedy contraction needs " + std::to_string(f.size()) + " edges and no level-" +
                     std::to_string(n) + " witness was found" + (timed_out ? " before the deadline" : ""));
}

DichotomyOutcome almost_outerplanar_dichotomy(const Graph& g, int n, int k, const Deadline& dl) {
    if (n < 1 || k < 0) throw std::invalid_argument("almost_outerplanar_dichotomy: need n >= 1 and k >= 0");
    EdgeSet f = greedy_outerplanar_deletion(g);
    if (static_cast<int>(f.size()) <= k) return flaw(FlawKind::EdgeDeletion, f, {}, "greedy deletion");
    bool timed_out = false;
    if (subsets_up_to(g.num_edges(), k) <= kSubsetLimit) {
        std::vector<Edge> es = g.edges();
        std::function<bool(const std::vector<Edge>&)> ok = [&](const std::vector<Edge>& s) {
            return is_outerplanar(g.without_edges(EdgeSet(s.begin(), s.end())));
        };
        if (auto s = smallest_subset(es, k, dl, ok, timed_out))
            return flaw(FlawKind::EdgeDeletion, EdgeSet(s->begin(), s->end()), {}, "exhaustive deletion search");
    }
    const Graph k4 = complete_graph(4), k23 = complete_bipartite(2, 3);
    if (auto w = disjoint_pack(g, k4, PatternId::of_aux(AuxKind::OmegaK4, n), n, dl, timed_out)) return *w;
    if (auto w = disjoint_pack(g, k23, PatternId::of_aux(AuxKind::OmegaK23, n), n, dl, timed_out)) return *w;
    if (auto w = bouquet_pack(g, k4, 0, PatternId::of_aux(AuxKind::VeeK4, n), n, dl, timed_out)) return *w;
    if (auto w = bouquet_pack(g, k23, 0, PatternId::of_aux(AuxKind::G1, n), n, dl, timed_out)) return *w;
    if (auto w = bouquet_pack(g, k23, 2, PatternId::of_aux(AuxKind::G2, n), n, dl, timed_out)) return *w;
    if (auto w = k2n_paths(g, n)) return *w;
    if (auto w = exact_fallback(g, {PatternId::of_aux(AuxKind::K2w, n)}, dl, timed_out)) return *w;
    return exhausted("greedy deletion needs " + std::to_string(f.size()) + " edges and no level-" + std::to_string(n) +
                     " witness was found" + (timed_out ? " before the deadline" : ""));
}

DichotomyOutcome planar_vertex_flaws(const Graph& g, int n, int k, const Deadline& dl) {
    if (n < 1 || k < 0) throw std::invalid_argument("planar_vertex_flaws: need n >= 1 and k >= 0");
    VertexSet w = greedy_planarizing_vertices(g);
    if (static_cast<int>(w.size()) <= k) return flaw(FlawKind::VertexDeletion, {}, w, "greedy deletion");
    bool timed_out = false;
    if (subsets_up_to(g.num_vertices(), k) <= kSubsetLimit) {
        std::vector<Vertex> vs = g.vertices();
        std::function<bool(const std::vector<Vertex>&)> ok = [&](const std::vector<Vertex>& s) {
            return is_planar(g.without_vertices(VertexSet(s.begin(), s.end())));
        };
        if (auto s = smallest_subset(vs, k, dl, ok, timed_out))
            return flaw(FlawKind::VertexDeletion, {}, VertexSet(s->begin(), s->end()), "exhaustive deletion search");
    }
    if (auto r = disjoint_pack(g, complete_graph(5), PatternId::sigma(1, n), n, dl, timed_out)) return *r;
    if (auto r = disjoint_pack(g, complete_bipartite(3, 3), PatternId::sigma(2, n), n, dl, timed_out)) return *r;
    return exhausted("greedy deletion needs " + std::to_string(w.size()) + " vertices and no level-" +
                     std::to_string(n) + " packing was found" + (timed_out ? " before the deadline" : ""));
}

ClassifyReport classify(const Graph& g, int n, int k, int genus_budget, const Deadline& dl) {
    ClassifyReport rep;
    // disjoint Kuratowski packings first, whatever the flaw engine prefers
    bool timed_out = false;
    if (auto r = disjoint_pack(g, complete_graph(5), PatternId::sigma(1, n), n, dl, timed_out))
        rep.witnesses.push_back({1, n, r->model, "packing"});
    if (auto r = disjoint_pack(g, complete_bipartite(3, 3), PatternId::sigma(2, n), n, dl, timed_out))
        rep.witnesses.push_back({2, n, r->model, "packing"});
    if (timed_out) rep.exhausted.push_back("packing: timeout");
    rep.flaws = planar_vertex_flaws(g, n, k, dl);
    if (rep.flaws.tag == Tag::Witness) {
        if (rep.witnesses.empty()) rep.witnesses.push_back({rep.flaws.pattern.index, n, rep.flaws.model, "packing"});
    } else if (rep.flaws.tag == Tag::Exhausted) {
        rep.exhausted.push_back("planar_vertex_flaws: " + rep.flaws.note);
    } else {
        const VertexSet& w = rep.flaws.flaw_vertices;
        for (Vertex v1 : w) {
            VertexSet others = w;
            others.erase(v1);
            Graph host = g.without_vertices(others);
            MarkedGraph base{host.without_vertices({v1}), host.neighbors(v1)};
            ClassifyStage stage{v1, su_obstruction(base, 0, n, dl)};
            if (stage.outcome.kind == SUOutcome::Kind::Witness) {
                SigmaConversion c = convert_to_sigma(host, v1, stage.outcome.pattern, stage.outcome.model);
                rep.witnesses.push_back(
                    {c.index, c.level, c.model, stage.outcome.pattern.name() + " at " + std::to_string(v1)});
            } else if (stage.outcome.kind == SUOutcome::Kind::Exhausted) {
                rep.exhausted.push_back("su_obstruction at " + std::to_string(v1) + ": " + stage.outcome.note);
            }
            rep.stages.push_back(std::move(stage));
        }
    }
    if (rep.witnesses.empty()) {
        DecomposeResult d = decompose(g, genus_budget, dl);
        if (d.status == GenusStatus::Exact) {
            rep.bound = genus_bound(d.decomposition, genus_budget, dl);
            rep.decomposition = std::move(d.decomposition);
        } else {
            rep.exhausted.push_back(d.status == GenusStatus::ExceedsBudget ? "decompose: genus exceeds the budget"
                                                                           : "decompose: timeout");
        }
    }
    return rep;
}

}  // namespace surfmin

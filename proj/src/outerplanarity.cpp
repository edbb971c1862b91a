#include "surfmin/outerplanarity.hpp"

#include <algorithm>
#include <numeric>

namespace surfmin {

namespace {

Graph cone_over(const MarkedGraph& g, Vertex cone_v) {
    Graph c = g.graph;
    c.add_vertex(cone_v);
    for (Vertex u : g.marked) c.add_edge(cone_v, u);
    return c;
}

MarkedGraph restrict_marks(const Graph& g, const VertexSet& u) {
    MarkedGraph m{g, {}};
    for (Vertex x : u)
        if (g.has_vertex(x)) m.marked.insert(x);
    return m;
}

// Mark-preserving automorphisms of a theta, as vertex maps.
std::vector<std::map<Vertex, Vertex>> compute_automorphisms(int i) {
    MarkedGraph t = theta(i);
    std::vector<Vertex> vs = t.graph.vertices(), perm = vs;
    std::vector<std::map<Vertex, Vertex>> out;
    do {
        std::map<Vertex, Vertex> m;
        for (std::size_t k = 0; k < vs.size(); ++k) m[vs[k]] = perm[k];
        bool ok = true;
        for (Vertex v : vs) ok = ok && (t.marked.count(v) == t.marked.count(m[v]));
        for (const auto& [a, b] : t.graph.edges()) ok = ok && t.graph.has_edge(m[a], m[b]);
        if (ok) out.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

const std::vector<std::map<Vertex, Vertex>>& theta_automorphisms(int i) {
    static const std::vector<std::vector<std::map<Vertex, Vertex>>> all{
        {}, compute_automorphisms(1), compute_automorphisms(2), compute_automorphisms(3), compute_automorphisms(4)};
    return all.at(i);
}

enum class Membership { In, Out, Unknown };

struct SigmaTest {
    int budget;
    const Deadline& dl;

    Membership operator()(const Graph& g, const VertexSet& u, int* genus = nullptr,
                          RotationSystem* rot = nullptr) const {
        MarkedGraph m = restrict_marks(g, u);
        auto [c, cv] = cone(m.graph, m.marked);
        GenusResult r = min_genus(c, budget, dl);
        if (genus) *genus = r.genus;
        if (rot) *rot = r.rotation;
        if (r.exact()) return Membership::In;
        if (r.status == GenusStatus::ExceedsBudget) return Membership::Out;
        return Membership::Unknown;
    }
};

// Theta with the fewest host vertices over all four indices; thin witnesses
// leave the most room for the next ones.
SearchStatus smallest_theta(const MarkedGraph& g, ThetaWitness& out, const Deadline& dl) {
    bool found = false, timed_out = false;
    for (int i = 1; i <= 4; ++i) {
        MinorSearchResult r = find_marked_minor(g, theta(i), dl);
        if (r.status == SearchStatus::Timeout) timed_out = true;
        if (!r.found()) continue;
        if (!found || r.model.support().size() < out.model.support().size()) {
            out.index = i;
            out.model = r.model;
            out.cone_on_branch = false;
            found = true;
        }
    }
    if (found) return SearchStatus::Found;
    return timed_out ? SearchStatus::Timeout : SearchStatus::NotFound;
}

}  // namespace

ThetaWitness extract_theta(const MarkedGraph& g, const KuratowskiWitness& k, Vertex cone_v) {
    if (g.graph.has_vertex(cone_v)) throw std::invalid_argument("extract_theta: cone vertex must be new");
    Graph c = cone_over(g, cone_v);
    std::string why;
    if (!verify_kuratowski(c, k, &why)) throw std::invalid_argument("extract_theta: witness invalid: " + why);
    if (!k.support().count(cone_v)) throw std::invalid_argument("extract_theta: cone vertex not on the witness");

    const bool k5 = k.kind == KuratowskiWitness::Kind::K5;
    ThetaWitness w;
    std::map<Vertex, Vertex> theta_of;  // branch vertex -> theta vertex
    std::map<Vertex, VertexSet> sets;
    auto bpos = std::find(k.branch.begin(), k.branch.end(), cone_v);
    std::size_t special = k.paths.paths.size();  // path through the cone vertex (subdivision case)

    if (bpos != k.branch.end()) {
        w.cone_on_branch = true;
        const std::size_t bi = static_cast<std::size_t>(bpos - k.branch.begin());
        if (k5) {
            w.index = 1;
            Vertex t = 0;
            for (std::size_t j = 0; j < 5; ++j)
                if (j != bi) theta_of[k.branch[j]] = t++;
        } else {
            w.index = 3;
            // the opposite side becomes the marked triple 0,1,2
            std::size_t own = bi / 3, other = 1 - own;
            for (std::size_t j = 0; j < 3; ++j) theta_of[k.branch[3 * other + j]] = static_cast<Vertex>(j);
            Vertex t = 3;
            for (std::size_t j = 0; j < 3; ++j)
                if (3 * own + j != bi) theta_of[k.branch[3 * own + j]] = t++;
        }
    } else {
        w.cone_on_branch = false;
        for (std::size_t i = 0; i < k.paths.paths.size(); ++i) {
            const auto& p = k.paths.paths[i];
            if (std::find(p.begin() + 1, p.end() - 1, cone_v) != p.end() - 1) special = i;
        }
        auto [x, y] = k.pair_of(special);
        theta_of[x] = 0;
        theta_of[y] = 1;
        if (k5) {
            w.index = 2;
            Vertex t = 2;
            for (Vertex b : k.branch)
                if (b != x && b != y) theta_of[b] = t++;
        } else {
            w.index = 4;
            // x lies on side A (indices 0..2), y on side B
            Vertex ta = 2, tb = 4;
            for (std::size_t j = 0; j < 6; ++j) {
                Vertex b = k.branch[j];
                if (b == x || b == y) continue;
                theta_of[b] = j < 3 ? ta++ : tb++;
            }
        }
    }
    for (const auto& [b, t] : theta_of) sets[t].insert(b);
    for (std::size_t i = 0; i < k.paths.paths.size(); ++i) {
        std::vector<Vertex> p = k.paths.paths[i];
        if (i == special) {
            auto pos = std::find(p.begin(), p.end(), cone_v) - p.begin();
            for (long j = 0; j < pos; ++j) sets[theta_of.at(p.front())].insert(p[j]);
            for (long j = pos + 1; j < static_cast<long>(p.size()); ++j) sets[theta_of.at(p.back())].insert(p[j]);
            continue;
        }
        if (p.back() == cone_v) std::reverse(p.begin(), p.end());
        if (p.front() == cone_v) {
            for (std::size_t j = 1; j < p.size(); ++j) sets[theta_of.at(p.back())].insert(p[j]);
            continue;
        }
        for (std::size_t j = 1; j + 1 < p.size(); ++j) sets[theta_of.at(p.front())].insert(p[j]);
    }
    MarkedGraph t = theta(w.index);
    w.model = complete_model(g.graph, t.graph, sets);
    ModelReport rep = verify_marked_model(g, t, w.model);
    if (!rep.ok) throw std::logic_error("extract_theta: model fails: " + rep.violations.front());
    return w;
}

UOuterResult is_u_outerplanar(const Graph& g, const VertexSet& u) {
    for (Vertex x : u)
        if (!g.has_vertex(x)) throw std::invalid_argument("is_u_outerplanar: marked vertex not in graph");
    PlanarityResult base = planarity(g);
    if (!base.planar) throw NonPlanarHost(base.witness);
    UOuterResult res;
    auto [c, cv] = cone(g, u);
    res.cone_graph = c;
    res.cone_vertex = cv;
    PlanarityResult pr = planarity(c);
    if (pr.planar) {
        res.outerplanar = true;
        res.cone_rotation = pr.rotation;
        return res;
    }
    res.witness = extract_theta(MarkedGraph{g, u}, pr.witness, cv);
    return res;
}

SearchStatus find_theta(const MarkedGraph& g, ThetaWitness& out, const Deadline& dl) {
    if (is_planar(g.graph)) {
        UOuterResult r = is_u_outerplanar(g.graph, g.marked);
        if (r.outerplanar) return SearchStatus::NotFound;
        out = r.witness;
        return SearchStatus::Found;
    }
    bool timed_out = false;
    for (int i = 1; i <= 4; ++i) {
        MinorSearchResult r = find_marked_minor(g, theta(i), dl);
        if (r.found()) {
            out.index = i;
            out.model = r.model;
            out.cone_on_branch = false;
            return SearchStatus::Found;
        }
        if (r.status == SearchStatus::Timeout) timed_out = true;
    }
    return timed_out ? SearchStatus::Timeout : SearchStatus::NotFound;
}

RelativeGenusResult relative_genus(const Graph& g, const VertexSet& u, int budget, const Deadline& dl) {
    RelativeGenusResult res;
    auto worst = [&](GenusStatus s) {
        if (s == GenusStatus::Unknown || res.status == GenusStatus::Unknown) res.status = GenusStatus::Unknown;
        else if (s == GenusStatus::ExceedsBudget) res.status = GenusStatus::ExceedsBudget;
    };
    auto [c, cv] = cone(g, u);
    GenusResult rc = min_genus(c, budget, dl), rb = min_genus(g, budget, dl);
    worst(rc.status);
    worst(rb.status);
    res.gamma_cone = rc.genus;
    res.gamma_base = rb.genus;
    if (res.status != GenusStatus::Exact || res.gamma_cone <= res.gamma_base) return res;
    for (Vertex x : g.vertices()) {
        Graph gx = g.without_vertices({x});
        VertexSet ux = u;
        ux.erase(x);
        auto [cx, _] = cone(gx, ux);
        GenusResult a = min_genus(cx, budget, dl), b = min_genus(gx, budget, dl);
        worst(a.status);
        worst(b.status);
        if (a.exact() && b.exact() && a.genus <= b.genus) res.critical.push_back(x);
    }
    return res;
}

StarResult u_star_search(const MarkedGraph& g, Vertex x, int n) {
    if (!g.graph.has_vertex(x)) throw std::invalid_argument("u_star_search: unknown centre");
    StarResult res;
    VertexSet nx = g.graph.neighbors(x);
    VertexSet targets = g.marked;
    targets.erase(x);
    if (nx.empty() || targets.empty()) {
        res.found = n <= 0;
        return res;
    }
    MengerResult m = max_disjoint_paths(g.graph.without_vertices({x}), nx, targets, false);
    res.paths = m.paths;
    res.separator = m.separator;
    res.found = static_cast<int>(m.size()) >= n;
    return res;
}

DoubleStarResult double_star_search(const MarkedGraph& g, Vertex x, Vertex y, int n, const Deadline& dl) {
    if (x == y) throw std::invalid_argument("double_star_search: hubs must differ");
    if (!g.graph.has_vertex(x) || !g.graph.has_vertex(y)) throw std::invalid_argument("double_star_search: unknown hub");
    DoubleStarResult res;
    MarkedGraph pattern = u_pattern(5, false, n);
    MengerResult m = max_disjoint_paths(g.graph, {x}, {y}, true);
    res.separator = m.separator;
    // x-y paths whose interior holds a marked vertex give the leaves directly
    std::map<Vertex, VertexSet> sets{{0, {x}}, {1, {y}}};
    int leaves = 0;
    for (const auto& p : m.paths.paths) {
        if (leaves == n) break;
        if (p.size() < 3) continue;
        VertexSet inner(p.begin() + 1, p.end() - 1);
        bool marked = std::any_of(inner.begin(), inner.end(), [&](Vertex v) { return g.marked.count(v) != 0; });
        if (marked) sets[2 + leaves++] = inner;
    }
    if (leaves == n) {
        res.model = complete_model(g.graph, pattern.graph, sets);
        res.status = SearchStatus::Found;
    } else {
        if (m.size() < static_cast<std::size_t>(n)) return res;  // Menger: at most m.size() leaves
        MeetConstraints meet{{0, {x}}, {1, {y}}};
        for (int j = 0; j < n; ++j) meet[2 + j] = g.marked;
        MinorSearchResult r = find_minor(g.graph, pattern.graph, dl, meet);
        res.status = r.status;
        if (!r.found()) return res;
        res.model = r.model;
    }
    ModelReport rep = verify_marked_model(g, pattern, res.model);
    if (!rep.ok) throw std::logic_error("double_star_search: model fails: " + rep.violations.front());
    res.separator.clear();
    return res;
}

SUOutcome su_obstruction(const MarkedGraph& g, int genus_budget, int n, const Deadline& dl) {
    g.validate();
    if (n < 1) throw std::invalid_argument("su_obstruction: level must be >= 1");
    SUOutcome out;
    SigmaTest in_sigma{genus_budget, dl};
    Membership top = in_sigma(g.graph, g.marked, &out.cone_genus, &out.cone_rotation);
    if (top == Membership::In) {
        out.kind = SUOutcome::Kind::Certificate;
        return out;
    }
    if (top == Membership::Unknown) {
        out.note = "timeout while testing the cone genus";
        return out;
    }
    out.cone_rotation = {};

    auto witness = [&](PatternId id, std::map<Vertex, VertexSet> sets) {
        MarkedGraph p = pattern_graph(id);
        out.kind = SUOutcome::Kind::Witness;
        out.pattern = id;
        out.model = complete_model(g.graph, p.graph, std::move(sets));
        ModelReport rep = verify_marked_model(g, p, out.model);
        if (!rep.ok) throw std::logic_error("su_obstruction: witness fails: " + rep.violations.front());
        return out;
    };

    // Phase 1: disjoint thetas, deleted one after another.
    std::map<int, std::vector<ThetaWitness>> disjoint;
    {
        Graph h = g.graph;
        while (!dl.expired()) {
            ThetaWitness t;
            if (smallest_theta(restrict_marks(h, g.marked), t, dl) != SearchStatus::Found) break;
            auto& bucket = disjoint[t.index];
            bucket.push_back(t);
            if (static_cast<int>(bucket.size()) == n) {
                const Vertex k = static_cast<Vertex>(theta(t.index).graph.num_vertices());
                std::map<Vertex, VertexSet> sets;
                for (int c = 0; c < n; ++c)
                    for (const auto& [q, b] : bucket[c].model.branch_sets) sets[c * k + q] = b;
                return witness(PatternId::omega_theta(t.index, n), sets);
            }
            h = h.without_vertices(t.model.support());
        }
    }

    // Phase 2: critical vertices, thetas through one of them.
    std::vector<Vertex> critical;
    for (Vertex x : g.graph.vertices()) {
        if (dl.expired()) break;
        VertexSet ux = g.marked;
        ux.erase(x);
        if (in_sigma(g.graph.without_vertices({x}), ux) == Membership::In) critical.push_back(x);
    }
    for (Vertex x : critical) {
        Graph h = g.graph;
        std::map<std::pair<int, bool>, std::vector<std::map<Vertex, VertexSet>>> bouquets;
        while (!dl.expired()) {
            ThetaWitness t;
            if (smallest_theta(restrict_marks(h, g.marked), t, dl) != SearchStatus::Found) break;
            VertexSet sup = t.model.support();
            sup.erase(x);
            h = h.without_vertices(sup);
            Vertex px = -1;
            for (const auto& [q, b] : t.model.branch_sets)
                if (b.count(x)) px = q;
            if (px < 0) continue;
            const bool marked_role = theta(t.index).marked.count(px) != 0;
            const Vertex designated = marked_role ? 0 : theta_unmarked_vertex(t.index);
            const std::map<Vertex, Vertex>* sigma_map = nullptr;
            for (const auto& a : theta_automorphisms(t.index))
                if (a.at(px) == designated) {
                    sigma_map = &a;
                    break;
                }
            if (!sigma_map) continue;
            std::map<Vertex, VertexSet> normal;
            for (const auto& [q, b] : t.model.branch_sets) normal[sigma_map->at(q)] = b;
            auto& bucket = bouquets[{t.index, marked_role}];
            bucket.push_back(normal);
            if (static_cast<int>(bucket.size()) == n) {
                const bool primed = !marked_role;
                std::map<Vertex, VertexSet> sets;
                for (int c = 0; c < n; ++c)
                    for (const auto& [q, b] : bucket[c]) {
                        Vertex pv = u_vertex(t.index, primed, c, q);
                        sets[pv].insert(b.begin(), b.end());
                    }
                return witness(PatternId::u(t.index, primed, n), sets);
            }
        }
    }
    for (std::size_t a = 0; a < critical.size(); ++a)
        for (std::size_t b = a + 1; b < critical.size(); ++b) {
            if (dl.expired()) break;
            DoubleStarResult d = double_star_search(g, critical[a], critical[b], n, dl);
            if (d.status == SearchStatus::Found) return witness(PatternId::u(5, false, n), d.model.branch_sets);
        }
    out.kind = SUOutcome::Kind::Exhausted;
    out.note = dl.expired() ? "timeout" : "no level-" + std::to_string(n) + " witness among the finite searches";
    return out;
}

}  // namespace surfmin

// Obstruction catalog. Every family is laid out so that level n is a prefix
// of level n+1: shared vertices first, then the copies in order.
#include "surfmin/patterns.hpp"

#include <algorithm>
#include <sstream>

#include "surfmin/embedding.hpp"

namespace surfmin {

namespace {

constexpr Vertex kCone = -1;

int theta_size(int i) {
    static const int sz[] = {0, 4, 5, 5, 6};
    if (i < 1 || i > 4) throw std::invalid_argument("theta index must be 1..4");
    return sz[i];
}

void need_level(int n) {
    if (n < 1) throw std::invalid_argument("truncation level must be >= 1");
}

Vertex shared_theta_vertex(int i, bool primed) { return primed ? theta_unmarked_vertex(i) : 0; }

}  // namespace

std::string PatternId::name() const {
    std::ostringstream os;
    switch (family) {
        case Family::Theta: os << "theta" << index; return os.str();
        case Family::U: os << "u" << index; break;
        case Family::UPrime: os << "u" << index << "'"; break;
        case Family::Sigma: os << "sigma" << index; break;
        case Family::OmegaTheta: os << "omega-theta" << index; break;
        case Family::Aux: os << aux_name(aux); break;
    }
    os << "(" << level << ")";
    return os.str();
}

bool PatternId::operator==(const PatternId& o) const {
    if (family != o.family) return false;
    if (family == Family::Aux) return aux == o.aux && level == o.level;
    if (family == Family::Theta) return index == o.index;
    return index == o.index && level == o.level;
}

const char* aux_name(AuxKind k) {
    switch (k) {
        case AuxKind::G1: return "G1";
        case AuxKind::G2: return "G2";
        case AuxKind::K2w: return "K2w";
        case AuxKind::OmegaK3: return "omegaK3";
        case AuxKind::VeeK3: return "veeK3";
        case AuxKind::OmegaK4: return "omegaK4";
        case AuxKind::VeeK4: return "veeK4";
        case AuxKind::OmegaK23: return "omegaK23";
    }
    return "?";
}

PatternId parse_pattern(const std::string& s) {
    auto bad = [&]() { return std::invalid_argument("unknown pattern name: " + s); };
    std::string head = s;
    int level = 0;
    auto lp = s.find('(');
    if (lp != std::string::npos) {
        if (s.back() != ')') throw bad();
        head = s.substr(0, lp);
        try {
            level = std::stoi(s.substr(lp + 1, s.size() - lp - 2));
        } catch (...) {
            throw bad();
        }
    }
    auto num = [&](const std::string& prefix, int& idx) {
        if (head.rfind(prefix, 0) != 0 || head.size() == prefix.size()) return false;
        std::string rest = head.substr(prefix.size());
        if (rest.back() == '\'') rest.pop_back();
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return false;
        idx = std::stoi(rest);
        return true;
    };
    for (AuxKind k : {AuxKind::G1, AuxKind::G2, AuxKind::K2w, AuxKind::OmegaK3, AuxKind::VeeK3, AuxKind::OmegaK4,
                      AuxKind::VeeK4, AuxKind::OmegaK23})
        if (head == aux_name(k)) {
            if (level < 1) throw bad();
            return PatternId::of_aux(k, level);
        }
    int idx = 0;
    if (num("omega-theta", idx)) {
        if (level < 1 || idx < 1 || idx > 4) throw bad();
        return PatternId::omega_theta(idx, level);
    }
    if (num("theta", idx)) {
        if (lp != std::string::npos || idx < 1 || idx > 4) throw bad();
        return PatternId::theta(idx);
    }
    if (num("sigma", idx)) {
        if (level < 1 || idx < 1 || idx > 8) throw bad();
        return PatternId::sigma(idx, level);
    }
    if (num("u", idx)) {
        bool primed = head.back() == '\'';
        if (level < 1 || idx < 1 || idx > 5 || (primed && (idx < 2 || idx > 4))) throw bad();
        return PatternId::u(idx, primed, level);
    }
    throw bad();
}

// patterns -----------------------------------------------------------------

Graph sigma(int i, int n) {
    need_level(n);
    Graph g;
    switch (i) {
        case 1:
            for (int c = 0; c < n; ++c) g = disjoint_union(g, complete_graph(5), 5 * c);
            return g;
        case 2:
            for (int c = 0; c < n; ++c) g = disjoint_union(g, complete_bipartite(3, 3), 6 * c);
            return g;
        case 3:
            g.add_vertex(0);
            for (int c = 0; c < n; ++c) {
                std::vector<Vertex> k{0, 1 + 4 * c, 2 + 4 * c, 3 + 4 * c, 4 + 4 * c};
                for (std::size_t a = 0; a < k.size(); ++a)
                    for (std::size_t b = a + 1; b < k.size(); ++b) g.add_edge(k[a], k[b]);
            }
            return g;
        case 4:
            for (int c = 0; c < n; ++c) {
                std::vector<Vertex> A{0, 1 + 5 * c, 2 + 5 * c}, B{3 + 5 * c, 4 + 5 * c, 5 + 5 * c};
                for (Vertex a : A)
                    for (Vertex b : B) g.add_edge(a, b);
            }
            return g;
        case 5:
            g.add_edge(0, 1);
            for (int c = 0; c < n; ++c) {
                std::vector<Vertex> k{0, 1, 2 + 3 * c, 3 + 3 * c, 4 + 3 * c};
                for (std::size_t a = 0; a < k.size(); ++a)
                    for (std::size_t b = a + 1; b < k.size(); ++b) g.add_edge(k[a], k[b]);
            }
            return g;
        case 6:
            for (int c = 0; c < n; ++c) {
                std::vector<Vertex> A{0, 2 + 4 * c, 3 + 4 * c}, B{1, 4 + 4 * c, 5 + 4 * c};
                for (Vertex a : A)
                    for (Vertex b : B) g.add_edge(a, b);
            }
            return g;
        case 7:
            for (int c = 0; c < n; ++c) {
                std::vector<Vertex> A{0, 1, 2 + 4 * c}, B{3 + 4 * c, 4 + 4 * c, 5 + 4 * c};
                for (Vertex a : A)
                    for (Vertex b : B) g.add_edge(a, b);
            }
            return g;
        case 8: return complete_bipartite(3, n);
        default: throw std::invalid_argument("sigma index must be 1..8");
    }
}

MarkedGraph theta(int i) {
    MarkedGraph m;
    switch (i) {
        case 1:
            m.graph = complete_graph(4);
            m.marked = {0, 1, 2, 3};
            break;
        case 2:
            m.graph = complete_graph(5);
            m.graph.remove_edge(0, 1);
            m.marked = {0, 1};
            break;
        case 3:
            for (Vertex a : {0, 1, 2})
                for (Vertex b : {3, 4}) m.graph.add_edge(a, b);
            m.marked = {0, 1, 2};
            break;
        case 4:
            for (Vertex a : {0, 2, 3})
                for (Vertex b : {1, 4, 5})
                    if (!(a == 0 && b == 1)) m.graph.add_edge(a, b);
            m.marked = {0, 1};
            break;
        default: throw std::invalid_argument("theta index must be 1..4");
    }
    return m;
}

Vertex theta_unmarked_vertex(int i) {
    switch (i) {
        case 2: return 2;
        case 3: return 3;
        case 4: return 2;
        default: return -1;
    }
}

Vertex u_vertex(int i, bool primed, int c, Vertex t) {
    const int k = theta_size(i);
    const Vertex s = shared_theta_vertex(i, primed);
    if (t == s) return 0;
    Vertex rank = t > s ? t - 1 : t;
    return 1 + c * (k - 1) + rank;
}

MarkedGraph u_pattern(int i, bool primed, int n) {
    need_level(n);
    if (primed && (i == 1 || i == 5)) throw std::invalid_argument("u_pattern: no primed variant for this index");
    MarkedGraph m;
    if (i == 5) {
        m.graph = complete_bipartite(2, n);
        for (int j = 0; j < n; ++j) m.marked.insert(2 + j);
        return m;
    }
    MarkedGraph t = theta(i);
    for (int c = 0; c < n; ++c) {
        for (const auto& [a, b] : t.graph.edges()) m.graph.add_edge(u_vertex(i, primed, c, a), u_vertex(i, primed, c, b));
        for (Vertex x : t.marked) m.marked.insert(u_vertex(i, primed, c, x));
    }
    return m;
}

MarkedGraph omega_theta(int i, int n) {
    need_level(n);
    MarkedGraph t = theta(i), m;
    const int k = theta_size(i);
    for (int c = 0; c < n; ++c) {
        for (const auto& [a, b] : t.graph.edges()) m.graph.add_edge(c * k + a, c * k + b);
        for (Vertex x : t.marked) m.marked.insert(c * k + x);
    }
    return m;
}

Graph aux_pattern(AuxKind kind, int n) {
    need_level(n);
    Graph g;
    auto bouquet = [&](const Graph& h, Vertex hub) {
        // hub -> 0, the other vertices of copy c follow in id order
        Graph out;
        out.add_vertex(0);
        std::vector<Vertex> rest;
        for (Vertex v : h.vertices())
            if (v != hub) rest.push_back(v);
        for (int c = 0; c < n; ++c) {
            std::map<Vertex, Vertex> id{{hub, 0}};
            for (std::size_t r = 0; r < rest.size(); ++r) id[rest[r]] = 1 + c * static_cast<Vertex>(rest.size()) + static_cast<Vertex>(r);
            for (const auto& [a, b] : h.edges()) out.add_edge(id[a], id[b]);
        }
        return out;
    };
    switch (kind) {
        case AuxKind::OmegaK3: return disjoint_copies(complete_graph(3), n);
        case AuxKind::OmegaK4: return disjoint_copies(complete_graph(4), n);
        case AuxKind::OmegaK23: return disjoint_copies(complete_bipartite(2, 3), n);
        case AuxKind::VeeK3: return bouquet(complete_graph(3), 0);
        case AuxKind::VeeK4: return bouquet(complete_graph(4), 0);
        case AuxKind::K2w: return complete_bipartite(2, n);
        case AuxKind::G1: return bouquet(complete_bipartite(2, 3), 0);  // vertex 0 has degree 3
        case AuxKind::G2: return bouquet(complete_bipartite(2, 3), 2);  // vertex 2 has degree 2
    }
    return g;
}

MarkedGraph pattern_graph(const PatternId& id) {
    switch (id.family) {
        case Family::Theta: return theta(id.index);
        case Family::U: return u_pattern(id.index, false, id.level);
        case Family::UPrime: return u_pattern(id.index, true, id.level);
        case Family::OmegaTheta: return omega_theta(id.index, id.level);
        case Family::Sigma: return MarkedGraph{sigma(id.index, id.level), {}};
        case Family::Aux: return MarkedGraph{aux_pattern(id.aux, id.level), {}};
    }
    throw std::invalid_argument("pattern_graph: unknown family");
}

// conversion ---------------------------------------------------------------

namespace {

struct Template {
    int index = 0;
    int level = 0;
    bool iso = false;
    std::map<Vertex, std::vector<Vertex>> sets;  // sigma vertex -> pattern vertices (kCone = cone)
};

// Sigma vertex ids per copy, matching sigma().
Vertex s3(int c, int r) { return 1 + 4 * c + r; }
Vertex s4a(int c, int r) { return 1 + 5 * c + r; }
Vertex s4b(int c, int r) { return 3 + 5 * c + r; }
Vertex s5(int c, int r) { return 2 + 3 * c + r; }
Vertex s6a(int c, int r) { return 2 + 4 * c + r; }
Vertex s6b(int c, int r) { return 4 + 4 * c + r; }
Vertex s7a(int c) { return 2 + 4 * c; }
Vertex s7b(int c, int r) { return 3 + 4 * c + r; }

Template conversion_template(const PatternId& x) {
    const int n = x.level;
    need_level(n);
    Template t;
    auto& S = t.sets;
    if (x.family == Family::U || x.family == Family::UPrime) {
        const bool pr = x.family == Family::UPrime;
        const int i = x.index;
        auto U = [&](int c, Vertex v) { return u_vertex(i, pr, c, v); };
        if (i == 5) {
            t = {8, n, true, {}};
            S[0] = {0};
            S[1] = {1};
            S[2] = {kCone};
            for (int j = 0; j < n; ++j) S[3 + j] = {2 + j};
            return t;
        }
        if (!pr && i == 1) {
            t = {5, n, true, {}};
            S[0] = {0};
            S[1] = {kCone};
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < 3; ++r) S[s5(c, r)] = {U(c, 1 + r)};
            return t;
        }
        if (!pr && i == 2) {
            t = {3, n, false, {}};
            S[0] = {0, kCone};
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < 4; ++r) S[s3(c, r)] = {U(c, 1 + r)};
            return t;
        }
        if (pr && i == 2) {
            if (n < 2) throw std::invalid_argument("convert_to_sigma: u2' needs level >= 2");
            t = {6, n - 1, false, {}};
            S[0] = {0};
            S[1] = {kCone, U(0, 0)};
            for (int c = 1; c < n; ++c) {
                S[s6a(c - 1, 0)] = {U(c, 0)};
                S[s6a(c - 1, 1)] = {U(c, 1)};
                S[s6b(c - 1, 0)] = {U(c, 3)};
                S[s6b(c - 1, 1)] = {U(c, 4)};
            }
            return t;
        }
        if (!pr && i == 3) {
            t = {6, n, true, {}};
            S[0] = {kCone};
            S[1] = {0};
            for (int c = 0; c < n; ++c) {
                S[s6a(c, 0)] = {U(c, 3)};
                S[s6a(c, 1)] = {U(c, 4)};
                S[s6b(c, 0)] = {U(c, 1)};
                S[s6b(c, 1)] = {U(c, 2)};
            }
            return t;
        }
        if (pr && i == 3) {
            t = {7, n, true, {}};
            S[0] = {0};
            S[1] = {kCone};
            for (int c = 0; c < n; ++c) {
                S[s7a(c)] = {U(c, 4)};
                for (int r = 0; r < 3; ++r) S[s7b(c, r)] = {U(c, r)};
            }
            return t;
        }
        if (!pr && i == 4) {
            t = {4, n, false, {}};
            S[0] = {0, kCone};
            for (int c = 0; c < n; ++c) {
                S[s4a(c, 0)] = {U(c, 2)};
                S[s4a(c, 1)] = {U(c, 3)};
                S[s4b(c, 0)] = {U(c, 1)};
                S[s4b(c, 1)] = {U(c, 4)};
                S[s4b(c, 2)] = {U(c, 5)};
            }
            return t;
        }
        if (pr && i == 4) {
            // copy 0 lends its vertex 1 to the cone's branch set
            t = {6, n, false, {}};
            S[0] = {0};
            S[1] = {kCone, U(0, 1)};
            S[s6a(0, 0)] = {U(0, 0)};
            S[s6a(0, 1)] = {U(0, 3)};
            S[s6b(0, 0)] = {U(0, 4)};
            S[s6b(0, 1)] = {U(0, 5)};
            for (int c = 1; c < n; ++c) {
                S[s6a(c, 0)] = {U(c, 0)};
                S[s6a(c, 1)] = {U(c, 3), U(c, 1)};
                S[s6b(c, 0)] = {U(c, 4)};
                S[s6b(c, 1)] = {U(c, 5)};
            }
            return t;
        }
    }
    if (x.family == Family::OmegaTheta) {
        const int i = x.index, k = theta_size(i);
        auto W = [&](int c, Vertex v) { return c * k + v; };
        switch (i) {
            case 1:
                t = {3, n, true, {}};
                S[0] = {kCone};
                for (int c = 0; c < n; ++c)
                    for (int r = 0; r < 4; ++r) S[s3(c, r)] = {W(c, r)};
                return t;
            case 2:
                t = {3, n, false, {}};
                S[0] = {kCone};
                for (int c = 0; c < n; ++c) {
                    S[0].push_back(W(c, 0));
                    for (int r = 0; r < 4; ++r) S[s3(c, r)] = {W(c, 1 + r)};
                }
                return t;
            case 3:
                t = {4, n, true, {}};
                S[0] = {kCone};
                for (int c = 0; c < n; ++c) {
                    S[s4a(c, 0)] = {W(c, 3)};
                    S[s4a(c, 1)] = {W(c, 4)};
                    for (int r = 0; r < 3; ++r) S[s4b(c, r)] = {W(c, r)};
                }
                return t;
            case 4:
                t = {4, n, false, {}};
                S[0] = {kCone};
                for (int c = 0; c < n; ++c) {
                    S[0].push_back(W(c, 0));
                    S[s4a(c, 0)] = {W(c, 2)};
                    S[s4a(c, 1)] = {W(c, 3)};
                    S[s4b(c, 0)] = {W(c, 1)};
                    S[s4b(c, 1)] = {W(c, 4)};
                    S[s4b(c, 2)] = {W(c, 5)};
                }
                return t;
        }
    }
    throw std::invalid_argument("convert_to_sigma: no conversion row for " + x.name());
}

}  // namespace

SigmaConversion convert_to_sigma(const Graph& g, Vertex cone_v, const PatternId& x_kind, const MinorModel& model) {
    if (!g.has_vertex(cone_v)) throw std::invalid_argument("convert_to_sigma: cone vertex not in host");
    Template t = conversion_template(x_kind);
    MarkedGraph x = pattern_graph(x_kind);
    MarkedGraph base{g.without_vertices({cone_v}), g.neighbors(cone_v)};
    ModelReport rep = verify_marked_model(base, x, model);
    if (!rep.ok) throw std::invalid_argument("convert_to_sigma: input model invalid: " + rep.violations.front());

    SigmaConversion out;
    out.index = t.index;
    out.level = t.level;
    out.isomorphic_row = t.iso;
    for (const auto& [sv, xs] : t.sets) {
        VertexSet b;
        for (Vertex xv : xs) {
            if (xv == kCone) {
                b.insert(cone_v);
            } else {
                const VertexSet& bs = model.branch_sets.at(xv);
                b.insert(bs.begin(), bs.end());
            }
        }
        out.model.branch_sets[sv] = b;
    }
    Graph target = sigma(t.index, t.level);
    out.model = complete_model(g, target, out.model.branch_sets);
    ModelReport fin = verify_model(g, target, out.model);
    if (!fin.ok) throw std::logic_error("convert_to_sigma: output model fails: " + fin.violations.front());
    return out;
}

// catalog checks -----------------------------------------------------------

bool CatalogReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const CatalogRow& r) { return r.ok; });
}

namespace {

std::vector<PatternId> conversion_rows(int n) {
    return {PatternId::u(1, false, n),        PatternId::u(2, false, n),        PatternId::u(2, true, n),
            PatternId::u(3, false, n),        PatternId::u(3, true, n),         PatternId::u(4, false, n),
            PatternId::u(4, true, n),         PatternId::u(5, false, n),        PatternId::omega_theta(1, n),
            PatternId::omega_theta(2, n),     PatternId::omega_theta(3, n),     PatternId::omega_theta(4, n)};
}

MinorModel identity_model(const Graph& h) {
    MinorModel m;
    for (Vertex v : h.vertices()) m.branch_sets[v] = {v};
    for (const auto& e : h.edges()) m.connect_edges[e] = e;
    return m;
}

}  // namespace

CatalogReport verify_conversions(int n) {
    CatalogReport rep;
    for (const PatternId& x : conversion_rows(n)) {
        CatalogRow row;
        row.name = "cone(" + x.name() + ")";
        try {
            MarkedGraph xg = pattern_graph(x);
            auto [cg, cv] = cone(xg.graph, xg.marked);
            SigmaConversion sc = convert_to_sigma(cg, cv, x, identity_model(xg.graph));
            Graph target = sigma(sc.index, sc.level);
            ModelReport mr = verify_model(cg, target, sc.model);
            row.ok = mr.ok;
            row.detail = (sc.isomorphic_row ? "= " : "> ") + PatternId::sigma(sc.index, sc.level).name();
            if (sc.isomorphic_row) {
                bool singletons = std::all_of(sc.model.branch_sets.begin(), sc.model.branch_sets.end(),
                                              [](const auto& kv) { return kv.second.size() == 1; });
                bool iso = singletons && cg.num_vertices() == target.num_vertices() &&
                           cg.num_edges() == target.num_edges() && isomorphic(cg, target);
                row.ok = row.ok && iso;
                if (!iso) row.detail += " (isomorphism check failed)";
            }
            if (!mr.ok) row.detail += " model: " + mr.violations.front();
        } catch (const std::exception& e) {
            row.ok = false;
            row.detail = e.what();
        }
        rep.rows.push_back(row);
    }
    return rep;
}

CatalogReport verify_incomparability(const Deadline& dl) {
    CatalogReport rep;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            if (i == j) continue;
            CatalogRow row;
            row.name = "sigma" + std::to_string(i) + "(2) !< sigma" + std::to_string(j) + "(2)";
            MinorSearchResult r = find_minor(sigma(j, 2), sigma(i, 2), dl);
            row.ok = r.status == SearchStatus::NotFound;
            row.detail = to_string(r.status);
            rep.rows.push_back(row);
        }
    return rep;
}

CatalogReport verify_catalog(int n, const Deadline& dl) {
    if (n < 2) throw std::invalid_argument("verify_catalog: level must be >= 2");
    CatalogReport rep;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        rep.rows.push_back({std::move(name), ok, std::move(detail)});
    };
    for (int i = 1; i <= 4; ++i) {
        MarkedGraph t = theta(i);
        bool marks = std::includes(t.graph.vertex_set().begin(), t.graph.vertex_set().end(), t.marked.begin(),
                                   t.marked.end());
        auto [cg, cv] = cone(t.graph, t.marked);
        PlanarityResult pr = planarity(cg);
        auto want = i <= 2 ? KuratowskiWitness::Kind::K5 : KuratowskiWitness::Kind::K33;
        add("theta" + std::to_string(i) + " invariants",
            marks && is_planar(t.graph) && !pr.planar && pr.witness.kind == want &&
                pr.witness.support().count(cv) != 0,
            pr.planar ? "cone is planar" : "");
    }
    for (int i = 1; i <= 8; ++i) {
        Graph a = sigma(i, n), b = sigma(i, n + 1);
        bool prefix = true;
        for (const auto& [u, v] : a.edges()) prefix = prefix && b.has_edge(u, v);
        add("sigma" + std::to_string(i) + "(" + std::to_string(n) + ") subgraph of level " + std::to_string(n + 1),
            prefix);
    }
    for (int i = 1; i <= 5; ++i)
        for (bool pr : {false, true}) {
            if (pr && (i == 1 || i == 5)) continue;
            MarkedGraph u = u_pattern(i, pr, n);
            bool ok = true;
            for (Vertex m : u.marked) ok = ok && u.graph.has_vertex(m);
            add(PatternId::u(i, pr, n).name() + " marks", ok && is_connected(u.graph));
        }
    CatalogReport conv = verify_conversions(n);
    rep.rows.insert(rep.rows.end(), conv.rows.begin(), conv.rows.end());
    CatalogReport inc = verify_incomparability(dl);
    rep.rows.insert(rep.rows.end(), inc.rows.begin(), inc.rows.end());
    return rep;
}

}  // namespace surfmin

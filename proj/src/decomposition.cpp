// Finitary planar decomposition. Sectors of the generous embedding are the
// runs of a rotation between consecutive core edges; a sector is named by the
// core neighbour that precedes it, and lies in the face of the dart arriving
// from that neighbour.
#include "surfmin/decomposition.hpp"

#include <algorithm>
#include <functional>

namespace surfmin {

namespace {

using Sector = std::pair<Vertex, Vertex>;  // (vertex, preceding core neighbour)

// Core neighbour at or before position `from` in the rotation at v.
Vertex core_neighbour_before(const RotationSystem& rot, const Graph& core, Vertex v, std::size_t from) {
    const auto& l = rot.order.at(v);
    for (std::size_t step = 0; step < l.size(); ++step) {
        Vertex w = l[(from + l.size() - step) % l.size()];
        if (core.has_edge(v, w)) return w;
    }
    throw std::logic_error("decompose: core vertex without core edges");
}

Sector sector_of_edge(const RotationSystem& rot, const Graph& core, Vertex v, Vertex w) {
    const auto& l = rot.order.at(v);
    std::size_t pos = static_cast<std::size_t>(std::find(l.begin(), l.end(), w) - l.begin());
    return {v, core_neighbour_before(rot, core, v, (pos + l.size() - 1) % l.size())};
}

Sector sector_at_or_before(const RotationSystem& rot, const Graph& core, Vertex v, Vertex start) {
    const auto& l = rot.order.at(v);
    std::size_t pos = static_cast<std::size_t>(std::find(l.begin(), l.end(), start) - l.begin());
    return {v, core_neighbour_before(rot, core, v, pos)};
}

// Everything outside one core, with core vertices split into sector copies.
struct Layer {
    Graph split;                          // union over faces of the G'_F
    std::map<Vertex, Sector> boundary;    // copy id -> sector
    std::map<Vertex, int> face_of;        // split vertex -> face index
};

Layer build_layer(const Graph& c, const RotationSystem& rot, const Graph& core, Vertex& next_id) {
    Layer L;
    RotationSystem rc = restrict_rotation(rot, core);
    FaceSet fs = trace_faces(core, rc);
    std::map<Dart, int> face_of_dart;
    for (std::size_t i = 0; i < fs.faces.size(); ++i)
        for (const Dart& d : fs.faces[i]) face_of_dart[d] = static_cast<int>(i);
    std::map<Sector, Vertex> copy_of;
    auto copy = [&](const Sector& s) {
        auto it = copy_of.find(s);
        if (it != copy_of.end()) return it->second;
        Vertex id = next_id++;
        copy_of[s] = id;
        L.boundary[id] = s;
        L.face_of[id] = face_of_dart.at({s.second, s.first});
        return id;
    };
    // bridges: components outside the core with their attachments
    VertexSet core_v = core.vertex_set();
    Graph outside = c.without_vertices(core_v);
    for (const VertexSet& comp : connected_components(outside)) {
        int face = -1;
        for (Vertex x : comp) {
            for (Vertex y : c.neighbors(x)) {
                if (comp.count(y)) {
                    if (x < y) L.split.add_edge(x, y);
                    continue;
                }
                Vertex b = copy(sector_of_edge(rot, core, y, x));
                L.split.add_edge(x, b);
                int f = L.face_of.at(b);
                if (face >= 0 && f != face) throw std::logic_error("decompose: bridge spans two faces of the core");
                face = f;
            }
            L.split.add_vertex(x);
        }
        for (Vertex x : comp) L.face_of[x] = face;
    }
    // chords of the core
    for (const auto& [u, v] : c.edges()) {
        if (!core_v.count(u) || !core_v.count(v) || core.has_edge(u, v)) continue;
        Vertex bu = copy(sector_of_edge(rot, core, u, v));
        Vertex bv = copy(sector_of_edge(rot, core, v, u));
        if (L.face_of.at(bu) != L.face_of.at(bv)) throw std::logic_error("decompose: chord spans two faces of the core");
        L.split.add_edge(bu, bv);
    }
    return L;
}

Vertex original(const Layer& L, Vertex x) {
    auto it = L.boundary.find(x);
    return it == L.boundary.end() ? x : it->second.first;
}

// Greedy edge deletion keeping the genus.
Graph genus_core(const Graph& c, int gamma, const Deadline& dl) {
    Graph h = c;
    for (const auto& [u, v] : c.edges()) {
        Graph h2 = h;
        h2.remove_edge(u, v);
        bool keeps;
        if (gamma == 1) {
            keeps = !is_planar(h2);
        } else {
            GenusResult r = min_genus(h2, gamma - 1, dl);
            keeps = r.status == GenusStatus::ExceedsBudget;
        }
        if (keeps) h = h2;
    }
    VertexSet iso;
    for (Vertex v : h.vertices())
        if (h.degree(v) == 0) iso.insert(v);
    return h.without_vertices(iso);
}

void decompose_component(const Graph& c, int budget, const Deadline& dl, DecomposeResult& out) {
    GenusResult gr = min_genus(c, budget, dl);
    if (!gr.exact()) {
        out.status = gr.status;
        out.genus += gr.genus;
        return;
    }
    out.genus += gr.genus;
    Decomposition& d = out.decomposition;
    if (gr.genus == 0) {
        d.pieces.push_back(c);
        return;
    }
    const RotationSystem& rot = gr.rotation;
    Graph core = genus_core(c, gr.genus, dl);
    for (const auto& [u, v] : minimal_connecting_forest(c, core.vertex_set())) core.add_edge(u, v);

    Vertex next_id = c.max_vertex() + 1;
    Layer first = build_layer(c, rot, core, next_id);
    VertexSet bset;
    for (const auto& [b, _] : first.boundary) bset.insert(b);
    Graph refined = core;
    for (const auto& [a, b] : minimal_connecting_forest(first.split, bset))
        refined.add_edge(original(first, a), original(first, b));

    Layer second = build_layer(c, rot, refined, next_id);
    for (const VertexSet& comp : connected_components(second.split)) {
        std::set<Sector> core_sectors;
        Graph piece;
        for (Vertex x : comp) {
            auto it = second.boundary.find(x);
            if (it != second.boundary.end() && core.has_vertex(it->second.first))
                core_sectors.insert(sector_at_or_before(rot, core, it->second.first, it->second.second));
            piece.add_vertex(original(second, x));
        }
        if (core_sectors.size() > 2)
            throw std::logic_error("decompose: a component meets more than two core sectors");
        for (Vertex x : comp)
            for (Vertex y : second.split.neighbors(x))
                if (x < y) piece.add_edge(original(second, x), original(second, y));
        if (!is_planar(piece)) throw std::logic_error("decompose: a piece is not planar");
        d.pieces.push_back(piece);
    }
    for (const auto& [u, v] : refined.edges()) d.pieces.push_back(graph_from_edges({{u, v}}));
    for (const auto& [u, v] : refined.edges()) d.core.add_edge(u, v);
}

}  // namespace

std::map<std::pair<std::size_t, std::size_t>, VertexSet> Decomposition::overlaps() const {
    std::map<std::pair<std::size_t, std::size_t>, VertexSet> out;
    std::map<Vertex, std::vector<std::size_t>> owners;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (Vertex v : pieces[i].vertices()) owners[v].push_back(i);
    for (const auto& [v, os] : owners)
        for (std::size_t a = 0; a < os.size(); ++a)
            for (std::size_t b = a + 1; b < os.size(); ++b) out[{os[a], os[b]}].insert(v);
    return out;
}

DecompositionReport verify_decomposition(const Graph& g, const Decomposition& d, std::size_t cap) {
    DecompositionReport rep;
    auto bad = [&](std::string s) {
        rep.ok = false;
        rep.violations.push_back(std::move(s));
    };
    VertexSet seen_v;
    EdgeSet seen_e;
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const Graph& p = d.pieces[i];
        for (Vertex v : p.vertices()) {
            if (!g.has_vertex(v)) bad("piece " + std::to_string(i) + " has foreign vertex " + std::to_string(v));
            seen_v.insert(v);
        }
        for (const auto& e : p.edges()) {
            if (!g.has_edge(e.first, e.second))
                bad("piece " + std::to_string(i) + " has foreign edge " + std::to_string(e.first) + "-" +
                    std::to_string(e.second));
            seen_e.insert(e);
        }
        if (!is_planar(p)) bad("piece " + std::to_string(i) + " is not planar");
    }
    for (Vertex v : g.vertices())
        if (!seen_v.count(v)) bad("vertex " + std::to_string(v) + " not covered");
    for (const auto& e : g.edges())
        if (!seen_e.count(e)) bad("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " not covered");
    for (const auto& [ij, s] : d.overlaps())
        if (s.size() > cap)
            bad("pieces " + std::to_string(ij.first) + " and " + std::to_string(ij.second) + " share " +
                std::to_string(s.size()) + " vertices");
    return rep;
}

GenusBound genus_bound(const Decomposition& d, int piece_budget, const Deadline& dl) {
    GenusBound gb;
    std::map<Vertex, int> mult;
    for (const Graph& p : d.pieces) {
        for (Vertex v : p.vertices()) ++mult[v];
        GenusResult r = min_genus(p, piece_budget, dl);
        if (!r.exact()) gb.status = r.status;
        gb.bound += r.genus;
    }
    for (const auto& [_, m] : mult) gb.identifications += m - 1;
    gb.bound += gb.identifications;
    return gb;
}

DecomposeResult decompose(const Graph& g, int genus_budget, const Deadline& dl) {
    DecomposeResult out;
    for (const VertexSet& comp : connected_components(g)) {
        decompose_component(g.induced(comp), genus_budget, dl, out);
        if (out.status != GenusStatus::Exact) return out;
    }
    out.decomposition.cap = out.decomposition.core.num_vertices();
    return out;
}

PlanarizeResult contraction_planarize(const Graph& g, int k, int genus_budget, const Deadline& dl) {
    PlanarizeResult res;
    if (is_planar(g)) {
        res.kind = PlanarizeResult::Kind::Found;
        res.method = "empty";
        return res;
    }
    DecomposeResult dr = decompose(g, genus_budget, dl);
    if (dr.status == GenusStatus::Exact) {
        std::map<Vertex, int> mult;
        for (const Graph& p : dr.decomposition.pieces)
            for (Vertex v : p.vertices()) ++mult[v];
        VertexSet shared;
        for (const auto& [v, m] : mult)
            if (m > 1) shared.insert(v);
        EdgeSet f = minimal_connecting_forest(g, shared);
        if (static_cast<int>(f.size()) <= k && is_planar(contract(g, f))) {
            res.kind = PlanarizeResult::Kind::Found;
            res.edges = f;
            res.method = "forest";
            return res;
        }
    }
    // bounded exhaustive search, smallest sets first
    std::vector<Edge> es = g.edges();
    EdgeSet cur;
    bool timed_out = false;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) return is_planar(contract(g, cur));
        for (std::size_t i = from; i < es.size(); ++i) {
            if (dl.poll()) {
                timed_out = true;
                return false;
            }
            cur.insert(es[i]);
            if (rec(i + 1, left - 1)) return true;
            cur.erase(es[i]);
        }
        return false;
    };
    for (int size = 1; size <= k && !timed_out; ++size) {
        cur.clear();
        if (rec(0, size)) {
            res.kind = PlanarizeResult::Kind::Found;
            res.edges = cur;
            res.method = "exhaustive";
            return res;
        }
    }
    res.kind = timed_out ? PlanarizeResult::Kind::Timeout : PlanarizeResult::Kind::NotFoundWithinK;
    return res;
}

}  // namespace surfmin

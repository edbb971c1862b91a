#include "surfmin/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfmin {

Vertex RotationSystem::successor(Vertex v, Vertex after) const {
    auto it = order.find(v);
    if (it == order.end()) throw std::invalid_argument("rotation: unknown vertex");
    const auto& l = it->second;
    auto pos = std::find(l.begin(), l.end(), after);
    if (pos == l.end()) throw std::invalid_argument("rotation: neighbour missing");
    ++pos;
    return pos == l.end() ? l.front() : *pos;
}

bool valid_rotation(const Graph& g, const RotationSystem& rot, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    for (Vertex v : g.vertices()) {
        auto it = rot.order.find(v);
        if (it == rot.order.end()) {
            if (g.degree(v) == 0) continue;
            return fail("no rotation at vertex " + std::to_string(v));
        }
        VertexSet seen(it->second.begin(), it->second.end());
        if (seen.size() != it->second.size()) return fail("repeated neighbour at " + std::to_string(v));
        if (seen != g.neighbors(v)) return fail("rotation at " + std::to_string(v) + " does not match neighbours");
    }
    for (const auto& [v, _] : rot.order)
        if (!g.has_vertex(v)) return fail("rotation names unknown vertex " + std::to_string(v));
    return true;
}

std::vector<std::vector<Vertex>> FaceSet::vertex_walks() const {
    std::vector<std::vector<Vertex>> out;
    for (const auto& f : faces) {
        std::vector<Vertex> w;
        for (const auto& d : f) w.push_back(d.first);
        out.push_back(std::move(w));
    }
    return out;
}

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
    std::string why;
    if (!valid_rotation(g, rot, &why)) throw std::invalid_argument("trace_faces: " + why);
    std::map<Dart, Dart> next;
    for (const auto& [v, l] : rot.order)
        for (std::size_t i = 0; i < l.size(); ++i) {
            // arriving along (l[i] -> v) leaves along (v -> l[i+1])
            next[{l[i], v}] = {v, l[(i + 1) % l.size()]};
        }
    FaceSet fs;
    fs.components = connected_components(g);
    std::map<Vertex, int> comp_of;
    for (std::size_t c = 0; c < fs.components.size(); ++c)
        for (Vertex v : fs.components[c]) comp_of[v] = static_cast<int>(c);
    fs.component_faces.assign(fs.components.size(), 0);
    std::set<Dart> used;
    for (const auto& [d, _] : next) {
        if (used.count(d)) continue;
        std::vector<Dart> face;
        Dart x = d;
        while (!used.count(x)) {
            used.insert(x);
            face.push_back(x);
            x = next.at(x);
        }
        fs.component_faces[comp_of[d.first]]++;
        fs.faces.push_back(std::move(face));
    }
    fs.genus = 0;
    for (std::size_t c = 0; c < fs.components.size(); ++c) {
        long V = static_cast<long>(fs.components[c].size());
        long E = 0;
        for (Vertex v : fs.components[c]) E += static_cast<long>(g.degree(v));
        E /= 2;
        long F = E == 0 ? 1 : fs.component_faces[c];
        if (E == 0) fs.component_faces[c] = 1;
        long twice = 2 - V + E - F;
        if (twice < 0 || twice % 2 != 0) throw std::logic_error("trace_faces: Euler count not integral");
        fs.genus += static_cast<int>(twice / 2);
    }
    return fs;
}

int rotation_genus(const Graph& g, const RotationSystem& rot) { return trace_faces(g, rot).genus; }

RotationSystem restrict_rotation(const RotationSystem& rot, const Graph& h) {
    RotationSystem r;
    for (Vertex v : h.vertices()) {
        std::vector<Vertex> l;
        auto it = rot.order.find(v);
        if (it != rot.order.end())
            for (Vertex w : it->second)
                if (h.has_edge(v, w)) l.push_back(w);
        if (!l.empty()) r.order[v] = std::move(l);
    }
    return r;
}

Graph graph_of_rotation(const RotationSystem& rot) {
    Graph g;
    for (const auto& [v, l] : rot.order) {
        g.add_vertex(v);
        for (Vertex w : l) g.add_edge(v, w);
    }
    return g;
}

HandleMergeResult handle_merge(const RotationSystem& a, const RotationSystem& b,
                               const std::vector<std::pair<Vertex, Vertex>>& identifications) {
    Graph ga = graph_of_rotation(a), gb = graph_of_rotation(b);
    for (Vertex v : gb.vertices())
        if (ga.has_vertex(v)) throw std::invalid_argument("handle_merge: vertex ids of the two pieces overlap");
    HandleMergeResult res;
    res.genus_bound = rotation_genus(ga, a) + rotation_genus(gb, b);
    RotationSystem rot = a;
    for (const auto& [v, l] : b.order) rot.order[v] = l;
    Graph g = disjoint_union(ga, gb, 0);

    for (const auto& [v, w] : identifications) {
        if (!g.has_vertex(v) || !g.has_vertex(w) || v == w)
            throw std::invalid_argument("handle_merge: invalid identification pair");
        res.genus_bound += 1;
        std::vector<Vertex> lv = rot.order.count(v) ? rot.order[v] : std::vector<Vertex>{};
        std::vector<Vertex> lw = rot.order.count(w) ? rot.order[w] : std::vector<Vertex>{};
        if (!lv.empty() && !lw.empty()) {
            // Corners are named by the neighbour preceding them; pick a pair on one face.
            FaceSet fs = trace_faces(g, rot);
            std::map<Dart, int> face_of;
            for (std::size_t i = 0; i < fs.faces.size(); ++i)
                for (const auto& d : fs.faces[i]) face_of[d] = static_cast<int>(i);
            std::size_t cv = 0, cw = 0;
            bool same = false;
            for (std::size_t i = 0; i < lv.size() && !same; ++i)
                for (std::size_t j = 0; j < lw.size() && !same; ++j)
                    if (face_of[{lv[i], v}] == face_of[{lw[j], w}]) {
                        cv = i;
                        cw = j;
                        same = true;
                    }
            std::vector<Vertex> merged;
            for (std::size_t i = 1; i <= lv.size(); ++i) merged.push_back(lv[(cv + i) % lv.size()]);
            for (std::size_t j = 1; j <= lw.size(); ++j) merged.push_back(lw[(cw + j) % lw.size()]);
            lv = merged;
        } else if (lv.empty()) {
            lv = lw;
        }
        // Re-point w's neighbours to v, then collapse loops and parallels.
        for (Vertex x : g.neighbors(w)) {
            auto& lx = rot.order[x];
            for (auto& y : lx)
                if (y == w) y = v;
        }
        rot.order.erase(w);
        Graph h = identify_vertices(g, v, w);
        std::vector<Vertex> clean;
        VertexSet seen;
        for (Vertex y : lv)
            if (y != v && y != w && seen.insert(y).second) clean.push_back(y);
        if (clean.empty()) rot.order.erase(v);
        else rot.order[v] = clean;
        for (auto& [x, lx] : rot.order) {
            if (x == v) continue;
            std::vector<Vertex> c2;
            VertexSet s2;
            for (Vertex y : lx)
                if (y != x && s2.insert(y).second) c2.push_back(y);
            lx = c2;
        }
        g = h;
    }
    res.graph = g;
    res.rotation = rot;
    res.genus = rotation_genus(g, rot);
    if (res.genus > res.genus_bound) throw std::logic_error("handle_merge: traced genus exceeds bound");
    return res;
}

}  // namespace surfmin

// Minimum-genus search over rotation systems.
//
// The search builds facial walks one dart at a time. Whenever a walk reaches a
// vertex whose rotation does not yet say where to go next, every admissible
// successor is tried, the one closing the current face first. A partial
// rotation at a vertex is a set of chains; a link that would close a chain
// before it holds all darts is rejected. The face bound assumes minimum degree
// two, which holds for the 2-connected blocks this is run on.
#include <algorithm>
#include <numeric>

#include "surfmin/embedding.hpp"

namespace surfmin {

namespace {

class RotationSearch {
public:
    RotationSearch(const Graph& g, const Deadline& dl) : dl_(dl) {
        ids_ = g.vertices();
        std::map<Vertex, int> idx;
        for (std::size_t i = 0; i < ids_.size(); ++i) idx[ids_[i]] = static_cast<int>(i);
        V_ = static_cast<int>(ids_.size());
        // Darts of high-degree vertices get the small indices so that new
        // faces start where the branching is widest.
        std::vector<int> byDeg(V_);
        std::iota(byDeg.begin(), byDeg.end(), 0);
        std::stable_sort(byDeg.begin(), byDeg.end(),
                         [&](int a, int b) { return g.degree(ids_[a]) > g.degree(ids_[b]); });
        out_.assign(V_, {});
        std::map<std::pair<int, int>, int> dart_id;
        for (int v : byDeg)
            for (Vertex w : g.neighbors(ids_[v])) {
                int d = static_cast<int>(tail_.size());
                tail_.push_back(v);
                head_.push_back(idx[w]);
                out_[v].push_back(d);
                dart_id[{v, idx[w]}] = d;
            }
        D_ = static_cast<int>(tail_.size());
        E_ = D_ / 2;
        rev_.resize(D_);
        for (int d = 0; d < D_; ++d) rev_[d] = dart_id[{head_[d], tail_[d]}];
        girth_ = std::max(3, girth(g));
        if (!byDeg.empty() && g.degree(ids_[byDeg[0]]) >= 3) {
            sym_v_ = byDeg[0];
            sym_a_ = out_[sym_v_][0];
            sym_b_ = out_[sym_v_][1];
            sym_c_ = out_[sym_v_][2];
        }
    }

    // 1 found, 0 exhausted, -1 timed out.
    int run(int target_faces, RotationSystem& out) {
        target_ = target_faces;
        succ_.assign(D_, -1);
        pred_.assign(D_, -1);
        cfirst_.resize(D_);
        clast_.resize(D_);
        clen_.assign(D_, 1);
        for (int d = 0; d < D_; ++d) cfirst_[d] = clast_[d] = d;
        traversed_.assign(D_, 0);
        closed_faces_ = closed_darts_ = 0;
        timeout_ = false;
        if (D_ == 0) return 1;
        if (!start_face()) return timeout_ ? -1 : 0;
        out.order.clear();
        for (int v = 0; v < V_; ++v) {
            std::vector<Vertex> l;
            if (out_[v].empty()) continue;
            int d = out_[v][0];
            do {
                l.push_back(ids_[head_[d]]);
                d = succ_[d];
            } while (d != out_[v][0]);
            out.order[ids_[v]] = l;
        }
        return 1;
    }

private:
    bool start_face() {
        int d = -1;
        for (int x = 0; x < D_; ++x)
            if (!traversed_[x]) {
                d = x;
                break;
            }
        if (d < 0) return closed_faces_ >= target_;
        int R = D_ - closed_darts_;
        if (closed_faces_ + R / girth_ < target_) return false;
        int saved_d0 = d0_, saved_cur = cur_, saved_len = len_;
        d0_ = cur_ = d;
        len_ = 1;
        traversed_[d] = 1;
        bool ok = step();
        traversed_[d] = 0;
        d0_ = saved_d0;
        cur_ = saved_cur;
        len_ = saved_len;
        return ok;
    }

    bool step() {
        if (dl_.poll()) {
            timeout_ = true;
            return false;
        }
        int x = rev_[cur_];
        if (succ_[x] >= 0) return advance(succ_[x]);
        int v = tail_[x];
        // Face-closing choice first.
        if (tail_[d0_] == v && pred_[d0_] < 0 && link(x, d0_)) {
            if (advance(d0_)) return true;
            unlink(x, d0_);
            if (timeout_) return false;
        }
        for (int b : out_[v]) {
            if (b == d0_ || pred_[b] >= 0 || b == x) continue;
            if (!link(x, b)) continue;
            if (advance(b)) return true;
            unlink(x, b);
            if (timeout_) return false;
        }
        return false;
    }

    bool advance(int nxt) {
        if (nxt == d0_) {
            ++closed_faces_;
            closed_darts_ += len_;
            bool ok = start_face();
            --closed_faces_;
            closed_darts_ -= len_;
            return ok;
        }
        traversed_[nxt] = 1;
        int saved_cur = cur_;
        cur_ = nxt;
        ++len_;
        int R = D_ - closed_darts_;
        int rest = R - std::max(len_, girth_);
        int maxF = closed_faces_ + 1 + (rest > 0 ? rest / girth_ : 0);
        bool ok = maxF >= target_ && step();
        --len_;
        cur_ = saved_cur;
        traversed_[nxt] = 0;
        return ok;
    }

    struct Saved {
        int e, s, first_e, last_s, len_s;
        bool closing;
    };

    bool link(int a, int b) {
        int v = tail_[a];
        int s = cfirst_[a];
        int e = clast_[b];
        bool closing = (s == b);
        if (closing && clen_[s] != static_cast<int>(out_[v].size())) return false;
        Saved sv{e, s, cfirst_[e], clast_[s], clen_[s], closing};
        succ_[a] = b;
        pred_[b] = a;
        if (!closing) {
            cfirst_[e] = s;
            clast_[s] = e;
            clen_[s] += clen_[b];
        } else if (v == sym_v_ && !orientation_ok()) {
            succ_[a] = -1;
            pred_[b] = -1;
            return false;
        }
        saved_.push_back(sv);
        return true;
    }

    void unlink(int a, int b) {
        Saved sv = saved_.back();
        saved_.pop_back();
        succ_[a] = -1;
        pred_[b] = -1;
        if (!sv.closing) {
            cfirst_[sv.e] = sv.first_e;
            clast_[sv.s] = sv.last_s;
            clen_[sv.s] = sv.len_s;
        }
    }

    // Mirror symmetry: fix the cyclic order of three darts at one vertex.
    bool orientation_ok() const {
        for (int d = succ_[sym_a_]; d != sym_a_; d = succ_[d]) {
            if (d == sym_b_) return true;
            if (d == sym_c_) return false;
        }
        return true;
    }

    const Deadline& dl_;
    std::vector<Vertex> ids_;
    int V_ = 0, E_ = 0, D_ = 0;
    std::vector<int> tail_, head_, rev_;
    std::vector<std::vector<int>> out_;
    std::vector<int> succ_, pred_, cfirst_, clast_, clen_;
    std::vector<char> traversed_;
    std::vector<Saved> saved_;
    int girth_ = 3;
    int target_ = 0;
    int closed_faces_ = 0, closed_darts_ = 0;
    int d0_ = -1, cur_ = -1, len_ = 0;
    int sym_v_ = -1, sym_a_ = -1, sym_b_ = -1, sym_c_ = -1;
    bool timeout_ = false;
};

RotationSystem tree_rotation(const Graph& g) {
    RotationSystem r;
    for (Vertex v : g.vertices()) r.order[v] = std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());
    return r;
}

// Block search on a 2-connected graph with genus in [lo, hi].
GenusResult search_range(const Graph& b, int lo, int hi, const Deadline& dl) {
    GenusResult res;
    RotationSearch rs(b, dl);
    const int V = static_cast<int>(b.num_vertices()), E = static_cast<int>(b.num_edges());
    for (int gam = lo; gam <= hi; ++gam) {
        RotationSystem rot;
        int r = rs.run(2 - 2 * gam - V + E, rot);
        if (r == 1) {
            res.status = GenusStatus::Exact;
            res.genus = rotation_genus(b, rot);
            res.rotation = rot;
            return res;
        }
        if (r == -1) {
            res.status = GenusStatus::Unknown;
            res.genus = gam;
            return res;
        }
    }
    res.status = GenusStatus::ExceedsBudget;
    res.genus = std::max(lo, hi + 1);
    return res;
}

// Shared driver: component by component, block by block.
GenusResult blockwise(const Graph& g, int budget, const Deadline& dl, std::vector<int>* parts) {
    GenusResult res;
    res.status = GenusStatus::Exact;
    BlockStructure bs = blocks(g);
    struct Item {
        Graph graph;
        int lb = 0;
        bool planar = true;
    };
    std::vector<Item> items;
    int lb_total = 0;
    for (const auto& e : bs.blocks) {
        Item it;
        it.graph = g.edge_subgraph(e);
        if (e.size() >= 3) {
            it.planar = is_planar(it.graph);
            if (!it.planar) it.lb = std::max(1, genus_lower_bound(it.graph));
        }
        lb_total += it.lb;
        items.push_back(std::move(it));
    }
    if (lb_total > budget) {
        res.status = GenusStatus::ExceedsBudget;
        res.genus = lb_total;
        return res;
    }
    int found = 0;
    int pending_lb = lb_total;
    std::vector<RotationSystem> rots;
    for (auto& it : items) {
        pending_lb -= it.lb;
        RotationSystem r;
        int gam = 0;
        if (it.graph.num_edges() == 1) {
            r = tree_rotation(it.graph);
        } else if (it.planar) {
            r = planarity(it.graph).rotation;
        } else {
            int room = budget - found - pending_lb;
            GenusResult sr = search_range(it.graph, it.lb, room, dl);
            if (!sr.exact()) {
                res.status = sr.status;
                res.genus = found + sr.genus + pending_lb;
                return res;
            }
            gam = sr.genus;
            r = sr.rotation;
        }
        found += gam;
        if (parts) parts->push_back(gam);
        rots.push_back(std::move(r));
    }
    // Splice block rotations at shared vertices; block sums are additive.
    for (Vertex v : g.vertices()) res.rotation.order[v];
    for (const auto& r : rots)
        for (const auto& [v, l] : r.order) {
            auto& dst = res.rotation.order[v];
            dst.insert(dst.end(), l.begin(), l.end());
        }
    for (auto it = res.rotation.order.begin(); it != res.rotation.order.end();)
        it = it->second.empty() ? res.rotation.order.erase(it) : std::next(it);
    res.genus = found;
    int traced = rotation_genus(g, res.rotation);
    if (traced != found) throw std::logic_error("min_genus: spliced rotation has unexpected genus");
    return res;
}

}  // namespace

int genus_lower_bound(const Graph& g) {
    const int E = static_cast<int>(g.num_edges());
    const int V = static_cast<int>(g.num_vertices());
    int gi = girth(g);
    if (gi == 0) return 0;
    int maxF = (2 * E) / gi;
    int twice = 2 - V + E - maxF;
    return twice <= 0 ? 0 : (twice + 1) / 2;
}

GenusResult connected_genus_search(const Graph& g, int budget, const Deadline& dl) {
    Graph core = two_core(g);
    GenusResult res;
    if (core.num_edges() == 0) {
        res.status = GenusStatus::Exact;
        res.rotation = tree_rotation(g);
        return res;
    }
    int lb = genus_lower_bound(core);
    if (lb > budget) {
        res.status = GenusStatus::ExceedsBudget;
        res.genus = lb;
        return res;
    }
    res = search_range(core, lb, budget, dl);
    if (!res.exact()) return res;
    // Hang the pruned trees back on; tree edges never change the genus.
    for (const auto& [u, v] : g.edges())
        if (!core.has_edge(u, v)) {
            res.rotation.order[u].push_back(v);
            res.rotation.order[v].push_back(u);
        }
    return res;
}

GenusResult min_genus(const Graph& g, int budget, const Deadline& dl) {
    GenusResult res = blockwise(g, budget, dl, nullptr);
    return res;
}

GenusResult genus_additivity(const Graph& g, int budget, const Deadline& dl) {
    std::vector<int> parts;
    return blockwise(g, budget, dl, &parts);
}

}  // namespace surfmin

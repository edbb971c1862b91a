#include "surfmin/minor.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <optional>

#include "surfmin/embedding.hpp"

namespace surfmin {

VertexSet MinorModel::support() const {
    VertexSet s;
    for (const auto& [_, b] : branch_sets) s.insert(b.begin(), b.end());
    return s;
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "not-found";
        case SearchStatus::Timeout: return "timeout";
    }
    return "?";
}

// verification -------------------------------------------------------------

ModelReport verify_model(const Graph& g, const Graph& h, const MinorModel& m) {
    ModelReport r;
    auto bad = [&](std::string s) {
        r.ok = false;
        r.violations.push_back(std::move(s));
    };
    std::map<Vertex, Vertex> owner;
    for (Vertex p : h.vertices()) {
        auto it = m.branch_sets.find(p);
        if (it == m.branch_sets.end() || it->second.empty()) {
            bad("missing branch set for pattern vertex " + std::to_string(p));
            continue;
        }
        for (Vertex x : it->second) {
            if (!g.has_vertex(x)) bad("branch set of " + std::to_string(p) + " uses unknown host vertex " + std::to_string(x));
            auto [o, fresh] = owner.emplace(x, p);
            if (!fresh) bad("disjointness: host vertex " + std::to_string(x) + " in branch sets of " +
                            std::to_string(o->second) + " and " + std::to_string(p));
        }
        // connectivity inside the branch set
        const VertexSet& b = it->second;
        VertexSet seen{*b.begin()};
        std::deque<Vertex> q{*b.begin()};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x))
                if (b.count(y) && seen.insert(y).second) q.push_back(y);
        }
        if (seen.size() != b.size()) bad("connectivity: branch set of " + std::to_string(p) + " is disconnected");
    }
    for (const auto& [p, _] : m.branch_sets)
        if (!h.has_vertex(p)) bad("branch set for unknown pattern vertex " + std::to_string(p));
    for (const auto& [p, q] : h.edges()) {
        auto it = m.connect_edges.find({p, q});
        if (it == m.connect_edges.end()) {
            bad("no connecting edge for pattern edge " + std::to_string(p) + "-" + std::to_string(q));
            continue;
        }
        auto [x, y] = it->second;
        if (!g.has_edge(x, y)) {
            bad("connecting edge " + std::to_string(x) + "-" + std::to_string(y) + " not in host");
            continue;
        }
        auto in = [&](Vertex v, Vertex pv) {
            auto bs = m.branch_sets.find(pv);
            return bs != m.branch_sets.end() && bs->second.count(v);
        };
        if (!((in(x, p) && in(y, q)) || (in(x, q) && in(y, p))))
            bad("connecting edge for " + std::to_string(p) + "-" + std::to_string(q) + " misses the branch sets");
    }
    return r;
}

ModelReport verify_marked_model(const MarkedGraph& g, const MarkedGraph& h, const MinorModel& m) {
    ModelReport r = verify_model(g.graph, h.graph, m);
    for (Vertex p : h.marked) {
        auto it = m.branch_sets.find(p);
        bool hit = false;
        if (it != m.branch_sets.end())
            for (Vertex x : it->second) hit = hit || g.marked.count(x);
        if (!hit) {
            r.ok = false;
            r.violations.push_back("marking: branch set of marked vertex " + std::to_string(p) + " has no marked host vertex");
        }
    }
    return r;
}

MinorModel complete_model(const Graph& g, const Graph& h, std::map<Vertex, VertexSet> sets) {
    MinorModel m;
    m.branch_sets = std::move(sets);
    for (const auto& [p, q] : h.edges()) {
        auto ip = m.branch_sets.find(p), iq = m.branch_sets.find(q);
        if (ip == m.branch_sets.end() || iq == m.branch_sets.end())
            throw std::logic_error("complete_model: missing branch set");
        std::optional<Edge> best;
        for (Vertex a : ip->second)
            for (Vertex b : g.neighbors(a))
                if (iq->second.count(b)) {
                    Edge e = make_edge(a, b);
                    if (!best || e < *best) best = e;
                }
        if (!best)
            throw std::logic_error("complete_model: no host edge for pattern edge " + std::to_string(p) + "-" +
                                   std::to_string(q));
        m.connect_edges[{p, q}] = *best;
    }
    return m;
}

MinorModel compose_models(const MinorModel& h_in_g, const MinorModel& g_in_f) {
    MinorModel out;
    for (const auto& [p, b] : h_in_g.branch_sets) {
        VertexSet s;
        for (Vertex x : b) {
            auto it = g_in_f.branch_sets.find(x);
            if (it != g_in_f.branch_sets.end()) s.insert(it->second.begin(), it->second.end());
        }
        out.branch_sets[p] = s;
    }
    // an h-edge is realised by a g-edge, which g_in_f realises by an f-edge
    for (const auto& [pe, ge] : h_in_g.connect_edges) {
        auto it = g_in_f.connect_edges.find(make_edge(ge.first, ge.second));
        if (it != g_in_f.connect_edges.end()) out.connect_edges[pe] = it->second;
    }
    return out;
}

Graph disjoint_copies(const Graph& h, int n) {
    Graph out;
    Vertex off = copy_offset(h);
    for (int c = 0; c < n; ++c) out = disjoint_union(out, h, c * off);
    return out;
}

Vertex copy_offset(const Graph& h) { return h.max_vertex() + 1; }

// search -------------------------------------------------------------------

namespace {

constexpr int kMaxHost = 192;
using Bits = std::bitset<kMaxHost>;

int first_bit(const Bits& b) { return static_cast<int>(b._Find_first()); }

class BranchSearch {
public:
    BranchSearch(const Graph& g, const Graph& h, const MeetConstraints& meet, const Deadline& dl) : dl_(dl) {
        hids_ = g.vertices();
        if (hids_.size() > static_cast<std::size_t>(kMaxHost))
            throw std::invalid_argument("find_minor: host too large for the search kernel");
        std::map<Vertex, int> hidx;
        for (std::size_t i = 0; i < hids_.size(); ++i) hidx[hids_[i]] = static_cast<int>(i);
        n_ = static_cast<int>(hids_.size());
        nb_.assign(n_, Bits());
        for (const auto& [u, v] : g.edges()) {
            nb_[hidx[u]].set(hidx[v]);
            nb_[hidx[v]].set(hidx[u]);
        }
        all_.reset();
        for (int i = 0; i < n_; ++i) all_.set(i);

        pids_ = h.vertices();
        std::map<Vertex, int> pidx;
        for (std::size_t i = 0; i < pids_.size(); ++i) pidx[pids_[i]] = static_cast<int>(i);
        k_ = static_cast<int>(pids_.size());
        padj_.assign(k_, {});
        for (const auto& [p, q] : h.edges()) {
            padj_[pidx[p]].push_back(pidx[q]);
            padj_[pidx[q]].push_back(pidx[p]);
        }
        allowed_.assign(k_, all_);
        constrained_.assign(k_, false);
        for (const auto& [p, s] : meet) {
            auto it = pidx.find(p);
            if (it == pidx.end()) continue;
            Bits b;
            for (Vertex x : s)
                if (hidx.count(x)) b.set(hidx[x]);
            allowed_[it->second] = b;
            constrained_[it->second] = true;
        }
        build_order();
    }

    // Iterative deepening on the branch-set size cap.
    SearchStatus run(MinorModel& out) {
        for (int p = 0; p < k_; ++p)
            if (constrained_[p] && allowed_[p].none()) return SearchStatus::NotFound;
        if (k_ == 0) return SearchStatus::Found;
        if (k_ > n_) return SearchStatus::NotFound;
        const int max_cap = n_ - k_ + 1;
        for (int cap = 1; cap <= max_cap; ++cap) {
            cap_ = cap;
            limited_ = false;
            timeout_ = false;
            B_.assign(k_, Bits());
            NB_.assign(k_, Bits());
            placed_.assign(k_, false);
            used_.reset();
            if (place(0)) {
                emit(out);
                return SearchStatus::Found;
            }
            if (timeout_) return SearchStatus::Timeout;
            if (!limited_) return SearchStatus::NotFound;
        }
        return SearchStatus::NotFound;
    }

private:
    void build_order() {
        std::vector<bool> in(k_, false);
        std::vector<int> placed_nbrs(k_, 0);
        for (int step = 0; step < k_; ++step) {
            int best = -1;
            auto key = [&](int p) {
                bool pin = constrained_[p] && allowed_[p].count() <= 2;
                return std::make_tuple(pin ? 1 : 0, placed_nbrs[p], static_cast<int>(padj_[p].size()), -p);
            };
            for (int p = 0; p < k_; ++p)
                if (!in[p] && (best < 0 || key(p) > key(best))) best = p;
            in[best] = true;
            order_.push_back(best);
            for (int q : padj_[best]) ++placed_nbrs[q];
        }
    }

    bool place(int idx) {
        if (idx == k_) return true;
        if (dl_.poll()) {
            timeout_ = true;
            return false;
        }
        const int p = order_[idx];
        placed_nb_.clear();
        for (int q : padj_[p])
            if (placed_[q]) placed_nb_.push_back(q);
        Bits free = all_ & ~used_;
        Bits roots = free;
        if (!placed_nb_.empty()) {
            // touch the placed neighbour with the smallest free frontier
            int q0 = placed_nb_[0];
            for (int q : placed_nb_)
                if ((NB_[q] & free).count() < (NB_[q0] & free).count()) q0 = q;
            roots &= NB_[q0];
        }
        if (constrained_[p] && (allowed_[p] & free).count() < roots.count()) roots = allowed_[p] & free;
        std::vector<int> nbq = placed_nb_;
        Bits forbidden;
        for (int r = first_bit(roots); r < n_; r = static_cast<int>(roots._Find_next(r))) {
            Bits S;
            S.set(r);
            Bits ext = nb_[r] & free & ~forbidden;
            ext.reset(r);
            if (grow(idx, p, nbq, S, nb_[r], ext, forbidden | S, 1)) return true;
            if (timeout_) return false;
            forbidden.set(r);
        }
        return false;
    }

    // Connected-set enumeration: every set containing S, avoiding `excl`,
    // grown from the ordered candidate pool `ext`.
    bool grow(int idx, int p, const std::vector<int>& nbq, const Bits& S, const Bits& NS, Bits ext, Bits excl, int size) {
        if (try_set(idx, p, nbq, S, NS)) return true;
        if (timeout_) return false;
        if (size >= cap_) {
            if (ext.any()) limited_ = true;
            return false;
        }
        Bits free = all_ & ~used_;
        while (ext.any()) {
            int v = first_bit(ext);
            ext.reset(v);
            Bits S2 = S;
            S2.set(v);
            Bits excl2 = excl;
            excl2.set(v);
            Bits ext2 = ext | (nb_[v] & free & ~excl2 & ~S2);
            if (grow(idx, p, nbq, S2, NS | nb_[v], ext2, excl2 | ext, size + 1)) return true;
            if (timeout_) return false;
            excl.set(v);
        }
        return false;
    }

    bool try_set(int idx, int p, const std::vector<int>& nbq, const Bits& S, const Bits& NS) {
        if (dl_.poll()) {
            timeout_ = true;
            return false;
        }
        for (int q : nbq)
            if ((NS & B_[q]).none()) return false;
        if (constrained_[p] && (S & allowed_[p]).none()) return false;
        B_[p] = S;
        NB_[p] = NS & ~S;
        placed_[p] = true;
        used_ |= S;
        bool ok = feasible(idx + 1) && place(idx + 1);
        if (!ok) {
            used_ &= ~S;
            placed_[p] = false;
        }
        return ok;
    }

    bool feasible(int next_idx) {
        Bits free = all_ & ~used_;
        int remaining = k_ - next_idx;
        if (static_cast<int>(free.count()) < remaining) return false;
        if (remaining == 0) return true;
        for (int q = 0; q < k_; ++q) {
            if (!placed_[q]) continue;
            int need = 0;
            for (int r : padj_[q])
                if (!placed_[r]) ++need;
            if (need && static_cast<int>((NB_[q] & free).count()) < need) return false;
        }
        // components of the free part
        std::vector<Bits> comps;
        Bits left = free;
        while (left.any()) {
            int s = first_bit(left);
            Bits c;
            c.set(s);
            Bits frontier = c;
            while (frontier.any()) {
                Bits nxt;
                for (int v = first_bit(frontier); v < n_; v = static_cast<int>(frontier._Find_next(v))) nxt |= nb_[v];
                nxt &= free & ~c;
                c |= nxt;
                frontier = nxt;
            }
            comps.push_back(c);
            left &= ~c;
        }
        for (int r = 0; r < k_; ++r) {
            if (placed_[r]) continue;
            bool has_placed = false;
            for (int q : padj_[r]) has_placed = has_placed || placed_[q];
            if (!has_placed && !constrained_[r]) continue;
            bool ok = false;
            for (const Bits& c : comps) {
                bool good = true;
                for (int q : padj_[r])
                    if (placed_[q] && (c & NB_[q]).none()) {
                        good = false;
                        break;
                    }
                if (good && constrained_[r] && (c & allowed_[r]).none()) good = false;
                if (good) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    void emit(MinorModel& out) const {
        out = MinorModel();
        for (int p = 0; p < k_; ++p) {
            VertexSet s;
            for (int v = first_bit(B_[p]); v < n_; v = static_cast<int>(B_[p]._Find_next(v))) s.insert(hids_[v]);
            out.branch_sets[pids_[p]] = s;
        }
        for (int p = 0; p < k_; ++p)
            for (int q : padj_[p]) {
                if (pids_[p] > pids_[q]) continue;
                bool done = false;
                for (int x = first_bit(B_[p]); x < n_ && !done; x = static_cast<int>(B_[p]._Find_next(x))) {
                    Bits hit = nb_[x] & B_[q];
                    if (hit.any()) {
                        out.connect_edges[{pids_[p], pids_[q]}] = make_edge(hids_[x], hids_[first_bit(hit)]);
                        done = true;
                    }
                }
            }
    }

    const Deadline& dl_;
    std::vector<Vertex> hids_, pids_;
    int n_ = 0, k_ = 0;
    std::vector<Bits> nb_;
    Bits all_;
    std::vector<std::vector<int>> padj_;
    std::vector<Bits> allowed_;
    std::vector<bool> constrained_;
    std::vector<int> order_;
    std::vector<Bits> B_, NB_;
    std::vector<bool> placed_;
    Bits used_;
    int cap_ = 1;
    bool limited_ = false, timeout_ = false;
    std::vector<int> placed_nb_;
};

SearchStatus search_in(const Graph& g, const Graph& h, const MeetConstraints& meet, const Deadline& dl,
                       MinorModel& out) {
    if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges()) return SearchStatus::NotFound;
    BranchSearch bs(g, h, meet, dl);
    return bs.run(out);
}

}  // namespace

MinorSearchResult find_minor(const Graph& g, const Graph& h, const Deadline& dl, const MeetConstraints& meet) {
    MinorSearchResult res;
    if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges()) {
        res.status = SearchStatus::NotFound;
        return res;
    }
    if (h.num_vertices() == 0) {
        res.status = SearchStatus::Found;
        return res;
    }
    if (h.num_vertices() >= 5 && !is_planar(h) && is_planar(g)) {
        res.status = SearchStatus::NotFound;
        return res;
    }
    // Connected patterns live in one component, 2-connected ones in one block.
    // A meet constraint can pull a branch set through a cut vertex, so blocks
    // only apply to unconstrained searches.
    std::vector<VertexSet> parts;
    if (is_two_connected(h) && meet.empty()) {
        for (const auto& b : blocks(g).block_vertices()) parts.push_back(b);
    } else if (is_connected(h)) {
        parts = connected_components(g);
    } else {
        parts.push_back(g.vertex_set());
    }
    bool timed_out = false;
    for (const auto& part : parts) {
        if (part.size() < h.num_vertices()) continue;
        Graph sub = part.size() == g.num_vertices() ? g : g.induced(part);
        if (sub.num_edges() < h.num_edges()) continue;
        MeetConstraints local;
        bool impossible = false;
        for (const auto& [p, s] : meet) {
            VertexSet t;
            for (Vertex x : s)
                if (part.count(x)) t.insert(x);
            if (t.empty() && h.has_vertex(p)) impossible = true;
            local[p] = t;
        }
        if (impossible) continue;
        MinorModel m;
        SearchStatus st = search_in(sub, h, local, dl, m);
        if (st == SearchStatus::Found) {
            ModelReport rep = verify_model(g, h, m);
            if (!rep.ok) throw std::logic_error("find_minor produced an invalid model: " + rep.violations.front());
            res.status = SearchStatus::Found;
            res.model = m;
            return res;
        }
        if (st == SearchStatus::Timeout) {
            timed_out = true;
            break;
        }
    }
    res.status = timed_out ? SearchStatus::Timeout : SearchStatus::NotFound;
    return res;
}

MinorSearchResult find_marked_minor(const MarkedGraph& g, const MarkedGraph& h, const Deadline& dl) {
    MeetConstraints meet;
    for (Vertex p : h.marked) meet[p] = g.marked;
    MinorSearchResult r = find_minor(g.graph, h.graph, dl, meet);
    if (r.found()) {
        ModelReport rep = verify_marked_model(g, h, r.model);
        if (!rep.ok) throw std::logic_error("find_marked_minor produced an invalid model");
    }
    return r;
}

PackResult pack_disjoint(const Graph& g, const Graph& h, int n, const Deadline& dl) {
    PackResult res;
    if (n <= 0) {
        res.status = SearchStatus::Found;
        return res;
    }
    // greedy pass
    VertexSet used;
    while (static_cast<int>(res.models.size()) < n) {
        MinorSearchResult r = find_minor(g.without_vertices(used), h, dl);
        if (!r.found()) break;
        VertexSet s = r.model.support();
        used.insert(s.begin(), s.end());
        res.models.push_back(r.model);
    }
    if (static_cast<int>(res.models.size()) >= n) {
        res.status = SearchStatus::Found;
        return res;
    }
    // exhaustive pass on n disjoint copies
    Graph nh = disjoint_copies(h, n);
    MinorSearchResult r = find_minor(g, nh, dl);
    if (r.found()) {
        Vertex off = copy_offset(h);
        std::vector<MinorModel> ms(n);
        for (const auto& [p, b] : r.model.branch_sets) ms[p / off].branch_sets[p % off] = b;
        for (const auto& [e, he] : r.model.connect_edges)
            ms[e.first / off].connect_edges[{e.first % off, e.second % off}] = he;
        res.models = ms;
        res.status = SearchStatus::Found;
        return res;
    }
    res.status = r.status;
    return res;
}

BouquetResult pack_bouquet(const Graph& g, const Graph& h, Vertex hub, int n, const Deadline& dl) {
    BouquetResult res;
    if (!h.has_vertex(hub)) throw std::invalid_argument("pack_bouquet: hub is not a pattern vertex");
    std::vector<Vertex> cands = g.vertices();
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    // greedy pass per candidate hub
    for (Vertex c : cands) {
        if (dl.expired()) break;
        std::vector<MinorModel> ms;
        VertexSet used;
        while (static_cast<int>(ms.size()) < n) {
            Graph rest = g.without_vertices(used);
            MinorSearchResult r = find_minor(rest, h, dl.capped(2.0), {{hub, {c}}});
            if (!r.found()) break;
            VertexSet s = r.model.support();
            s.erase(c);
            used.insert(s.begin(), s.end());
            ms.push_back(r.model);
        }
        if (static_cast<int>(ms.size()) >= n) {
            res.status = SearchStatus::Found;
            res.hub_host = c;
            res.models = ms;
            return res;
        }
    }
    // exhaustive pass: split the candidate into n private copies
    Vertex off = copy_offset(h);
    Graph nh = disjoint_copies(h, n);
    bool timed_out = false;
    for (Vertex c : cands) {
        if (g.degree(c) < static_cast<std::size_t>(n)) continue;
        Graph split = g.without_vertices({c});
        Vertex base = g.max_vertex() + 1;
        MeetConstraints meet;
        for (int i = 0; i < n; ++i) {
            split.add_vertex(base + i);
            for (Vertex w : g.neighbors(c)) split.add_edge(base + i, w);
            meet[i * off + hub] = {base + i};
        }
        MinorSearchResult r = find_minor(split, nh, dl, meet);
        if (r.status == SearchStatus::Timeout) {
            timed_out = true;
            break;
        }
        if (!r.found()) continue;
        auto back = [&](Vertex x) { return x >= base ? c : x; };
        std::vector<MinorModel> ms(n);
        for (const auto& [p, b] : r.model.branch_sets) {
            VertexSet s;
            for (Vertex x : b) s.insert(back(x));
            ms[p / off].branch_sets[p % off] = s;
        }
        for (const auto& [e, he] : r.model.connect_edges)
            ms[e.first / off].connect_edges[{e.first % off, e.second % off}] = make_edge(back(he.first), back(he.second));
        res.status = SearchStatus::Found;
        res.hub_host = c;
        res.models = ms;
        return res;
    }
    res.status = timed_out ? SearchStatus::Timeout : SearchStatus::NotFound;
    return res;
}

}  // namespace surfmin

#include "coverideal/covers.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

#include "coverideal/chordal.hpp"
#include "coverideal/memo.hpp"

namespace coverideal {

cover_family minimal_covers_bruteforce(const graph& g) {
    if (g.n > 20)
        throw std::invalid_argument("minimal_covers_bruteforce: capped at 20 vertices");
    cover_family fam;
    fam.n = g.n;
    const std::uint64_t limit = std::uint64_t{1} << g.n;
    for (std::uint64_t m = 0; m < limit; ++m) {
        vertex_set indep(m);
        bool ok = true;
        for (int v : indep)
            if (g.adj(v).intersects(indep)) { ok = false; break; }
        if (!ok) continue;
        // maximal: every outside vertex sees the set
        for (int u : g.vertices() - indep)
            if (!g.adj(u).intersects(indep)) { ok = false; break; }
        if (ok) fam.covers.push_back(indep.complement_in(g.vertices()));
    }
    std::sort(fam.covers.begin(), fam.covers.end(), canonical_less);
    return fam;
}

cover_cache::cover_cache(const graph& g) : g_(&g), cap_(memo_cap_from_env()) {
    require_chordal(g);
}

std::vector<vertex_set> cover_cache::covers(vertex_set active) {
    if (auto it = memo_.find(active.bits); it != memo_.end()) return it->second;

    std::vector<vertex_set> out;
    if (!g_->has_edge_within(active)) {
        out.push_back(vertex_set{});
    } else {
        int v = -1;
        for (int u : active)
            if (g_->is_clique(g_->adj_in(u, active))) { v = u; break; }
        if (v < 0) throw not_chordal_error(active.lowest());  // unreachable after the ctor check
        vertex_set w = g_->adj_in(v, active);
        for (vertex_set a : covers(active - g_->closed_in(v, active)))
            out.push_back(w | a);
        for (vertex_set b : covers(active.without(v)))
            if (!w.subset_of(b)) out.push_back(b.with(v));
        std::sort(out.begin(), out.end(), canonical_less);
    }
    if (memo_.size() < cap_) memo_.emplace(active.bits, out);
    return out;
}

cover_family minimal_covers_recursive(const graph& g) {
    cover_cache cache(g);
    return cover_family{g.n, cache.covers(g.vertices())};
}

simplicial_complex independence_complex(const graph& g) {
    std::vector<vertex_set> co_adj(g.n);
    for (int v = 0; v < g.n; ++v)
        co_adj[v] = g.vertices().without(v) - g.adj(v);
    return simplicial_complex{g.n, maximal_cliques(g.n, co_adj)};
}

int induced_matching_number(const graph& g) {
    if (g.n > 20)
        throw std::invalid_argument("induced_matching_number: capped at 20 vertices");
    auto edges = g.edge_list();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return 0;

    using edge_mask = std::bitset<192>;
    std::vector<edge_mask> compat(m);
    for (int i = 0; i < m; ++i) {
        vertex_set ei = vertex_set::single(edges[i].first).with(edges[i].second);
        vertex_set reach = ei | g.adj(edges[i].first) | g.adj(edges[i].second);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            vertex_set ej = vertex_set::single(edges[j].first).with(edges[j].second);
            if (!reach.intersects(ej)) compat[i].set(j);
        }
    }

    int best = 0;
    // max-clique style search on the compatibility relation
    auto rec = [&](auto&& self, edge_mask avail, int chosen) -> void {
        best = std::max(best, chosen);
        while (avail.any()) {
            if (chosen + static_cast<int>(avail.count()) <= best) return;
            int e = static_cast<int>(avail._Find_first());
            avail.reset(e);
            self(self, avail & compat[e], chosen + 1);
        }
    };
    edge_mask all;
    for (int i = 0; i < m; ++i) all.set(i);
    rec(rec, all, 0);
    return best;
}

} // namespace coverideal

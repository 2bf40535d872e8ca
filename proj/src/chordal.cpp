#include "coverideal/chordal.hpp"

#include <algorithm>

namespace coverideal {

std::vector<int> mcs_order(const graph& g) {
    std::vector<int> count(g.n, 0), order;
    order.reserve(g.n);
    vertex_set unvisited = g.vertices();
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v : unvisited)
            if (best == -1 || count[v] > count[best]) best = v;  // ties: lowest index wins
        order.push_back(best);
        unvisited = unvisited.without(best);
        for (int u : g.adj(best) & unvisited) ++count[u];
    }
    return order;
}

chordality_result elimination_ordering(const graph& g) {
    chordality_result res;
    res.order = mcs_order(g);
    std::reverse(res.order.begin(), res.order.end());
    vertex_set remaining = g.vertices();
    for (int v : res.order) {
        remaining = remaining.without(v);
        if (!g.is_clique(g.adj(v) & remaining)) {
            res.chordal = false;
            res.witness = v;
            return res;
        }
    }
    res.chordal = true;
    return res;
}

bool is_chordal(const graph& g) { return elimination_ordering(g).chordal; }

void require_chordal(const graph& g) {
    auto res = elimination_ordering(g);
    if (!res.chordal) throw not_chordal_error(res.witness);
}

vertex_set simplicial_vertices_in(const graph& g, vertex_set active) {
    vertex_set out;
    for (int v : active)
        if (g.is_clique(g.adj_in(v, active))) out |= vertex_set::single(v);
    return out;
}

vertex_set simplicial_vertices(const graph& g) {
    return simplicial_vertices_in(g, g.vertices());
}

namespace {

void bron_kerbosch(const std::vector<vertex_set>& adj, vertex_set r, vertex_set p, vertex_set x,
                   std::vector<vertex_set>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot: member of P ∪ X with the most neighbours in P
    int pivot = -1, best = -1;
    for (int u : p | x) {
        int deg = (adj[u] & p).count();
        if (deg > best) { best = deg; pivot = u; }
    }
    for (int v : p - adj[pivot]) {
        bron_kerbosch(adj, r.with(v), p & adj[v], x & adj[v], out);
        p = p.without(v);
        x = x.with(v);
    }
}

} // namespace

std::vector<vertex_set> maximal_cliques(int n, const std::vector<vertex_set>& adj) {
    std::vector<vertex_set> out;
    if (n == 0) return out;
    bron_kerbosch(adj, vertex_set{}, vertex_set::full(n), vertex_set{}, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

simplicial_complex clique_complex_facets(const graph& g) {
    return simplicial_complex{g.n, maximal_cliques(g.n, g.nbr)};
}

unmixed_result unmixed_certificate(const graph& g) {
    require_chordal(g);
    auto facets = clique_complex_facets(g).facets;
    std::vector<int> membership(g.n, 0);
    for (const auto& f : facets)
        for (int v : f) ++membership[v];

    unmixed_result res;
    for (const auto& f : facets) {
        bool has_free = false;
        for (int v : f)
            if (membership[v] == 1) { has_free = true; break; }
        if (has_free) res.free_facets.push_back(f);
    }
    vertex_set covered;
    bool disjoint = true;
    for (const auto& f : res.free_facets) {
        if (covered.intersects(f)) disjoint = false;
        covered |= f;
    }
    res.unmixed = disjoint && covered == g.vertices();
    return res;
}

} // namespace coverideal

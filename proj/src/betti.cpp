#include "coverideal/betti.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "coverideal/chordal.hpp"
#include "coverideal/memo.hpp"

namespace coverideal {

void betti_table::add(int i, int j, long long v) {
    if (v == 0) return;
    auto key = std::make_pair(i, j);
    long long& slot = entries[key];
    slot += v;
    // no explicit zeros, so operator== compares tables entrywise
    if (slot == 0) entries.erase(key);
}

long long betti_table::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

long long betti_table::total(int i) const {
    long long s = 0;
    for (const auto& [key, v] : entries)
        if (key.first == i) s += v;
    return s;
}

std::map<int, long long> betti_table::totals() const {
    std::map<int, long long> t;
    for (const auto& [key, v] : entries) t[key.first] += v;
    return t;
}

int betti_table::pd() const {
    int m = 0;
    for (const auto& [key, v] : entries) {
        (void)v;
        m = std::max(m, key.first);
    }
    return m;
}

int betti_table::reg() const {
    int m = 0;
    for (const auto& [key, v] : entries) {
        (void)v;
        m = std::max(m, key.second - key.first);
    }
    return m;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    // r * (n-k+t) is always divisible by t, so the division is exact
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

betti_table betti_from_ordering(const monomial_ordering& o) {
    std::vector<int> counts = colon_counts(o);
    betti_table tbl;
    for (std::size_t p = 0; p < o.gens.size(); ++p) {
        int d = o.gens[p].count();
        for (int i = 0; i <= counts[p]; ++i) tbl.add(i, i + d, binomial(counts[p], i));
    }
    return tbl;
}

namespace {

// simplicial vertices that have a neighbour inside the active set; nonempty
// whenever the active subgraph is chordal with at least one edge
vertex_set pivot_candidates(const graph& g, vertex_set active) {
    vertex_set out{};
    for (int v : simplicial_vertices_in(g, active))
        if (!g.adj_in(v, active).empty()) out |= vertex_set::single(v);
    return out;
}

// The clique step both recursions share: pivot on a simplicial x1, then for
// every member x_t of the clique N[x1] record the deleted graph
// H_t = active ∖ N[x_t] and the shift D_t = deg(x_t).
struct pivot_step {
    std::vector<vertex_set> minors;
    std::vector<int> shifts;
};

pivot_step make_step(const graph& g, const pivot_rule& rule, vertex_set active) {
    int x1 = rule.pick(g, active, pivot_candidates(g, active));
    pivot_step st;
    auto push = [&](int t) {
        st.minors.push_back(active - g.closed_in(t, active));
        st.shifts.push_back(g.adj_in(t, active).count());
    };
    push(x1);
    for (int v : g.adj_in(x1, active)) push(v);
    return st;
}

struct graded_engine {
    const graph& g;
    const pivot_rule& rule;
    cover_cache& cache;
    std::unordered_map<std::uint64_t, betti_table> memo;
    std::size_t cap;

    // active always has at least one edge; edgeless minors never recurse,
    // they enter through the formal table {b_{0,0} = 1} below
    betti_table run(vertex_set active) {
        auto it = memo.find(active.bits);
        if (it != memo.end()) return it->second;
        betti_table tbl;
        for (vertex_set c : cache.covers(active)) tbl.add(0, c.count(), 1);
        pivot_step st = make_step(g, rule, active);
        for (std::size_t t = 0; t < st.minors.size(); ++t) {
            betti_table sub;
            if (g.has_edge_within(st.minors[t])) sub = run(st.minors[t]);
            else sub.add(0, 0, 1);
            int d = st.shifts[t];
            for (const auto& [key, v] : sub.entries) {
                auto [p, s] = key;
                // row 0 comes from the cover histogram, not the first sum
                if (p >= 1) tbl.add(p, s + d, v);
                // the second sum lifts homological and internal degree together
                if (t >= 1) tbl.add(p + 1, s + d + 1, v);
            }
        }
        if (memo.size() < cap) memo.emplace(active.bits, tbl);
        return tbl;
    }
};

struct total_engine {
    const graph& g;
    const pivot_rule& rule;
    cover_cache& cache;
    std::unordered_map<std::uint64_t, std::vector<long long>> memo;
    std::size_t cap;

    std::vector<long long> run(vertex_set active) {
        auto it = memo.find(active.bits);
        if (it != memo.end()) return it->second;
        std::vector<long long> b{static_cast<long long>(cache.covers(active).size())};
        pivot_step st = make_step(g, rule, active);
        for (std::size_t t = 0; t < st.minors.size(); ++t) {
            std::vector<long long> sub;
            if (g.has_edge_within(st.minors[t])) sub = run(st.minors[t]);
            else sub = {1};  // formal edgeless value b_0 = 1
            std::size_t need = sub.size() + (t >= 1 ? 1 : 0);
            if (b.size() < need) b.resize(need, 0);
            for (std::size_t p = 0; p < sub.size(); ++p) {
                if (p >= 1) b[p] += sub[p];
                if (t >= 1) b[p + 1] += sub[p];
            }
        }
        if (memo.size() < cap) memo.emplace(active.bits, b);
        return b;
    }
};

} // namespace

betti_table graded_recursive(const graph& g, const pivot_rule& rule) {
    cover_cache cache(g);  // checks chordality
    if (g.edge_count() == 0) {
        // the cover ideal is generated by the empty monomial
        betti_table tbl;
        tbl.add(0, 0, 1);
        return tbl;
    }
    graded_engine eng{g, rule, cache, {}, memo_cap_from_env()};
    return eng.run(g.vertices());
}

std::map<int, long long> total_recursive(const graph& g, const pivot_rule& rule) {
    cover_cache cache(g);
    if (g.edge_count() == 0) return {{0, 1}};
    total_engine eng{g, rule, cache, {}, memo_cap_from_env()};
    std::vector<long long> b = eng.run(g.vertices());
    std::map<int, long long> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) out[static_cast<int>(i)] = b[i];
    return out;
}

graph_invariants invariants(const graph& g) {
    require_chordal(g);
    if (g.edge_count() == 0)
        throw std::invalid_argument("invariants need a graph with at least one edge");
    std::map<int, long long> t = total_recursive(g);
    graph_invariants r;
    r.b0 = t.at(0);
    r.pd = t.rbegin()->first;
    r.im = induced_matching_number(g);
    if (r.pd != r.im)
        throw std::logic_error("internal inconsistency: proj dim " + std::to_string(r.pd) +
                               " != induced matching number " + std::to_string(r.im));
    r.reg_edge_ideal = r.pd + 1;
    return r;
}

std::optional<unmixed_1dim_result> unmixed_1dim_betti(const graph& g) {
    if (!is_chordal(g)) return std::nullopt;
    if (!unmixed_certificate(g).unmixed) return std::nullopt;
    simplicial_complex ind = independence_complex(g);
    for (vertex_set f : ind.facets)
        if (f.count() != 2) return std::nullopt;  // not pure of dimension 1
    unmixed_1dim_result r;
    r.b0 = static_cast<long long>(ind.facets.size());
    r.b1 = 2 * r.b0 - g.n;
    r.b2 = r.b0 - g.n + 1;
    return r;
}

} // namespace coverideal

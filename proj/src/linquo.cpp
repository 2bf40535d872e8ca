#include "coverideal/linquo.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "coverideal/chordal.hpp"
#include "coverideal/memo.hpp"

namespace coverideal {

int pivot_rule::pick(const graph& g, vertex_set active, vertex_set candidates) const {
    assert(!candidates.empty());
    switch (k) {
    case kind::min_index:
        return candidates.lowest();
    case kind::max_index:
        return candidates.highest();
    case kind::max_degree: {
        int best = -1;
        for (int v : candidates)
            if (best < 0 || g.adj_in(v, active).count() > g.adj_in(best, active).count())
                best = v;
        return best;  // ties fall to the lowest index
    }
    case kind::priority_list: {
        int best = -1, best_pos = g.n + 1;
        for (int v : candidates) {
            auto it = std::find(prefs.begin(), prefs.end(), v);
            int pos = static_cast<int>(it - prefs.begin());
            if (pos < best_pos) { best_pos = pos; best = v; }
        }
        return best;
    }
    }
    return candidates.lowest();
}

std::vector<int> pivot_rule::ranked(const graph& g, vertex_set active, vertex_set s) const {
    std::vector<int> out;
    for (int v : s) out.push_back(v);
    switch (k) {
    case kind::min_index:
        break;  // already ascending
    case kind::max_index:
        std::reverse(out.begin(), out.end());
        break;
    case kind::max_degree:
        std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
            return g.adj_in(a, active).count() > g.adj_in(b, active).count();
        });
        break;
    case kind::priority_list:
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            auto pa = std::find(prefs.begin(), prefs.end(), a);
            auto pb = std::find(prefs.begin(), prefs.end(), b);
            return pa < pb;
        });
        break;
    }
    return out;
}

namespace {

void check_ordering_input(const graph& g, const pivot_rule& rule) {
    require_chordal(g);
    if (g.edge_count() == 0)
        throw std::invalid_argument("ordering construction needs at least one edge");
    if (rule.k == pivot_rule::kind::priority_list) {
        vertex_set seen;
        for (int v : rule.prefs) {
            if (v < 0 || v >= g.n || seen.contains(v))
                throw std::invalid_argument("pivot priority list must be a permutation of the vertices");
            seen |= vertex_set::single(v);
        }
        if (seen != g.vertices())
            throw std::invalid_argument("pivot priority list must mention every vertex");
    }
}

// simplicial vertices that have a neighbour inside the active set; nonempty
// for every chordal subgraph with an edge
vertex_set pivot_candidates(const graph& g, vertex_set active) {
    vertex_set out;
    for (int v : simplicial_vertices_in(g, active))
        if (!g.adj_in(v, active).empty()) out |= vertex_set::single(v);
    return out;
}

struct vv_builder {
    const graph& g;
    const pivot_rule& rule;
    std::unordered_map<std::uint64_t, std::vector<vertex_set>> memo;
    std::size_t cap = memo_cap_from_env();

    // active has at least one edge
    std::vector<vertex_set> run(vertex_set active, bool top) {
        if (!top)
            if (auto it = memo.find(active.bits); it != memo.end()) return it->second;

        int x1 = rule.pick(g, active, pivot_candidates(g, active));
        std::vector<int> block_heads{x1};
        vertex_set nb = g.adj_in(x1, active);
        if (top) {
            for (int v : rule.ranked(g, active, nb)) block_heads.push_back(v);
        } else {
            for (int v : nb) block_heads.push_back(v);
        }

        std::vector<vertex_set> out;
        for (int x : block_heads) {
            vertex_set y = g.adj_in(x, active);
            vertex_set rest = active - g.closed_in(x, active);
            if (!g.has_edge_within(rest)) {
                out.push_back(y);
            } else {
                for (vertex_set u : run(rest, false)) out.push_back(y | u);
            }
        }
        if (!top && memo.size() < cap) memo.emplace(active.bits, out);
        return out;
    }
};

struct fvt_builder {
    const graph& g;
    const pivot_rule& rule;
    std::unordered_map<std::uint64_t, std::vector<vertex_set>> memo;
    std::size_t cap = memo_cap_from_env();

    std::vector<vertex_set> run(vertex_set active) {
        if (auto it = memo.find(active.bits); it != memo.end()) return it->second;

        std::vector<vertex_set> out;
        if (!g.has_edge_within(active)) {
            out.push_back(vertex_set{});  // the empty monomial
        } else if (active.count() >= 3 && g.is_clique(active)) {
            for (int v : active) out.push_back(active.without(v));
        } else {
            int x = rule.pick(g, active, pivot_candidates(g, active));
            vertex_set w = g.adj_in(x, active);
            for (vertex_set a : run(active - g.closed_in(x, active)))
                out.push_back(w | a);
            for (vertex_set b : run(active.without(x)))
                if (!w.subset_of(b)) out.push_back(b.with(x));
        }
        if (memo.size() < cap) memo.emplace(active.bits, out);
        return out;
    }
};

} // namespace

monomial_ordering vv_ordering(const graph& g, const pivot_rule& rule) {
    check_ordering_input(g, rule);
    vv_builder b{g, rule, {}, memo_cap_from_env()};
    return monomial_ordering{g.n, ordering_method::vv, b.run(g.vertices(), true)};
}

monomial_ordering fvt_ordering(const graph& g, const pivot_rule& rule) {
    check_ordering_input(g, rule);
    fvt_builder b{g, rule, {}, memo_cap_from_env()};
    return monomial_ordering{g.n, ordering_method::fvt, b.run(g.vertices())};
}

linquo_verdict verify_linear_quotients(const std::vector<vertex_set>& gens) {
    if (auto pair = comparable_pair(gens))
        throw not_antichain_error(pair->first, pair->second);

    linquo_verdict v;
    v.colon_counts.assign(gens.size(), 0);
    for (std::size_t p = 1; p < gens.size(); ++p) {
        vertex_set singles;
        for (std::size_t l = 0; l < p; ++l) {
            vertex_set d = gens[l] - gens[p];
            if (d.count() == 1) singles |= d;
        }
        v.colon_counts[p] = singles.count();
        for (std::size_t j = 0; j < p; ++j) {
            if (!(gens[j] - gens[p]).intersects(singles)) {
                v.ok = false;
                v.fail_earlier = static_cast<int>(j);
                v.fail_at = static_cast<int>(p);
                v.colon_counts.clear();
                return v;
            }
        }
    }
    return v;
}

std::vector<int> colon_counts(const monomial_ordering& o) {
    auto v = verify_linear_quotients(o.gens);
    if (!v.ok)
        throw std::invalid_argument("ordering fails the linear-quotients check at generator " +
                                    std::to_string(v.fail_at));
    return v.colon_counts;
}

simplicial_complex shelling_from_ordering(const monomial_ordering& o) {
    simplicial_complex c;
    c.n = o.n;
    vertex_set all = vertex_set::full(o.n);
    for (vertex_set m : o.gens) c.facets.push_back(m.complement_in(all));
    return c;
}

shelling_verdict verify_shelling(const simplicial_complex& c) {
    if (auto pair = comparable_pair(c.facets))
        throw not_antichain_error(pair->first, pair->second);

    shelling_verdict v;
    const auto& f = c.facets;
    for (std::size_t j = 1; j < f.size(); ++j) {
        vertex_set singles;
        for (std::size_t l = 0; l < j; ++l) {
            vertex_set d = f[j] - f[l];
            if (d.count() == 1) singles |= d;
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (!(f[j] - f[i]).intersects(singles)) {
                v.ok = false;
                v.fail_earlier = static_cast<int>(i);
                v.fail_at = static_cast<int>(j);
                return v;
            }
        }
    }
    return v;
}

} // namespace coverideal

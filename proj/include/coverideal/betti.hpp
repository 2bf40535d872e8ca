#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coverideal/covers.hpp"
#include "coverideal/graph.hpp"
#include "coverideal/linquo.hpp"

namespace coverideal {

// Graded Betti numbers b_{i,j} of a monomial ideal, keyed by homological
// degree i and internal degree j; only nonzero entries are stored.  All three
// computation routes in this library fill the same structure, which makes
// entrywise comparison trivial.
struct betti_table {
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long v);
    long long at(int i, int j) const;
    long long total(int i) const;                // b_i = sum_j b_{i,j}
    std::map<int, long long> totals() const;
    long long b0() const { return total(0); }
    int pd() const;                              // largest i with a nonzero row
    int reg() const;                             // largest j - i over nonzero entries

    bool operator==(const betti_table&) const = default;
};

long long binomial(int n, int k);

// b_{i,i+j} = sum over generators of degree j of C(n_p, i), where n_p are the
// colon counts of the ordering.  Throws if the ordering is not linear
// quotients.
betti_table betti_from_ordering(const monomial_ordering& o);

// Graded recursion over a simplicial vertex x1 whose closed neighbourhood is
// the clique {x1, ..., xr}: writing H_t for the graph minus N[x_t] and D_t
// for deg(x_t),
//   b_{i,j}(G) = sum_t b_{i,j-D_t}(H_t) + sum_{t>=2} b_{i-1,j-D_t-1}(H_t)
// for i >= 1, with an edgeless H_t entering as the formal table {b_{0,0}=1}.
// Row i = 0 is the cover degree histogram.  The result does not depend on the
// pivot choices; the rule only steers the recursion.
betti_table graded_recursive(const graph& g, const pivot_rule& rule = pivot_rule::min_index());

// Same recursion summed over internal degrees; b_0 is the cover count.
std::map<int, long long> total_recursive(const graph& g,
                                         const pivot_rule& rule = pivot_rule::min_index());

// Shared homological invariants of the cover ideal J(G) and edge ideal I(G)
// of a chordal graph: proj dim of J(G) equals the induced matching number,
// which also equals reg of S/I(G); reg of I(G) itself is one higher.
struct graph_invariants {
    int pd = 0;
    int im = 0;
    int reg_edge_ideal = 0;  // = pd + 1
    long long b0 = 0;
};
// Computes pd and im independently and insists they agree (std::logic_error
// on mismatch, which would mean an implementation bug).
graph_invariants invariants(const graph& g);

// Closed forms for chordal unmixed graphs whose independence complex is pure
// of dimension 1: b_1 = 2 b_0 - n and b_2 = b_0 - n + 1 (all higher rows
// vanish).  Returns nothing when the graph is outside that class.
struct unmixed_1dim_result {
    long long b0 = 0, b1 = 0, b2 = 0;
};
std::optional<unmixed_1dim_result> unmixed_1dim_betti(const graph& g);

} // namespace coverideal

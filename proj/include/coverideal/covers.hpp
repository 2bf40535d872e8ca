#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/simplicial_complex.hpp"

namespace coverideal {

// Minimal vertex covers of one graph, listed canonically (cardinality, then
// bit pattern).  An edgeless graph has the single empty cover, matching the
// convention that its cover ideal is generated by the empty monomial.
struct cover_family {
    int n = 0;
    std::vector<vertex_set> covers;
};

// Exhaustive enumeration via maximal independent set complements; the
// reference oracle for everything else.  Capped at n <= 20.
cover_family minimal_covers_bruteforce(const graph& g);

// Memoised cover recursion for chordal graphs: splitting off a simplicial
// vertex v with neighbourhood w yields
//   covers(S) = {w ∪ A : A covers S∖N[v]} ∪ {{v} ∪ B : B covers S∖{v}, w ⊄ B}.
// One cache serves every induced subgraph of the parent graph; the Betti
// recursions share it so cover work is never repeated.
class cover_cache {
public:
    explicit cover_cache(const graph& g);  // throws not_chordal_error
    const graph& parent() const { return *g_; }
    // covers of the subgraph induced on the active subset, canonical order
    std::vector<vertex_set> covers(vertex_set active);

private:
    const graph* g_;
    std::unordered_map<std::uint64_t, std::vector<vertex_set>> memo_;
    std::size_t cap_;
};

cover_family minimal_covers_recursive(const graph& g);

// Facets are the maximal independent sets, i.e. the complements of the
// minimal covers.  No chordality assumption.
simplicial_complex independence_complex(const graph& g);

// Largest number of edges that are pairwise disjoint and joined by no third
// edge.  Exact branch and bound, capped at n <= 20.
int induced_matching_number(const graph& g);

} // namespace coverideal

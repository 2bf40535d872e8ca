#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/simplicial_complex.hpp"

namespace coverideal {

// Thrown when a generator or facet list that must be an antichain contains a
// comparable pair.
struct not_antichain_error : std::invalid_argument {
    int first, second;
    not_antichain_error(int i, int j)
        : std::invalid_argument("list is not an antichain: entry " + std::to_string(i) +
                                " is comparable with entry " + std::to_string(j)),
          first(i), second(j) {}
};

enum class ordering_method { vv, fvt, user };

// Ordered minimal generating set of a squarefree monomial ideal; for cover
// ideals each generator is a minimal vertex cover.
struct monomial_ordering {
    int n = 0;
    ordering_method method = ordering_method::user;
    std::vector<vertex_set> gens;
};

// The ordering constructions leave two choices open: which simplicial vertex
// becomes the pivot of a (sub)graph, and how the pivot's neighbours are
// enumerated at the top level of the block construction.  A pivot_rule fixes
// both deterministically.  Every choice yields a valid linear-quotients
// ordering; the rule only selects among them.
struct pivot_rule {
    enum class kind { min_index, max_index, max_degree, priority_list };
    kind k = kind::min_index;
    std::vector<int> prefs;  // priority_list only: vertex indices, preferred first

    static pivot_rule min_index() { return {kind::min_index, {}}; }
    static pivot_rule max_index() { return {kind::max_index, {}}; }
    static pivot_rule max_degree() { return {kind::max_degree, {}}; }
    static pivot_rule priority(std::vector<int> order) {
        return {kind::priority_list, std::move(order)};
    }

    // best-ranked member of candidates (degrees taken inside active)
    int pick(const graph& g, vertex_set active, vertex_set candidates) const;
    // members of s sorted by the rule's preference
    std::vector<int> ranked(const graph& g, vertex_set active, vertex_set s) const;
};

// Block construction pivoting on one simplicial vertex x1: for x running over
// N[x1] (x1 first, then the neighbours), each block is prod(N(x)) times a
// recursively ordered cover ideal of the graph minus N[x]; a block over an
// edgeless remainder is the single generator prod(N(x)).  The pivot's
// neighbours follow the rule's preference at the top level and increasing
// index below, so a priority list reproduces any desired top block order.
monomial_ordering vv_ordering(const graph& g, const pivot_rule& rule = pivot_rule::min_index());

// Two-branch construction pivoting on a simplicial vertex x: the orderings of
// the graphs minus N[x] and minus x are combined as prod(N(x))·A_1, ...,
// prod(N(x))·A_a, x·B_{i_1}, ..., x·B_{i_k}, keeping exactly the B's that do
// not contain N(x), in order.  Complete graphs on 3 or more vertices short
// circuit to their covers listed by increasing omitted vertex (any order is
// valid there); edgeless remainders contribute the empty monomial.
monomial_ordering fvt_ordering(const graph& g, const pivot_rule& rule = pivot_rule::min_index());

struct linquo_verdict {
    bool ok = true;
    // witness when !ok: gens[fail_earlier] has no singleton colon with
    // gens[fail_at] reachable through the earlier generators
    int fail_earlier = -1, fail_at = -1;
    // n_p = number of distinct variables generating the colon ideal
    // (gens[0..p-1]) : gens[p]; meaningful when ok
    std::vector<int> colon_counts;
};

// Checks that each colon ideal (m_1..m_{p-1}) : m_p is generated by
// variables: for every j < p some earlier generator must satisfy
// |m_l ∖ m_p| = 1 with m_l ∖ m_p ⊆ m_j ∖ m_p.  Throws not_antichain_error if
// the gens are not a minimal generating set.
linquo_verdict verify_linear_quotients(const std::vector<vertex_set>& gens);

// Verifier plus count extraction; throws std::invalid_argument when the
// ordering fails.
std::vector<int> colon_counts(const monomial_ordering& o);

// Facet list of the independence complex obtained by complementing each
// generator, preserving order.  A linear-quotients order of the cover ideal
// is exactly a shelling order of these facets.
simplicial_complex shelling_from_ordering(const monomial_ordering& o);

struct shelling_verdict {
    bool ok = true;
    int fail_earlier = -1, fail_at = -1;
};

// Shelling check in the singleton form: for all i < j there must be a vertex
// u in F_j ∖ F_i with F_j ∖ F_l = {u} for some l < j.  Facets must form an
// antichain (not_antichain_error otherwise).  Kept independent of
// verify_linear_quotients so the two sides can cross-check each other.
shelling_verdict verify_shelling(const simplicial_complex& c);

} // namespace coverideal

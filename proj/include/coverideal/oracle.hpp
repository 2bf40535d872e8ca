#pragma once

#include <optional>
#include <vector>

#include "coverideal/betti.hpp"
#include "coverideal/simplicial_complex.hpp"

namespace coverideal {

// Ranks of the reduced rational homology of a complex given by its full face
// list (empty face included when the complex has it).  Entry d+1 of the
// result is dim H~_d, so index 0 holds H~_{-1}; trailing zeros are trimmed.
// The void complex (no faces at all) has every rank zero.  The face list
// must be downward closed.
std::vector<long long> reduced_homology_ranks(const std::vector<vertex_set>& faces);

// Downward closure of a facet list in canonical order; the {∅} complex
// yields the single empty face, the void complex nothing.
std::vector<vertex_set> all_faces(const simplicial_complex& c);

// Betti numbers of a squarefree monomial ideal straight from simplicial
// homology: every subset σ that equals the union of the generators it
// contains adds dim H~_{i-1} of {τ ⊆ σ : σ∖τ ⊇ some generator} to b_{i,|σ|};
// all other subsets give cones.  Exact over ℚ and independent of both
// chordality and the ordering machinery, which makes it the cross-check of
// last resort.  Capped at n <= 14; throws not_antichain_error when gens is
// not a minimal generating set.
betti_table hochster_betti(const std::vector<vertex_set>& gens, int n);

// Depth first search for a shelling order over prefixes that satisfy the
// shelling condition so far (the condition at position j only mentions
// earlier facets, so pruning loses nothing).  Facets must form an antichain.
// Returns one shelling as a facet permutation, or nothing if none exists.
// Capped at 9 facets.
std::optional<std::vector<int>> exhaustive_shelling_search(const simplicial_complex& c);

} // namespace coverideal

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coverideal/vertex_set.hpp"

namespace coverideal {

// Facet list of a simplicial complex on ambient vertices 0..n-1.  Only facets
// are stored; faces are implicit.  The empty complex {∅} is represented by a
// single empty facet, the void complex by an empty facet list.
struct simplicial_complex {
    int n = 0;
    std::vector<vertex_set> facets;
};

// Returns a pair (i, j) with facets[i] ⊆ facets[j] or vice versa if the list
// fails to be an antichain, nothing otherwise.  Verifiers use this to reject
// redundant facet lists up front.
inline std::optional<std::pair<int, int>> comparable_pair(const std::vector<vertex_set>& facets) {
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            if (facets[i].subset_of(facets[j]) || facets[j].subset_of(facets[i]))
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    return std::nullopt;
}

} // namespace coverideal

#pragma once

#include <cstdint>

#include "coverideal/graph.hpp"

namespace coverideal {

// Random chordal graph by simplicial attachment: vertex k joins a clique of
// the graph built so far, grown greedily one random common neighbour at a
// time while a biased coin keeps coming up heads.  Reversing the insertion
// order gives a simplicial elimination order, so the result is chordal by
// construction; the empty clique is allowed, which keeps disconnected and
// edgeless outcomes in the sample space.
graph random_chordal(int n, std::uint64_t seed, double grow_bias = 0.55);

// Random recursive tree: vertex k attaches to a uniformly random earlier
// vertex.
graph random_tree(int n, std::uint64_t seed);

} // namespace coverideal

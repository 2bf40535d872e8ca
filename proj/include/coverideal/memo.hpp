#pragma once

#include <cstddef>
#include <cstdlib>

namespace coverideal {

// Memo tables are keyed by active vertex subsets and can grow with the
// subgraph lattice.  COVERIDEAL_MEMO_CAP bounds the number of entries per
// table; once a table is full, further results are recomputed instead of
// stored, so outputs never change, only running time.
inline std::size_t memo_cap_from_env() {
    const char* s = std::getenv("COVERIDEAL_MEMO_CAP");
    if (!s) return static_cast<std::size_t>(1) << 22;
    long long v = std::atoll(s);
    return v > 0 ? static_cast<std::size_t>(v) : 0;
}

} // namespace coverideal

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace coverideal {

// A set of vertex indices 0..63 packed into one machine word.  All graph,
// cover and monomial bookkeeping in this library runs on these masks; a
// squarefree monomial is identified with its support set, so "degree" is
// popcount and "divides" is subset-of.
struct vertex_set {
    std::uint64_t bits = 0;

    constexpr vertex_set() = default;
    constexpr explicit vertex_set(std::uint64_t raw) : bits(raw) {}

    static constexpr vertex_set single(int v) {
        assert(v >= 0 && v < 64);
        return vertex_set(std::uint64_t{1} << v);
    }

    // {0, 1, ..., n-1}
    static constexpr vertex_set full(int n) {
        assert(n >= 0 && n <= 64);
        if (n == 64) return vertex_set(~std::uint64_t{0});
        return vertex_set((std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }

    constexpr vertex_set with(int v) const { return vertex_set(bits | (std::uint64_t{1} << v)); }
    constexpr vertex_set without(int v) const { return vertex_set(bits & ~(std::uint64_t{1} << v)); }

    constexpr vertex_set operator|(vertex_set o) const { return vertex_set(bits | o.bits); }
    constexpr vertex_set operator&(vertex_set o) const { return vertex_set(bits & o.bits); }
    // set difference
    constexpr vertex_set operator-(vertex_set o) const { return vertex_set(bits & ~o.bits); }
    constexpr vertex_set& operator|=(vertex_set o) { bits |= o.bits; return *this; }
    constexpr vertex_set& operator&=(vertex_set o) { bits &= o.bits; return *this; }

    constexpr bool operator==(const vertex_set&) const = default;

    constexpr bool subset_of(vertex_set o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(vertex_set o) const { return (bits & o.bits) != 0; }

    // complement inside an ambient set, typically full(n)
    constexpr vertex_set complement_in(vertex_set ambient) const {
        assert(subset_of(ambient));
        return vertex_set(ambient.bits & ~bits);
    }

    constexpr int lowest() const {
        assert(bits != 0);
        return std::countr_zero(bits);
    }

    constexpr int highest() const {
        assert(bits != 0);
        return 63 - std::countl_zero(bits);
    }

    // iterate set members in increasing order
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

// Canonical order for listing set families: cardinality first, then the raw
// bit pattern.  Used wherever a deterministic listing of covers or facets is
// promised.
inline bool canonical_less(vertex_set a, vertex_set b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
}

} // namespace coverideal

#include "coverideal/random_chordal.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coverideal {

namespace {

int nth_member(vertex_set s, int idx) {
    for (int v : s)
        if (idx-- == 0) return v;
    throw std::logic_error("nth_member out of range");
}

} // namespace

graph random_chordal(int n, std::uint64_t seed, double grow_bias) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution grow(grow_bias);
    std::vector<vertex_set> adj(n);
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < n; ++k) {
        vertex_set cand = vertex_set::full(k);
        vertex_set clique{};
        // invariant: every member of cand is adjacent to all of clique
        while (!cand.empty() && grow(rng)) {
            std::uniform_int_distribution<int> d(0, cand.count() - 1);
            int v = nth_member(cand, d(rng));
            clique |= vertex_set::single(v);
            cand &= adj[v];
        }
        for (int v : clique) {
            edges.emplace_back(v, k);
            adj[v] |= vertex_set::single(k);
            adj[k] |= vertex_set::single(v);
        }
    }
    return graph(n, edges);
}

graph random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < n; ++k) {
        std::uniform_int_distribution<int> d(0, k - 1);
        edges.emplace_back(d(rng), k);
    }
    return graph(n, edges);
}

} // namespace coverideal

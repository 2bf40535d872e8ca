#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coverideal/vertex_set.hpp"

namespace coverideal {

// Simple undirected graph on at most 64 vertices with one adjacency mask per
// vertex.  Instances are built once and never mutated; algorithms that need
// subgraphs either call induced_subgraph() or, internally, carry an "active"
// vertex_set alongside the parent graph so that memo keys stay stable.
struct graph {
    int n = 0;
    std::vector<vertex_set> nbr;     // nbr[v] never contains v
    std::vector<std::string> label;  // unique, one per vertex

    graph() = default;
    // Throws std::invalid_argument on out-of-range endpoints, self-loops,
    // n > 64, or labels that are not unique (or not n of them).
    graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {});

    static graph path(int n);
    static graph complete(int n);
    static graph cycle(int n);
    static graph edgeless(int n);

    vertex_set vertices() const { return vertex_set::full(n); }
    vertex_set adj(int v) const { return nbr[v]; }
    vertex_set closed(int v) const { return nbr[v].with(v); }
    int degree(int v) const { return nbr[v].count(); }
    bool has_edge(int u, int v) const { return nbr[u].contains(v); }

    int edge_count() const;
    // pairs (u, v) with u < v, in increasing order
    std::vector<std::pair<int, int>> edge_list() const;

    bool is_clique(vertex_set s) const;
    bool has_edge_within(vertex_set s) const;

    // Restriction of the adjacency to an active subset; used by the recursive
    // algorithms instead of materialising subgraphs.
    vertex_set adj_in(int v, vertex_set active) const { return nbr[v] & active; }
    vertex_set closed_in(int v, vertex_set active) const { return closed(v) & active; }

    struct induced;
    induced induced_subgraph(vertex_set keep) const;
};

struct graph::induced {
    graph g;
    // old index -> new index, -1 for dropped vertices
    std::vector<int> new_index;
};

} // namespace coverideal

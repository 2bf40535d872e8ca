#include "coverideal/graph.hpp"

#include <set>
#include <stdexcept>

namespace coverideal {

graph::graph(int n_, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n(n_) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("graph: vertex count must be between 0 and 64");
    nbr.assign(n, vertex_set{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: self-loops are not allowed");
        nbr[u] |= vertex_set::single(v);
        nbr[v] |= vertex_set::single(u);
    }
    if (labels.empty()) {
        label.reserve(n);
        for (int v = 0; v < n; ++v) label.push_back("x" + std::to_string(v + 1));
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("graph: expected one label per vertex");
        std::set<std::string> seen;
        for (const auto& s : labels) {
            if (s.empty() || !seen.insert(s).second)
                throw std::invalid_argument("graph: labels must be unique and nonempty");
        }
        label = std::move(labels);
    }
}

graph graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return graph(n, e);
}

graph graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return graph(n, e);
}

graph graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return graph(n, e);
}

graph graph::edgeless(int n) { return graph(n, {}); }

int graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += nbr[v].count();
    return twice / 2;
}

std::vector<std::pair<int, int>> graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : nbr[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool graph::is_clique(vertex_set s) const {
    for (int v : s)
        if (!s.without(v).subset_of(nbr[v])) return false;
    return true;
}

bool graph::has_edge_within(vertex_set s) const {
    for (int v : s)
        if (nbr[v].intersects(s)) return true;
    return false;
}

graph::induced graph::induced_subgraph(vertex_set keep) const {
    if (!keep.subset_of(vertices()))
        throw std::invalid_argument("induced_subgraph: keep set outside vertex range");
    std::vector<int> map(n, -1);
    std::vector<std::string> labels;
    int next = 0;
    for (int v : keep) {
        map[v] = next++;
        labels.push_back(label[v]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : keep)
        for (int v : nbr[u] & keep)
            if (u < v) edges.emplace_back(map[u], map[v]);
    return induced{graph(next, edges, std::move(labels)), std::move(map)};
}

} // namespace coverideal

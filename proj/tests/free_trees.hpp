#pragma once

// exhaustive unlabeled tree enumeration for the acceptance run, small n only

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace free_trees {

// canonical rooted code: "(" + child codes in non-increasing lex order + ")"
inline std::vector<std::vector<std::string>> rooted_codes_by_size(int max_n) {
    std::vector<std::vector<std::string>> r(max_n + 1);
    if (max_n >= 1) r[1] = {"()"};
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::string> acc;
        std::string prefix;
        // children listed with codes non-increasing, so each multiset of
        // subtrees is produced exactly once
        std::function<void(int, const std::string&)> rec =
            [&](int m, const std::string& bound) {
                if (m == 0) {
                    acc.push_back("(" + prefix + ")");
                    return;
                }
                for (int s = std::min(m, n - 1); s >= 1; --s)
                    for (const std::string& c : r[s]) {
                        if (c > bound) continue;
                        std::size_t len = prefix.size();
                        prefix += c;
                        rec(m - s, c);
                        prefix.resize(len);
                    }
            };
        rec(n - 1, "~");
        std::sort(acc.begin(), acc.end());
        r[n] = std::move(acc);
    }
    return r;
}

inline std::vector<std::pair<int, int>> decode_rooted(const std::string& code) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;
    int cnt = 0;
    for (char ch : code) {
        if (ch == '(') {
            int v = cnt++;
            if (!stack.empty()) edges.emplace_back(stack.back(), v);
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return edges;
}

inline std::string rooted_code_at(int v, int parent,
                                  const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> ch;
    for (int w : adj[v])
        if (w != parent) ch.push_back(rooted_code_at(w, v, adj));
    std::sort(ch.rbegin(), ch.rend());
    std::string s = "(";
    for (const std::string& c : ch) s += c;
    return s + ")";
}

// canonical code of the unrooted tree, rooted at its centroid (or at the
// centroid edge when there are two)
inline std::string free_code(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> size(n, 0), max_comp(n, 0);
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        size[v] = 1;
        for (int w : adj[v])
            if (w != parent) {
                dfs(w, v);
                size[v] += size[w];
                max_comp[v] = std::max(max_comp[v], size[w]);
            }
        max_comp[v] = std::max(max_comp[v], n - size[v]);
    };
    dfs(0, -1);
    std::vector<int> centroids;
    int best = n;
    for (int v = 0; v < n; ++v) best = std::min(best, max_comp[v]);
    for (int v = 0; v < n; ++v)
        if (max_comp[v] == best) centroids.push_back(v);
    if (centroids.size() == 1) return rooted_code_at(centroids[0], -1, adj);
    int c1 = centroids[0], c2 = centroids[1];
    std::string a = rooted_code_at(c1, c2, adj);
    std::string b = rooted_code_at(c2, c1, adj);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

// all unlabeled trees on n vertices, one edge list each, vertices 0..n-1
inline std::vector<std::vector<std::pair<int, int>>> all_free_trees(int n) {
    if (n == 1) return {{}};
    static std::vector<std::vector<std::string>> rooted;  // grown on demand
    if ((int)rooted.size() <= n) rooted = rooted_codes_by_size(n);
    std::vector<std::vector<std::pair<int, int>>> out;
    std::set<std::string> seen;
    for (const std::string& code : rooted[n]) {
        auto edges = decode_rooted(code);
        if (seen.insert(free_code(n, edges)).second) out.push_back(std::move(edges));
    }
    return out;
}

inline std::size_t rooted_count(int n) {
    return rooted_codes_by_size(n)[n].size();
}

} // namespace free_trees

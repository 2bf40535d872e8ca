#include "coverideal/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "coverideal/linquo.hpp"

namespace coverideal {

namespace {

using big = boost::multiprecision::cpp_int;

// Fraction free elimination (Bareiss): every intermediate entry is a minor
// of the input matrix, so the division by the previous pivot is exact and
// entries stay modest.  Input is taken by value and destroyed.
long long exact_rank(std::vector<std::vector<big>> a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    big prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

} // namespace

std::vector<long long> reduced_homology_ranks(const std::vector<vertex_set>& faces) {
    if (faces.empty()) return {};
    int top = -1;
    for (vertex_set f : faces) top = std::max(top, f.count() - 1);
    // level d+1 holds the faces of dimension d, so level 0 is the empty face
    std::vector<std::vector<vertex_set>> level(top + 2);
    std::vector<std::unordered_map<std::uint64_t, int>> pos(top + 2);
    for (vertex_set f : faces) {
        auto& lv = level[f.count()];
        if (pos[f.count()].emplace(f.bits, static_cast<int>(lv.size())).second) lv.push_back(f);
    }
    // rk[lev] = rank of the boundary map out of level lev into level lev-1
    std::vector<long long> rk(top + 3, 0);
    for (int lev = 1; lev <= top + 1; ++lev) {
        const auto& rows_f = level[lev - 1];
        const auto& cols_f = level[lev];
        if (rows_f.empty() || cols_f.empty()) continue;
        std::vector<std::vector<big>> m(rows_f.size(), std::vector<big>(cols_f.size(), 0));
        for (std::size_t cc = 0; cc < cols_f.size(); ++cc) {
            int k = 0;  // position of the dropped vertex, gives the sign
            for (int v : cols_f[cc]) {
                auto it = pos[lev - 1].find(cols_f[cc].without(v).bits);
                if (it == pos[lev - 1].end())
                    throw std::logic_error("face list is not downward closed");
                m[it->second][cc] = (k % 2 == 0) ? 1 : -1;
                ++k;
            }
        }
        rk[lev] = exact_rank(std::move(m));
    }
    std::vector<long long> out(top + 2, 0);
    for (int lev = 0; lev <= top + 1; ++lev)
        out[lev] = static_cast<long long>(level[lev].size()) - rk[lev] - rk[lev + 1];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<vertex_set> all_faces(const simplicial_complex& c) {
    std::unordered_set<std::uint64_t> seen;
    for (vertex_set f : c.facets) {
        std::uint64_t s = f.bits;
        while (true) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & f.bits;
        }
    }
    std::vector<vertex_set> out;
    out.reserve(seen.size());
    for (std::uint64_t s : seen) out.push_back(vertex_set(s));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

betti_table hochster_betti(const std::vector<vertex_set>& gens, int n) {
    if (n < 0 || n > 14)
        throw std::invalid_argument("homology oracle handles 0 <= n <= 14 vertices");
    if (auto cp = comparable_pair(gens)) throw not_antichain_error(cp->first, cp->second);
    betti_table tbl;
    const std::uint64_t lim = std::uint64_t{1} << n;
    for (std::uint64_t sig = 0; sig < lim; ++sig) {
        vertex_set sigma(sig);
        vertex_set uni{};
        for (vertex_set m : gens)
            if (m.subset_of(sigma)) uni |= m;
        // σ must be a union of generators, otherwise the complex is a cone
        if (uni != sigma) continue;
        std::vector<vertex_set> faces;
        std::uint64_t s = sig;
        while (true) {
            vertex_set rest = sigma - vertex_set(s);
            for (vertex_set m : gens)
                if (m.subset_of(rest)) {
                    faces.push_back(vertex_set(s));
                    break;
                }
            if (s == 0) break;
            s = (s - 1) & sig;
        }
        std::vector<long long> h = reduced_homology_ranks(faces);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] != 0) tbl.add(static_cast<int>(i), sigma.count(), h[i]);
    }
    return tbl;
}

std::optional<std::vector<int>> exhaustive_shelling_search(const simplicial_complex& c) {
    if (auto cp = comparable_pair(c.facets)) throw not_antichain_error(cp->first, cp->second);
    int m = static_cast<int>(c.facets.size());
    if (m > 9) throw std::invalid_argument("exhaustive shelling search capped at 9 facets");
    std::vector<int> order;
    std::vector<bool> used(m, false);
    auto feasible = [&](int f) {
        vertex_set singles{};
        for (int l : order) {
            vertex_set d = c.facets[f] - c.facets[l];
            if (d.count() == 1) singles |= d;
        }
        for (int l : order)
            if (!(c.facets[f] - c.facets[l]).intersects(singles)) return false;
        return true;
    };
    std::function<bool()> dfs = [&]() {
        if (static_cast<int>(order.size()) == m) return true;
        for (int f = 0; f < m; ++f) {
            if (used[f] || !feasible(f)) continue;
            used[f] = true;
            order.push_back(f);
            if (dfs()) return true;
            order.pop_back();
            used[f] = false;
        }
        return false;
    };
    if (!dfs()) return std::nullopt;
    return order;
}

} // namespace coverideal

#pragma once

// Shared test data.  g7() is a seven vertex chordal graph with simplicial
// vertices a and f whose cover ideal has 8 generators; the generator
// sequences and shellings below were checked by hand against the recursion
// and are frozen as ground truth for the ordering constructions.

#include <string>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/linquo.hpp"

namespace fixtures {

using coverideal::graph;
using coverideal::pivot_rule;
using coverideal::vertex_set;

inline graph g7() {
    return graph(7,
                 {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {4, 6},
                  {5, 6}},
                 {"a", "b", "c", "d", "e", "f", "g"});
}

// vertex set from single character labels, e.g. vs(g, "bceg")
inline vertex_set vs(const graph& g, const std::string& labels) {
    vertex_set s;
    for (char c : labels)
        for (int v = 0; v < g.n; ++v)
            if (g.label[v] == std::string(1, c)) s |= vertex_set::single(v);
    return s;
}

// pivot preference a,g,f,e,d,c,b as indices; drives the fvt sequence below
// and the vv sequence with neighbour order (c, b)
inline pivot_rule rule_agfedcb() { return pivot_rule::priority({0, 6, 5, 4, 3, 2, 1}); }
// same but b preferred to c, for the vv neighbour order (b, c)
inline pivot_rule rule_agfedbc() { return pivot_rule::priority({0, 6, 5, 4, 3, 1, 2}); }

inline std::vector<std::string> fvt_gens() {
    return {"bceg", "bcdfg", "bcdef", "acdeg", "abdeg", "abdef", "acdef", "abdfg"};
}
inline std::vector<std::string> vv_gens_bc() {
    return {"bceg", "bcdfg", "bcdef", "acdef", "acdeg", "abdef", "abdfg", "abdeg"};
}
inline std::vector<std::string> vv_gens_cb() {
    return {"bceg", "bcdfg", "bcdef", "abdef", "abdfg", "abdeg", "acdef", "acdeg"};
}
inline std::vector<int> fvt_colon_counts() { return {0, 1, 1, 1, 1, 2, 2, 2}; }

inline std::vector<std::string> shelling_fvt() {
    return {"adf", "ae", "ag", "bf", "cf", "cg", "bg", "ce"};
}
inline std::vector<std::string> shelling_vv_bc() {
    return {"adf", "ae", "ag", "bg", "bf", "cg", "ce", "cf"};
}
inline std::vector<std::string> shelling_vv_cb() {
    return {"adf", "ae", "ag", "cg", "ce", "cf", "bg", "bf"};
}

} // namespace fixtures

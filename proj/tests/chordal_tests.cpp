#include "doctest.h"

#include <algorithm>

#include "coverideal/chordal.hpp"
#include "coverideal/random_chordal.hpp"
#include "fixtures.hpp"

using namespace coverideal;

namespace {

// independent restatement of the elimination property: at every position the
// neighbours that come later in the order must be pairwise adjacent
bool valid_elimination(const graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n) return false;
    vertex_set remaining = g.vertices();
    for (int v : order) {
        if (!remaining.contains(v)) return false;
        remaining = remaining.without(v);
        vertex_set later = g.adj(v) & remaining;
        for (int a : later)
            for (int b : later)
                if (a < b && !g.has_edge(a, b)) return false;
    }
    return remaining.empty();
}

} // namespace

TEST_CASE("maximum cardinality search breaks ties to the lowest index") {
    graph g = fixtures::g7();
    CHECK(mcs_order(g) == std::vector<int>{0, 1, 2, 3, 4, 6, 5});  // a b c d e g f
    CHECK(mcs_order(graph::edgeless(3)) == std::vector<int>{0, 1, 2});
}

TEST_CASE("elimination ordering of a chordal graph is valid position by position") {
    graph g = fixtures::g7();
    chordality_result r = elimination_ordering(g);
    REQUIRE(r.chordal);
    CHECK(r.witness == -1);
    CHECK(r.order.front() == 5);  // reversed search order starts at f here
    CHECK(valid_elimination(g, r.order));

    for (int n : {1, 2, 5, 9}) {
        auto rp = elimination_ordering(graph::path(n));
        CHECK(rp.chordal);
        CHECK(valid_elimination(graph::path(n), rp.order));
    }
    CHECK(elimination_ordering(graph::complete(7)).chordal);
    CHECK(elimination_ordering(graph::edgeless(0)).chordal);
}

TEST_CASE("cycles of length at least four are rejected with a witness") {
    for (int n : {4, 5, 6, 8}) {
        chordality_result r = elimination_ordering(graph::cycle(n));
        CHECK(!r.chordal);
        CHECK(r.witness >= 0);
        CHECK(r.witness < n);
        CHECK(!is_chordal(graph::cycle(n)));
    }
    CHECK(is_chordal(graph::cycle(3)));
    CHECK_THROWS_AS(require_chordal(graph::cycle(4)), not_chordal_error);
    try {
        require_chordal(graph::cycle(5));
        FAIL("expected a throw");
    } catch (const not_chordal_error& e) {
        CHECK(e.witness >= 0);
    }
}

TEST_CASE("random chordal graphs pass the recognizer") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        graph g = random_chordal(1 + static_cast<int>(seed % 14), 1000 + seed);
        chordality_result r = elimination_ordering(g);
        CHECK(r.chordal);
        CHECK(valid_elimination(g, r.order));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(is_chordal(random_tree(9, seed)));
}

TEST_CASE("simplicial vertices") {
    graph g = fixtures::g7();
    CHECK(simplicial_vertices(g) == fixtures::vs(g, "af"));
    // every reported vertex has a clique neighbourhood and no other does
    for (int v : g.vertices()) {
        bool reported = simplicial_vertices(g).contains(v);
        CHECK(reported == g.is_clique(g.adj(v)));
    }
    // inside {b,c,d,e} the vertices c and e become simplicial
    CHECK(simplicial_vertices_in(g, fixtures::vs(g, "bcde")) == fixtures::vs(g, "ce"));
    CHECK(simplicial_vertices(graph::complete(4)) == vertex_set::full(4));
    CHECK(simplicial_vertices(graph::edgeless(3)) == vertex_set::full(3));
    CHECK(simplicial_vertices(graph::cycle(5)).empty());
}

TEST_CASE("clique complex facets") {
    graph g = fixtures::g7();
    auto facets = clique_complex_facets(g).facets;
    REQUIRE(facets.size() == 5);
    std::vector<vertex_set> expect{fixtures::vs(g, "abc"), fixtures::vs(g, "bcd"),
                                   fixtures::vs(g, "bde"), fixtures::vs(g, "deg"),
                                   fixtures::vs(g, "efg")};
    std::sort(expect.begin(), expect.end(), canonical_less);
    CHECK(facets == expect);
    CHECK(std::is_sorted(facets.begin(), facets.end(), canonical_less));

    CHECK(clique_complex_facets(graph::complete(5)).facets ==
          std::vector<vertex_set>{vertex_set::full(5)});
    CHECK(clique_complex_facets(graph::edgeless(2)).facets.size() == 2);
    CHECK(clique_complex_facets(graph::cycle(6)).facets.size() == 6);
}

TEST_CASE("free facet certificate decides unmixedness") {
    // mixed: free facets {a,b,c} and {e,f,g} miss d
    unmixed_result r = unmixed_certificate(fixtures::g7());
    CHECK(!r.unmixed);
    REQUIRE(r.free_facets.size() == 2);
    CHECK(r.free_facets[0] == fixtures::vs(fixtures::g7(), "abc"));
    CHECK(r.free_facets[1] == fixtures::vs(fixtures::g7(), "efg"));

    CHECK(unmixed_certificate(graph::complete(6)).unmixed);
    CHECK(unmixed_certificate(graph::path(4)).unmixed);
    CHECK(!unmixed_certificate(graph::path(5)).unmixed);
    CHECK(unmixed_certificate(graph::path(2)).unmixed);
    CHECK(unmixed_certificate(graph::edgeless(1)).unmixed);
    CHECK_THROWS_AS(unmixed_certificate(graph::cycle(4)), not_chordal_error);
}

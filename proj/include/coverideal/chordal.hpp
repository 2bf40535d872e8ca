#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/simplicial_complex.hpp"

namespace coverideal {

// Thrown by operations whose preconditions include chordality.
struct not_chordal_error : std::runtime_error {
    int witness;  // vertex at which the elimination check failed
    explicit not_chordal_error(int w)
        : std::runtime_error("graph is not chordal (witness vertex " + std::to_string(w) + ")"),
          witness(w) {}
};

struct chordality_result {
    bool chordal = false;
    std::vector<int> order;  // candidate simplicial elimination order
    int witness = -1;        // first vertex in the order whose later neighbourhood
                             // is not a clique; -1 when chordal
};

// Maximum cardinality search, ties broken towards the lowest vertex index.
// Returns the visit order.
std::vector<int> mcs_order(const graph& g);

// Reversed MCS visit order, verified position by position.  For a chordal
// graph the returned order is a simplicial elimination order; otherwise the
// first violating vertex is reported as a witness.
chordality_result elimination_ordering(const graph& g);

bool is_chordal(const graph& g);
// Convenience guard used by the cover/Betti pipelines.
void require_chordal(const graph& g);

// Vertices whose closed neighbourhood induces a clique, restricted to the
// active subset (neighbourhoods are taken inside the subset).
vertex_set simplicial_vertices_in(const graph& g, vertex_set active);
vertex_set simplicial_vertices(const graph& g);

// All maximal cliques of the adjacency relation given by adj, via
// Bron-Kerbosch with pivoting.  Shared by the clique complex here and the
// independence complex in the covers module (which passes complemented
// adjacency).
std::vector<vertex_set> maximal_cliques(int n, const std::vector<vertex_set>& adj);

// Facets of the clique complex, in canonical (cardinality, bit pattern) order.
simplicial_complex clique_complex_facets(const graph& g);

// A facet is "free" if some vertex of it lies in no other facet.  For a
// chordal graph, the cover ideal is unmixed exactly when the free facets
// partition the vertex set; this routine reports the verdict together with
// the free facets as the certificate.  Throws not_chordal_error otherwise.
struct unmixed_result {
    bool unmixed = false;
    std::vector<vertex_set> free_facets;
};
unmixed_result unmixed_certificate(const graph& g);

} // namespace coverideal

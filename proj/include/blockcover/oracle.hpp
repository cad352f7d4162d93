#ifndef BLOCKCOVER_ORACLE_HPP
#define BLOCKCOVER_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "blockcover/bcc.hpp"
#include "blockcover/graph.hpp"
#include "blockcover/profile.hpp"

// Brute-force, definition-literal implementations used to cross-validate the
// production algorithms on small instances. They share nothing with the
// production code paths beyond the Graph type. Desk scale only.

namespace blockcover::oracle {

inline constexpr std::size_t kDefaultMaxVertices = 12;

// Simple cycle: distinct vertices a_1..a_M, M >= 3, consecutive pairs and
// the closing pair are edges. Canonical form: smallest vertex first, then
// the lexicographically smaller of the two directions.
struct Cycle {
    std::vector<VertexId> vertices;
    bool operator==(const Cycle &) const = default;
    auto operator<=>(const Cycle &) const = default;
};

// All simple cycles by backtracking from each anchor vertex, visiting only
// vertices >= the anchor. Throws TooLargeError above the vertex bound.
std::vector<Cycle> enumerate_cycles(const Graph &g, std::size_t max_vertices = kDefaultMaxVertices);

// Vertex-removal check straight from the articulation definition: a is an
// articulation vertex iff some pair of remaining vertices has every
// connecting path through a.
std::vector<VertexId> naive_articulation_vertices(const Graph &g);

// Equivalence classes of edges under "some simple cycle contains both",
// singletons for edges on no cycle. Each class is verified biconnected by
// definition before being returned.
Decomposition naive_biconnected_components(const Graph &g,
                                           std::size_t max_vertices = kDefaultMaxVertices);

// True iff every cycle C of the union graph satisfies A(C) subset of A_v for
// some voter v.
bool naive_coverage_check(const Profile &p, std::size_t max_vertices = kDefaultMaxVertices);

// Vertex sets of all cycles, reduced to the maximal ones under inclusion,
// sorted lexicographically.
std::vector<std::vector<VertexId>> naive_maximal_cycle_sets(
    const Graph &g, std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace blockcover::oracle

#endif

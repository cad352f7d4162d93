#ifndef BLOCKCOVER_GRAPH_HPP
#define BLOCKCOVER_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "blockcover/errors.hpp"

namespace blockcover {

using VertexId = std::uint32_t;

// Unordered pair of distinct vertices, stored with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    static Edge normalized(VertexId x, VertexId y) { return x < y ? Edge{x, y} : Edge{y, x}; }

    auto operator<=>(const Edge &) const = default;
};

// Undirected simple graph identified with its edge set. Vertices are dense
// indices; only edge endpoints are stored, so a vertex with no incident edge
// does not exist as far as the graph is concerned. Adjacency is kept in CSR
// form with ascending neighbor lists, which makes the structure canonical:
// two graphs built from any permutations of the same edge list compare equal.
class Graph {
  public:
    Graph() = default;

    // Collapses duplicate pairs; throws SelfLoopError on a pair with equal
    // endpoints.
    static Graph from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs);
    static Graph from_edges(std::span<const Edge> edges);

    std::size_t edge_count() const { return edge_count_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    // One past the largest vertex id (0 for the empty graph). Arrays indexed
    // by vertex id should use this size.
    std::size_t slot_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

    // Edge endpoints in ascending order.
    std::span<const VertexId> vertices() const { return vertices_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool has_edge(VertexId x, VertexId y) const;

    // All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph &) const = default;

  private:
    std::vector<std::uint32_t> offsets_;  // size slot_count()+1 when nonempty
    std::vector<VertexId> neighbors_;     // 2 * edge_count_, ascending per vertex
    std::vector<VertexId> vertices_;      // ascending, degree > 0 only
    std::size_t edge_count_ = 0;
};

}  // namespace blockcover

#endif

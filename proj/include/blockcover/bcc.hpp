#ifndef BLOCKCOVER_BCC_HPP
#define BLOCKCOVER_BCC_HPP

#include <cstdint>
#include <vector>

#include "blockcover/graph.hpp"

namespace blockcover {

// A biconnected component: either a single edge, or a maximal connected
// subgraph without an articulation vertex. Edges are sorted
// lexicographically; vertices are the sorted endpoint set.
struct Block {
    std::vector<Edge> edges;
    std::vector<VertexId> vertices;

    bool is_single_edge() const { return edges.size() == 1; }
    bool operator==(const Block &) const = default;
};

// Decomposition of a graph into biconnected components. Every edge belongs
// to exactly one block, blocks are sorted by their smallest edge, and two
// distinct blocks share at most one vertex (an articulation vertex).
struct Decomposition {
    std::vector<Block> blocks;
    std::vector<VertexId> articulation_vertices;            // ascending
    std::vector<std::pair<Edge, std::uint32_t>> edge_blocks;  // sorted by edge
    std::vector<std::uint32_t> size2;                        // block indices with |vertices| == 2
    std::vector<std::uint32_t> size3plus;                    // block indices with |vertices| >= 3

    std::size_t block_count() const { return blocks.size(); }
    // Block index owning the edge; throws Error if the edge is absent.
    std::uint32_t block_of(Edge e) const;

    bool operator==(const Decomposition &) const = default;
};

// Single iterative depth-first search with low-link values; linear in
// vertices + edges apart from the canonical sorting of the output.
Decomposition biconnected_components(const Graph &g);

// Vertices whose removal disconnects some pair of remaining vertices.
std::vector<VertexId> articulation_vertices(const Graph &g);

// Edge count reaches the complete-graph bound on the block's vertex set.
bool is_clique(const Block &b);

// Union of the vertex sets of all blocks on >= 3 vertices: exactly the
// vertices lying on at least one cycle.
std::vector<VertexId> cycle_vertices(const Graph &g);
std::vector<VertexId> cycle_vertices(const Decomposition &d);

}  // namespace blockcover

#endif

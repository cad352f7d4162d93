#include <doctest.h>

#include <algorithm>
#include <vector>

#include "blockcover/bcc.hpp"
#include "blockcover/gen.hpp"
#include "blockcover/oracle.hpp"

using namespace blockcover;

namespace {

// a=0 b=1 c=2 d=3 e=4 throughout.
const std::vector<Edge> kPath = {{0, 1}, {1, 2}};
const std::vector<Edge> kTriangle = {{0, 1}, {1, 2}, {0, 2}};
const std::vector<Edge> kBowtie = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
const std::vector<Edge> kTrianglePendant = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
const std::vector<Edge> kSquare = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};

Graph random_small_graph(SplitMix64 &rng, std::uint32_t max_vertices) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(max_vertices));
    std::vector<Edge> pool;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            pool.push_back(Edge{a, b});
        }
    }
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(rng.below(pool.size() + 1));
    return Graph::from_edges(pool);
}

}  // namespace

TEST_CASE("articulation vertices: path, triangle, bowtie") {
    CHECK(articulation_vertices(Graph::from_edges(kPath)) == std::vector<VertexId>{1});
    CHECK(articulation_vertices(Graph::from_edges(kTriangle)).empty());
    // Frozen from the vertex-removal oracle over all vertices.
    CHECK(oracle::naive_articulation_vertices(Graph::from_edges(kBowtie)) ==
          std::vector<VertexId>{2});
    CHECK(articulation_vertices(Graph::from_edges(kBowtie)) == std::vector<VertexId>{2});
}

TEST_CASE("triangle is a single block without articulation vertices") {
    const Decomposition d = biconnected_components(Graph::from_edges(kTriangle));
    REQUIRE(d.block_count() == 1);
    CHECK(d.blocks[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(d.articulation_vertices.empty());
    CHECK(d.size3plus == std::vector<std::uint32_t>{0});
    CHECK(d.size2.empty());
}

TEST_CASE("bowtie splits into two triangles sharing the waist") {
    const Decomposition d = biconnected_components(Graph::from_edges(kBowtie));
    REQUIRE(d.block_count() == 2);
    CHECK(d.blocks[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(d.blocks[1].vertices == std::vector<VertexId>{2, 3, 4});
    CHECK(d.articulation_vertices == std::vector<VertexId>{2});
    CHECK(d.block_of(Edge{3, 4}) == 1);
    CHECK(d.block_of(Edge{0, 2}) == 0);
}

TEST_CASE("every bridge is its own block") {
    const Decomposition d = biconnected_components(Graph::from_edges(kPath));
    REQUIRE(d.block_count() == 2);
    CHECK(d.blocks[0].edges == std::vector<Edge>{{0, 1}});
    CHECK(d.blocks[1].edges == std::vector<Edge>{{1, 2}});
    CHECK(d.size2 == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("empty graph decomposes into nothing") {
    const Decomposition d = biconnected_components(Graph{});
    CHECK(d.block_count() == 0);
    CHECK(d.articulation_vertices.empty());
}

TEST_CASE("clique detection by edge count") {
    const std::vector<Edge> single = {{0, 1}};
    const Decomposition edge = biconnected_components(Graph::from_edges(single));
    CHECK(is_clique(edge.blocks[0]));
    const Decomposition tri = biconnected_components(Graph::from_edges(kTriangle));
    CHECK(is_clique(tri.blocks[0]));
    const Decomposition square = biconnected_components(Graph::from_edges(kSquare));
    REQUIRE(square.block_count() == 1);
    CHECK(!is_clique(square.blocks[0]));
}

TEST_CASE("cycle vertices are the union of the size>=3 blocks") {
    CHECK(cycle_vertices(Graph::from_edges(kPath)).empty());
    CHECK(cycle_vertices(Graph::from_edges(kTrianglePendant)) ==
          std::vector<VertexId>{0, 1, 2});
    CHECK(cycle_vertices(Graph::from_edges(kBowtie)) == std::vector<VertexId>{0, 1, 2, 3, 4});
}

TEST_CASE("decomposition matches the naive oracle exhaustively up to 4 vertices") {
    std::vector<Edge> all;
    for (VertexId a = 0; a < 4; ++a) {
        for (VertexId b = a + 1; b < 4; ++b) {
            all.push_back(Edge{a, b});
        }
    }
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < all.size(); ++e) {
            if (mask & (1u << e)) {
                edges.push_back(all[e]);
            }
        }
        const Graph g = Graph::from_edges(edges);
        CHECK(biconnected_components(g) == oracle::naive_biconnected_components(g));
    }
}

TEST_CASE("decomposition matches the naive oracle on random graphs") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_small_graph(rng, 9);
        CAPTURE(trial);
        CHECK(biconnected_components(g) == oracle::naive_biconnected_components(g));
    }
}

TEST_CASE("decomposition invariants on random graphs") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(40));
        const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const Graph g = random_connected_graph(n, n - 1 + rng.below(max_edges - n + 2), rng.next());
        const Decomposition d = biconnected_components(g);

        // Edge partition: every edge in exactly one block, union equals the graph.
        std::vector<Edge> assembled;
        for (const Block &b : d.blocks) {
            assembled.insert(assembled.end(), b.edges.begin(), b.edges.end());
        }
        std::sort(assembled.begin(), assembled.end());
        CHECK(std::adjacent_find(assembled.begin(), assembled.end()) == assembled.end());
        CHECK(assembled == g.edges());

        // Pairwise overlap at most one vertex.
        for (std::size_t i = 0; i < d.blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
                std::vector<VertexId> shared;
                std::set_intersection(d.blocks[i].vertices.begin(), d.blocks[i].vertices.end(),
                                      d.blocks[j].vertices.begin(), d.blocks[j].vertices.end(),
                                      std::back_inserter(shared));
                CHECK(shared.size() <= 1);
            }
        }

        // Articulation vertices are exactly the multi-block vertices.
        std::vector<std::uint32_t> membership(g.slot_count(), 0);
        for (const Block &b : d.blocks) {
            for (VertexId v : b.vertices) {
                ++membership[v];
            }
        }
        std::vector<VertexId> multi;
        for (VertexId v = 0; v < membership.size(); ++v) {
            if (membership[v] >= 2) {
                multi.push_back(v);
            }
        }
        CHECK(multi == d.articulation_vertices);

        // Size split covers all block indices.
        CHECK(d.size2.size() + d.size3plus.size() == d.block_count());
    }
}

TEST_CASE("decomposition output is identical across edge-list permutations") {
    SplitMix64 rng(31);
    const Graph base = random_connected_graph(40, 80, 5);
    const Decomposition expected = biconnected_components(base);
    std::vector<Edge> edges = base.edges();
    for (int trial = 0; trial < 20; ++trial) {
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(edges.size() - i));
            std::swap(edges[i], edges[j]);
        }
        CHECK(biconnected_components(Graph::from_edges(edges)) == expected);
    }
}

TEST_CASE("deep path does not overflow the stack") {
    std::vector<Edge> edges;
    const VertexId n = 200000;
    edges.reserve(n - 1);
    for (VertexId v = 0; v + 1 < n; ++v) {
        edges.push_back(Edge{v, v + 1});
    }
    const Decomposition d = biconnected_components(Graph::from_edges(edges));
    CHECK(d.block_count() == n - 1);
    CHECK(d.articulation_vertices.size() == n - 2);
}

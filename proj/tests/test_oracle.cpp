#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "blockcover/gen.hpp"
#include "blockcover/oracle.hpp"
#include "blockcover/parse.hpp"

using namespace blockcover;
using oracle::Cycle;

namespace {

const std::vector<Edge> kPath = {{0, 1}, {1, 2}};
const std::vector<Edge> kTriangle = {{0, 1}, {1, 2}, {0, 2}};
const std::vector<Edge> kBowtie = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
const std::vector<Edge> kSquare = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};

std::vector<Edge> complete_graph(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            edges.push_back(Edge{a, b});
        }
    }
    return edges;
}

}  // namespace

TEST_CASE("triangle has exactly one cycle") {
    const auto cycles = oracle::enumerate_cycles(Graph::from_edges(kTriangle));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].vertices == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("K4 has seven cycles: four triangles and three squares") {
    const auto cycles = oracle::enumerate_cycles(Graph::from_edges(complete_graph(4)));
    REQUIRE(cycles.size() == 7);
    std::size_t triangles = 0;
    std::size_t squares = 0;
    for (const Cycle &c : cycles) {
        if (c.vertices.size() == 3) {
            ++triangles;
        } else if (c.vertices.size() == 4) {
            ++squares;
        }
    }
    CHECK(triangles == 4);
    CHECK(squares == 3);
}

TEST_CASE("paths carry no cycle") {
    CHECK(oracle::enumerate_cycles(Graph::from_edges(kPath)).empty());
}

TEST_CASE("vertex bound is enforced") {
    CHECK_THROWS_AS(oracle::enumerate_cycles(Graph::from_edges(complete_graph(13))),
                    TooLargeError);
    CHECK_NOTHROW(oracle::enumerate_cycles(Graph::from_edges(complete_graph(6)), 6));
    CHECK_THROWS_AS(oracle::enumerate_cycles(Graph::from_edges(complete_graph(6)), 5),
                    TooLargeError);
}

TEST_CASE("cycle canonical form on random graphs") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(6));
        const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const Graph g = random_connected_graph(n, n - 1 + rng.below(max_edges - n + 2), rng.next());
        const auto cycles = oracle::enumerate_cycles(g);

        std::set<std::vector<VertexId>> seen;
        for (const Cycle &c : cycles) {
            const auto &vs = c.vertices;
            REQUIRE(vs.size() >= 3);
            // Distinct vertices, every step an edge, closing step included.
            std::vector<VertexId> sorted(vs);
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            for (std::size_t i = 0; i < vs.size(); ++i) {
                CHECK(g.has_edge(vs[i], vs[(i + 1) % vs.size()]));
            }
            // Anchored at the smallest vertex, smaller direction first.
            CHECK(vs.front() == sorted.front());
            CHECK(vs[1] < vs.back());
            // No duplicates under canonicalization.
            CHECK(seen.insert(vs).second);
        }
    }
}

TEST_CASE("naive blocks: bowtie, tree, square") {
    const Decomposition bowtie = oracle::naive_biconnected_components(Graph::from_edges(kBowtie));
    REQUIRE(bowtie.block_count() == 2);
    CHECK(bowtie.blocks[0].edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(bowtie.blocks[1].edges == std::vector<Edge>{{2, 3}, {2, 4}, {3, 4}});

    const std::vector<Edge> tree = {{0, 1}, {1, 2}, {1, 3}, {3, 4}};
    const Decomposition t = oracle::naive_biconnected_components(Graph::from_edges(tree));
    CHECK(t.block_count() == 4);
    for (const Block &b : t.blocks) {
        CHECK(b.is_single_edge());
    }

    const Decomposition sq = oracle::naive_biconnected_components(Graph::from_edges(kSquare));
    REQUIRE(sq.block_count() == 1);
    CHECK(sq.blocks[0].edges.size() == 4);
}

TEST_CASE("naive maximal cycle sets: bowtie, K4, forest") {
    using Sets = std::vector<std::vector<VertexId>>;
    CHECK(oracle::naive_maximal_cycle_sets(Graph::from_edges(kBowtie)) ==
          Sets{{0, 1, 2}, {2, 3, 4}});
    CHECK(oracle::naive_maximal_cycle_sets(Graph::from_edges(complete_graph(4))) ==
          Sets{{0, 1, 2, 3}});
    const std::vector<Edge> forest = {{0, 1}, {2, 3}};
    CHECK(oracle::naive_maximal_cycle_sets(Graph::from_edges(forest)).empty());
}

TEST_CASE("cycle-by-cycle coverage check") {
    const Profile covered = parse_profile("v1: a b c\nv2: a b\nv3: b c\n");
    CHECK(oracle::naive_coverage_check(covered));

    const Profile uncovered = parse_profile("v1: a b\nv2: b c\nv3: a c\n");
    CHECK(!oracle::naive_coverage_check(uncovered));

    const Profile acyclic = parse_profile("v1: a b\nv2: b c\nv3: c d\n");
    CHECK(oracle::naive_coverage_check(acyclic));
}

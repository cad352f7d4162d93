#include <doctest.h>

#include <vector>

#include "blockcover/condition.hpp"
#include "blockcover/gen.hpp"

using namespace blockcover;

namespace {

bool connected(const Graph &g) {
    if (g.vertex_count() == 0) {
        return true;
    }
    std::vector<bool> seen(g.slot_count(), false);
    std::vector<VertexId> stack{g.vertices().front()};
    seen[stack.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return reached == g.vertex_count();
}

}  // namespace

TEST_CASE("profile generation is deterministic in the seed") {
    GenParams params;
    params.n_alternatives = 7;
    params.n_voters = 5;
    params.eval_size_min = 2;
    params.eval_size_max = 4;
    params.coverage_bias = 0.5;
    params.seed = 7;
    CHECK(random_profile(params) == random_profile(params));
    GenParams other = params;
    other.seed = 8;
    CHECK(random_profile(params) != random_profile(other));
}

TEST_CASE("generated profiles pass strict validation when parameters allow") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        GenParams params;
        params.n_alternatives = 3 + static_cast<std::uint32_t>(rng.below(6));
        params.n_voters = 3 + static_cast<std::uint32_t>(rng.below(5));
        params.eval_size_min = 2;
        params.eval_size_max = 2 + static_cast<std::uint32_t>(rng.below(params.n_alternatives - 1));
        params.seed = rng.next();
        const Profile p = random_profile(params);
        CHECK(p.voter_count() == params.n_voters);
        CHECK(p.alternative_count() == params.n_alternatives);
        for (const auto &eval : p.evals) {
            CHECK(eval.size() >= params.eval_size_min);
            CHECK(eval.size() <= params.eval_size_max);
        }
        CHECK_NOTHROW(validate_profile(p, ProfileMode::strict));
    }
}

TEST_CASE("full evaluation sets trivially satisfy coverage") {
    GenParams params;
    params.n_alternatives = 3;
    params.n_voters = 3;
    params.eval_size_min = 3;
    params.eval_size_max = 3;
    params.seed = 123;
    const Profile p = random_profile(params);
    for (const auto &eval : p.evals) {
        CHECK(eval == std::vector<std::uint32_t>{0, 1, 2});
    }
    CHECK(check_coverage(p).holds);
}

TEST_CASE("coverage bias one steers every seed to a passing instance") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenParams params;
        params.n_alternatives = 8;
        params.n_voters = 5;
        params.eval_size_min = 2;
        params.eval_size_max = 4;
        params.coverage_bias = 1.0;
        params.seed = seed;
        const Profile p = random_profile(params);
        CAPTURE(seed);
        CHECK(check_coverage(p, ProfileMode::relaxed).holds);
    }
    GenParams spot = {8, 5, 2, 4, 1.0, 42};
    CHECK(check_coverage(random_profile(spot), ProfileMode::relaxed).holds);
}

TEST_CASE("generator parameter validation") {
    GenParams params;
    params.n_alternatives = 5;
    params.n_voters = 3;
    params.eval_size_min = 1;
    params.eval_size_max = 3;
    CHECK_THROWS_AS(random_profile(params), ParamInvalidError);
    params.eval_size_min = 4;
    CHECK_THROWS_AS(random_profile(params), ParamInvalidError);
    params.eval_size_min = 2;
    params.eval_size_max = 6;
    CHECK_THROWS_AS(random_profile(params), ParamInvalidError);
    params.eval_size_max = 3;
    params.coverage_bias = 1.5;
    CHECK_THROWS_AS(random_profile(params), ParamInvalidError);
}

TEST_CASE("edge count n-1 forces a tree") {
    const Graph g = random_connected_graph(4, 3, 9);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(connected(g));
}

TEST_CASE("edge count n(n-1)/2 forces the complete graph") {
    const Graph g = random_connected_graph(5, 10, 3);
    CHECK(g.edge_count() == 10);
    for (VertexId a = 0; a < 5; ++a) {
        for (VertexId b = a + 1; b < 5; ++b) {
            CHECK(g.has_edge(a, b));
        }
    }
}

TEST_CASE("large random connected graph is connected") {
    const Graph g = random_connected_graph(1000, 3000, 1);
    CHECK(g.vertex_count() == 1000);
    CHECK(g.edge_count() == 3000);
    CHECK(connected(g));
}

TEST_CASE("graph generation is deterministic and validates bounds") {
    CHECK(random_connected_graph(50, 120, 4) == random_connected_graph(50, 120, 4));
    CHECK_THROWS_AS(random_connected_graph(5, 3, 1), ParamInvalidError);
    CHECK_THROWS_AS(random_connected_graph(5, 11, 1), ParamInvalidError);
}

#include <doctest.h>

#include <vector>

#include "blockcover/gen.hpp"
#include "blockcover/parse.hpp"

using namespace blockcover;

TEST_CASE("minimal well-formed document") {
    const Profile p = parse_profile("v1: a b c\nv2: a b\nv3: b c\n");
    CHECK(p.alternatives == std::vector<std::string>{"a", "b", "c"});
    CHECK(p.voters == std::vector<std::string>{"v1", "v2", "v3"});
    CHECK(p.evals[0] == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(p.evals[1] == std::vector<std::uint32_t>{0, 1});
    CHECK(p.evals[2] == std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("duplicate alternative inside one evaluation set") {
    CHECK_THROWS_AS(parse_profile("v1: a a\n", ProfileMode::relaxed), DuplicateLabelError);
}

TEST_CASE("duplicate voter label") {
    CHECK_THROWS_AS(parse_profile("v1: a b\nv1: b c\nv3: a c\n"), DuplicateLabelError);
}

TEST_CASE("missing colon reports line and column") {
    try {
        parse_profile("v1: a b\nv2 b c\nv3: a c\n", ProfileMode::relaxed);
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
}

TEST_CASE("comments and blank lines are skipped") {
    const Profile p = parse_profile("# profile\n\nv1: a b # inline\nv2: b c\nv3: a c\n");
    CHECK(p.voter_count() == 3);
    CHECK(p.alternative_count() == 3);
}

TEST_CASE("header fixes alternative order and may declare unevaluated alternatives") {
    const Profile p =
        parse_profile("alternatives: z y x\nv1: x y\nv2: y z\nv3: x z\n", ProfileMode::relaxed);
    CHECK(p.alternatives == std::vector<std::string>{"z", "y", "x"});
    CHECK(p.evals[0] == std::vector<std::uint32_t>{1, 2});

    // Alternatives no voter evaluates are legal in both modes; they land in a0.
    const Profile with_orphan =
        parse_profile("alternatives: a b c d\nv1: a b\nv2: b c\nv3: a c\n");
    CHECK(with_orphan.alternative_count() == 4);
    CHECK_NOTHROW(parse_profile("alternatives: a b c\nv1: a b\nv2: b c\nv3: a c\n"));
}

TEST_CASE("strict mode rejects too few voters") {
    CHECK_THROWS_AS(parse_profile("v1: a b\nv2: b c\n"), ProfileInvalidError);
    CHECK_NOTHROW(parse_profile("v1: a b\nv2: b c\n", ProfileMode::relaxed));
}

TEST_CASE("serialize/parse round-trip on generated profiles") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        GenParams params;
        params.n_alternatives = 3 + static_cast<std::uint32_t>(rng.below(8));
        params.n_voters = 3 + static_cast<std::uint32_t>(rng.below(6));
        params.eval_size_min = 2;
        params.eval_size_max = 2 + static_cast<std::uint32_t>(rng.below(params.n_alternatives - 1));
        params.coverage_bias = trial % 2 == 0 ? 1.0 : 0.0;
        params.seed = rng.next();
        const Profile p = random_profile(params);
        CHECK(parse_profile(serialize_profile(p), ProfileMode::relaxed) == p);
    }
}

TEST_CASE("edge-list parsing") {
    const LabeledGraph lg = parse_edge_list("a b\nb c\nc a\n# done\nc d\n");
    CHECK(lg.labels == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(lg.graph.edge_count() == 4);
    CHECK(lg.graph.has_edge(0, 1));
    CHECK(lg.graph.has_edge(2, 3));

    CHECK_THROWS_AS(parse_edge_list("a a\n"), SelfLoopError);
    CHECK_THROWS_AS(parse_edge_list("a b c\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a\n"), ParseError);
}

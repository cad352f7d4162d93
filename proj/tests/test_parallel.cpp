#include <doctest.h>

#include "blockcover/bcc.hpp"
#include "blockcover/condition.hpp"
#include "blockcover/gen.hpp"

using namespace blockcover;

// The OpenMP witness kernel must be indistinguishable from the serial
// reference, block by block.

TEST_CASE("serial and parallel witness search agree on random profiles") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        GenParams params;
        params.n_alternatives = 10 + static_cast<std::uint32_t>(rng.below(60));
        params.n_voters = 5 + static_cast<std::uint32_t>(rng.below(60));
        params.eval_size_min = 2;
        params.eval_size_max =
            3 + static_cast<std::uint32_t>(rng.below(params.n_alternatives - 2));
        params.coverage_bias = trial % 2 == 0 ? 0.7 : 0.0;
        params.seed = rng.next();
        const Profile p = random_profile(params);
        const Decomposition d = biconnected_components(union_graph(p));

        const auto serial = find_witnesses(d, p, WitnessMode::serial);
        const auto parallel = find_witnesses(d, p, WitnessMode::parallel);
        const auto automatic = find_witnesses(d, p, WitnessMode::automatic);
        CAPTURE(trial);
        CHECK(serial == parallel);
        CHECK(serial == automatic);
    }
}

TEST_CASE("coverage reports are identical under either kernel") {
    GenParams params;
    params.n_alternatives = 120;
    params.n_voters = 200;
    params.eval_size_min = 2;
    params.eval_size_max = 6;
    params.coverage_bias = 0.0;
    params.seed = 71;
    const Profile p = random_profile(params);
    const CoverageReport serial = check_coverage(p, ProfileMode::relaxed, WitnessMode::serial);
    const CoverageReport parallel = check_coverage(p, ProfileMode::relaxed, WitnessMode::parallel);
    CHECK(serial == parallel);
}

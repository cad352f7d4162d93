#ifndef BLOCKCOVER_CROSSCHECK_HPP
#define BLOCKCOVER_CROSSCHECK_HPP

#include <cstdint>
#include <string>

#include "blockcover/graph.hpp"
#include "blockcover/profile.hpp"

// Production-vs-oracle comparison drivers shared by the `verify` subcommand
// and the acceptance suite. Sweeps run their instances in parallel when
// OpenMP is enabled; the aggregated counters do not depend on scheduling.

namespace blockcover {

struct SweepStats {
    std::uint64_t instances = 0;
    std::uint64_t holds_count = 0;
    std::uint64_t coverage_mismatches = 0;  // production holds != oracle holds
    std::uint64_t bcc_mismatches = 0;       // decomposition != naive decomposition
    std::uint64_t clique_violations = 0;    // passing profile with a non-clique block
    std::uint64_t maximal_mismatches = 0;   // maximal cycle sets != oracle sets
    std::uint64_t a0_mismatches = 0;        // a0 != oracle off-cycle set
    std::string first_issue;                // empty when clean

    bool clean() const {
        return coverage_mismatches == 0 && bcc_mismatches == 0 && clique_violations == 0 &&
               maximal_mismatches == 0 && a0_mismatches == 0;
    }
    void absorb(const SweepStats &other);
};

// Full cross-check of one profile: coverage agreement, decomposition
// agreement on the union graph, clique property when passing, maximal cycle
// sets and a0 agreement. `max_vertices` bounds the oracle.
SweepStats crosscheck_profile(const Profile &p, std::size_t max_vertices, ProfileMode mode);

// Decomposition, articulation and cycle-vertex agreement on one graph.
SweepStats crosscheck_graph(const Graph &g, std::size_t max_vertices);

// Every profile with the given counts and evaluation sets of size >= 2,
// enumerated exhaustively.
SweepStats sweep_exhaustive_profiles(std::uint32_t n_alternatives, std::uint32_t n_voters);

// Seeded random profiles with mixed sizes and coverage bias.
SweepStats sweep_random_profiles(std::uint64_t count, std::uint64_t seed,
                                 std::uint32_t max_alternatives, std::uint32_t max_voters);

// All 2^10 edge subsets of the complete graph on 5 vertices.
SweepStats sweep_exhaustive_graphs5();

// Seeded random graphs on up to max_vertices vertices (oracle-sized).
SweepStats sweep_random_graphs(std::uint64_t count, std::uint64_t seed,
                               std::uint32_t max_vertices);

// Profiles whose union graph keeps a chordless 4-cycle as a block; every one
// of them must fail the coverage check.
SweepStats sweep_chordless_squares(std::uint64_t count, std::uint64_t seed);

struct DeterminismStats {
    std::uint64_t instances = 0;
    std::uint64_t holds_flips = 0;        // holds changed under permutation
    std::uint64_t family_mismatches = 0;  // block vertex-set families differ (as label sets)
    std::uint64_t tie_break_violations = 0;
    std::uint64_t unstable_outputs = 0;   // serialized output differed between two runs
    std::string first_issue;

    bool clean() const {
        return holds_flips == 0 && family_mismatches == 0 && tie_break_violations == 0 &&
               unstable_outputs == 0;
    }
};

// Round-trips seeded profiles through the document format, permutes voter
// lines and in-line token order (changing every dense index), and compares
// results through the label bijection. Also checks that JSON output is
// byte-identical across repeated runs.
DeterminismStats sweep_determinism(std::uint64_t count, std::uint64_t seed);

}  // namespace blockcover

#endif

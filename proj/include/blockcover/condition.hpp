#ifndef BLOCKCOVER_CONDITION_HPP
#define BLOCKCOVER_CONDITION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "blockcover/bcc.hpp"
#include "blockcover/graph.hpp"
#include "blockcover/profile.hpp"

namespace blockcover {

// Complete graph on voter v's evaluation set.
Graph voter_graph(const Profile &p, std::uint32_t voter);

// Union of all voter graphs: edge ab present iff some voter evaluates both
// a and b.
Graph union_graph(const Profile &p);

// Witness-search strategy. Serial and parallel return identical results;
// automatic picks by problem size.
enum class WitnessMode { automatic, serial, parallel };

// For each block, the smallest voter index whose evaluation set contains the
// block's vertex set, or -1 if no voter covers it.
std::vector<std::int32_t> find_witnesses(const Decomposition &d, const Profile &p,
                                         WitnessMode mode = WitnessMode::automatic);

struct CoverageReport {
    bool holds = true;
    Decomposition decomposition;
    std::vector<std::int32_t> witnesses;   // per block; -1 marks an uncovered block
    std::vector<std::uint32_t> failures;   // uncovered block indices, ascending
    std::vector<bool> clique;              // per block

    bool operator==(const CoverageReport &) const = default;
};

// Decides whether every block of the union graph is fully evaluated by some
// voter. Equivalent to: every cycle of the union graph lies inside a single
// voter's evaluation set. Validates the profile first.
CoverageReport check_coverage(const Profile &p, ProfileMode mode = ProfileMode::strict,
                              WitnessMode witness_mode = WitnessMode::automatic);

struct DictatorAssignment {
    std::vector<std::int32_t> dictators;  // per block, always >= 0 here
    // Vertex sets of the maximal cycles: one per block on >= 3 vertices,
    // sorted lexicographically (ascending index vectors).
    std::vector<std::vector<std::uint32_t>> maximal_cycle_vertex_sets;
    std::vector<std::uint32_t> maximal_cycle_blocks;  // block index per set
    std::vector<std::uint32_t> a0;                    // alternatives on no cycle, ascending
    std::vector<std::pair<Edge, std::int32_t>> edge_dictators;  // single-edge blocks

    bool operator==(const DictatorAssignment &) const = default;
};

// Derives the local-dictator assignment from a passing report. Throws
// ConditionViolatedError when r.holds is false.
DictatorAssignment local_dictators(const Profile &p, const CoverageReport &r);

// True iff for every pair of sets both set differences are nonempty.
bool pairwise_incomparable(std::span<const std::vector<std::uint32_t>> sets);

}  // namespace blockcover

#endif

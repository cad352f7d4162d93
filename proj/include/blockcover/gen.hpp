#ifndef BLOCKCOVER_GEN_HPP
#define BLOCKCOVER_GEN_HPP

#include <cstdint>

#include "blockcover/graph.hpp"
#include "blockcover/profile.hpp"

namespace blockcover {

// splitmix64 (Steele, Lea, Flood 2014). Fixed algorithm so seeded outputs
// stay stable across platforms and releases; bounded draws use modulo
// reduction.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

struct GenParams {
    std::uint32_t n_alternatives = 0;
    std::uint32_t n_voters = 0;
    std::uint32_t eval_size_min = 2;
    std::uint32_t eval_size_max = 2;
    double coverage_bias = 0.0;  // probability of steering toward a passing instance
    std::uint64_t seed = 0;
};

// Each voter draws an evaluation-set size uniformly in [min, max] and
// samples that many distinct alternatives. With probability coverage_bias a
// post-pass replaces voters (keeping |V| fixed) until every block on >= 3
// vertices has a covering voter. Deterministic given the seed. Throws
// ParamInvalidError on bad parameters.
Profile random_profile(const GenParams &params);

// Random spanning tree plus uniformly sampled extra edges, deduplicated.
// Requires n_vertices - 1 <= n_edges <= n_vertices*(n_vertices-1)/2.
Graph random_connected_graph(std::uint32_t n_vertices, std::uint64_t n_edges, std::uint64_t seed);

}  // namespace blockcover

#endif

#ifndef BLOCKCOVER_PROFILE_HPP
#define BLOCKCOVER_PROFILE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "blockcover/errors.hpp"

namespace blockcover {

// Who evaluates what. Alternatives and voters carry dense indices assigned
// by first appearance in the source document; labels are kept for output.
// Evaluation sets are sorted, duplicate-free alternative indices.
struct Profile {
    std::vector<std::string> alternatives;
    std::vector<std::string> voters;
    std::vector<std::vector<std::uint32_t>> evals;  // one per voter

    std::size_t alternative_count() const { return alternatives.size(); }
    std::size_t voter_count() const { return voters.size(); }

    bool operator==(const Profile &) const = default;
};

enum class ProfileMode { strict, relaxed };

// Strict mode enforces |A| >= 3, |V| >= 3, and |A_v| >= 2 for every voter.
// Relaxed mode only requires structural sanity (evals reference known
// alternatives, labels unique). Alternatives no voter evaluates are legal in
// both modes; they end up in A^0. Throws ProfileInvalidError naming the
// violated bound.
void validate_profile(const Profile &p, ProfileMode mode);

}  // namespace blockcover

#endif

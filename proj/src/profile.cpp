#include "blockcover/profile.hpp"

#include <algorithm>
#include <unordered_set>

namespace blockcover {

namespace {

void require(bool ok, const std::string &msg) {
    if (!ok) {
        throw ProfileInvalidError(msg);
    }
}

void check_unique(const std::vector<std::string> &labels, const char *kind) {
    std::unordered_set<std::string_view> seen;
    for (const auto &label : labels) {
        if (!seen.insert(label).second) {
            throw ProfileInvalidError(std::string("duplicate ") + kind + " label '" + label + "'");
        }
    }
}

}  // namespace

void validate_profile(const Profile &p, ProfileMode mode) {
    require(p.evals.size() == p.voters.size(), "one evaluation set per voter required");
    check_unique(p.alternatives, "alternative");
    check_unique(p.voters, "voter");

    const std::uint32_t n = static_cast<std::uint32_t>(p.alternatives.size());
    for (std::size_t v = 0; v < p.evals.size(); ++v) {
        const auto &eval = p.evals[v];
        require(std::is_sorted(eval.begin(), eval.end()) &&
                    std::adjacent_find(eval.begin(), eval.end()) == eval.end(),
                "evaluation set of voter '" + p.voters[v] + "' must be sorted and duplicate-free");
        for (std::uint32_t a : eval) {
            require(a < n, "evaluation set of voter '" + p.voters[v] +
                               "' references unknown alternative index " + std::to_string(a));
        }
    }

    if (mode == ProfileMode::relaxed) {
        return;
    }

    require(p.alternatives.size() >= 3, "|A| = " + std::to_string(p.alternatives.size()) +
                                            " violates |A| >= 3 (strict mode)");
    require(p.voters.size() >= 3,
            "|V| = " + std::to_string(p.voters.size()) + " violates |V| >= 3 (strict mode)");
    for (std::size_t v = 0; v < p.evals.size(); ++v) {
        require(p.evals[v].size() >= 2, "|A_v| = " + std::to_string(p.evals[v].size()) +
                                            " for voter '" + p.voters[v] +
                                            "' violates |A_v| >= 2 (strict mode)");
    }
}

}  // namespace blockcover

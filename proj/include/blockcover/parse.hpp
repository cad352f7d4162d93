#ifndef BLOCKCOVER_PARSE_HPP
#define BLOCKCOVER_PARSE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockcover/graph.hpp"
#include "blockcover/profile.hpp"

namespace blockcover {

// Profile document: one voter per line, "label: alt alt ...". '#' starts a
// comment. An optional first line "alternatives: a b c ..." fixes the
// alternative order up front and may declare alternatives no voter
// evaluates. Tokens are whitespace-separated UTF-8.
//
// First-appearance order (header first, then voter lines left to right)
// assigns the dense indices. Throws ParseError / DuplicateLabelError /
// ProfileInvalidError.
Profile parse_profile(std::string_view text, ProfileMode mode = ProfileMode::strict);

// Canonical document for a profile: header line, then one line per voter in
// index order with evaluation sets in index order. parse_profile of the
// result reproduces the profile exactly.
std::string serialize_profile(const Profile &p);

// Edge-list document: one "a b" pair per line, '#' comments. Labels get
// dense indices by first appearance.
struct LabeledGraph {
    std::vector<std::string> labels;
    Graph graph;
};
LabeledGraph parse_edge_list(std::string_view text);

}  // namespace blockcover

#endif

#include "blockcover/parse.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace blockcover {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

// Splits one line into whitespace-separated tokens, dropping everything from
// the first '#'.
std::vector<Token> tokenize(std::string_view line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        tokens.push_back(Token{line.substr(i, j - i), i + 1});
        i = j;
    }
    return tokens;
}

class LabelTable {
  public:
    std::uint32_t intern(std::string_view label) {
        auto it = index_.find(std::string(label));
        if (it != index_.end()) {
            return it->second;
        }
        const std::uint32_t id = static_cast<std::uint32_t>(labels_.size());
        labels_.emplace_back(label);
        index_.emplace(labels_.back(), id);
        return id;
    }

    bool contains(std::string_view label) const { return index_.contains(std::string(label)); }

    std::vector<std::string> take() { return std::move(labels_); }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

void check_label_token(const Token &t, std::size_t line_no) {
    if (t.text.empty()) {
        throw ParseError(line_no, t.column, "empty label");
    }
}

}  // namespace

Profile parse_profile(std::string_view text, ProfileMode mode) {
    Profile p;
    LabelTable alternatives;
    LabelTable voters;
    bool saw_content = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }

        const Token &head = tokens.front();
        if (head.text.back() != ':') {
            throw ParseError(line_no, head.column + head.text.size(),
                             "expected 'label:' at the start of the line");
        }
        const std::string_view label = head.text.substr(0, head.text.size() - 1);
        check_label_token(Token{label, head.column}, line_no);

        if (label == "alternatives" && !saw_content) {
            saw_content = true;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (alternatives.contains(tokens[i].text)) {
                    throw DuplicateLabelError(line_no, tokens[i].column,
                                              "duplicate alternative '" +
                                                  std::string(tokens[i].text) + "' in header");
                }
                alternatives.intern(tokens[i].text);
            }
            continue;
        }
        saw_content = true;

        if (voters.contains(label)) {
            throw DuplicateLabelError(line_no, head.column,
                                      "duplicate voter label '" + std::string(label) + "'");
        }
        voters.intern(label);

        std::vector<std::uint32_t> eval;
        eval.reserve(tokens.size() - 1);
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const std::uint32_t id = alternatives.intern(tokens[i].text);
            if (std::find(eval.begin(), eval.end(), id) != eval.end()) {
                throw DuplicateLabelError(line_no, tokens[i].column,
                                          "alternative '" + std::string(tokens[i].text) +
                                              "' listed twice in one evaluation set");
            }
            eval.push_back(id);
        }
        std::sort(eval.begin(), eval.end());
        p.evals.push_back(std::move(eval));
    }

    p.alternatives = alternatives.take();
    p.voters = voters.take();
    validate_profile(p, mode);
    return p;
}

std::string serialize_profile(const Profile &p) {
    auto check_label = [](const std::string &label) {
        if (label.empty()) {
            throw Error("cannot serialize an empty label");
        }
        for (char c : label) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
                throw Error("cannot serialize label '" + label + "' (whitespace or '#')");
            }
        }
    };

    std::string out = "alternatives:";
    for (const auto &a : p.alternatives) {
        check_label(a);
        out += ' ';
        out += a;
    }
    out += '\n';
    for (std::size_t v = 0; v < p.voter_count(); ++v) {
        check_label(p.voters[v]);
        out += p.voters[v];
        out += ':';
        for (std::uint32_t a : p.evals[v]) {
            out += ' ';
            out += p.alternatives.at(a);
        }
        out += '\n';
    }
    return out;
}

LabeledGraph parse_edge_list(std::string_view text) {
    LabelTable labels;
    std::vector<std::pair<VertexId, VertexId>> pairs;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, tokens.front().column,
                             "expected exactly two labels per edge line");
        }
        if (tokens[0].text == tokens[1].text) {
            throw SelfLoopError("line " + std::to_string(line_no) + ": self-loop on '" +
                                std::string(tokens[0].text) + "'");
        }
        // Interned one at a time: first appearance fixes the index.
        const VertexId x = labels.intern(tokens[0].text);
        const VertexId y = labels.intern(tokens[1].text);
        pairs.emplace_back(x, y);
    }

    LabeledGraph out;
    out.graph = Graph::from_pairs(pairs);
    out.labels = labels.take();
    return out;
}

}  // namespace blockcover

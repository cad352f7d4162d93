#include "blockcover/condition.hpp"

#include <algorithm>
#include <cstdint>

namespace blockcover {

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void set_bit(Words &w, std::uint32_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

// a subset of b, word-wise.
bool subset_of(const Words &a, const Words &b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] & ~b[i]) != 0) {
            return false;
        }
    }
    return true;
}

Words bitset_of(std::span<const std::uint32_t> items, std::size_t universe) {
    Words w(word_count(universe), 0);
    for (std::uint32_t i : items) {
        set_bit(w, i);
    }
    return w;
}

std::int32_t scan_block(const Words &block_bits, const std::vector<Words> &voter_bits) {
    for (std::size_t v = 0; v < voter_bits.size(); ++v) {
        if (subset_of(block_bits, voter_bits[v])) {
            return static_cast<std::int32_t>(v);
        }
    }
    return -1;
}

}  // namespace

Graph voter_graph(const Profile &p, std::uint32_t voter) {
    if (voter >= p.voter_count()) {
        throw UnknownVoterError("voter index " + std::to_string(voter) + " out of range (|V| = " +
                                std::to_string(p.voter_count()) + ")");
    }
    const auto &eval = p.evals[voter];
    std::vector<Edge> edges;
    edges.reserve(eval.size() * (eval.size() + 1) / 2);
    for (std::size_t i = 0; i < eval.size(); ++i) {
        for (std::size_t j = i + 1; j < eval.size(); ++j) {
            edges.push_back(Edge{eval[i], eval[j]});
        }
    }
    return Graph::from_edges(edges);
}

Graph union_graph(const Profile &p) {
    std::vector<Edge> edges;
    for (const auto &eval : p.evals) {
        for (std::size_t i = 0; i < eval.size(); ++i) {
            for (std::size_t j = i + 1; j < eval.size(); ++j) {
                edges.push_back(Edge{eval[i], eval[j]});
            }
        }
    }
    return Graph::from_edges(edges);
}

std::vector<std::int32_t> find_witnesses(const Decomposition &d, const Profile &p,
                                         WitnessMode mode) {
    const std::size_t universe = p.alternative_count();
    std::vector<Words> voter_bits;
    voter_bits.reserve(p.voter_count());
    for (const auto &eval : p.evals) {
        voter_bits.push_back(bitset_of(eval, universe));
    }

    const std::int64_t n = static_cast<std::int64_t>(d.blocks.size());
    std::vector<std::int32_t> witnesses(d.blocks.size(), -1);

    bool parallel = mode == WitnessMode::parallel;
    if (mode == WitnessMode::automatic) {
        // Each block scan costs |V| * words; below this there is nothing to win.
        parallel = static_cast<std::uint64_t>(n) * p.voter_count() * word_count(universe) >= (1u << 16);
    }

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            witnesses[i] = scan_block(bitset_of(d.blocks[i].vertices, universe), voter_bits);
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            witnesses[i] = scan_block(bitset_of(d.blocks[i].vertices, universe), voter_bits);
        }
    }
    return witnesses;
}

CoverageReport check_coverage(const Profile &p, ProfileMode mode, WitnessMode witness_mode) {
    validate_profile(p, mode);

    CoverageReport report;
    report.decomposition = biconnected_components(union_graph(p));
    report.witnesses = find_witnesses(report.decomposition, p, witness_mode);

    report.clique.reserve(report.decomposition.blocks.size());
    for (std::uint32_t i = 0; i < report.decomposition.blocks.size(); ++i) {
        report.clique.push_back(is_clique(report.decomposition.blocks[i]));
        if (report.witnesses[i] < 0) {
            report.failures.push_back(i);
        }
    }
    report.holds = report.failures.empty();
    return report;
}

DictatorAssignment local_dictators(const Profile &p, const CoverageReport &r) {
    if (!r.holds) {
        throw ConditionViolatedError("coverage condition fails: " +
                                     std::to_string(r.failures.size()) + " uncovered block(s)");
    }

    DictatorAssignment out;
    out.dictators = r.witnesses;

    const Decomposition &d = r.decomposition;
    std::vector<std::uint32_t> cycle_block_ids(d.size3plus.begin(), d.size3plus.end());
    std::sort(cycle_block_ids.begin(), cycle_block_ids.end(),
              [&](std::uint32_t x, std::uint32_t y) {
                  return d.blocks[x].vertices < d.blocks[y].vertices;
              });
    for (std::uint32_t id : cycle_block_ids) {
        out.maximal_cycle_vertex_sets.push_back(d.blocks[id].vertices);
        out.maximal_cycle_blocks.push_back(id);
    }

    std::vector<bool> on_cycle(p.alternative_count(), false);
    for (const auto &set : out.maximal_cycle_vertex_sets) {
        for (std::uint32_t a : set) {
            on_cycle[a] = true;
        }
    }
    for (std::uint32_t a = 0; a < p.alternative_count(); ++a) {
        if (!on_cycle[a]) {
            out.a0.push_back(a);
        }
    }

    for (std::uint32_t id : d.size2) {
        out.edge_dictators.emplace_back(d.blocks[id].edges.front(), r.witnesses[id]);
    }
    std::sort(out.edge_dictators.begin(), out.edge_dictators.end());
    return out;
}

bool pairwise_incomparable(std::span<const std::vector<std::uint32_t>> sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const bool i_minus_j = !std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                                                  sets[i].end());
            const bool j_minus_i = !std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                                  sets[j].end());
            if (!i_minus_j || !j_minus_i) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace blockcover

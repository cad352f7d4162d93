#include "blockcover/crosscheck.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

#include "blockcover/bcc.hpp"
#include "blockcover/condition.hpp"
#include "blockcover/gen.hpp"
#include "blockcover/oracle.hpp"
#include "blockcover/parse.hpp"
#include "blockcover/report.hpp"

namespace blockcover {

namespace {

void note_issue(SweepStats &stats, const std::string &msg) {
    if (stats.first_issue.empty()) {
        stats.first_issue = msg;
    }
}

// Per-instance generator stream; splitmix64 scrambles sequential seeds well.
SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + 0x632BE59BD9B4E019ull * (index + 1));
}

std::vector<std::uint32_t> oracle_off_cycle(const Graph &g, std::size_t n_alternatives,
                                            std::size_t max_vertices) {
    std::vector<bool> on_cycle(n_alternatives, false);
    for (const auto &set : oracle::naive_maximal_cycle_sets(g, max_vertices)) {
        for (VertexId v : set) {
            on_cycle[v] = true;
        }
    }
    std::vector<std::uint32_t> off;
    for (std::uint32_t a = 0; a < n_alternatives; ++a) {
        if (!on_cycle[a]) {
            off.push_back(a);
        }
    }
    return off;
}

std::string profile_brief(const Profile &p) {
    std::ostringstream out;
    out << "profile |A|=" << p.alternative_count() << " |V|=" << p.voter_count() << " evals=";
    for (const auto &eval : p.evals) {
        out << "{";
        for (std::size_t i = 0; i < eval.size(); ++i) {
            out << (i ? "," : "") << eval[i];
        }
        out << "}";
    }
    return out.str();
}

std::string graph_brief(const Graph &g) {
    std::ostringstream out;
    out << "graph edges=";
    for (const Edge &e : g.edges()) {
        out << "(" << e.a << "," << e.b << ")";
    }
    return out.str();
}

}  // namespace

void SweepStats::absorb(const SweepStats &other) {
    instances += other.instances;
    holds_count += other.holds_count;
    coverage_mismatches += other.coverage_mismatches;
    bcc_mismatches += other.bcc_mismatches;
    clique_violations += other.clique_violations;
    maximal_mismatches += other.maximal_mismatches;
    a0_mismatches += other.a0_mismatches;
    if (first_issue.empty()) {
        first_issue = other.first_issue;
    }
}

SweepStats crosscheck_profile(const Profile &p, std::size_t max_vertices, ProfileMode mode) {
    SweepStats stats;
    stats.instances = 1;

    const CoverageReport report = check_coverage(p, mode);
    const Graph g = union_graph(p);
    if (report.holds) {
        ++stats.holds_count;
    }

    if (report.holds != oracle::naive_coverage_check(p, max_vertices)) {
        ++stats.coverage_mismatches;
        note_issue(stats, "coverage disagreement on " + profile_brief(p));
    }

    // Witness soundness: reported witnesses must actually cover their block.
    for (std::uint32_t i = 0; i < report.decomposition.blocks.size(); ++i) {
        if (report.witnesses[i] < 0) {
            continue;
        }
        const auto &eval = p.evals[static_cast<std::size_t>(report.witnesses[i])];
        const auto &verts = report.decomposition.blocks[i].vertices;
        if (!std::includes(eval.begin(), eval.end(), verts.begin(), verts.end())) {
            ++stats.coverage_mismatches;
            note_issue(stats, "unsound witness on " + profile_brief(p));
        }
    }

    if (report.decomposition != oracle::naive_biconnected_components(g, max_vertices)) {
        ++stats.bcc_mismatches;
        note_issue(stats, "decomposition disagreement on " + profile_brief(p));
    }

    if (report.holds) {
        for (std::uint32_t i = 0; i < report.clique.size(); ++i) {
            if (!report.clique[i]) {
                ++stats.clique_violations;
                note_issue(stats, "passing profile with non-clique block: " + profile_brief(p));
                break;
            }
        }

        const DictatorAssignment assignment = local_dictators(p, report);
        const auto oracle_sets = oracle::naive_maximal_cycle_sets(g, max_vertices);
        const bool count_ok = assignment.maximal_cycle_vertex_sets.size() ==
                              report.decomposition.size3plus.size();
        if (!count_ok || assignment.maximal_cycle_vertex_sets != oracle_sets ||
            !pairwise_incomparable(assignment.maximal_cycle_vertex_sets)) {
            ++stats.maximal_mismatches;
            note_issue(stats, "maximal cycle sets disagree on " + profile_brief(p));
        }
        if (assignment.a0 != oracle_off_cycle(g, p.alternative_count(), max_vertices)) {
            ++stats.a0_mismatches;
            note_issue(stats, "a0 disagreement on " + profile_brief(p));
        }
    }
    return stats;
}

SweepStats crosscheck_graph(const Graph &g, std::size_t max_vertices) {
    SweepStats stats;
    stats.instances = 1;

    const Decomposition production = biconnected_components(g);
    if (production != oracle::naive_biconnected_components(g, max_vertices)) {
        ++stats.bcc_mismatches;
        note_issue(stats, "decomposition disagreement on " + graph_brief(g));
    }
    if (articulation_vertices(g) != oracle::naive_articulation_vertices(g)) {
        ++stats.bcc_mismatches;
        note_issue(stats, "articulation disagreement on " + graph_brief(g));
    }

    std::vector<VertexId> on_cycle;
    for (const auto &set : oracle::naive_maximal_cycle_sets(g, max_vertices)) {
        on_cycle.insert(on_cycle.end(), set.begin(), set.end());
    }
    std::sort(on_cycle.begin(), on_cycle.end());
    on_cycle.erase(std::unique(on_cycle.begin(), on_cycle.end()), on_cycle.end());
    if (cycle_vertices(production) != on_cycle) {
        ++stats.bcc_mismatches;
        note_issue(stats, "cycle-vertex disagreement on " + graph_brief(g));
    }
    return stats;
}

SweepStats sweep_exhaustive_profiles(std::uint32_t n_alternatives, std::uint32_t n_voters) {
    // Evaluation sets are the subsets of size >= 2, enumerated as bitmasks.
    std::vector<std::vector<std::uint32_t>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << n_alternatives); ++mask) {
        if (std::popcount(mask) < 2) {
            continue;
        }
        std::vector<std::uint32_t> set;
        for (std::uint32_t a = 0; a < n_alternatives; ++a) {
            if (mask & (1u << a)) {
                set.push_back(a);
            }
        }
        subsets.push_back(std::move(set));
    }

    const std::uint64_t choices = subsets.size();
    std::uint64_t total = 1;
    for (std::uint32_t v = 0; v < n_voters; ++v) {
        total *= choices;
    }

    Profile base;
    for (std::uint32_t a = 0; a < n_alternatives; ++a) {
        base.alternatives.push_back("a" + std::to_string(a + 1));
    }
    for (std::uint32_t v = 0; v < n_voters; ++v) {
        base.voters.push_back("v" + std::to_string(v + 1));
        base.evals.emplace_back();
    }

    SweepStats stats;
#pragma omp parallel
    {
        SweepStats local;
        Profile p = base;
#pragma omp for schedule(dynamic, 1024) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            std::uint64_t code = static_cast<std::uint64_t>(i);
            for (std::uint32_t v = 0; v < n_voters; ++v) {
                p.evals[v] = subsets[code % choices];
                code /= choices;
            }
            local.absorb(crosscheck_profile(p, n_alternatives, ProfileMode::relaxed));
        }
#pragma omp critical
        stats.absorb(local);
    }
    return stats;
}

SweepStats sweep_random_profiles(std::uint64_t count, std::uint64_t seed,
                                 std::uint32_t max_alternatives, std::uint32_t max_voters) {
    SweepStats stats;
#pragma omp parallel
    {
        SweepStats local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            SplitMix64 rng = instance_rng(seed, static_cast<std::uint64_t>(i));
            GenParams params;
            params.n_alternatives = 3 + static_cast<std::uint32_t>(rng.below(max_alternatives - 2));
            params.n_voters = 3 + static_cast<std::uint32_t>(rng.below(max_voters - 2));
            params.eval_size_min = 2;
            params.eval_size_max =
                2 + static_cast<std::uint32_t>(rng.below(params.n_alternatives - 1));
            const std::uint64_t pick = rng.below(4);
            params.coverage_bias = pick <= 1 ? 0.0 : (pick == 2 ? 0.5 : 1.0);
            params.seed = rng.next();
            const Profile p = random_profile(params);
            local.absorb(crosscheck_profile(p, params.n_alternatives, ProfileMode::relaxed));
        }
#pragma omp critical
        stats.absorb(local);
    }
    return stats;
}

SweepStats sweep_exhaustive_graphs5() {
    // All edge subsets of the complete graph on five vertices.
    std::vector<Edge> all;
    for (VertexId a = 0; a < 5; ++a) {
        for (VertexId b = a + 1; b < 5; ++b) {
            all.push_back(Edge{a, b});
        }
    }

    SweepStats stats;
#pragma omp parallel
    {
        SweepStats local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t mask = 0; mask < 1024; ++mask) {
            std::vector<Edge> edges;
            for (std::size_t e = 0; e < all.size(); ++e) {
                if (mask & (std::int64_t{1} << e)) {
                    edges.push_back(all[e]);
                }
            }
            local.absorb(crosscheck_graph(Graph::from_edges(edges), 5));
        }
#pragma omp critical
        stats.absorb(local);
    }
    return stats;
}

SweepStats sweep_random_graphs(std::uint64_t count, std::uint64_t seed,
                               std::uint32_t max_vertices) {
    SweepStats stats;
#pragma omp parallel
    {
        SweepStats local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            SplitMix64 rng = instance_rng(seed, static_cast<std::uint64_t>(i));
            const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(max_vertices));
            const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
            const std::uint64_t m = rng.below(max_edges + 1);

            std::vector<Edge> pool;
            for (VertexId a = 0; a < n; ++a) {
                for (VertexId b = a + 1; b < n; ++b) {
                    pool.push_back(Edge{a, b});
                }
            }
            for (std::size_t k = 0; k + 1 < pool.size(); ++k) {
                const std::size_t j = k + static_cast<std::size_t>(rng.below(pool.size() - k));
                std::swap(pool[k], pool[j]);
            }
            pool.resize(m);
            local.absorb(crosscheck_graph(Graph::from_edges(pool), max_vertices));
        }
#pragma omp critical
        stats.absorb(local);
    }
    return stats;
}

SweepStats sweep_chordless_squares(std::uint64_t count, std::uint64_t seed) {
    SweepStats stats;
#pragma omp parallel
    {
        SweepStats local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            SplitMix64 rng = instance_rng(seed, static_cast<std::uint64_t>(i));
            const std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.below(5));  // 4..8

            // Four distinct corners in cycle order.
            std::vector<std::uint32_t> ids(n);
            for (std::uint32_t a = 0; a < n; ++a) {
                ids[a] = a;
            }
            for (std::uint32_t k = 0; k < 4; ++k) {
                const std::uint32_t j = k + static_cast<std::uint32_t>(rng.below(n - k));
                std::swap(ids[k], ids[j]);
            }

            Profile p;
            for (std::uint32_t a = 0; a < n; ++a) {
                p.alternatives.push_back("a" + std::to_string(a + 1));
            }
            auto add_pair = [&p](std::uint32_t x, std::uint32_t y) {
                p.voters.push_back("v" + std::to_string(p.voters.size() + 1));
                std::vector<std::uint32_t> eval{x, y};
                std::sort(eval.begin(), eval.end());
                p.evals.push_back(std::move(eval));
            };
            for (std::uint32_t k = 0; k < 4; ++k) {
                add_pair(ids[k], ids[(k + 1) % 4]);
            }
            // Pendant edges through fresh outside vertices keep the square
            // chordless and in one piece.
            for (std::uint32_t k = 4; k < n && rng.below(2) == 0; ++k) {
                add_pair(ids[static_cast<std::uint32_t>(rng.below(k))], ids[k]);
            }

            local.absorb(crosscheck_profile(p, n, ProfileMode::relaxed));
            const CoverageReport report = check_coverage(p, ProfileMode::relaxed);
            if (report.holds) {
                ++local.clique_violations;
                note_issue(local, "chordless square profile passed: " + profile_brief(p));
            }
        }
#pragma omp critical
        stats.absorb(local);
    }
    return stats;
}

DeterminismStats sweep_determinism(std::uint64_t count, std::uint64_t seed) {
    DeterminismStats stats;

    // Independent subset test used to re-derive the expected witness.
    auto first_covering_voter = [](const Profile &p, const std::vector<VertexId> &verts) {
        for (std::size_t v = 0; v < p.evals.size(); ++v) {
            if (std::includes(p.evals[v].begin(), p.evals[v].end(), verts.begin(), verts.end())) {
                return static_cast<std::int32_t>(v);
            }
        }
        return std::int32_t{-1};
    };

    auto label_family = [](const CoverageReport &r, const Profile &p) {
        std::vector<std::vector<std::string>> family;
        for (const Block &b : r.decomposition.blocks) {
            std::vector<std::string> labels;
            for (VertexId v : b.vertices) {
                labels.push_back(p.alternatives.at(v));
            }
            std::sort(labels.begin(), labels.end());
            family.push_back(std::move(labels));
        }
        std::sort(family.begin(), family.end());
        return family;
    };

#pragma omp parallel
    {
        DeterminismStats local;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            SplitMix64 rng = instance_rng(seed, static_cast<std::uint64_t>(i));
            GenParams params;
            params.n_alternatives = 4 + static_cast<std::uint32_t>(rng.below(5));
            params.n_voters = 3 + static_cast<std::uint32_t>(rng.below(4));
            params.eval_size_min = 2;
            params.eval_size_max =
                2 + static_cast<std::uint32_t>(rng.below(params.n_alternatives - 1));
            params.coverage_bias = rng.below(2) == 0 ? 0.0 : 1.0;
            params.seed = rng.next();
            const Profile original = random_profile(params);

            // Permuted document: shuffled header tokens, shuffled voter
            // lines, shuffled tokens inside each line.
            std::vector<std::string> lines;
            {
                std::vector<std::uint32_t> alt_order(original.alternative_count());
                for (std::uint32_t a = 0; a < alt_order.size(); ++a) {
                    alt_order[a] = a;
                }
                for (std::size_t k = 0; k + 1 < alt_order.size(); ++k) {
                    const std::size_t j = k + static_cast<std::size_t>(rng.below(alt_order.size() - k));
                    std::swap(alt_order[k], alt_order[j]);
                }
                std::string header = "alternatives:";
                for (std::uint32_t a : alt_order) {
                    header += ' ';
                    header += original.alternatives[a];
                }
                lines.push_back(std::move(header));

                std::vector<std::uint32_t> voter_order(original.voter_count());
                for (std::uint32_t v = 0; v < voter_order.size(); ++v) {
                    voter_order[v] = v;
                }
                for (std::size_t k = 0; k + 1 < voter_order.size(); ++k) {
                    const std::size_t j =
                        k + static_cast<std::size_t>(rng.below(voter_order.size() - k));
                    std::swap(voter_order[k], voter_order[j]);
                }
                for (std::uint32_t v : voter_order) {
                    std::vector<std::uint32_t> eval = original.evals[v];
                    for (std::size_t k = 0; k + 1 < eval.size(); ++k) {
                        const std::size_t j = k + static_cast<std::size_t>(rng.below(eval.size() - k));
                        std::swap(eval[k], eval[j]);
                    }
                    std::string line = original.voters[v] + ":";
                    for (std::uint32_t a : eval) {
                        line += ' ';
                        line += original.alternatives[a];
                    }
                    lines.push_back(std::move(line));
                }
            }
            std::string permuted_doc;
            for (const auto &line : lines) {
                permuted_doc += line;
                permuted_doc += '\n';
            }

            const Profile a = parse_profile(serialize_profile(original), ProfileMode::relaxed);
            const Profile b = parse_profile(permuted_doc, ProfileMode::relaxed);
            const CoverageReport ra = check_coverage(a, ProfileMode::relaxed);
            const CoverageReport rb = check_coverage(b, ProfileMode::relaxed);

            ++local.instances;
            if (ra.holds != rb.holds) {
                ++local.holds_flips;
                if (local.first_issue.empty()) {
                    local.first_issue = "holds flipped under permutation: " + profile_brief(original);
                }
            }
            if (label_family(ra, a) != label_family(rb, b)) {
                ++local.family_mismatches;
                if (local.first_issue.empty()) {
                    local.first_issue = "block families differ: " + profile_brief(original);
                }
            }
            auto check_tie_break = [&](const Profile &prof, const CoverageReport &rep) {
                for (std::uint32_t blk = 0; blk < rep.decomposition.blocks.size(); ++blk) {
                    if (rep.witnesses[blk] !=
                        first_covering_voter(prof, rep.decomposition.blocks[blk].vertices)) {
                        ++local.tie_break_violations;
                        if (local.first_issue.empty()) {
                            local.first_issue = "tie-break violated: " + profile_brief(prof);
                        }
                    }
                }
            };
            check_tie_break(a, ra);
            check_tie_break(b, rb);

            const std::string json1 = emit_report(ra, nullptr, a, ReportFormat::json);
            const std::string json2 = emit_report(ra, nullptr, a, ReportFormat::json);
            if (json1 != json2) {
                ++local.unstable_outputs;
                if (local.first_issue.empty()) {
                    local.first_issue = "json output unstable: " + profile_brief(original);
                }
            }
        }
#pragma omp critical
        {
            stats.instances += local.instances;
            stats.holds_flips += local.holds_flips;
            stats.family_mismatches += local.family_mismatches;
            stats.tie_break_violations += local.tie_break_violations;
            stats.unstable_outputs += local.unstable_outputs;
            if (stats.first_issue.empty()) {
                stats.first_issue = local.first_issue;
            }
        }
    }
    return stats;
}

}  // namespace blockcover

// blockcover: decides whether every block (biconnected component) of the
// voters' union graph is fully evaluated by some voter, and derives the
// local-dictator assignment for profiles that pass.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blockcover/bcc.hpp"
#include "blockcover/condition.hpp"
#include "blockcover/crosscheck.hpp"
#include "blockcover/gen.hpp"
#include "blockcover/oracle.hpp"
#include "blockcover/parse.hpp"
#include "blockcover/report.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw blockcover::Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

blockcover::ProfileMode parse_mode(const std::string &mode) {
    if (mode == "strict") {
        return blockcover::ProfileMode::strict;
    }
    if (mode == "relaxed") {
        return blockcover::ProfileMode::relaxed;
    }
    throw blockcover::Error("unknown mode '" + mode + "' (use strict or relaxed)");
}

blockcover::ReportFormat parse_format(const std::string &format) {
    if (format == "text") {
        return blockcover::ReportFormat::text;
    }
    if (format == "json") {
        return blockcover::ReportFormat::json;
    }
    throw blockcover::Error("unknown format '" + format + "' (use text or json)");
}

int run_check(const std::string &file, const std::string &mode, const std::string &format,
              bool with_dictators) {
    const blockcover::Profile p = blockcover::parse_profile(read_file(file), parse_mode(mode));
    const blockcover::CoverageReport report = blockcover::check_coverage(p, parse_mode(mode));

    if (report.holds && with_dictators) {
        const blockcover::DictatorAssignment d = blockcover::local_dictators(p, report);
        std::cout << blockcover::emit_report(report, &d, p, parse_format(format));
    } else {
        std::cout << blockcover::emit_report(report, nullptr, p, parse_format(format));
    }
    return report.holds ? kExitHolds : kExitFails;
}

int run_decompose(const std::string &profile_file, const std::string &graph_file,
                  const std::string &mode, const std::string &format) {
    blockcover::Decomposition d;
    std::vector<std::string> labels;
    if (!graph_file.empty()) {
        const blockcover::LabeledGraph lg = blockcover::parse_edge_list(read_file(graph_file));
        d = blockcover::biconnected_components(lg.graph);
        labels = lg.labels;
    } else {
        const blockcover::Profile p =
            blockcover::parse_profile(read_file(profile_file), parse_mode(mode));
        d = blockcover::biconnected_components(blockcover::union_graph(p));
        labels = p.alternatives;
    }
    std::cout << blockcover::emit_decomposition(d, labels, parse_format(format));
    return kExitHolds;
}

int run_verify(const std::string &file, std::uint64_t random_count, std::uint64_t seed,
               std::uint32_t max_vertices, const std::string &mode) {
    blockcover::SweepStats stats;
    if (!file.empty()) {
        const blockcover::Profile p = blockcover::parse_profile(read_file(file), parse_mode(mode));
        if (blockcover::union_graph(p).vertex_count() > max_vertices) {
            throw blockcover::TooLargeError("union graph exceeds --max-vertices " +
                                            std::to_string(max_vertices));
        }
        stats = blockcover::crosscheck_profile(p, max_vertices, parse_mode(mode));
    } else {
        stats = blockcover::sweep_random_profiles(random_count, seed,
                                                  std::min<std::uint32_t>(max_vertices, 10), 6);
        stats.absorb(blockcover::sweep_random_graphs(random_count, seed + 1, max_vertices));
    }

    std::cout << "instances: " << stats.instances << "\n"
              << "passing: " << stats.holds_count << "\n"
              << "coverage mismatches: " << stats.coverage_mismatches << "\n"
              << "decomposition mismatches: " << stats.bcc_mismatches << "\n"
              << "clique violations: " << stats.clique_violations << "\n"
              << "maximal-cycle mismatches: " << stats.maximal_mismatches << "\n"
              << "a0 mismatches: " << stats.a0_mismatches << "\n";
    if (!stats.clean()) {
        std::cout << "first issue: " << stats.first_issue << "\n";
        return kExitFails;
    }
    std::cout << "agreement: 100%\n";
    return kExitHolds;
}

int run_gen(std::uint32_t alternatives, std::uint32_t voters, std::uint32_t min_size,
            std::uint32_t max_size, double bias, std::uint64_t seed) {
    blockcover::GenParams params;
    params.n_alternatives = alternatives;
    params.n_voters = voters;
    params.eval_size_min = min_size;
    params.eval_size_max = max_size == 0 ? alternatives : max_size;
    params.coverage_bias = bias;
    params.seed = seed;
    std::cout << blockcover::serialize_profile(blockcover::random_profile(params));
    return kExitHolds;
}

int run_bench(std::uint32_t vertices, std::uint64_t edges, std::uint64_t seed,
              std::uint32_t repeat) {
    using clock = std::chrono::steady_clock;
    const blockcover::Graph g = blockcover::random_connected_graph(vertices, edges, seed);

    std::vector<double> times_ms;
    std::size_t blocks = 0;
    for (std::uint32_t r = 0; r < repeat; ++r) {
        const auto start = clock::now();
        const blockcover::Decomposition d = blockcover::biconnected_components(g);
        const auto stop = clock::now();
        blocks = d.block_count();
        times_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::vector<double> sorted = times_ms;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];

    std::cout << "vertices: " << g.vertex_count() << "\n"
              << "edges: " << g.edge_count() << "\n"
              << "blocks: " << blocks << "\n"
              << "repeats: " << repeat << "\n"
              << "median_ms: " << median << "\n"
              << "min_ms: " << sorted.front() << "\n"
              << "max_ms: " << sorted.back() << "\n";
    return kExitHolds;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"block coverage analysis for incomplete-ranking profiles"};
    app.require_subcommand(1);

    std::string file;
    std::string graph_file;
    std::string mode = "strict";
    std::string format = "text";

    auto *check = app.add_subcommand("check", "decide the coverage condition for a profile");
    check->add_option("file", file, "profile document")->required();
    check->add_option("--mode", mode, "strict|relaxed");
    check->add_option("--format", format, "text|json");

    auto *decompose =
        app.add_subcommand("decompose", "biconnected components of the union graph");
    auto *dec_file = decompose->add_option("file", file, "profile document");
    auto *dec_graph = decompose->add_option("--graph", graph_file, "edge-list document");
    decompose->add_option("--mode", mode, "strict|relaxed");
    decompose->add_option("--format", format, "text|json");
    dec_file->excludes(dec_graph);

    auto *dictators =
        app.add_subcommand("dictators", "coverage report plus the local-dictator assignment");
    dictators->add_option("file", file, "profile document")->required();
    dictators->add_option("--mode", mode, "strict|relaxed");
    dictators->add_option("--format", format, "text|json");

    std::uint64_t random_count = 0;
    std::uint64_t seed = 1;
    std::uint32_t max_vertices = blockcover::oracle::kDefaultMaxVertices;
    auto *verify = app.add_subcommand("verify", "cross-check production against the oracles");
    auto *verify_file = verify->add_option("file", file, "profile document");
    auto *verify_random =
        verify->add_option("--random", random_count, "number of random instances");
    verify->add_option("--seed", seed, "generator seed");
    verify->add_option("--max-vertices", max_vertices, "oracle vertex bound");
    verify->add_option("--mode", mode, "strict|relaxed");
    verify_file->excludes(verify_random);

    std::uint32_t alternatives = 0;
    std::uint32_t voters = 0;
    std::uint32_t min_size = 2;
    std::uint32_t max_size = 0;
    double bias = 0.0;
    auto *gen = app.add_subcommand("gen", "emit a seeded random profile document");
    gen->add_option("--alternatives", alternatives, "number of alternatives")->required();
    gen->add_option("--voters", voters, "number of voters")->required();
    gen->add_option("--min", min_size, "smallest evaluation-set size");
    gen->add_option("--max", max_size, "largest evaluation-set size (default: all)");
    gen->add_option("--bias", bias, "probability of steering toward a passing instance");
    gen->add_option("--seed", seed, "generator seed");

    std::uint32_t bench_vertices = 100000;
    std::uint64_t bench_edges = 300000;
    std::uint32_t repeat = 5;
    auto *bench = app.add_subcommand("bench", "time the decomposition on a random graph");
    bench->add_option("--vertices", bench_vertices, "vertex count");
    bench->add_option("--edges", bench_edges, "edge count");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--repeat", repeat, "timing repetitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (check->parsed()) {
            return run_check(file, mode, format, false);
        }
        if (decompose->parsed()) {
            if (file.empty() && graph_file.empty()) {
                throw blockcover::Error("decompose needs a profile file or --graph");
            }
            return run_decompose(file, graph_file, mode, format);
        }
        if (dictators->parsed()) {
            return run_check(file, mode, format, true);
        }
        if (verify->parsed()) {
            if (file.empty() && random_count == 0) {
                throw blockcover::Error("verify needs a profile file or --random");
            }
            return run_verify(file, random_count, seed, max_vertices, mode);
        }
        if (gen->parsed()) {
            return run_gen(alternatives, voters, min_size, max_size, bias, seed);
        }
        if (bench->parsed()) {
            if (repeat == 0) {
                throw blockcover::Error("--repeat must be positive");
            }
            return run_bench(bench_vertices, bench_edges, seed, repeat);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

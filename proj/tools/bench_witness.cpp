// Compares the serial and OpenMP witness-search kernels on a large generated
// profile. The two must return identical assignments; this target reports
// the speedup.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "blockcover/bcc.hpp"
#include "blockcover/condition.hpp"
#include "blockcover/gen.hpp"

using namespace blockcover;

namespace {

double median_ms(std::vector<double> &times) {
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

}  // namespace

int main(int argc, char **argv) {
    // Pair evaluations over many alternatives keep the union graph sparse,
    // which is the many-block regime the kernel is built for. Larger
    // --eval-max merges everything into one giant block.
    std::uint32_t alternatives = 8000;
    std::uint32_t voters = 6000;
    std::uint32_t eval_max = 2;
    std::uint32_t repeat = 7;
    std::uint64_t seed = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const std::uint64_t value = std::stoull(argv[i + 1]);
        if (flag == "--alternatives") {
            alternatives = static_cast<std::uint32_t>(value);
        } else if (flag == "--voters") {
            voters = static_cast<std::uint32_t>(value);
        } else if (flag == "--eval-max") {
            eval_max = static_cast<std::uint32_t>(value);
        } else if (flag == "--repeat") {
            repeat = static_cast<std::uint32_t>(value);
        } else if (flag == "--seed") {
            seed = value;
        } else {
            std::cerr << "unknown flag " << flag << "\n";
            return 2;
        }
    }

    GenParams params;
    params.n_alternatives = alternatives;
    params.n_voters = voters;
    params.eval_size_min = 2;
    params.eval_size_max = eval_max;
    params.coverage_bias = 0.0;
    params.seed = seed;
    const Profile p = random_profile(params);
    const Decomposition d = biconnected_components(union_graph(p));

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif
    std::cout << "alternatives: " << alternatives << "  voters: " << voters
              << "  blocks: " << d.block_count() << "\n";

    using clock = std::chrono::steady_clock;
    std::vector<double> serial_times, parallel_times;
    std::vector<std::int32_t> serial_result, parallel_result;
    for (std::uint32_t r = 0; r < repeat; ++r) {
        auto t0 = clock::now();
        serial_result = find_witnesses(d, p, WitnessMode::serial);
        auto t1 = clock::now();
        parallel_result = find_witnesses(d, p, WitnessMode::parallel);
        auto t2 = clock::now();
        serial_times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        parallel_times.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
    }

    if (serial_result != parallel_result) {
        std::cerr << "FAIL: kernels disagree\n";
        return 1;
    }

    const double serial = median_ms(serial_times);
    const double parallel = median_ms(parallel_times);
    std::cout << "serial median_ms: " << serial << "\n"
              << "parallel median_ms: " << parallel << "\n"
              << "speedup: " << (parallel > 0 ? serial / parallel : 0.0) << "\n"
              << "results identical: yes\n";
    return 0;
}

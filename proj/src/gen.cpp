#include "blockcover/gen.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "blockcover/bcc.hpp"
#include "blockcover/condition.hpp"

namespace blockcover {

namespace {

void require(bool ok, const std::string &msg) {
    if (!ok) {
        throw ParamInvalidError(msg);
    }
}

std::vector<std::uint32_t> sample_distinct(SplitMix64 &rng, std::uint32_t universe,
                                           std::uint32_t count) {
    std::vector<std::uint32_t> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(universe - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

// Replaces voters until every block on >= 3 vertices is covered. Replaced
// voters get exactly the block's vertex set and are protected from later
// replacement while unprotected voters remain. Bounded rounds; the final
// fallback hands one voter every vertex of the union graph, which collapses
// it into a single covered clique.
void steer_to_passing(Profile &p, SplitMix64 &rng) {
    const std::uint32_t n_voters = static_cast<std::uint32_t>(p.voter_count());
    std::vector<bool> protected_voter(n_voters, false);

    auto pick_victim = [&]() {
        std::uint32_t v = static_cast<std::uint32_t>(rng.below(n_voters));
        for (std::uint32_t step = 0; step < n_voters; ++step) {
            const std::uint32_t candidate = (v + step) % n_voters;
            if (!protected_voter[candidate]) {
                return candidate;
            }
        }
        return v;  // everyone protected; overwrite anyway
    };

    for (int round = 0; round < 16; ++round) {
        const Decomposition d = biconnected_components(union_graph(p));
        const auto witnesses = find_witnesses(d, p, WitnessMode::serial);
        bool all_covered = true;
        for (std::uint32_t id : d.size3plus) {
            if (witnesses[id] >= 0) {
                continue;
            }
            all_covered = false;
            const std::uint32_t victim = pick_victim();
            p.evals[victim] = d.blocks[id].vertices;
            protected_voter[victim] = true;
        }
        if (all_covered) {
            return;
        }
    }

    const Graph g = union_graph(p);
    if (g.edge_count() > 0) {
        const auto verts = g.vertices();
        p.evals[rng.below(n_voters)].assign(verts.begin(), verts.end());
    }
}

}  // namespace

Profile random_profile(const GenParams &params) {
    require(params.n_alternatives > 0, "n_alternatives must be positive");
    require(params.n_voters > 0, "n_voters must be positive");
    require(params.eval_size_min >= 2, "eval_size_min must be >= 2");
    require(params.eval_size_max >= params.eval_size_min, "eval size bounds out of order");
    require(params.eval_size_max <= params.n_alternatives,
            "eval_size_max exceeds n_alternatives");
    require(params.coverage_bias >= 0.0 && params.coverage_bias <= 1.0,
            "coverage_bias must lie in [0, 1]");

    SplitMix64 rng(params.seed);
    Profile p;
    p.alternatives.reserve(params.n_alternatives);
    for (std::uint32_t a = 0; a < params.n_alternatives; ++a) {
        p.alternatives.push_back("a" + std::to_string(a + 1));
    }
    p.voters.reserve(params.n_voters);
    for (std::uint32_t v = 0; v < params.n_voters; ++v) {
        p.voters.push_back("v" + std::to_string(v + 1));
        const std::uint32_t size =
            params.eval_size_min +
            static_cast<std::uint32_t>(rng.below(params.eval_size_max - params.eval_size_min + 1));
        p.evals.push_back(sample_distinct(rng, params.n_alternatives, size));
    }

    if (params.coverage_bias > 0.0 && rng.unit() < params.coverage_bias) {
        steer_to_passing(p, rng);
    }
    return p;
}

Graph random_connected_graph(std::uint32_t n_vertices, std::uint64_t n_edges,
                             std::uint64_t seed) {
    require(n_vertices >= 1, "need at least one vertex");
    const std::uint64_t max_edges =
        static_cast<std::uint64_t>(n_vertices) * (n_vertices - 1) / 2;
    require(n_edges + 1 >= n_vertices, "too few edges for a connected graph");
    require(n_edges <= max_edges, "edge count exceeds the complete graph");

    SplitMix64 rng(seed);
    std::vector<VertexId> order(n_vertices);
    std::iota(order.begin(), order.end(), 0);
    for (std::uint32_t i = 0; i + 1 < n_vertices; ++i) {
        const std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n_vertices - i));
        std::swap(order[i], order[j]);
    }

    std::vector<Edge> edges;
    edges.reserve(n_edges);
    std::unordered_set<std::uint64_t> used;
    used.reserve(n_edges * 2);
    auto key = [](Edge e) { return (static_cast<std::uint64_t>(e.a) << 32) | e.b; };

    // Spanning tree: each vertex attaches to a uniformly chosen predecessor
    // in a random order.
    for (std::uint32_t i = 1; i < n_vertices; ++i) {
        const Edge e = Edge::normalized(order[i], order[rng.below(i)]);
        edges.push_back(e);
        used.insert(key(e));
    }

    if (n_vertices <= 1500) {
        // Dense-friendly path: shuffle the remaining pair universe.
        std::vector<Edge> rest;
        rest.reserve(max_edges - edges.size());
        for (VertexId a = 0; a < n_vertices; ++a) {
            for (VertexId b = a + 1; b < n_vertices; ++b) {
                if (!used.contains(key(Edge{a, b}))) {
                    rest.push_back(Edge{a, b});
                }
            }
        }
        for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(rest.size() - i));
            std::swap(rest[i], rest[j]);
        }
        for (std::size_t i = 0; edges.size() < n_edges; ++i) {
            edges.push_back(rest[i]);
        }
    } else {
        while (edges.size() < n_edges) {
            const VertexId a = static_cast<VertexId>(rng.below(n_vertices));
            const VertexId b = static_cast<VertexId>(rng.below(n_vertices));
            if (a == b) {
                continue;
            }
            const Edge e = Edge::normalized(a, b);
            if (used.insert(key(e)).second) {
                edges.push_back(e);
            }
        }
    }
    return Graph::from_edges(edges);
}

}  // namespace blockcover

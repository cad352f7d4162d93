#include "blockcover/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "blockcover/condition.hpp"

namespace blockcover::oracle {

namespace {

void check_size(const Graph &g, std::size_t max_vertices, const char *who) {
    if (g.vertex_count() > max_vertices) {
        throw TooLargeError(std::string(who) + ": graph has " +
                            std::to_string(g.vertex_count()) + " vertices, oracle bound is " +
                            std::to_string(max_vertices));
    }
}

// Backtracking extension of a path anchored at its smallest vertex. A cycle
// is recorded when the path closes back to the anchor with length >= 3 and
// the second vertex is smaller than the last, which picks exactly one of the
// two traversal directions.
void extend(const Graph &g, std::vector<VertexId> &path, std::vector<bool> &on_path,
            std::vector<Cycle> &out) {
    const VertexId anchor = path.front();
    const VertexId v = path.back();
    for (VertexId w : g.neighbors(v)) {
        if (w == anchor && path.size() >= 3 && path[1] < path.back()) {
            out.push_back(Cycle{path});
        }
        if (w <= anchor || on_path[w]) {
            continue;
        }
        path.push_back(w);
        on_path[w] = true;
        extend(g, path, on_path, out);
        on_path[w] = false;
        path.pop_back();
    }
}

// True iff removing `removed` separates two of its neighbors, i.e. some pair
// of vertices is connected only through it.
bool removal_separates_neighbors(const Graph &g, VertexId removed) {
    const auto nb = g.neighbors(removed);
    if (nb.size() < 2) {
        return false;
    }
    std::vector<bool> seen(g.slot_count(), false);
    seen[removed] = true;
    std::vector<VertexId> queue{nb.front()};
    seen[nb.front()] = true;
    while (!queue.empty()) {
        const VertexId v = queue.back();
        queue.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for (VertexId w : nb) {
        if (!seen[w]) {
            return true;
        }
    }
    return false;
}

struct DisjointSets {
    std::vector<std::uint32_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

bool subgraph_connected(const std::vector<Edge> &edges, const std::vector<VertexId> &verts) {
    if (verts.empty()) {
        return false;
    }
    std::map<VertexId, std::uint32_t> index;
    for (std::uint32_t i = 0; i < verts.size(); ++i) {
        index[verts[i]] = i;
    }
    DisjointSets sets(verts.size());
    for (const Edge &e : edges) {
        sets.unite(index.at(e.a), index.at(e.b));
    }
    for (std::uint32_t i = 1; i < verts.size(); ++i) {
        if (sets.find(i) != sets.find(0)) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph &g, std::size_t max_vertices) {
    check_size(g, max_vertices, "enumerate_cycles");
    std::vector<Cycle> out;
    std::vector<VertexId> path;
    std::vector<bool> on_path(g.slot_count(), false);
    for (VertexId anchor : g.vertices()) {
        path.assign(1, anchor);
        on_path[anchor] = true;
        extend(g, path, on_path, out);
        on_path[anchor] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> naive_articulation_vertices(const Graph &g) {
    std::vector<VertexId> out;
    for (VertexId a : g.vertices()) {
        if (removal_separates_neighbors(g, a)) {
            out.push_back(a);
        }
    }
    return out;
}

Decomposition naive_biconnected_components(const Graph &g, std::size_t max_vertices) {
    check_size(g, max_vertices, "naive_biconnected_components");

    const std::vector<Edge> edges = g.edges();
    std::map<Edge, std::uint32_t> edge_index;
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        edge_index[edges[i]] = i;
    }

    DisjointSets classes(edges.size());
    for (const Cycle &c : enumerate_cycles(g, max_vertices)) {
        const auto &vs = c.vertices;
        const std::uint32_t first = edge_index.at(Edge::normalized(vs.back(), vs.front()));
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
            classes.unite(edge_index.at(Edge::normalized(vs[i], vs[i + 1])), first);
        }
    }

    std::map<std::uint32_t, std::vector<Edge>> grouped;
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        grouped[classes.find(i)].push_back(edges[i]);
    }

    std::vector<std::vector<Edge>> raw;
    raw.reserve(grouped.size());
    for (auto &[root, group] : grouped) {
        std::sort(group.begin(), group.end());
        raw.push_back(std::move(group));
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto &x, const auto &y) { return x.front() < y.front(); });

    Decomposition out;
    for (auto &group : raw) {
        Block b;
        for (const Edge &e : group) {
            b.vertices.push_back(e.a);
            b.vertices.push_back(e.b);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        b.edges = std::move(group);

        // Definition check: a class is a single edge, or connected with no
        // articulation vertex inside it.
        if (b.edges.size() > 1) {
            Graph sub = Graph::from_edges(b.edges);
            if (!subgraph_connected(b.edges, b.vertices) ||
                !naive_articulation_vertices(sub).empty()) {
                throw Error("oracle invariant broken: edge class is not biconnected");
            }
        }
        out.blocks.push_back(std::move(b));
    }

    out.articulation_vertices = naive_articulation_vertices(g);
    for (std::uint32_t i = 0; i < out.blocks.size(); ++i) {
        for (const Edge &e : out.blocks[i].edges) {
            out.edge_blocks.emplace_back(e, i);
        }
        if (out.blocks[i].vertices.size() == 2) {
            out.size2.push_back(i);
        } else {
            out.size3plus.push_back(i);
        }
    }
    std::sort(out.edge_blocks.begin(), out.edge_blocks.end());
    return out;
}

bool naive_coverage_check(const Profile &p, std::size_t max_vertices) {
    const Graph g = union_graph(p);
    for (const Cycle &c : enumerate_cycles(g, max_vertices)) {
        std::vector<VertexId> vs(c.vertices);
        std::sort(vs.begin(), vs.end());
        bool covered = false;
        for (const auto &eval : p.evals) {
            if (std::includes(eval.begin(), eval.end(), vs.begin(), vs.end())) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<VertexId>> naive_maximal_cycle_sets(const Graph &g,
                                                            std::size_t max_vertices) {
    std::vector<std::vector<VertexId>> sets;
    for (const Cycle &c : enumerate_cycles(g, max_vertices)) {
        std::vector<VertexId> vs(c.vertices);
        std::sort(vs.begin(), vs.end());
        sets.push_back(std::move(vs));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<std::vector<VertexId>> maximal;
    for (const auto &s : sets) {
        bool dominated = false;
        for (const auto &t : sets) {
            if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            maximal.push_back(s);
        }
    }

    // Self-checks from the maximal-cycle conditions: the kept family is
    // pairwise incomparable and covers every on-cycle vertex.
    if (!pairwise_incomparable(maximal)) {
        throw Error("oracle invariant broken: maximal cycle sets are comparable");
    }
    std::vector<VertexId> covered;
    for (const auto &s : maximal) {
        covered.insert(covered.end(), s.begin(), s.end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    std::vector<VertexId> on_cycle;
    for (const auto &s : sets) {
        on_cycle.insert(on_cycle.end(), s.begin(), s.end());
    }
    std::sort(on_cycle.begin(), on_cycle.end());
    on_cycle.erase(std::unique(on_cycle.begin(), on_cycle.end()), on_cycle.end());
    if (covered != on_cycle) {
        throw Error("oracle invariant broken: maximal cycle sets miss an on-cycle vertex");
    }
    return maximal;
}

}  // namespace blockcover::oracle

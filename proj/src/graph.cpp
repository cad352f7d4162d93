#include "blockcover/graph.hpp"

#include <algorithm>
#include <string>

namespace blockcover {

Graph Graph::from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto &[x, y] : pairs) {
        if (x == y) {
            throw SelfLoopError("self-loop on vertex " + std::to_string(x));
        }
        edges.push_back(Edge::normalized(x, y));
    }
    return from_edges(edges);
}

Graph Graph::from_edges(std::span<const Edge> edges) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    for (Edge &e : sorted) {
        if (e.a == e.b) {
            throw SelfLoopError("self-loop on vertex " + std::to_string(e.a));
        }
        if (e.a > e.b) {
            std::swap(e.a, e.b);
        }
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Graph g;
    g.edge_count_ = sorted.size();
    if (sorted.empty()) {
        return g;
    }

    std::size_t slots = 0;
    for (const Edge &e : sorted) {
        slots = std::max<std::size_t>(slots, e.b + 1);
    }

    std::vector<std::uint32_t> degree(slots, 0);
    for (const Edge &e : sorted) {
        ++degree[e.a];
        ++degree[e.b];
    }

    g.offsets_.assign(slots + 1, 0);
    for (std::size_t v = 0; v < slots; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    }
    g.neighbors_.resize(2 * sorted.size());

    // One pass over the lexicographically sorted edges fills each adjacency
    // list in ascending order: for a vertex x, all edges (c, x) with c < x
    // precede all edges (x, b), and both arrive with the partner ascending.
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge &e : sorted) {
        g.neighbors_[cursor[e.a]++] = e.b;
        g.neighbors_[cursor[e.b]++] = e.a;
    }

    g.vertices_.reserve(slots);
    for (std::size_t v = 0; v < slots; ++v) {
        if (degree[v] > 0) {
            g.vertices_.push_back(static_cast<VertexId>(v));
        }
    }
    return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= slot_count()) {
        return {};
    }
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
}

bool Graph::has_edge(VertexId x, VertexId y) const {
    if (x == y) {
        return false;
    }
    auto nb = neighbors(x);
    return std::binary_search(nb.begin(), nb.end(), y);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId v : vertices_) {
        for (VertexId w : neighbors(v)) {
            if (w > v) {
                out.push_back(Edge{v, w});
            }
        }
    }
    return out;
}

}  // namespace blockcover

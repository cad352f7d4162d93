#include "blockcover/bcc.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace blockcover {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

struct Frame {
    VertexId v;
    VertexId parent;
    std::uint32_t next;      // cursor into the CSR neighbor range of v
    std::uint32_t children;  // direct DFS children, for the root rule
};

}  // namespace

// Classic linked low-point depth-first search over the edge stack, with an
// explicit frame stack so deep graphs cannot overflow the call stack. Blocks
// pop off the edge stack whenever a finished child cannot reach above its
// parent; afterwards everything is brought into canonical order (edges
// sorted within a block, blocks sorted by their smallest edge).
Decomposition biconnected_components(const Graph &g) {
    Decomposition out;
    const std::size_t slots = g.slot_count();
    if (slots == 0) {
        return out;
    }

    std::vector<std::uint32_t> disc(slots, kUnvisited);
    std::vector<std::uint32_t> low(slots, 0);
    std::vector<bool> is_articulation(slots, false);
    std::vector<Frame> frames;
    std::vector<Edge> edge_stack;
    std::uint32_t timer = 0;

    std::vector<std::vector<Edge>> raw_blocks;

    for (VertexId root : g.vertices()) {
        if (disc[root] != kUnvisited) {
            continue;
        }
        disc[root] = low[root] = timer++;
        frames.push_back(Frame{root, kNoParent, 0, 0});

        while (!frames.empty()) {
            Frame &f = frames.back();
            const VertexId v = f.v;
            const auto nb = g.neighbors(v);

            if (f.next < nb.size()) {
                const VertexId w = nb[f.next++];
                if (w == f.parent) {
                    continue;
                }
                if (disc[w] == kUnvisited) {
                    edge_stack.push_back(Edge::normalized(v, w));
                    ++f.children;
                    disc[w] = low[w] = timer++;
                    frames.push_back(Frame{w, v, 0, 0});
                } else if (disc[w] < disc[v]) {
                    // Back edge to an ancestor; the mirrored visit from the
                    // descendant side is skipped.
                    edge_stack.push_back(Edge::normalized(v, w));
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }

            const std::uint32_t children = f.children;
            frames.pop_back();
            if (frames.empty()) {
                // Root finished: articulation iff it has two or more children.
                if (children >= 2) {
                    is_articulation[v] = true;
                }
                assert(edge_stack.empty());
                continue;
            }

            Frame &pf = frames.back();
            const VertexId u = pf.v;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                // v's subtree cannot reach above u: one block ends here.
                if (pf.parent != kNoParent) {
                    is_articulation[u] = true;
                }
                const Edge boundary = Edge::normalized(u, v);
                std::vector<Edge> block;
                while (true) {
                    assert(!edge_stack.empty());
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == boundary) {
                        break;
                    }
                }
                raw_blocks.push_back(std::move(block));
            }
        }
    }

    // Canonical form.
    for (auto &edges : raw_blocks) {
        std::sort(edges.begin(), edges.end());
    }
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const std::vector<Edge> &x, const std::vector<Edge> &y) {
                  return x.front() < y.front();
              });

    out.blocks.reserve(raw_blocks.size());
    for (auto &edges : raw_blocks) {
        Block b;
        b.vertices.reserve(edges.size() + 1);
        for (const Edge &e : edges) {
            b.vertices.push_back(e.a);
            b.vertices.push_back(e.b);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        b.edges = std::move(edges);
        out.blocks.push_back(std::move(b));
    }

    out.edge_blocks.reserve(g.edge_count());
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

    for (std::size_t v = 0; v < slots; ++v) {
        if (is_articulation[v]) {
            out.articulation_vertices.push_back(static_cast<VertexId>(v));
        }
    }
    return out;
}

std::uint32_t Decomposition::block_of(Edge e) const {
    if (e.a > e.b) {
        std::swap(e.a, e.b);
    }
    auto it = std::lower_bound(edge_blocks.begin(), edge_blocks.end(), e,
                               [](const auto &entry, const Edge &key) { return entry.first < key; });
    if (it == edge_blocks.end() || it->first != e) {
        throw Error("edge not in graph");
    }
    return it->second;
}

std::vector<VertexId> articulation_vertices(const Graph &g) {
    return biconnected_components(g).articulation_vertices;
}

bool is_clique(const Block &b) {
    const std::size_t n = b.vertices.size();
    return b.edges.size() == n * (n - 1) / 2;
}

std::vector<VertexId> cycle_vertices(const Decomposition &d) {
    std::vector<VertexId> out;
    for (std::uint32_t i : d.size3plus) {
        out.insert(out.end(), d.blocks[i].vertices.begin(), d.blocks[i].vertices.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> cycle_vertices(const Graph &g) {
    return cycle_vertices(biconnected_components(g));
}

}  // namespace blockcover

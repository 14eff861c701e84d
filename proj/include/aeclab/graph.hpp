#pragma once

// Finite simple graphs on vertex set {0..order-1}, stored as one
// adjacency bitmask per vertex. Edges are irreflexive and symmetric;
// both invariants are enforced at construction time.
//
// "Embedding" throughout means induced embedding: an injective vertex
// map that preserves and reflects adjacency.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aeclab/bits.hpp"

namespace aeclab {

// Raised for malformed inputs (bad vertex ids, parameters out of range).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;

    explicit Graph(int order) : order_(order), adj_(check_order(order), 0) {}

    Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const { return order_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return set_contains(adj_[u], v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u] = set_with(adj_[u], v);
        adj_[v] = set_with(adj_[v], u);
    }

    // Neighbour mask of v.
    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return set_size(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < order_; ++v) twice += set_size(adj_[v]);
        return twice / 2;
    }

    // Edge list as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order_; ++u) {
            VertexSet higher = adj_[u] & ~set_range(u + 1);
            for (int v : set_to_vector(higher)) out.emplace_back(u, v);
        }
        return out;
    }

    VertexSet vertex_set() const { return set_range(order_); }

    bool operator==(const Graph& other) const = default;

private:
    static int check_order(int order) {
        if (order < 0 || order > kMaxOrder)
            throw InputError("graph order " + std::to_string(order) + " out of range 0.." +
                             std::to_string(kMaxOrder));
        return order;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(order_));
    }

    int order_ = 0;
    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// Components

struct Partition {
    std::vector<VertexSet> blocks;  // ordered by smallest member
};

// Connected components of the subgraph induced by `within`, reported as
// vertex sets of g. Blocks are ordered by their smallest member.
inline Partition components_within(const Graph& g, VertexSet within) {
    if (!set_subset(within, g.vertex_set()))
        throw InputError("component vertex set out of range");
    Partition p;
    VertexSet todo = within;
    while (todo) {
        VertexSet block = VertexSet{1} << lowest_vertex(todo);
        while (true) {
            VertexSet grown = block;
            for (int v : set_to_vector(block)) grown |= g.neighbors(v) & within;
            if (grown == block) break;
            block = grown;
        }
        p.blocks.push_back(block);
        todo &= ~block;
    }
    return p;
}

inline Partition components(const Graph& g) { return components_within(g, g.vertex_set()); }

inline bool is_connected(const Graph& g) { return components(g).blocks.size() <= 1; }

// ---------------------------------------------------------------------------
// Induced subgraphs

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[i] = id in the host of new vertex i
};

// Subgraph induced by s, vertices renumbered 0..|s|-1 in ascending host order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!set_subset(s, g.vertex_set())) throw InputError("subgraph vertex set out of range");
    InducedSubgraph out;
    out.vertices = set_to_vector(s);
    int k = static_cast<int>(out.vertices.size());
    out.graph = Graph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(out.vertices[i], out.vertices[j])) out.graph.add_edge(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Induced embeddings

struct Embedding {
    std::vector<int> map;  // map[i] = image of pattern vertex i

    bool operator==(const Embedding& other) const = default;

    VertexSet image() const {
        VertexSet s = 0;
        for (int v : map) s = set_with(s, v);
        return s;
    }
};

// True iff e maps pattern h into g injectively, preserving and
// reflecting adjacency.
inline bool is_induced_embedding(const Graph& h, const Graph& g, const Embedding& e) {
    int hn = h.order();
    if (static_cast<int>(e.map.size()) != hn) return false;
    VertexSet used = 0;
    for (int v : e.map) {
        if (v < 0 || v >= g.order() || set_contains(used, v)) return false;
        used = set_with(used, v);
    }
    for (int i = 0; i < hn; ++i)
        for (int j = i + 1; j < hn; ++j)
            if (h.has_edge(i, j) != g.has_edge(e.map[i], e.map[j])) return false;
    return true;
}

inline constexpr std::uint64_t kNoCap = ~std::uint64_t{0};

// All induced embeddings of h into g, emitted in lexicographic order of
// the map vector. Enumeration stops once cap embeddings were produced.
inline std::vector<Embedding> enumerate_induced_embeddings(const Graph& h, const Graph& g,
                                                           std::uint64_t cap = kNoCap) {
    std::vector<Embedding> out;
    int hn = h.order(), gn = g.order();
    if (cap == 0) return out;
    if (hn == 0) {
        out.push_back(Embedding{});  // the empty map
        return out;
    }
    if (hn > gn) return out;
    std::vector<int> map(hn);
    // candidates[d] = admissible images for pattern vertex d given map[0..d-1]
    std::vector<VertexSet> candidates(hn);
    candidates[0] = g.vertex_set();
    int depth = 0;
    VertexSet remaining = candidates[0];
    std::vector<VertexSet> pending(hn);
    pending[0] = remaining;
    while (depth >= 0) {
        if (!pending[depth]) {
            --depth;
            continue;
        }
        int v = lowest_vertex(pending[depth]);
        pending[depth] = set_without(pending[depth], v);
        map[depth] = v;
        if (depth + 1 == hn) {
            out.push_back(Embedding{map});
            if (out.size() >= cap) return out;
            continue;
        }
        // restrict the next level: match adjacency with everything assigned
        VertexSet next = g.vertex_set();
        for (int i = 0; i <= depth; ++i) {
            VertexSet nb = g.neighbors(map[i]);
            next &= h.has_edge(i, depth + 1) ? nb : ~nb;
            next = set_without(next, map[i]);
        }
        ++depth;
        pending[depth] = next;
    }
    return out;
}

// True iff some induced embedding of h into g exists.
inline bool embeds(const Graph& h, const Graph& g) {
    return !enumerate_induced_embeddings(h, g, 1).empty();
}

// Two graphs of equal order are isomorphic exactly when one embeds in
// the other (an induced embedding between equal orders is onto).
inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    auto degrees = [](const Graph& x) {
        std::vector<int> d(x.order());
        for (int v = 0; v < x.order(); ++v) d[v] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h)) return false;
    return embeds(g, h);
}

// ---------------------------------------------------------------------------
// Sums and amalgams

struct GraphSum {
    Graph graph;
    Embedding left;   // embedding of the first summand
    Embedding right;  // embedding of the second summand
};

// Disjoint union; left keeps its ids, right is shifted up by |left|.
inline GraphSum disjoint_union(const Graph& g, const Graph& h) {
    GraphSum out;
    out.graph = Graph(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.graph.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.graph.add_edge(u + g.order(), v + g.order());
    for (int v = 0; v < g.order(); ++v) out.left.map.push_back(v);
    for (int v = 0; v < h.order(); ++v) out.right.map.push_back(v + g.order());
    return out;
}

// Pushout of m1 and m2 over the shared vertex set m0. The vertices of m0
// must carry the same ids and the same induced edges in both arguments.
// No edges are added between m1-only and m2-only vertices.
inline GraphSum amalgam_disjoint_over(VertexSet m0, const Graph& m1, const Graph& m2) {
    if (!set_subset(m0, m1.vertex_set()) || !set_subset(m0, m2.vertex_set()))
        throw InputError("shared vertex set must lie inside both graphs");
    for (int u : set_to_vector(m0))
        for (int v : set_to_vector(m0))
            if (u < v && m1.has_edge(u, v) != m2.has_edge(u, v))
                throw InputError("shared part differs between the two graphs");

    GraphSum out;
    std::vector<int> m2_to_out(m2.order(), -1);
    for (int v : set_to_vector(m0)) m2_to_out[v] = v;
    int next = m1.order();
    for (int v = 0; v < m2.order(); ++v)
        if (m2_to_out[v] < 0) m2_to_out[v] = next++;

    out.graph = Graph(next);
    for (auto [u, v] : m1.edges()) out.graph.add_edge(u, v);
    for (auto [u, v] : m2.edges()) {
        int a = m2_to_out[u], b = m2_to_out[v];
        if (!out.graph.has_edge(a, b)) out.graph.add_edge(a, b);
    }
    for (int v = 0; v < m1.order(); ++v) out.left.map.push_back(v);
    out.right.map = m2_to_out;
    return out;
}

// ---------------------------------------------------------------------------
// Cliques

// All vertex sets of size 1..max_size that induce complete subgraphs,
// in lexicographic order of the ascending member list.
inline std::vector<VertexSet> enumerate_cliques(const Graph& g, int max_size) {
    std::vector<VertexSet> out;
    std::vector<int> stack;
    auto extend = [&](auto&& self, VertexSet clique, VertexSet allowed) -> void {
        for (int v : set_to_vector(allowed)) {
            VertexSet bigger = set_with(clique, v);
            out.push_back(bigger);
            if (set_size(bigger) < max_size)
                self(self, bigger, allowed & g.neighbors(v) & ~set_range(v + 1));
        }
    };
    if (max_size >= 1) extend(extend, 0, g.vertex_set());
    return out;
}

// Order of a largest clique; 0 for the empty graph.
inline int clique_number(const Graph& g) {
    int best = 0;
    auto grow = [&](auto&& self, int size, VertexSet allowed) -> void {
        best = std::max(best, size);
        if (size + set_size(allowed) <= best) return;  // bound
        for (int v : set_to_vector(allowed)) {
            self(self, size + 1, allowed & g.neighbors(v) & ~set_range(v + 1));
        }
    };
    grow(grow, 0, g.vertex_set());
    return best;
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// Largest shared induced subgraph

// Largest k such that some k-vertex induced subgraph of g has an induced
// embedding into m; 0 when either graph is empty. Searched from the top
// size downwards so the first hit is the answer.
inline int common_count(const Graph& g, const Graph& m) {
    for (int k = std::min(g.order(), m.order()); k >= 1; --k) {
        bool found = !for_each_subset_of_size(g.vertex_set(), k, [&](VertexSet s) {
            return !embeds(induced_subgraph(g, s).graph, m);
        });
        if (found) return k;
    }
    return 0;
}

}  // namespace aeclab

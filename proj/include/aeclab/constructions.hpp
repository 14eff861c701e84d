#pragma once

// Deterministic graph constructions: standard families, the layered
// example graphs used by the stand-in experiments, an isomorphism-class
// corpus for exhaustive sweeps, and a seeded random corpus.

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <vector>

#include "aeclab/graph.hpp"

namespace aeclab {

inline Graph gen_edgeless(int m) { return Graph(m); }

inline Graph gen_complete(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

inline Graph gen_path(int m) {
    Graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph gen_cycle(int m) {
    if (m < 3) throw InputError("a cycle needs at least 3 vertices");
    Graph g = gen_path(m);
    g.add_edge(m - 1, 0);
    return g;
}

// Layered graph on mu vertices: 0..n-1 are isolated, two high vertices
// are adjacent exactly when they are at least n apart. Independent sets
// among the high vertices are windows of fewer than n consecutive ids,
// so the independence number is n + min(n, mu - n).
inline Graph gen_example_n(int mu, int n) {
    if (n < 1 || mu < n) throw InputError("layered example needs mu >= n >= 1");
    Graph g(mu);
    for (int a = n; a < mu; ++a)
        for (int b = a + n; b < mu; ++b) g.add_edge(a, b);
    return g;
}

inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

// ---------------------------------------------------------------------------
// Isomorphism-class corpus

namespace detail {

// Upper-triangle edge mask of g under the identity labeling.
inline std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    int bit = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v, ++bit)
            if (g.has_edge(u, v)) mask |= std::uint64_t{1} << bit;
    return mask;
}

inline Graph graph_from_edge_mask(int order, std::uint64_t mask) {
    Graph g(order);
    int bit = 0;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

// Smallest edge mask over all relabelings. Usable up to order 8 or so.
inline std::uint64_t canonical_edge_mask(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        int bit = 0;
        bool dead = false;
        for (int u = 0; u < n && !dead; ++u)
            for (int v = u + 1; v < n; ++v, ++bit) {
                if (g.has_edge(perm[u], perm[v])) {
                    mask |= std::uint64_t{1} << bit;
                    if (mask > best) {  // cannot improve anymore on this prefix
                        dead = true;
                        break;
                    }
                }
            }
        if (!dead && mask < best) best = mask;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? 0 : best;
}

}  // namespace detail

// One representative per isomorphism class of graphs with exactly m
// vertices, ordered by canonical edge mask. Supported up to m = 7.
inline const std::vector<Graph>& graph_classes_of_order(int m) {
    if (m < 0 || m > 7) throw InputError("class enumeration supported for orders 0..7");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (int k = static_cast<int>(cache.size()); k <= m; ++k) {
        std::vector<Graph> out;
        if (k == 0) {
            out.push_back(Graph(0));
        } else {
            // every class on k vertices extends some class on k-1 vertices
            std::vector<std::uint64_t> keys;
            for (const Graph& parent : cache.at(k - 1)) {
                for (VertexSet nb = 0; nb < (VertexSet{1} << (k - 1)); ++nb) {
                    Graph candidate(k);
                    for (auto [u, v] : parent.edges()) candidate.add_edge(u, v);
                    for (int v : set_to_vector(nb)) candidate.add_edge(v, k - 1);
                    keys.push_back(detail::canonical_edge_mask(candidate));
                }
            }
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            for (std::uint64_t key : keys) out.push_back(detail::graph_from_edge_mask(k, key));
        }
        cache.emplace(k, std::move(out));
    }
    return cache.at(m);
}

// All isomorphism classes of order 0..m, smaller orders first.
inline std::vector<Graph> graph_classes_up_to(int m) {
    std::vector<Graph> out;
    for (int k = 0; k <= m; ++k)
        for (const Graph& g : graph_classes_of_order(k)) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------
// Seeded randomness

// Edge probability p, identical output for identical (m, p, seed) on
// every platform: mt19937_64 is fully specified and the draw avoids
// distribution objects, whose algorithms the standard leaves open.
inline Graph random_graph(int m, double p, std::uint64_t seed) {
    if (m < 0 || m > Graph::kMaxOrder) throw InputError("random graph order out of range");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
    std::mt19937_64 gen(seed);
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            double draw = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (draw < p) g.add_edge(u, v);
        }
    return g;
}

// Published defaults for the seeded random corpus.
inline constexpr std::uint64_t kCorpusSeedBase = 900001;
inline constexpr double kCorpusDensities[] = {0.2, 0.5, 0.8};
inline constexpr int kCorpusPerSize = 50;

// 50 graphs per size in 3..max_order per density, seeds derived from the
// base seed in a fixed order.
inline std::vector<Graph> random_corpus(int max_order, std::uint64_t seed_base = kCorpusSeedBase) {
    std::vector<Graph> out;
    std::uint64_t seed = seed_base;
    for (double p : kCorpusDensities)
        for (int m = 3; m <= max_order; ++m)
            for (int i = 0; i < kCorpusPerSize; ++i) out.push_back(random_graph(m, p, seed++));
    return out;
}

}  // namespace aeclab

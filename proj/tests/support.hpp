#pragma once

// Shared test helpers. The naive_* functions are deliberately independent
// reimplementations — adjacency matrices, queues and permutations instead
// of bitset tricks — used as oracles against the library's answers.

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "aeclab/constructions.hpp"
#include "aeclab/graph.hpp"
#include "aeclab/relations.hpp"

namespace testsupport {

using aeclab::Graph;
using aeclab::VertexSet;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v && g.has_edge(u, v)) m[u][v] = true;
    return m;
}

// Counts injective maps of `pattern` into `host` preserving adjacency and
// non-adjacency, by plain recursion over a matrix.
inline long naive_count_induced_embeddings(const Graph& pattern, const Graph& host) {
    auto pm = adjacency_matrix(pattern);
    auto hm = adjacency_matrix(host);
    int p = pattern.order(), h = host.order();
    std::vector<int> map(p, -1);
    std::vector<bool> used(h, false);
    long count = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == p) {
            ++count;
            return;
        }
        for (int cand = 0; cand < h; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int prev = 0; prev < depth && ok; ++prev)
                if (hm[cand][map[prev]] != pm[depth][prev]) ok = false;
            if (!ok) continue;
            map[depth] = cand;
            used[cand] = true;
            self(self, depth + 1);
            used[cand] = false;
        }
    };
    rec(rec, 0);
    return count;
}

// Connected components by breadth-first search, as sorted vertex lists.
inline std::vector<std::vector<int>> naive_components(const Graph& g) {
    auto m = adjacency_matrix(g);
    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<int>> blocks;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> block;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            block.push_back(u);
            for (int v = 0; v < g.order(); ++v)
                if (m[u][v] && !seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(block);
    }
    return blocks;
}

inline int naive_independence_number(const Graph& g) {
    auto m = adjacency_matrix(g);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
        bool independent = true;
        for (int u = 0; u < g.order() && independent; ++u)
            for (int v = u + 1; v < g.order() && independent; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && m[u][v]) independent = false;
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline int naive_clique_number(const Graph& g) {
    auto m = adjacency_matrix(g);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
        bool clique = true;
        for (int u = 0; u < g.order() && clique; ++u)
            for (int v = u + 1; v < g.order() && clique; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !m[u][v]) clique = false;
        if (clique) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline bool naive_is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    auto gm = adjacency_matrix(g);
    auto hm = adjacency_matrix(h);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < g.order() && match; ++u)
            for (int v = u + 1; v < g.order() && match; ++v)
                if (gm[u][v] != hm[perm[u]][perm[v]]) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g.order() == 0;
}

// Image of g under a vertex permutation: perm[v] is v's new name.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

inline VertexSet relabel_set(VertexSet s, const std::vector<int>& perm) {
    VertexSet out = 0;
    for (int v : aeclab::set_to_vector(s)) out = aeclab::set_with(out, perm[v]);
    return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// A base graph plus two prefix extensions: m0 is vertices 0..c-1 of both
// m1 and m2 with the same induced edges, so the triple feeds directly into
// amalgam_disjoint_over and the identity-prefix search convention.
struct PrefixTriple {
    Graph m0, m1, m2;
};

inline Graph random_prefix_extension(const Graph& base, int extra, double p,
                                     std::mt19937_64& rng) {
    Graph g(base.order() + extra);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = base.order(); v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// Draws triples until `accept(t)` holds (rejection sampling); the caller's
// predicate typically enforces that the base is strong in both extensions.
template <typename Accept>
PrefixTriple random_triple(std::mt19937_64& rng, Accept&& accept, int max_base = 4,
                           int max_extra = 3) {
    std::uniform_int_distribution<int> base_order(0, max_base);
    std::uniform_int_distribution<int> extra(0, max_extra);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    for (;;) {
        PrefixTriple t;
        t.m0 = aeclab::random_graph(base_order(rng), density(rng), rng());
        t.m1 = random_prefix_extension(t.m0, extra(rng), density(rng), rng);
        t.m2 = random_prefix_extension(t.m0, extra(rng), density(rng), rng);
        if (accept(t)) return t;
    }
}

}  // namespace testsupport

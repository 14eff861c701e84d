#pragma once

// Small-set machinery. A VertexSet is a 64-bit mask: bit v set means
// vertex v is in the set. Everything in this library works on graphs
// with at most 64 vertices, so one word is always enough.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace aeclab {

using VertexSet = std::uint64_t;

inline constexpr VertexSet kEmptySet = 0;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline VertexSet set_with(VertexSet s, int v) { return s | (VertexSet{1} << v); }

inline VertexSet set_without(VertexSet s, int v) { return s & ~(VertexSet{1} << v); }

inline bool set_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

// All vertices 0..n-1.
inline VertexSet set_range(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline VertexSet set_of(std::initializer_list<int> vs) {
    VertexSet s = 0;
    for (int v : vs) s = set_with(s, v);
    return s;
}

inline VertexSet set_of(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s = set_with(s, v);
    return s;
}

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Members in ascending order.
inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

// Calls f on every subset of mask, the empty set first, in increasing
// order of the subset's numeric value. Return false from f to stop.
template <typename F>
bool for_each_subset(VertexSet mask, F&& f) {
    VertexSet sub = 0;
    while (true) {
        if (!f(sub)) return false;
        if (sub == mask) return true;
        sub = (sub - mask) & mask;  // next subset in value order
    }
}

// Calls f on every k-subset of mask in lexicographic order of the
// ascending member list. Return false from f to stop early.
template <typename F>
bool for_each_subset_of_size(VertexSet mask, int k, F&& f) {
    std::vector<int> elems = set_to_vector(mask);
    int n = static_cast<int>(elems.size());
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s = 0;
        for (int i : idx) s = set_with(s, elems[i]);
        if (!f(s)) return false;
        // advance the combination
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace aeclab

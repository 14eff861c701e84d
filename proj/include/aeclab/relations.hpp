#pragma once

// Candidate strong-submodel relations between a graph N and the
// substructure induced by a vertex subset M of N. Every predicate takes
// the pair (m, n) with m a vertex set of n; the induced graph n[m] plays
// the role of the smaller structure.
//
// All variants are invariant under renaming vertices and hold trivially
// for m = all of n. Emptiness conventions are noted per variant.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aeclab/graph.hpp"

namespace aeclab {

// Components of n[m] must not merge inside n: any two m-vertices lying
// in one component of n lie in one component of n[m]. The strict flag
// additionally requires every component of n that contains a vertex
// outside m to contain a vertex of m (nothing floats free).
struct ComponentRel {
    bool strict = false;
};

// Plain induced substructure; always holds.
struct InducedSubRel {};

// No partial copy of `forbidden` with at least `threshold` vertices
// inside n[m] extends to a larger partial copy reaching outside m.
struct ForbBoundedRel {
    Graph forbidden;
    int threshold = 0;
};

// n[m] and n contain equally large induced pieces of `forbidden`.
struct CountPreservingRel {
    Graph forbidden;
};

// No vertex outside m completes `size` vertices of m to an induced
// piece of `forbidden`.
struct NoAddRel {
    Graph forbidden;
    int size = 1;
};

// Quantifier-free type reading of NoAddRel: no adjacency pattern of an
// outside vertex over `size` vertices of m is realized inside `forbidden`.
// Kept as an independent code path; agreement with NoAddRel is a tested
// property, not an implementation shortcut.
struct TypeBoundedRel {
    Graph forbidden;
    int size = 1;
};

// Cliques of n no larger than the clique number of `forbidden` cannot
// straddle the boundary of m.
struct ForbConCliqueRel {
    Graph forbidden;
};

// Components of n[m] isomorphic to an induced piece of `forbidden` must
// already be full components of n.
struct ForbConComponentRel {
    Graph forbidden;
};

using SubmodelRelation = std::variant<ComponentRel, InducedSubRel, ForbBoundedRel,
                                      CountPreservingRel, NoAddRel, TypeBoundedRel,
                                      ForbConCliqueRel, ForbConComponentRel>;

namespace detail {
inline void check_subset(VertexSet m, const Graph& n) {
    if (!set_subset(m, n.vertex_set())) throw InputError("vertex set not inside the host graph");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Quantifier-free types

struct QfType {
    std::vector<int> base;      // the parameter vertices, ascending
    std::vector<bool> pattern;  // pattern[i]: adjacent to base[i]?

    bool operator==(const QfType&) const = default;
};

// Adjacency pattern of x over the vertex set a inside n. x must lie
// outside a.
inline QfType qf_type_of(int x, VertexSet a, const Graph& n) {
    detail::check_subset(a, n);
    if (x < 0 || x >= n.order()) throw InputError("typed vertex out of range");
    if (set_contains(a, x)) throw InputError("type base must not contain the typed vertex");
    QfType t;
    t.base = set_to_vector(a);
    for (int v : t.base) t.pattern.push_back(n.has_edge(x, v));
    return t;
}

// ---------------------------------------------------------------------------
// Individual predicates

inline bool rel_component(VertexSet m, const Graph& n, bool strict = false) {
    detail::check_subset(m, n);
    Partition inner = components_within(n, m);
    for (VertexSet block : components(n).blocks) {
        VertexSet mv = block & m;
        if (strict && (block & ~m) && !mv) return false;  // unattached new component
        if (!mv || !(block & ~m)) continue;                // nothing to merge
        bool contained = false;
        for (VertexSet ib : inner.blocks)
            if (set_subset(mv, ib)) {
                contained = true;
                break;
            }
        if (!contained) return false;
    }
    return true;
}

inline bool rel_induced(VertexSet m, const Graph& n) {
    detail::check_subset(m, n);
    return true;
}

// Fails exactly when some induced embedding of a >= threshold piece of
// `forbidden` into n[m] extends, inside n, by a vertex outside m to a
// larger induced piece of forbidden. Extensions that stay inside m are
// the smaller structure's own business and do not count.
inline bool rel_forb_bounded(VertexSet m, const Graph& n, const Graph& forbidden, int threshold) {
    detail::check_subset(m, n);
    if (threshold < 0) throw InputError("threshold must be nonnegative");
    InducedSubgraph inner = induced_subgraph(n, m);
    VertexSet outside = n.vertex_set() & ~m;
    if (!outside) return true;
    VertexSet fverts = forbidden.vertex_set();
    bool ok = for_each_subset(fverts, [&](VertexSet s) {
        int size = set_size(s);
        if (size < threshold || size == forbidden.order()) return true;
        InducedSubgraph piece = induced_subgraph(forbidden, s);
        for (const Embedding& e : enumerate_induced_embeddings(piece.graph, inner.graph)) {
            // image of the partial copy, in host ids
            std::vector<int> image(size);
            for (int i = 0; i < size; ++i) image[i] = inner.vertices[e.map[i]];
            // try to extend by one forbidden-vertex onto one outside vertex
            for (int w : set_to_vector(fverts & ~s)) {
                for (int y : set_to_vector(outside)) {
                    bool fits = true;
                    for (int i = 0; i < size && fits; ++i)
                        fits = n.has_edge(image[i], y) ==
                               forbidden.has_edge(piece.vertices[i], w);
                    if (fits) return false;  // extension found
                }
            }
        }
        return true;
    });
    return ok;
}

inline bool rel_count_preserving(VertexSet m, const Graph& n, const Graph& forbidden) {
    detail::check_subset(m, n);
    return common_count(forbidden, induced_subgraph(n, m).graph) == common_count(forbidden, n);
}

struct AddWitness {
    VertexSet base;       // the size-many vertices of m
    int added;            // the outside vertex
    Embedding embedding;  // induced embedding of n[base + added] into forbidden
};

// Canonically first (base, added) pair, if any: base runs over size-subsets
// of m in lexicographic member order, added over outside vertices ascending,
// and the embedding is the lexicographically first one.
inline std::optional<AddWitness> adds_element(VertexSet m, const Graph& n, const Graph& forbidden,
                                              int size) {
    detail::check_subset(m, n);
    if (size < 0) throw InputError("size must be nonnegative");
    VertexSet outside = n.vertex_set() & ~m;
    std::optional<AddWitness> found;
    for_each_subset_of_size(m, size, [&](VertexSet base) {
        for (int x : set_to_vector(outside)) {
            InducedSubgraph piece = induced_subgraph(n, set_with(base, x));
            auto es = enumerate_induced_embeddings(piece.graph, forbidden, 1);
            if (!es.empty()) {
                found = AddWitness{base, x, es.front()};
                return false;
            }
        }
        return true;
    });
    return found;
}

inline bool rel_noadd(VertexSet m, const Graph& n, const Graph& forbidden, int size) {
    return !adds_element(m, n, forbidden, size).has_value();
}

// Independent route: enumerate outside vertices and their quantifier-free
// types over size-subsets of m; the type is realized in `forbidden` when
// the induced structure on base + vertex embeds there.
inline bool rel_type_bounded(VertexSet m, const Graph& n, const Graph& forbidden, int size) {
    detail::check_subset(m, n);
    if (size < 0) throw InputError("size must be nonnegative");
    for (int x : set_to_vector(n.vertex_set() & ~m)) {
        bool clean = for_each_subset_of_size(m, size, [&](VertexSet base) {
            QfType t = qf_type_of(x, base, n);
            // realization: some embedding of the based structure into forbidden
            Graph pattern(size + 1);
            std::vector<int> ids = t.base;
            ids.push_back(x);
            for (int i = 0; i <= size; ++i)
                for (int j = i + 1; j <= size; ++j)
                    if (n.has_edge(ids[i], ids[j])) pattern.add_edge(i, j);
            return !embeds(pattern, forbidden);
        });
        if (!clean) return false;
    }
    return true;
}

inline bool rel_forbcon_clique(VertexSet m, const Graph& n, const Graph& forbidden) {
    detail::check_subset(m, n);
    int cap = clique_number(forbidden);
    if (cap < 1) return true;
    for (VertexSet clique : enumerate_cliques(n, cap))
        if ((clique & m) && (clique & ~m)) return false;
    return true;
}

inline bool rel_forbcon_component(VertexSet m, const Graph& n, const Graph& forbidden) {
    detail::check_subset(m, n);
    for (VertexSet block : components_within(n, m).blocks) {
        if (!embeds(induced_subgraph(n, block).graph, forbidden)) continue;
        // must already be a full component of n: no edge may leave it
        for (int v : set_to_vector(block))
            if (n.neighbors(v) & ~block) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dispatch

inline bool rel_holds(const SubmodelRelation& rel, VertexSet m, const Graph& n) {
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ComponentRel>)
                return rel_component(m, n, r.strict);
            else if constexpr (std::is_same_v<T, InducedSubRel>)
                return rel_induced(m, n);
            else if constexpr (std::is_same_v<T, ForbBoundedRel>)
                return rel_forb_bounded(m, n, r.forbidden, r.threshold);
            else if constexpr (std::is_same_v<T, CountPreservingRel>)
                return rel_count_preserving(m, n, r.forbidden);
            else if constexpr (std::is_same_v<T, NoAddRel>)
                return rel_noadd(m, n, r.forbidden, r.size);
            else if constexpr (std::is_same_v<T, TypeBoundedRel>)
                return rel_type_bounded(m, n, r.forbidden, r.size);
            else if constexpr (std::is_same_v<T, ForbConCliqueRel>)
                return rel_forbcon_clique(m, n, r.forbidden);
            else
                return rel_forbcon_component(m, n, r.forbidden);
        },
        rel);
}

// Relation between two nested vertex sets of a common host: translates
// `small` into the ids of the graph induced by `big`.
inline bool rel_holds_between(const SubmodelRelation& rel, const Graph& host, VertexSet small,
                              VertexSet big) {
    if (!set_subset(small, big)) throw InputError("nested vertex sets required");
    InducedSubgraph outer = induced_subgraph(host, big);
    VertexSet translated = 0;
    for (int i = 0; i < static_cast<int>(outer.vertices.size()); ++i)
        if (set_contains(small, outer.vertices[i])) translated = set_with(translated, i);
    return rel_holds(rel, translated, outer.graph);
}

inline std::string relation_name(const SubmodelRelation& rel) {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ComponentRel>)
                return r.strict ? "component_strict" : "component";
            else if constexpr (std::is_same_v<T, InducedSubRel>)
                return "induced";
            else if constexpr (std::is_same_v<T, ForbBoundedRel>)
                return "forb_bounded";
            else if constexpr (std::is_same_v<T, CountPreservingRel>)
                return "count";
            else if constexpr (std::is_same_v<T, NoAddRel>)
                return "noadd";
            else if constexpr (std::is_same_v<T, TypeBoundedRel>)
                return "typeb";
            else if constexpr (std::is_same_v<T, ForbConCliqueRel>)
                return "fc_clique";
            else
                return "fc_comp";
        },
        rel);
}

}  // namespace aeclab

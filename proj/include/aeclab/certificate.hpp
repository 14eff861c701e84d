#pragma once

// Machine-checkable results. Every search or axiom check returns a
// Certificate whose inputs field carries enough serialized state to
// replay the computation; verify functions live next to the producers.
//
// Serialized reports are byte-identical for identical inputs and seed:
// nlohmann::json orders keys alphabetically and elapsed_ms is zeroed
// unless timings are explicitly requested.

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "aeclab/class_spec.hpp"
#include "aeclab/dsl.hpp"
#include "aeclab/graph.hpp"
#include "aeclab/relations.hpp"

namespace aeclab {

using Json = nlohmann::json;

enum class CertKind { Pass, Witness, BoundedRefutation, CompleteRefutation };

inline const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::Pass: return "pass";
        case CertKind::Witness: return "witness";
        case CertKind::BoundedRefutation: return "bounded-refutation";
        case CertKind::CompleteRefutation: return "complete-refutation";
    }
    return "?";
}

inline CertKind cert_kind_from_name(const std::string& s) {
    if (s == "pass") return CertKind::Pass;
    if (s == "witness") return CertKind::Witness;
    if (s == "bounded-refutation") return CertKind::BoundedRefutation;
    if (s == "complete-refutation") return CertKind::CompleteRefutation;
    throw InputError("unknown certificate kind '" + s + "'");
}

struct Exhaustion {
    std::uint64_t bound = 0;     // the size bound the search ran under
    std::uint64_t explored = 0;  // candidates covered, including pruned strata
};

struct CertStats {
    std::int64_t elapsed_ms = 0;
    std::uint64_t nodes = 0;  // candidates or instances actually evaluated
};

struct Certificate {
    std::string command;
    Json inputs;
    CertKind kind = CertKind::Pass;
    std::optional<Json> witness;
    std::optional<Exhaustion> exhaustion;
    std::optional<std::string> completeness_argument;
    CertStats stats;
    std::uint64_t seed = 0;
};

inline Json certificate_to_json(const Certificate& c, bool with_timings = false) {
    Json j;
    j["command"] = c.command;
    j["inputs"] = c.inputs;
    j["kind"] = cert_kind_name(c.kind);
    if (c.witness) j["witness"] = *c.witness;
    if (c.exhaustion)
        j["exhaustion"] = Json{{"bound", c.exhaustion->bound}, {"explored", c.exhaustion->explored}};
    if (c.completeness_argument) j["completeness_argument"] = *c.completeness_argument;
    j["stats"] = Json{{"elapsed_ms", with_timings ? c.stats.elapsed_ms : 0},
                      {"nodes", c.stats.nodes}};
    j["seed"] = c.seed;
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.command = j.at("command").get<std::string>();
    c.inputs = j.at("inputs");
    c.kind = cert_kind_from_name(j.at("kind").get<std::string>());
    if (j.contains("witness")) c.witness = j.at("witness");
    if (j.contains("exhaustion"))
        c.exhaustion = Exhaustion{j.at("exhaustion").at("bound").get<std::uint64_t>(),
                                  j.at("exhaustion").at("explored").get<std::uint64_t>()};
    if (j.contains("completeness_argument"))
        c.completeness_argument = j.at("completeness_argument").get<std::string>();
    c.stats.elapsed_ms = j.at("stats").at("elapsed_ms").get<std::int64_t>();
    c.stats.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

// ---------------------------------------------------------------------------
// Serialization of the domain objects that appear inside `inputs`.
// Graphs travel as their text-format statement under a role name.

inline Json graph_to_json(const std::string& role, const Graph& g) {
    return format_graph(role, g);
}

inline Graph graph_from_json(const Json& j) {
    return parse_graph_text(j.get<std::string>()).graph;
}

inline Json vertex_set_to_json(VertexSet s) { return set_to_vector(s); }

inline VertexSet vertex_set_from_json(const Json& j) {
    VertexSet s = 0;
    for (const auto& v : j) {
        int x = v.get<int>();
        if (x < 0 || x >= Graph::kMaxOrder) throw InputError("vertex out of range in certificate");
        s = set_with(s, x);
    }
    return s;
}

inline Json embedding_to_json(const Embedding& e) { return e.map; }

inline Embedding embedding_from_json(const Json& j) {
    Embedding e;
    for (const auto& v : j) e.map.push_back(v.get<int>());
    return e;
}

inline Json rel_to_json(const SubmodelRelation& rel) {
    Json j;
    j["kind"] = relation_name(rel);
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ForbBoundedRel>) {
                j["forbidden"] = graph_to_json("forbidden", r.forbidden);
                j["threshold"] = r.threshold;
            } else if constexpr (std::is_same_v<T, CountPreservingRel> ||
                                 std::is_same_v<T, ForbConCliqueRel> ||
                                 std::is_same_v<T, ForbConComponentRel>) {
                j["forbidden"] = graph_to_json("forbidden", r.forbidden);
            } else if constexpr (std::is_same_v<T, NoAddRel> || std::is_same_v<T, TypeBoundedRel>) {
                j["forbidden"] = graph_to_json("forbidden", r.forbidden);
                j["size"] = r.size;
            }
        },
        rel);
    return j;
}

inline SubmodelRelation rel_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "component") return ComponentRel{false};
    if (kind == "component_strict") return ComponentRel{true};
    if (kind == "induced") return InducedSubRel{};
    if (kind == "forb_bounded")
        return ForbBoundedRel{graph_from_json(j.at("forbidden")), j.at("threshold").get<int>()};
    if (kind == "count") return CountPreservingRel{graph_from_json(j.at("forbidden"))};
    if (kind == "noadd")
        return NoAddRel{graph_from_json(j.at("forbidden")), j.at("size").get<int>()};
    if (kind == "typeb")
        return TypeBoundedRel{graph_from_json(j.at("forbidden")), j.at("size").get<int>()};
    if (kind == "fc_clique") return ForbConCliqueRel{graph_from_json(j.at("forbidden"))};
    if (kind == "fc_comp") return ForbConComponentRel{graph_from_json(j.at("forbidden"))};
    throw InputError("unknown relation kind '" + kind + "' in certificate");
}

inline Json expr_to_json(const SentenceExpr& e) {
    Json j;
    switch (e.op) {
        case SentenceExpr::Op::Atom:
            j["op"] = "atom";
            j["name"] = e.atom_name;
            j["graph"] = graph_to_json("atom", e.atom_graph);
            return j;
        case SentenceExpr::Op::Not: j["op"] = "not"; break;
        case SentenceExpr::Op::And: j["op"] = "and"; break;
        case SentenceExpr::Op::Or: j["op"] = "or"; break;
        case SentenceExpr::Op::Implies: j["op"] = "implies"; break;
        case SentenceExpr::Op::Iff: j["op"] = "iff"; break;
    }
    Json kids = Json::array();
    for (const SentenceExpr& k : e.kids) kids.push_back(expr_to_json(k));
    j["kids"] = kids;
    return j;
}

inline SentenceExpr expr_from_json(const Json& j) {
    std::string op = j.at("op").get<std::string>();
    if (op == "atom")
        return SentenceExpr::atom(j.at("name").get<std::string>(), graph_from_json(j.at("graph")));
    SentenceExpr e;
    if (op == "not")
        e.op = SentenceExpr::Op::Not;
    else if (op == "and")
        e.op = SentenceExpr::Op::And;
    else if (op == "or")
        e.op = SentenceExpr::Op::Or;
    else if (op == "implies")
        e.op = SentenceExpr::Op::Implies;
    else if (op == "iff")
        e.op = SentenceExpr::Op::Iff;
    else
        throw InputError("unknown sentence op '" + op + "' in certificate");
    for (const auto& k : j.at("kids")) e.kids.push_back(expr_from_json(k));
    return e;
}

inline Json class_to_json(const ClassSpec& spec) {
    Json j;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ForbClass> || std::is_same_v<T, NotAllEmbedClass>) {
                j["kind"] = std::is_same_v<T, ForbClass> ? "forb" : "notallembed";
                Json family = Json::array();
                for (size_t i = 0; i < c.family.size(); ++i)
                    family.push_back(
                        graph_to_json("member" + std::to_string(i), c.family[i]));
                j["family"] = family;
            } else if constexpr (std::is_same_v<T, ForbConClass>) {
                j["kind"] = "forbcon";
                j["forbidden"] = graph_to_json("forbidden", c.forbidden);
            } else if constexpr (std::is_same_v<T, CompMaxClass>) {
                j["kind"] = "compmax";
                j["max_component"] = c.max_component;
            } else if constexpr (std::is_same_v<T, CompCondClass>) {
                j["kind"] = "compcond";
                j["min_components"] = c.min_components;
                j["max_component"] = c.max_component;
            } else if constexpr (std::is_same_v<T, NotBothTypesClass>) {
                j["kind"] = "notboth";
                j["base"] = graph_to_json("base", c.base);
                j["p"] = c.p;
                j["q"] = c.q;
            } else {
                j["kind"] = "sentence";
                j["expr"] = expr_to_json(c.expr);
            }
        },
        spec);
    return j;
}

inline ClassSpec class_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    auto family = [&]() {
        std::vector<Graph> out;
        for (const auto& g : j.at("family")) out.push_back(graph_from_json(g));
        return out;
    };
    if (kind == "forb") return ForbClass{family()};
    if (kind == "notallembed") return NotAllEmbedClass{family()};
    if (kind == "forbcon") return ForbConClass{graph_from_json(j.at("forbidden"))};
    if (kind == "compmax") return CompMaxClass{j.at("max_component").get<int>()};
    if (kind == "compcond")
        return CompCondClass{j.at("min_components").get<int>(), j.at("max_component").get<int>()};
    if (kind == "notboth")
        return NotBothTypesClass{graph_from_json(j.at("base")), j.at("p").get<std::vector<bool>>(),
                                 j.at("q").get<std::vector<bool>>()};
    if (kind == "sentence") return SentenceClass{expr_from_json(j.at("expr"))};
    throw InputError("unknown class kind '" + kind + "' in certificate");
}

}  // namespace aeclab

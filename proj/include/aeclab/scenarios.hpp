#pragma once

// Named experiment setups. Each scenario bundles the graphs, relation,
// class, and search budget for one amalgamation or smoothness question,
// together with the outcome the setup is known to produce.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aeclab/certificate.hpp"
#include "aeclab/class_spec.hpp"
#include "aeclab/constructions.hpp"
#include "aeclab/graph.hpp"
#include "aeclab/relations.hpp"

namespace aeclab {

enum class ScenarioType {
    AmalgamSearch,        // bounded search over candidate amalgams
    ComponentConfined,    // exhaustive search confined to one component
    MinimalClosure,       // minimal strong submodels over a base set
    LimitSmoothness,      // union-of-levels stand-in for a limit stage
    CountChainNote,       // chain-union demonstration for the count relation
};

struct ScenarioParams {
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> mu;
    std::optional<int> kappa;
    std::optional<int> bound;
    std::optional<int> extra;
};

struct Scenario {
    std::string name;
    ScenarioType type = ScenarioType::AmalgamSearch;
    Json params;  // resolved numeric parameters, echoed into reports
    CertKind expected = CertKind::Pass;

    // AmalgamSearch / ComponentConfined
    ClassSpec cls = ForbClass{{}};
    SubmodelRelation rel = InducedSubRel{};
    Graph m0{0}, m1{0}, m2{0};
    Embedding e1, e2;
    int bound = 0;
    int extra = 2;

    // MinimalClosure
    Graph host{0};
    VertexSet base_set = 0;

    // LimitSmoothness
    Graph forbidden{0};
    int kappa = 0;
};

inline const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {
        "compmax",  "compcond",         "notallembed", "notboth",
        "lst-growth", "limit-smoothness", "count-chain"};
    return names;
}

namespace detail {

inline Embedding identity_embedding(int n) {
    Embedding e;
    for (int i = 0; i < n; ++i) e.map.push_back(i);
    return e;
}

}  // namespace detail

inline Scenario build_scenario(const std::string& name, const ScenarioParams& p = {}) {
    Scenario s;
    s.name = name;
    if (name == "compmax") {
        // Base vertex 0 sits in a triangle on one side and in the middle of a
        // path on the other; any amalgam keeps both images in one component,
        // which then needs at least n + 1 vertices.
        int n = p.n.value_or(3);
        if (n < 3) throw InputError("compmax needs n >= 3");
        s.type = ScenarioType::ComponentConfined;
        s.params = Json{{"n", n}};
        s.expected = CertKind::CompleteRefutation;
        s.cls = CompMaxClass{n};
        s.rel = InducedSubRel{};
        s.m0 = Graph(1);
        s.m1 = gen_complete(3);
        s.m2 = Graph(3, {{0, 1}, {0, 2}});
        s.e1 = detail::identity_embedding(1);
        s.e2 = detail::identity_embedding(1);
        s.bound = n;
        s.extra = n;  // confined search may pad the shared component up to n
    } else if (name == "compcond") {
        // Identifying across the two sides either merges the isolated partner
        // into the path's component (relation failure) or leaves a component
        // larger than the cap (class failure).
        int k = p.k.value_or(2);
        int n = p.n.value_or(2);
        if (k < 1 || n < 1) throw InputError("compcond needs k >= 1 and n >= 1");
        s.type = ScenarioType::AmalgamSearch;
        s.params = Json{{"k", k}, {"n", n}};
        s.expected = CertKind::BoundedRefutation;
        s.cls = CompCondClass{k, n};
        s.rel = ComponentRel{false};
        s.m0 = Graph(1);
        s.m1 = Graph(3, {{0, 1}, {0, 2}});
        s.m2 = Graph(2);
        s.e1 = detail::identity_embedding(1);
        s.e2 = detail::identity_embedding(1);
        s.bound = p.bound.value_or(9);
        s.extra = p.extra.value_or(2);
    } else if (name == "notallembed") {
        // One side carries the 5-cycle, the other the 7-cycle; any amalgam
        // containing both alongside the shared triangle realizes the whole
        // family at once.
        s.type = ScenarioType::AmalgamSearch;
        s.params = Json::object();
        s.expected = CertKind::BoundedRefutation;
        s.cls = NotAllEmbedClass{{gen_complete(3), gen_cycle(5), gen_cycle(7)}};
        s.rel = InducedSubRel{};
        s.m0 = gen_complete(3);
        {
            Graph m1(8);
            for (auto [u, v] : gen_complete(3).edges()) m1.add_edge(u, v);
            for (auto [u, v] : gen_cycle(5).edges()) m1.add_edge(u + 3, v + 3);
            s.m1 = m1;
            Graph m2(10);
            for (auto [u, v] : gen_complete(3).edges()) m2.add_edge(u, v);
            for (auto [u, v] : gen_cycle(7).edges()) m2.add_edge(u + 3, v + 3);
            s.m2 = m2;
        }
        s.e1 = detail::identity_embedding(3);
        s.e2 = detail::identity_embedding(3);
        s.bound = p.bound.value_or(15);
        s.extra = p.extra.value_or(2);
    } else if (name == "notboth") {
        // Over the one-vertex base, one side realizes the adjacent type and
        // the other the non-adjacent type; the class forbids hosting both.
        s.type = ScenarioType::AmalgamSearch;
        s.params = Json::object();
        s.expected = CertKind::BoundedRefutation;
        s.cls = NotBothTypesClass{Graph(1), {true}, {false}};
        s.rel = InducedSubRel{};
        s.m0 = Graph(1);
        s.m1 = Graph(2, {{0, 1}});
        s.m2 = Graph(2);
        s.e1 = detail::identity_embedding(1);
        s.e2 = detail::identity_embedding(1);
        s.bound = p.bound.value_or(8);
        s.extra = p.extra.value_or(2);
    } else if (name == "lst-growth") {
        // In the layered host, no proper induced subgraph containing the low
        // block is closed under the no-adding relation, so the closure of a
        // small set is the whole host.
        int mu = p.mu.value_or(8);
        int n = p.n.value_or(2);
        if (!(mu >= n && n >= 1)) throw InputError("lst-growth needs mu >= n >= 1");
        if (mu > Graph::kMaxOrder) throw InputError("lst-growth host exceeds the vertex cap");
        s.type = ScenarioType::MinimalClosure;
        s.params = Json{{"mu", mu}, {"n", n}};
        s.expected = CertKind::Witness;
        s.host = gen_example_n(mu, n);
        s.base_set = set_range(n);
        s.rel = NoAddRel{gen_edgeless(2 * n + 1), n};
        s.cls = ForbClass{{gen_edgeless(2 * n + 1)}};
    } else if (name == "limit-smoothness") {
        // Union of every proper level below kappa relates to the extended
        // graph, yet the full level does not: smoothness fails at the stand-in
        // limit stage.
        int kappa = p.kappa.value_or(3);
        if (kappa < 1 || kappa + 3 > Graph::kMaxOrder)
            throw InputError("limit-smoothness needs 1 <= kappa <= vertex cap - 3");
        s.type = ScenarioType::LimitSmoothness;
        s.params = Json{{"kappa", kappa}};
        s.expected = CertKind::Witness;
        s.forbidden = gen_edgeless(kappa + 2);
        s.kappa = kappa;
    } else if (name == "count-chain") {
        // At finite scale every valid count-preserving chain is stationary in
        // the tracked count, so the chain-union conclusion holds; the recorded
        // counts document why nothing more can happen below limit lengths.
        s.type = ScenarioType::CountChainNote;
        s.params = Json::object();
        s.expected = CertKind::Pass;
        s.host = gen_complete(3);
        s.forbidden = gen_edgeless(2);
        s.rel = CountPreservingRel{gen_edgeless(2)};
        s.cls = ForbClass{{gen_edgeless(2)}};
    } else {
        throw InputError("unknown scenario '" + name + "'");
    }
    return s;
}

}  // namespace aeclab

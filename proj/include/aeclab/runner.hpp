#pragma once

// Command orchestration: resolves CLI-level arguments against an optional
// spec file, runs the requested computation, and assembles the JSON report.
//
// Reports are deterministic: object keys are sorted by the JSON library,
// certificates embed no wall-clock data unless timings are requested, and
// every knob that influenced the run is echoed under "config", so identical
// invocations produce byte-identical report files.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aeclab/axiom_lab.hpp"
#include "aeclab/certificate.hpp"
#include "aeclab/class_spec.hpp"
#include "aeclab/constructions.hpp"
#include "aeclab/dsl.hpp"
#include "aeclab/graph.hpp"
#include "aeclab/relations.hpp"
#include "aeclab/scenarios.hpp"

namespace aeclab {

struct RunConfig {
    std::string command;  // validate|check|axioms|amalgamate|jep|scenario|enumerate|verify
    std::optional<std::string> spec_path;
    std::optional<std::string> spec_text;  // inline spec; used when no path is given
    int max_size = 5;
    int chain_len = 4;
    int bound = 8;
    int extra = 2;
    std::uint64_t seed = 0;
    std::optional<std::string> report_path;
    bool strict_attach = false;  // strict reading of the plain component relation
    bool disjoint = false;       // amalgamate: identify base vertices only
    bool timings = false;        // include wall-clock times in certificates
    std::optional<std::string> rel_text;     // relation literal or spec-defined name
    std::optional<std::string> class_text;   // class literal or spec-defined name
    std::optional<std::string> m0_name, m1_name, m2_name;  // graph names (spec or builtin)
    std::string jep_strategy = "disjoint";
    std::string scenario_name;
    ScenarioParams scenario_params;
    std::optional<std::string> verify_path;  // report file to re-verify
    std::optional<std::string> expect;       // certificate kind required for summary.ok
};

struct RunResult {
    int exit_code = 0;
    Json report;
};

namespace detail {

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file_atomic(const std::string& path, const std::string& data) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write file '" + tmp + "'");
        out << data;
        if (!out) throw InputError("short write to '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InputError("cannot move report into place at '" + path + "'");
}

inline Graph resolve_graph_arg(const SpecFile& env, const std::string& name) {
    return env.resolve_graph(NameRef{name, SourcePos{}});
}

inline SubmodelRelation resolve_rel_arg(const SpecFile& env, const std::string& text,
                                        bool strict) {
    if (const RelDefStmt* def = env.find_rel(text)) return resolve_rel(env, def->form, strict);
    return parse_relation_literal(text, env, strict);
}

inline ClassSpec resolve_class_arg(const SpecFile& env, const std::string& text) {
    if (const ClassDefStmt* def = env.find_class(text)) return resolve_class(env, def->form);
    return parse_class_literal(text, env);
}

inline CertKind expected_kind(const RunConfig& cfg, CertKind fallback) {
    if (cfg.expect) return cert_kind_from_name(*cfg.expect);
    return fallback;
}

}  // namespace detail

inline RunResult run(const RunConfig& cfg) {
    SpecFile env;
    if (cfg.spec_path)
        env = parse_spec(detail::read_text_file(*cfg.spec_path));
    else if (cfg.spec_text)
        env = parse_spec(*cfg.spec_text);

    Json config = Json::object();
    config["seed"] = cfg.seed;
    config["timings"] = cfg.timings;
    if (cfg.spec_path) config["spec"] = *cfg.spec_path;
    if (cfg.expect) config["expect"] = *cfg.expect;

    std::vector<Certificate> certs;
    Json summary = Json::object();
    Json report = Json::object();
    bool ok = true;

    if (cfg.command == "validate") {
        if (!cfg.spec_path && !cfg.spec_text)
            throw InputError("validate needs a spec file");
        int graphs = 0, classes = 0, relations = 0, checks = 0;
        for (const SpecFile::Item& item : env.items) {
            if (std::holds_alternative<GraphDefStmt>(item)) ++graphs;
            if (std::holds_alternative<ClassDefStmt>(item)) ++classes;
            if (std::holds_alternative<RelDefStmt>(item)) ++relations;
            if (std::holds_alternative<CheckStmt>(item)) ++checks;
        }
        report["formatted"] = print_spec(env);
        summary["graphs"] = graphs;
        summary["classes"] = classes;
        summary["relations"] = relations;
        summary["checks"] = checks;
    } else if (cfg.command == "check") {
        if (!cfg.spec_path && !cfg.spec_text)
            throw InputError("check needs a spec file");
        config["strict_attach"] = cfg.strict_attach;
        for (const SpecFile::Item& item : env.items) {
            const auto* stmt = std::get_if<CheckStmt>(&item);
            if (!stmt) continue;
            if (const auto* mc = std::get_if<MemberCheck>(&stmt->body)) {
                Graph g = env.resolve_graph(mc->graph);
                const ClassDefStmt* def = env.find_class(mc->cls.name);
                if (!def) throw ParseError(mc->cls.pos, "unknown class '" + mc->cls.name + "'");
                certs.push_back(
                    certify_member_check(g, resolve_class(env, def->form), stmt->expect));
            } else {
                const auto& rc = std::get<RelCheck>(stmt->body);
                Graph g = env.resolve_graph(rc.graph);
                const RelDefStmt* def = env.find_rel(rc.rel.name);
                if (!def) throw ParseError(rc.rel.pos, "unknown relation '" + rc.rel.name + "'");
                VertexSet m = 0;
                for (int v : rc.verts) {
                    if (v < 0 || v >= g.order())
                        throw ParseError(rc.setpos, "vertex " + std::to_string(v) +
                                                        " is out of range for '" +
                                                        rc.graph.name + "'");
                    m = set_with(m, v);
                }
                certs.push_back(certify_rel_check(resolve_rel(env, def->form, cfg.strict_attach),
                                                  m, g, stmt->expect));
            }
        }
        for (const Certificate& c : certs) ok = ok && c.kind == CertKind::Pass;
    } else if (cfg.command == "axioms") {
        if (!cfg.rel_text) throw InputError("axioms needs a relation (--rel)");
        SubmodelRelation rel = detail::resolve_rel_arg(env, *cfg.rel_text, cfg.strict_attach);
        ClassSpec cls = cfg.class_text ? detail::resolve_class_arg(env, *cfg.class_text)
                                       : ClassSpec(ForbClass{{}});  // all graphs
        config["rel"] = *cfg.rel_text;
        config["class"] = cfg.class_text ? Json(*cfg.class_text) : Json("forb()");
        config["max_size"] = cfg.max_size;
        config["chain_len"] = cfg.chain_len;
        config["strict_attach"] = cfg.strict_attach;
        SweepConfig sweep{cfg.max_size, cfg.chain_len};
        certs.push_back(sweep_axiom(AxiomKind::Transitivity, rel, nullptr, sweep));
        certs.push_back(sweep_axiom(AxiomKind::CoherenceStandard, rel, nullptr, sweep));
        certs.push_back(sweep_axiom(AxiomKind::CoherenceStrong, rel, nullptr, sweep));
        certs.push_back(sweep_axiom(AxiomKind::ChainUnion, rel, &cls, sweep));
        certs.push_back(sweep_axiom(AxiomKind::Smoothness, rel, nullptr, sweep));
        for (const Certificate& c : certs) ok = ok && c.kind == CertKind::Pass;
    } else if (cfg.command == "amalgamate") {
        if (!cfg.m0_name || !cfg.m1_name || !cfg.m2_name)
            throw InputError("amalgamate needs --m0, --m1 and --m2");
        if (!cfg.rel_text || !cfg.class_text)
            throw InputError("amalgamate needs --rel and --class");
        AmalgamTask task;
        task.m0 = detail::resolve_graph_arg(env, *cfg.m0_name);
        task.m1 = detail::resolve_graph_arg(env, *cfg.m1_name);
        task.m2 = detail::resolve_graph_arg(env, *cfg.m2_name);
        task.rel = detail::resolve_rel_arg(env, *cfg.rel_text, cfg.strict_attach);
        task.cls = detail::resolve_class_arg(env, *cfg.class_text);
        // Base maps use the identity-prefix convention: the base is vertices
        // 0..|M0|-1 of each side. Rejected unless those prefixes induce M0.
        for (int i = 0; i < task.m0.order(); ++i) {
            task.e1.map.push_back(i);
            task.e2.map.push_back(i);
        }
        task.size_bound = cfg.bound;
        task.extra_budget = cfg.extra;
        task.disjoint = cfg.disjoint;
        config["m0"] = *cfg.m0_name;
        config["m1"] = *cfg.m1_name;
        config["m2"] = *cfg.m2_name;
        config["rel"] = *cfg.rel_text;
        config["class"] = *cfg.class_text;
        config["bound"] = cfg.bound;
        config["extra"] = cfg.extra;
        config["disjoint"] = cfg.disjoint;
        config["strict_attach"] = cfg.strict_attach;
        certs.push_back(search_amalgam(task));
        ok = certs.back().kind == detail::expected_kind(cfg, CertKind::Witness);
    } else if (cfg.command == "jep") {
        if (!cfg.m1_name || !cfg.m2_name) throw InputError("jep needs --m and --n");
        if (!cfg.rel_text || !cfg.class_text) throw InputError("jep needs --rel and --class");
        Graph m = detail::resolve_graph_arg(env, *cfg.m1_name);
        Graph n = detail::resolve_graph_arg(env, *cfg.m2_name);
        SubmodelRelation rel = detail::resolve_rel_arg(env, *cfg.rel_text, cfg.strict_attach);
        ClassSpec cls = detail::resolve_class_arg(env, *cfg.class_text);
        config["m"] = *cfg.m1_name;
        config["n"] = *cfg.m2_name;
        config["rel"] = *cfg.rel_text;
        config["class"] = *cfg.class_text;
        config["strategy"] = cfg.jep_strategy;
        config["bound"] = cfg.bound;
        config["extra"] = cfg.extra;
        config["strict_attach"] = cfg.strict_attach;
        certs.push_back(jep_check(cls, rel, m, n, jep_strategy_from_name(cfg.jep_strategy),
                                  cfg.bound, cfg.extra));
        ok = certs.back().kind == detail::expected_kind(cfg, CertKind::Witness);
    } else if (cfg.command == "scenario") {
        if (cfg.scenario_name.empty()) throw InputError("scenario needs a name");
        Scenario s = build_scenario(cfg.scenario_name, cfg.scenario_params);
        config["scenario"] = s.name;
        config["params"] = s.params;
        certs.push_back(run_scenario(s));
        ok = certs.back().kind == detail::expected_kind(cfg, s.expected);
    } else if (cfg.command == "enumerate") {
        if (cfg.max_size < 0 || cfg.max_size > 7)
            throw InputError("enumerate supports orders 0 through 7");
        config["max_size"] = cfg.max_size;
        detail::Stopwatch watch;
        Certificate cert;
        cert.command = "enumerate";
        cert.inputs = Json{{"max_size", cfg.max_size}};
        Json counts = Json::array();
        std::uint64_t total = 0;
        for (int m = 0; m <= cfg.max_size; ++m) {
            size_t c = graph_classes_of_order(m).size();
            counts.push_back(c);
            total += c;
        }
        cert.kind = CertKind::Pass;
        cert.witness = Json{{"counts_by_order", counts}};
        cert.stats.nodes = total;
        cert.stats.elapsed_ms = watch.elapsed_ms();
        certs.push_back(cert);
    } else if (cfg.command == "verify") {
        if (!cfg.verify_path) throw InputError("verify needs a report file");
        config["input"] = *cfg.verify_path;
        Json prior;
        try {
            prior = Json::parse(detail::read_text_file(*cfg.verify_path));
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("report is not valid JSON: ") + e.what());
        }
        if (!prior.contains("certificates") || !prior["certificates"].is_array())
            throw InputError("report has no certificate list");
        Json failures = Json::array();
        int index = 0;
        for (const Json& cj : prior["certificates"]) {
            Certificate cert = certificate_from_json(cj);
            if (!verify_certificate(cert)) {
                ok = false;
                failures.push_back(index);
            }
            ++index;
        }
        summary["checked"] = index;
        summary["failures"] = failures;
    } else {
        throw InputError("unknown command '" + cfg.command + "'");
    }

    Json cert_array = Json::array();
    Json kind_counts = Json::object();
    for (Certificate& c : certs) {
        c.seed = cfg.seed;
        cert_array.push_back(certificate_to_json(c, cfg.timings));
        std::string k = cert_kind_name(c.kind);
        kind_counts[k] = kind_counts.value(k, 0) + 1;
    }
    summary["ok"] = ok;
    if (!certs.empty()) summary["kinds"] = kind_counts;

    report["command"] = cfg.command;
    report["config"] = config;
    report["certificates"] = cert_array;
    report["summary"] = summary;

    if (cfg.report_path) detail::write_file_atomic(*cfg.report_path, report.dump(2) + "\n");
    return RunResult{ok ? 0 : 1, report};
}

}  // namespace aeclab

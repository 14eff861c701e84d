// Command-line front end.
//
// stdout carries exactly one JSON report per invocation; everything meant
// for humans (the one-line summary, diagnostics) goes to stderr, so reports
// can be compared or piped byte for byte.
//
// Exit codes: 0 the run's success condition holds, 1 it does not,
// 2 malformed input (bad flags, unparsable spec, impossible parameters).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aeclab/runner.hpp"

namespace {

void add_report_options(CLI::App* cmd, aeclab::RunConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "seed recorded in every certificate");
    cmd->add_option("--report", cfg.report_path, "also write the report to this file");
    cmd->add_flag("--timings", cfg.timings, "include wall-clock times in certificates");
}

std::string summary_line(const aeclab::RunResult& res) {
    const aeclab::Json& s = res.report["summary"];
    std::string line = res.report["command"].get<std::string>();
    line += s.value("ok", false) ? ": ok" : ": FAIL";
    if (res.report.contains("certificates"))
        line += " (" + std::to_string(res.report["certificates"].size()) + " certificates)";
    return line;
}

}  // namespace

int main(int argc, char** argv) {
    aeclab::RunConfig cfg;

    CLI::App app{"laboratory for abstract elementary classes of finite graphs"};
    app.require_subcommand(1);

    CLI::App* validate = app.add_subcommand(
        "validate", "parse a spec file and echo its canonical form");
    validate->add_option("spec", cfg.spec_path, "spec file")->required();
    add_report_options(validate, cfg);

    CLI::App* check = app.add_subcommand("check", "run a spec file's check statements");
    check->add_option("spec", cfg.spec_path, "spec file")->required();
    check->add_flag("--strict-attach", cfg.strict_attach,
                    "strict reading of the component relation");
    add_report_options(check, cfg);

    CLI::App* axioms = app.add_subcommand(
        "axioms", "sweep the axioms for a relation over the small-graph corpus");
    axioms->add_option("--rel", cfg.rel_text, "relation literal or spec-defined name")
        ->required();
    axioms->add_option("--class", cfg.class_text,
                       "class for the chain-union axiom (default: all graphs)");
    axioms->add_option("--spec", cfg.spec_path, "spec file providing named graphs");
    axioms->add_option("--max-size", cfg.max_size, "largest host order (0..7)");
    axioms->add_option("--chain-len", cfg.chain_len, "maximum chain length");
    axioms->add_flag("--strict-attach", cfg.strict_attach,
                     "strict reading of the component relation");
    add_report_options(axioms, cfg);

    CLI::App* amalgamate =
        app.add_subcommand("amalgamate", "search for an amalgam of two extensions of a base");
    amalgamate->add_option("--m0", cfg.m0_name, "base graph name")->required();
    amalgamate->add_option("--m1", cfg.m1_name, "first extension")->required();
    amalgamate->add_option("--m2", cfg.m2_name, "second extension")->required();
    amalgamate->add_option("--rel", cfg.rel_text, "relation literal or name")->required();
    amalgamate->add_option("--class", cfg.class_text, "class literal or name")->required();
    amalgamate->add_option("--spec", cfg.spec_path, "spec file providing named graphs");
    amalgamate->add_option("--bound", cfg.bound, "largest amalgam order searched");
    amalgamate->add_option("--extra", cfg.extra, "fresh vertices allowed beyond the images");
    amalgamate->add_flag("--disjoint", cfg.disjoint, "identify base vertices only");
    amalgamate->add_flag("--strict-attach", cfg.strict_attach,
                         "strict reading of the component relation");
    amalgamate->add_option("--expect", cfg.expect,
                           "certificate kind required for success");
    add_report_options(amalgamate, cfg);

    CLI::App* jep = app.add_subcommand("jep", "joint embedding of two class members");
    jep->add_option("--m", cfg.m1_name, "first graph")->required();
    jep->add_option("--n", cfg.m2_name, "second graph")->required();
    jep->add_option("--rel", cfg.rel_text, "relation literal or name")->required();
    jep->add_option("--class", cfg.class_text, "class literal or name")->required();
    jep->add_option("--spec", cfg.spec_path, "spec file providing named graphs");
    jep->add_option("--strategy", cfg.jep_strategy, "disjoint | join | search");
    jep->add_option("--bound", cfg.bound, "search strategy: largest order tried");
    jep->add_option("--extra", cfg.extra, "search strategy: fresh vertex budget");
    jep->add_flag("--strict-attach", cfg.strict_attach,
                  "strict reading of the component relation");
    jep->add_option("--expect", cfg.expect, "certificate kind required for success");
    add_report_options(jep, cfg);

    CLI::App* scenario = app.add_subcommand("scenario", "run a named study configuration");
    scenario->add_option("name", cfg.scenario_name, "scenario name")->required();
    scenario->add_option("--n", cfg.scenario_params.n, "size parameter");
    scenario->add_option("--k", cfg.scenario_params.k, "count parameter");
    scenario->add_option("--mu", cfg.scenario_params.mu, "host order parameter");
    scenario->add_option("--kappa", cfg.scenario_params.kappa, "level parameter");
    scenario->add_option("--bound", cfg.scenario_params.bound, "search size bound");
    scenario->add_option("--extra", cfg.scenario_params.extra, "fresh vertex budget");
    scenario->add_option("--expect", cfg.expect, "certificate kind required for success");
    add_report_options(scenario, cfg);

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "count graph isomorphism classes by order");
    enumerate_cmd->add_option("--max-size", cfg.max_size, "largest order (0..7)");
    add_report_options(enumerate_cmd, cfg);

    CLI::App* verify = app.add_subcommand("verify", "re-verify every certificate in a report");
    verify->add_option("input", cfg.verify_path, "report file to verify")->required();
    add_report_options(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (app.got_subcommand(validate)) cfg.command = "validate";
    else if (app.got_subcommand(check)) cfg.command = "check";
    else if (app.got_subcommand(axioms)) cfg.command = "axioms";
    else if (app.got_subcommand(amalgamate)) cfg.command = "amalgamate";
    else if (app.got_subcommand(jep)) cfg.command = "jep";
    else if (app.got_subcommand(scenario)) cfg.command = "scenario";
    else if (app.got_subcommand(enumerate_cmd)) cfg.command = "enumerate";
    else if (app.got_subcommand(verify)) cfg.command = "verify";

    try {
        aeclab::RunResult res = aeclab::run(cfg);
        std::cout << res.report.dump(2) << "\n";
        std::cerr << summary_line(res) << "\n";
        return res.exit_code;
    } catch (const aeclab::ParseError& e) {
        if (cfg.spec_path)
            std::cerr << *cfg.spec_path << ": " << e.what() << "\n";
        else
            std::cerr << e.what() << "\n";
        return 2;
    } catch (const aeclab::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

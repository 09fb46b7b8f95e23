#include "ltree/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ltree/report.hpp"

namespace ltree {

namespace {

const std::set<std::string> kCheckNames = {"metric", "axiom1", "axiom2",   "axiom3",
                                           "unique", "fork",   "condition-a"};

CheckConfig check_config(const RunConfig& rc) {
    CheckConfig cfg;
    cfg.seed = rc.seed;
    cfg.samples = rc.samples;
    cfg.chain_depth = rc.chain_depth;
    return cfg;
}

CheckReport dispatch(const std::string& name, const RunConfig& rc) {
    CheckConfig cfg = check_config(rc);
    if (name == "metric") return check_metric(rc.space, cfg);
    if (name == "axiom1") return check_axiom1(rc.space, cfg);
    if (name == "axiom2") return check_axiom2(rc.space, cfg);
    if (name == "axiom3") return check_axiom3(rc.space, cfg);
    if (name == "unique") return check_unique(rc.space, cfg);
    if (name == "fork") return check_fork(rc.space, cfg);
    if (name == "condition-a") return condition_a_probe(rc.group, cfg);
    throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig rc;
    std::string group_name_arg;

    CLI::App app{"exact-arithmetic axiom checker for Lambda-metric spaces"};
    app.add_option("--group", group_name_arg, "ordered abelian group id")->required();
    app.add_option("--space", rc.space_spec,
                   "space spec: interval:a..b | tree:@file | x1:LAMBDA | x2 | x3:A | l1grid:SIDE");
    app.add_option("--check", rc.checks, "check name (repeatable)")->required();
    app.add_option("--expect", rc.expectations, "pass|fail, paired with --check by position");
    app.add_option("--seed", rc.seed, "PRNG seed");
    app.add_option("--samples", rc.samples, "sample count per check");
    app.add_option("--chain-depth", rc.chain_depth, "witness chain length");
    app.add_option("--format", rc.format, "json|text");
    app.add_option("--out", rc.out_path, "output path (default stdout)");

    // CLI11 wants argv in reverse order for this entry point
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    auto g = group_from_name(group_name_arg);
    if (!g)
        throw std::invalid_argument("unknown group '" + group_name_arg +
                                    "' (expected int, rational, dyadic, triadic, zsqrt2, lex-int)");
    rc.group = *g;

    if (rc.checks.empty()) throw std::invalid_argument("at least one --check is required");
    for (const auto& c : rc.checks)
        if (!kCheckNames.count(c)) throw std::invalid_argument("unknown check '" + c + "'");
    for (const auto& e : rc.expectations)
        if (e != "pass" && e != "fail")
            throw std::invalid_argument("--expect takes pass or fail, got '" + e + "'");
    if (rc.expectations.size() > rc.checks.size())
        throw std::invalid_argument("more --expect values than --check values");
    if (rc.samples < 1) throw std::invalid_argument("--samples must be >= 1");
    if (rc.chain_depth < 1) throw std::invalid_argument("--chain-depth must be >= 1");
    if (rc.format != "json" && rc.format != "text")
        throw std::invalid_argument("--format takes json or text");

    bool needs_space = false;
    for (const auto& c : rc.checks) needs_space |= (c != "condition-a");
    if (needs_space && rc.space_spec.empty())
        throw std::invalid_argument("--space is required for space-level checks");
    if (!rc.space_spec.empty()) rc.space = make_space(rc.group, rc.space_spec);
    return rc;
}

RunReport run(const RunConfig& config) {
    RunReport report;
    report.config = config;
    bool has_expectations = !config.expectations.empty();
    bool all_match = true;
    for (std::size_t i = 0; i < config.checks.size(); ++i) {
        CheckReport cr = dispatch(config.checks[i], config);
        std::string expected = i < config.expectations.size() ? config.expectations[i] : "pass";
        bool match = (expected == "pass" && cr.passed()) || (expected == "fail" && cr.failed());
        all_match &= match;
        report.checks.push_back(std::move(cr));
    }
    if (has_expectations) {
        report.exit_status = all_match ? 0 : 1;
    } else {
        bool all_pass = true;
        for (const auto& cr : report.checks) all_pass &= cr.passed();
        report.exit_status = all_pass ? 0 : 1;
    }
    return report;
}

std::string emit(const RunReport& report) {
    if (report.config.format == "text") {
        std::ostringstream os;
        os << kToolVersion << "\n";
        os << "group=" << group_name(report.config.group);
        if (!report.config.space_spec.empty()) os << " space=" << report.config.space_spec;
        os << " seed=" << report.config.seed << " samples=" << report.config.samples
           << " chain-depth=" << report.config.chain_depth << "\n";
        for (const auto& cr : report.checks) os << check_report_to_text(cr) << "\n";
        os << "exit=" << report.exit_status << "\n";
        return os.str();
    }
    nlohmann::json out;
    out["version"] = kReportSchemaVersion;
    nlohmann::json cfg;
    cfg["tool"] = kToolVersion;
    cfg["group"] = std::string(group_name(report.config.group));
    cfg["space"] = report.config.space_spec;
    cfg["checks"] = report.config.checks;
    cfg["expect"] = report.config.expectations;
    cfg["seed"] = report.config.seed;
    cfg["samples"] = report.config.samples;
    cfg["chain_depth"] = report.config.chain_depth;
    out["config"] = cfg;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& cr : report.checks) checks.push_back(check_report_to_json(cr));
    out["checks"] = checks;
    out["status"] = report.exit_status == 0 ? "ok" : "mismatch";
    return out.dump(2) + "\n";
}

int cli_main(int argc, char** argv) {
    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        RunConfig config = parse_config(args);
        RunReport report = run(config);
        std::string payload = emit(report);
        if (config.out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(config.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << config.out_path << "\n";
                return 2;
            }
            out << payload;
        }
        return report.exit_status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ltree

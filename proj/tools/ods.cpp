#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ods/io.hpp"
#include "ods/opt.hpp"

namespace {

using namespace ods;

std::vector<bool> load_script(const std::string& path) {
    Json j = read_json_file(path);
    if (j.is_object()) return decisions_from_trace_json(j);
    if (!j.is_array()) throw ParseError("script: expected an array of booleans");
    std::vector<bool> out;
    for (const Json& item : j) {
        if (!item.is_boolean()) throw ParseError("script: expected an array of booleans");
        out.push_back(item.get<bool>());
    }
    return out;
}

struct AlgorithmFlags {
    std::string name = "greedy";
    int k = 2;
    std::string script_path;
};

void add_algorithm_flags(CLI::App* cmd, AlgorithmFlags& flags) {
    cmd->add_option("--algorithm", flags.name, "algorithm: greedy, k-dominate, accept-all, scripted")
        ->required()
        ->check(CLI::IsMember({"greedy", "k-dominate", "accept-all", "scripted"}));
    cmd->add_option("--k", flags.k, "threshold for k-dominate");
    cmd->add_option("--script", flags.script_path, "JSON file with the decision script");
}

AlgorithmSpec build_spec(const AlgorithmFlags& flags) {
    AlgorithmSpec spec;
    if (flags.name == "greedy") {
        spec.kind = AlgKind::Greedy;
    } else if (flags.name == "k-dominate") {
        spec.kind = AlgKind::KDominate;
        spec.k = flags.k;
    } else if (flags.name == "accept-all") {
        spec.kind = AlgKind::AcceptAll;
    } else {
        spec.kind = AlgKind::Scripted;
        if (flags.script_path.empty()) throw ParseError("scripted algorithm needs --script");
        spec.script = load_script(flags.script_path);
    }
    return spec;
}

std::vector<Vertex> load_reference_opt(const std::string& choice, const Graph& g) {
    if (choice == "brute") {
        if (is_tree(g)) return normalize_opt_no_leaves(g, tree_opt(g));
        return brute_force_opt(g);
    }
    Json j = read_json_file(choice);
    if (j.is_object()) return detail::field_int_array(j, "opt", "opt file");
    if (!j.is_array()) throw ParseError("opt file: expected an array or an object with field 'opt'");
    std::vector<Vertex> out;
    for (const Json& item : j) {
        if (!item.is_number_integer()) throw ParseError("opt file: field 'opt' must hold integers");
        out.push_back(item.get<int>());
    }
    return out;
}

int run_command(const std::string& instance_path, const AlgorithmFlags& flags, const std::string& order_policy,
                std::uint64_t seed, const std::string& trace_path) {
    OnlineInstance inst = instance_from_json(read_json_file(instance_path));
    if (!order_policy.empty()) inst.order = random_connected_order(inst.graph, seed, order_policy);
    AlgorithmSpec spec = build_spec(flags);
    if (spec.kind == AlgKind::Scripted &&
        spec.script.size() != static_cast<std::size_t>(inst.graph.vertex_count()))
        throw ParseError("script: need exactly one decision per vertex");
    GameTrace trace = run_algorithm(inst, spec);
    Json j = trace_to_json(trace);
    if (!trace_path.empty()) write_json_file(trace_path, j);
    std::cout << j.dump(2) << "\n";
    std::cerr << algorithm_name(spec) << " on n=" << inst.graph.vertex_count() << ": selected "
              << trace.selected.size() << (trace.feasible ? ", feasible" : ", NOT feasible") << "\n";
    return 0;
}

int adversary_command(const std::string& class_tag, int param, int levels, const AlgorithmFlags& flags,
                      const std::string& out_path, const std::string& trace_path, const std::string& report_path) {
    AlgorithmSpec spec = build_spec(flags);
    Decider decider = make_decider(spec, true);
    auto play = [&]() -> AdversaryOutcome {
        if (class_tag == "tree") return adversary_tree(decider, param);
        if (class_tag == "cactus") return adversary_cactus(decider, param);
        if (class_tag == "delta") return adversary_delta(decider, param);
        if (class_tag == "claw") return adversary_claw(decider, param);
        if (class_tag == "threshold") return adversary_threshold(decider, param);
        if (class_tag == "planar-bipartite") return adversary_planar_bipartite(decider, param, levels);
        if (class_tag == "sp") return adversary_sp(decider, param);
        throw ParseError("adversary: unknown class '" + class_tag + "'");
    };
    AdversaryOutcome outcome = play();

    Json report = adversary_report_to_json(outcome);
    if (!out_path.empty()) write_json_file(out_path, instance_to_json(outcome.instance));
    if (!trace_path.empty()) write_json_file(trace_path, trace_to_json(outcome.trace));
    if (!report_path.empty()) write_json_file(report_path, report);
    std::cout << report.dump(2) << "\n";
    std::cerr << "adversary " << class_tag << " param=" << param << ": n=" << outcome.instance.graph.vertex_count()
              << " alg=" << outcome.trace.selected.size() << " witness=" << outcome.opt_witness.size() << "\n";
    return 0;
}

int opt_command(const std::string& instance_path) {
    Graph g = graph_from_json(read_json_file(instance_path), "instance");
    std::vector<Vertex> opt = is_tree(g) ? tree_opt(g) : brute_force_opt(g);
    std::cout << opt_to_json(opt).dump(2) << "\n";
    std::cerr << "minimum dominating set of size " << opt.size() << "\n";
    return 0;
}

int check_command(const std::string& instance_path, const std::string& class_tag, int param, bool param_given) {
    Json j = read_json_file(instance_path);
    Graph g = graph_from_json(j, "instance");
    Json out;
    out["n"] = g.vertex_count();
    out["edge_count"] = g.edge_count();
    bool ok = true;
    if (j.contains("order")) {
        std::vector<int> order = detail::field_int_array(j, "order", "instance");
        bool valid = false;
        try {
            valid = !validate_order(g, order).has_value();
        } catch (const Error&) {
            valid = false;
        }
        out["order_valid"] = valid;
        ok = ok && valid;
    }
    if (!class_tag.empty()) {
        if ((class_tag == "bounded-degree" || class_tag == "k1t-free") && !param_given)
            throw ParseError("check: --param is required for class '" + class_tag + "'");
        bool member = check_claimed_class(class_tag, g, param);
        out["class"] = class_tag;
        out["class_ok"] = member;
        ok = ok && member;
    }
    std::cout << out.dump(2) << "\n";
    std::cerr << (ok ? "check passed" : "check FAILED") << "\n";
    return ok ? 0 : 1;
}

int audit_command(const std::string& instance_path, const std::string& trace_path, const std::string& scheme,
                  const std::string& opt_choice) {
    OnlineInstance inst = instance_from_json(read_json_file(instance_path));
    std::vector<bool> decisions = decisions_from_trace_json(read_json_file(trace_path));
    if (decisions.size() != static_cast<std::size_t>(inst.graph.vertex_count()))
        throw ParseError("trace: need exactly one decision per vertex");
    AlgorithmSpec replay{AlgKind::Scripted, 2, decisions};
    GameTrace trace = run_algorithm(inst, replay);
    std::vector<Vertex> opt = load_reference_opt(opt_choice, inst.graph);

    AuditReport report;
    if (scheme == "even") {
        ChargeMap map = spread_even(trace);
        report.conserved = total_charge(map) == Rational(static_cast<long long>(trace.selected.size()));
        report.concentration = concentration(map, inst.graph, opt);
        report.violations = charge_one_structure(map, trace).violations;
    } else {
        int delta = max_degree(inst.graph);
        HeavyLightPartition part = classify_heavy_light(trace, delta);
        BoundedDegreeCharge bd = spread_bounded_degree(trace, opt, part);
        report.conserved = bd.conserved;
        for (Vertex v : opt)
            report.concentration = std::max(report.concentration, bd.map.charge[static_cast<std::size_t>(v)]);
        report.violations = bd.violations;
        if (!part.heavy_count_ok)
            report.violations.push_back("heavy count exceeds n over the heaviness threshold");
    }
    std::cout << audit_report_to_json(report).dump(2) << "\n";
    bool ok = report.conserved && report.violations.empty();
    std::cerr << (ok ? "audit passed" : "audit FAILED") << "\n";
    return ok ? 0 : 1;
}

int sweep_command(const ExperimentConfig& cfg, const std::string& out_path, const std::string& report_path) {
    RatioReport report = sweep(cfg);
    std::string csv = to_csv(report);
    if (!out_path.empty()) write_text_file(out_path, csv);
    if (!report_path.empty()) write_json_file(report_path, ratio_report_to_json(report));
    std::cout << csv;
    std::cerr << "swept " << report.rows.size() << " runs: max ratio " << rational_to_string(report.max_ratio)
              << ", " << report.infeasible_count << " infeasible\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online dominating set toolkit"};
    app.require_subcommand(1);

    std::string instance_path, order_policy, trace_path, out_path, report_path;
    std::string class_tag, scheme = "even", opt_choice = "brute";
    std::uint64_t seed = 1;
    int param = 0, levels = 1;
    AlgorithmFlags flags;
    ExperimentConfig cfg;

    CLI::App* run_cmd = app.add_subcommand("run", "run an algorithm on an instance file");
    run_cmd->add_option("--instance", instance_path, "instance JSON")->required();
    add_algorithm_flags(run_cmd, flags);
    run_cmd->add_option("--order-policy", order_policy, "regenerate the order: bfs, dfs, random-connected")
        ->check(CLI::IsMember({"bfs", "dfs", "random-connected"}));
    run_cmd->add_option("--seed", seed, "seed for order regeneration");
    run_cmd->add_option("--trace", trace_path, "write the trace JSON here");

    CLI::App* adv_cmd = app.add_subcommand("adversary", "play an adaptive adversary against an algorithm");
    adv_cmd->add_option("--class", class_tag, "adversary family")
        ->required()
        ->check(CLI::IsMember({"tree", "cactus", "delta", "claw", "threshold", "planar-bipartite", "sp"}));
    adv_cmd->add_option("--param", param, "family parameter")->required();
    adv_cmd->add_option("--levels", levels, "extra levels for planar-bipartite");
    add_algorithm_flags(adv_cmd, flags);
    adv_cmd->add_option("--out", out_path, "write the instance JSON here");
    adv_cmd->add_option("--trace", trace_path, "write the trace JSON here");
    adv_cmd->add_option("--report", report_path, "write the report JSON here");

    CLI::App* opt_cmd = app.add_subcommand("opt", "exact minimum dominating set");
    opt_cmd->add_option("--instance", instance_path, "graph or instance JSON")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "validate an instance and its class claim");
    check_cmd->add_option("--instance", instance_path, "graph or instance JSON")->required();
    CLI::Option* check_class = check_cmd->add_option("--class", class_tag, "class to verify")
                                   ->check(CLI::IsMember({"tree", "cactus", "bounded-degree", "k1t-free",
                                                          "threshold", "planar-bipartite", "series-parallel"}));
    CLI::Option* check_param = check_cmd->add_option("--param", param, "class parameter");

    CLI::App* audit_cmd = app.add_subcommand("audit", "replay a trace and audit its charging scheme");
    audit_cmd->add_option("--instance", instance_path, "instance JSON")->required();
    audit_cmd->add_option("--trace", trace_path, "trace JSON to replay")->required();
    audit_cmd->add_option("--scheme", scheme, "charging scheme")->check(CLI::IsMember({"even", "bounded-degree"}));
    audit_cmd->add_option("--opt", opt_choice, "'brute' or a JSON file with the reference set");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "random-instance experiment sweep");
    sweep_cmd->add_option("--class", cfg.class_tag, "instance family")
        ->required()
        ->check(CLI::IsMember({"tree", "cactus", "bounded-degree", "k1t-free"}));
    sweep_cmd->add_option("--param", cfg.param, "family parameter");
    AlgorithmFlags sweep_flags;
    sweep_cmd->add_option("--algorithm", sweep_flags.name, "algorithm: greedy, k-dominate, accept-all")
        ->required()
        ->check(CLI::IsMember({"greedy", "k-dominate", "accept-all"}));
    sweep_cmd->add_option("--k", sweep_flags.k, "threshold for k-dominate");
    sweep_cmd->add_option("--n-min", cfg.n_min, "smallest instance size");
    sweep_cmd->add_option("--n-max", cfg.n_max, "largest instance size");
    sweep_cmd->add_option("--reps", cfg.repetitions, "number of runs");
    sweep_cmd->add_option("--seed", cfg.seed, "sweep seed");
    sweep_cmd->add_option("--order-policy", cfg.order_policy, "bfs, dfs, random-connected")
        ->check(CLI::IsMember({"bfs", "dfs", "random-connected"}));
    sweep_cmd->add_option("--opt-cap", cfg.opt_cap, "largest non-tree instance for exact search");
    sweep_cmd->add_option("--out", out_path, "write the CSV here");
    sweep_cmd->add_option("--report", report_path, "write the JSON mirror here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run_cmd->parsed()) return run_command(instance_path, flags, order_policy, seed, trace_path);
        if (adv_cmd->parsed()) return adversary_command(class_tag, param, levels, flags, out_path, trace_path, report_path);
        if (opt_cmd->parsed()) return opt_command(instance_path);
        if (check_cmd->parsed())
            return check_command(instance_path, check_class->count() ? class_tag : "", param,
                                 check_param->count() > 0);
        if (audit_cmd->parsed()) return audit_command(instance_path, trace_path, scheme, opt_choice);
        if (sweep_cmd->parsed()) {
            cfg.algorithm = build_spec(sweep_flags);
            return sweep_command(cfg, out_path, report_path);
        }
    } catch (const ods::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ods::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

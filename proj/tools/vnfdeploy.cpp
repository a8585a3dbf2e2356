// vnfdeploy: generate scenarios, solve instances, run sweeps.
//
// Exit codes: 0 feasible, 2 usage or input error, 3 infeasible (or chains
// rejected by a heuristic), 4 search budget hit before optimality was proven.

#include <vnfdeploy/config.hpp>
#include <vnfdeploy/ilp.hpp>
#include <vnfdeploy/methods.hpp>
#include <vnfdeploy/scenario.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace vnfdeploy;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

struct GenArgs
{
    int rings = 1;
    double isd = 500.0;
    double central_dist = 30000.0;
    std::size_t mix = 7;
    std::string mix_kind = "mixed";
    std::string edges = "center";
    double central_capacity = 8960.0;
    double edge_capacity = 4480.0;
    std::uint64_t seed = 1;
    std::string coefficients;
    std::string out;
};

struct SolveArgs
{
    std::string instance;
    std::string method = "optimal";
    double time_limit = 600.0;
    std::uint64_t node_limit = 0;
    int jobs = 1;
    bool first_feasible = false;
    bool no_bound = false;
    bool accepted = false;
    std::string emit_lp;
    std::string trace;
};

struct SweepArgs
{
    std::string config;
    std::vector<std::string> methods;
    std::vector<double> central_dist;
    std::vector<std::size_t> mix;
    std::vector<double> edge_capacity;
    std::string mix_kind;
    std::string edges;
    std::optional<int> rings;
    std::optional<double> isd;
    std::optional<double> central_capacity;
    std::optional<std::size_t> repetitions;
    std::optional<std::uint64_t> seed;
    std::string coefficients;
    double time_limit = 600.0;
    std::uint64_t node_limit = 0;
    int jobs = 1;
    bool timing = false;
    std::string out;
    std::string efficiency_out;
};

SearchBudget make_budget(double time_limit, std::uint64_t node_limit)
{
    SearchBudget budget;
    budget.time_limit_s = time_limit;
    if (node_limit > 0) {
        budget.max_nodes = node_limit;
    }
    return budget;
}

int cmd_gen(const GenArgs& a)
{
    ScenarioConfig cfg;
    cfg.rings = a.rings;
    cfg.isd_m = a.isd;
    cfg.central_dist_m = {a.central_dist};
    cfg.central_capacity = a.central_capacity;
    cfg.edge_capacity = {a.edge_capacity};
    cfg.mix = parse_mix_kind(a.mix_kind);
    cfg.edges = parse_edge_placement(a.edges);
    cfg.mix_size = {a.mix};
    cfg.seed = a.seed;
    if (!a.coefficients.empty()) {
        cfg.compute_model = load_compute_model(a.coefficients);
    }
    if (const auto problems = validate_scenario(cfg); !problems.empty()) {
        throw config_error(problems.front());
    }
    const Instance inst = build_scenario_instance(cfg, a.mix, a.central_dist, a.edge_capacity, a.seed);
    if (const auto problems = validate_instance(inst); !problems.empty()) {
        throw config_error(problems.front());
    }
    write_text_file(a.out, instance_to_json(inst));
    std::cout << "wrote " << a.out << ": " << inst.chains.size() << " chains, " << inst.infra.cloud_count()
              << " clouds, " << inst.infra.rrh_count() << " RRHs\n";
    return kExitOk;
}

void print_report(const Instance& inst, const MethodResult& r, std::ostream& out)
{
    const Solution& sol = r.solution;
    out << "method: " << to_string(r.method) << '\n';
    out << "status: " << to_string(r.status) << '\n';
    if (r.binding != BindingClass::none) {
        out << "binding: " << to_string(r.binding) << '\n';
    }
    const bool deployed = sol.feasible && sol.accepted_count() > 0;
    out << "objective_gflops_s: " << (deployed ? format_double(sol.objective) : std::string("none")) << '\n';
    out << "accepted: " << (sol.feasible ? sol.accepted_count() : 0) << '/' << inst.chains.size() << '\n';
    for (std::size_t k = 0; k < sol.cloud_load.size(); ++k) {
        out << "load_k" << k << ": " << format_double(deployed ? sol.cloud_load[k] : 0.0) << " / "
            << format_double(inst.infra.clouds[k].capacity_gflops_s) << '\n';
    }
    for (std::size_t s = 0; s < inst.chains.size() && deployed; ++s) {
        out << "chain " << inst.chains[s].id << ':';
        if (!sol.assignment.deployed(s)) {
            out << " rejected";
        }
        for (CloudIndex k : sol.assignment.placement[s]) {
            out << ' ' << k;
        }
        out << '\n';
    }
    for (const Violation& v : sol.violations) {
        out << "violation: " << v.message << '\n';
    }
    for (const DecisionLogEntry& e : r.log) {
        out << "log: " << format_log_line(e) << '\n';
    }
}

int cmd_solve(const SolveArgs& a)
{
    Instance inst;
    try {
        inst = load_instance(a.instance);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const Method method = parse_method(a.method);
    SearchBudget budget = make_budget(a.time_limit, a.node_limit);
    budget.threads = a.jobs;
    budget.optimality_required = !a.first_feasible;
    budget.use_lower_bound = !a.no_bound;

    if (!a.emit_lp.empty()) {
        write_text_file(a.emit_lp, emit_lp_text(build_ilp(inst)));
    }

    std::ofstream trace;
    if (!a.trace.empty()) {
        trace.open(a.trace);
        if (!trace) {
            std::cerr << "error: cannot write " << a.trace << '\n';
            return kExitUsage;
        }
        budget.trace = &trace;
    }

    const MethodResult r = run_method(inst, method, budget);
    print_report(inst, r, std::cout);
    if (a.accepted) {
        std::cout << "max_accepted_prefix: " << max_accepted_prefix(inst, method, budget) << '\n';
        std::cout << "max_accepted_incremental: " << max_accepted_incremental(inst, method, budget) << '\n';
    }

    switch (r.status) {
    case SolveStatus::feasible_incumbent:
    case SolveStatus::budget_exhausted:
        return kExitBudget;
    case SolveStatus::infeasible:
        return kExitInfeasible;
    case SolveStatus::optimal:
        return r.accepts_all() ? kExitOk : kExitInfeasible;
    }
    return kExitInfeasible;
}

int cmd_sweep(const SweepArgs& a)
{
    if (a.methods.empty()) {
        std::cerr << "error: --methods needs at least one method\n";
        return kExitUsage;
    }
    ScenarioConfig cfg = a.config.empty() ? ScenarioConfig{} : load_scenario(a.config);
    if (!a.central_dist.empty()) {
        cfg.central_dist_m = a.central_dist;
    }
    if (!a.mix.empty()) {
        cfg.mix_size = a.mix;
    }
    if (!a.edge_capacity.empty()) {
        cfg.edge_capacity = a.edge_capacity;
    }
    if (!a.mix_kind.empty()) {
        cfg.mix = parse_mix_kind(a.mix_kind);
    }
    if (!a.edges.empty()) {
        cfg.edges = parse_edge_placement(a.edges);
    }
    cfg.rings = a.rings.value_or(cfg.rings);
    cfg.isd_m = a.isd.value_or(cfg.isd_m);
    cfg.central_capacity = a.central_capacity.value_or(cfg.central_capacity);
    cfg.repetitions = a.repetitions.value_or(cfg.repetitions);
    cfg.seed = a.seed.value_or(cfg.seed);
    if (!a.coefficients.empty()) {
        cfg.compute_model = load_compute_model(a.coefficients);
    }

    std::vector<SweepMethod> methods;
    for (const std::string& m : a.methods) {
        methods.push_back(SweepMethod::parse(m));
    }
    SweepOptions options;
    options.budget = make_budget(a.time_limit, a.node_limit);
    options.jobs = a.jobs;
    options.timing = a.timing;

    const std::vector<SweepRecord> records = run_sweep(cfg, methods, options);
    std::ostringstream csv;
    export_csv(records, csv);
    write_text_file(a.out, csv.str());
    if (!a.efficiency_out.empty()) {
        std::ostringstream eff;
        export_efficiency_csv(efficiency_table(records), eff);
        write_text_file(a.efficiency_out, eff.str());
    }
    std::cout << "wrote " << a.out << ": " << records.size() << " records\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Latency-aware VNF chain deployment on a hybrid cloud.\n"
                 "Distances are in meters, capacities in GFLOPS/s, latencies in ms."};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a hexagonal-layout instance file");
    gen_cmd->add_option("--rings", gen.rings, "Hexagonal rings around the centre site")->capture_default_str();
    gen_cmd->add_option("--isd", gen.isd, "Inter-site distance, m")->capture_default_str();
    gen_cmd->add_option("--central-dist", gen.central_dist, "Centre site to central cloud, m")->capture_default_str();
    gen_cmd->add_option("--mix", gen.mix, "Number of chains S")->capture_default_str();
    gen_cmd->add_option("--mix-kind", gen.mix_kind, "mixed | embb")->capture_default_str();
    gen_cmd->add_option("--edges", gen.edges, "Edge clouds at: center | every-site")->capture_default_str();
    gen_cmd->add_option("--central-capacity", gen.central_capacity, "Central cloud capacity, GFLOPS/s")
        ->capture_default_str();
    gen_cmd->add_option("--edge-capacity", gen.edge_capacity, "Capacity of each edge cloud, GFLOPS/s")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Seed of the RRH draws")->capture_default_str();
    gen_cmd->add_option("--coefficients", gen.coefficients, "Compute-model JSON (default: built-in set)");
    gen_cmd->add_option("--out", gen.out, "Instance file to write")->required();

    SolveArgs solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Deploy the chains of an instance file");
    solve_cmd->add_option("instance", solve.instance, "Instance JSON")->required();
    solve_cmd->add_option("--method", solve.method, "optimal | brute | bfirst | fixed-split | fixed-service")
        ->capture_default_str();
    solve_cmd->add_option("--time-limit", solve.time_limit, "Search time limit, s")->capture_default_str();
    solve_cmd->add_option("--node-limit", solve.node_limit, "Search node limit (0: none)");
    solve_cmd->add_option("--jobs", solve.jobs, "Search threads")->capture_default_str();
    solve_cmd->add_flag("--first-feasible", solve.first_feasible, "Stop at the first feasible deployment");
    solve_cmd->add_flag("--no-bound", solve.no_bound, "Disable lower-bound pruning");
    solve_cmd->add_flag("--accepted", solve.accepted, "Also report the maximum number of accepted chains");
    solve_cmd->add_option("--emit-lp", solve.emit_lp, "Write the integer program in LP format");
    solve_cmd->add_option("--trace", solve.trace, "Write the search trace");

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run methods over scenario axes and write CSV");
    sweep_cmd->add_option("--config", sweep.config, "Scenario JSON; flags below override it");
    sweep_cmd->add_option("--methods", sweep.methods, "optimal,brute,bfirst,fixed-split,fixed-service,cran-only")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_option("--central-dist", sweep.central_dist, "d0 axis, m")->delimiter(',');
    sweep_cmd->add_option("--mix", sweep.mix, "S axis")->delimiter(',');
    sweep_cmd->add_option("--edge-capacity", sweep.edge_capacity, "C^e axis, GFLOPS/s")->delimiter(',');
    sweep_cmd->add_option("--mix-kind", sweep.mix_kind, "mixed | embb");
    sweep_cmd->add_option("--edges", sweep.edges, "center | every-site");
    sweep_cmd->add_option("--rings", sweep.rings, "Hexagonal rings");
    sweep_cmd->add_option("--isd", sweep.isd, "Inter-site distance, m");
    sweep_cmd->add_option("--central-capacity", sweep.central_capacity, "Central cloud capacity, GFLOPS/s");
    sweep_cmd->add_option("--repetitions", sweep.repetitions, "Seeded RRH draws per point");
    sweep_cmd->add_option("--seed", sweep.seed, "Base seed");
    sweep_cmd->add_option("--coefficients", sweep.coefficients, "Compute-model JSON");
    sweep_cmd->add_option("--time-limit", sweep.time_limit, "Per-solve time limit, s")->capture_default_str();
    sweep_cmd->add_option("--node-limit", sweep.node_limit, "Per-solve node limit (0: none)");
    sweep_cmd->add_option("--jobs", sweep.jobs, "Sweep points solved in parallel")->capture_default_str();
    sweep_cmd->add_flag("--timing", sweep.timing, "Fill the runtime_s column (output is then not reproducible)");
    sweep_cmd->add_option("--out", sweep.out, "CSV file to write")->required();
    sweep_cmd->add_option("--efficiency-out", sweep.efficiency_out, "Also write improvement over cran-only");

    CLI::App* defaults_cmd = app.add_subcommand("defaults", "Print the built-in compute model or scenario as JSON");
    std::string what = "model";
    defaults_cmd->add_option("what", what, "model | scenario")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen_cmd) {
            return cmd_gen(gen);
        }
        if (*solve_cmd) {
            return cmd_solve(solve);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep);
        }
        if (*defaults_cmd) {
            if (what == "model") {
                std::cout << compute_model_to_json(default_compute_model());
            } else if (what == "scenario") {
                std::cout << scenario_to_json(ScenarioConfig{});
            } else {
                std::cerr << "error: unknown defaults '" << what << "'\n";
                return kExitUsage;
            }
            return kExitOk;
        }
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

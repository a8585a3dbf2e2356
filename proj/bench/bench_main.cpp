#include <vnfdeploy/exact_solver.hpp>
#include <vnfdeploy/heuristics.hpp>
#include <vnfdeploy/scenario.hpp>

#include <benchmark/benchmark.h>

using namespace vnfdeploy;

namespace {

Instance mixed_instance(std::size_t chains, double edge_capacity, EdgePlacement edges = EdgePlacement::center)
{
    ScenarioConfig cfg;
    cfg.edges = edges;
    return build_scenario_instance(cfg, chains, 60000.0, edge_capacity, cfg.seed);
}

// Two 8-VNF chains over two clouds: 2^16 assignments.
void BM_BruteForce(benchmark::State& state)
{
    const Instance inst = mixed_instance(2, 2240.0);
    BruteForceOptions opt;
    opt.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force(inst, opt));
    }
    state.counters["assignments"] = static_cast<double>(assignment_space_size(inst));
}
BENCHMARK(BM_BruteForce)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SolveOptimal(benchmark::State& state)
{
    const Instance inst = mixed_instance(static_cast<std::size_t>(state.range(0)), 2240.0);
    SearchBudget budget;
    budget.threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        const SolveResult r = solve_optimal(inst, budget);
        state.counters["nodes"] = static_cast<double>(r.nodes);
    }
}
BENCHMARK(BM_SolveOptimal)
    ->ArgsProduct({{4, 5}, {1, 2, 4}})
    ->ArgNames({"S", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

// Seven edge clouds, one per site.
void BM_BFirst(benchmark::State& state)
{
    const Instance inst = mixed_instance(static_cast<std::size_t>(state.range(0)), 4480.0, EdgePlacement::every_site);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b_first(inst));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BFirst)->DenseRange(4, 28, 4)->Complexity(benchmark::oN)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state)
{
    ScenarioConfig cfg;
    cfg.mix_size = {3, 4};
    cfg.edge_capacity = {2240.0, 4480.0};
    cfg.repetitions = 2;
    SweepOptions opt;
    opt.jobs = static_cast<int>(state.range(0));
    const std::vector<SweepMethod> methods = {SweepMethod::parse("optimal"), SweepMethod::parse("bfirst")};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(cfg, methods, opt));
    }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->ArgName("jobs")->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();

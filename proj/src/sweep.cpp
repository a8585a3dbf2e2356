#include <vnfdeploy/scenario.hpp>

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <omp.h>

namespace vnfdeploy {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SweepPoint
{
    std::size_t chains;
    double central_dist_m;
    double edge_capacity;
    std::size_t repetition;
};

std::string scenario_id(const SweepPoint& p)
{
    return "S" + std::to_string(p.chains) + "_d" + format_double(p.central_dist_m) + "_ce" +
           format_double(p.edge_capacity) + "_r" + std::to_string(p.repetition);
}

SweepRecord run_point(const ScenarioConfig& cfg, const SweepMethod& sm, const SweepPoint& p,
                      const SweepOptions& options)
{
    SweepRecord rec;
    rec.scenario = scenario_id(p);
    rec.method = sm.name();
    rec.chains = p.chains;
    rec.central_dist_m = p.central_dist_m;
    rec.runtime_s = kNaN;

    const Instance hybrid =
        build_scenario_instance(cfg, p.chains, p.central_dist_m, p.edge_capacity, cfg.seed + p.repetition);
    const std::size_t hybrid_clouds = hybrid.infra.cloud_count();
    const Instance instance = sm.method ? hybrid : cran_only(hybrid);
    const Method method = sm.method.value_or(Method::optimal);

    try {
        const auto start = std::chrono::steady_clock::now();
        MethodResult result = run_method(instance, method, options.budget);
        const auto stop = std::chrono::steady_clock::now();
        if (options.timing) {
            rec.runtime_s = std::chrono::duration<double>(stop - start).count();
        }

        if (is_exact(method)) {
            rec.status = std::string(to_string(result.status));
            if (!result.accepts_all()) {
                const std::size_t m = max_accepted_prefix(instance, method, options.budget);
                std::vector<std::size_t> prefix(m);
                for (std::size_t i = 0; i < m; ++i) {
                    prefix[i] = i;
                }
                result = m > 0 ? run_method(subset(instance, prefix), method, options.budget) : MethodResult{};
            }
        } else {
            rec.status = result.accepts_all() ? "accepted_all" : "rejected_some";
        }

        rec.accepted = result.solution.feasible ? result.solution.accepted_count() : 0;
        rec.objective = rec.accepted > 0 ? result.solution.objective : kNaN;
        rec.loads.assign(hybrid_clouds, 0.0);
        for (std::size_t k = 0; k < result.solution.cloud_load.size() && rec.accepted > 0; ++k) {
            rec.loads[k] = result.solution.cloud_load[k];
        }
    } catch (const std::exception& e) {
        rec.status = std::string("error: ") + e.what();
        rec.objective = kNaN;
        rec.loads.assign(hybrid_clouds, kNaN);
    }
    return rec;
}

} // namespace

std::vector<SweepRecord> run_sweep(const ScenarioConfig& cfg, const std::vector<SweepMethod>& methods,
                                   const SweepOptions& options)
{
    if (const auto problems = validate_scenario(cfg); !problems.empty()) {
        throw config_error(problems.front());
    }
    if (methods.empty()) {
        throw config_error("a sweep needs at least one method");
    }

    std::vector<SweepPoint> points;
    for (std::size_t chains : cfg.mix_size) {
        for (double d0 : cfg.central_dist_m) {
            for (double ce : cfg.edge_capacity) {
                for (std::size_t r = 0; r < cfg.repetitions; ++r) {
                    points.push_back({chains, d0, ce, r});
                }
            }
        }
    }

    const std::size_t total = methods.size() * points.size();
    std::vector<SweepRecord> records(total);
    const int jobs = std::max(1, options.jobs);
    SweepOptions inner = options;
    // Parallelism lives at the point level; each solve stays serial.
    inner.budget.threads = jobs > 1 ? 1 : options.budget.threads;

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        records[idx] = run_point(cfg, methods[idx / points.size()], points[idx % points.size()], inner);
    }
    return records;
}

std::vector<EfficiencyRow> efficiency_table(const std::vector<SweepRecord>& records)
{
    std::map<std::string, const SweepRecord*> baseline;
    for (const SweepRecord& r : records) {
        if (r.method == "cran-only") {
            baseline[r.scenario] = &r;
        }
    }
    std::vector<EfficiencyRow> rows;
    for (const SweepRecord& r : records) {
        const auto it = baseline.find(r.scenario);
        if (r.method == "cran-only" || it == baseline.end()) {
            continue;
        }
        const SweepRecord& base = *it->second;
        const bool comparable = r.accepted == r.chains && base.accepted == base.chains && base.objective > 0.0 &&
                                std::isfinite(r.objective);
        if (!comparable) {
            continue;
        }
        rows.push_back({r.scenario, r.method, r.chains, r.central_dist_m,
                        efficiency_improvement(base.objective, r.objective)});
    }
    return rows;
}

} // namespace vnfdeploy

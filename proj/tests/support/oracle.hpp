// Direct-formula reference implementation used only by the tests. It works
// from the raw Instance fields and never touches RateTable.
#ifndef VNFDEPLOY_TESTS_ORACLE_HPP
#define VNFDEPLOY_TESTS_ORACLE_HPP

#include <vnfdeploy/model.hpp>
#include <vnfdeploy/rate_engine.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using vnfdeploy::Assignment;
using vnfdeploy::CloudIndex;
using vnfdeploy::Instance;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double delay_ms(double d_m, double v_m_per_us)
{
    return d_m / v_m_per_us / 1000.0;
}

// GFLOPS over a budget in ms, as GFLOPS/s.
inline double per_second(double lambda, double ms)
{
    return 1000.0 * lambda / ms;
}

// Rate that meets `bound_ms` after a d/v delay, or +inf when the slack is not positive.
inline double stretched(double lambda, double bound_ms, double d_m, double v)
{
    if (d_m == 0.0) {
        return per_second(lambda, bound_ms);
    }
    const double slack = bound_ms - delay_ms(d_m, v);
    return slack <= 1e-6 ? kInf : per_second(lambda, slack);
}

/// R-bar of VNF n of chain s under a total assignment.
inline double rate(const Instance& inst, const Assignment& a, std::size_t s, std::size_t n)
{
    const auto& chain = inst.chains[s];
    const auto& vnf = chain.vnfs[n];
    const double v = inst.infra.fiber_speed_m_per_us;
    const CloudIndex k = a.placement[s][n];

    double base = per_second(vnf.lambda_gflops, std::min(vnf.forward_ms, vnf.backward_ms));
    if (n == 0) {
        const double d = inst.infra.rrh_distance_m[k][chain.rrh];
        const double back = stretched(vnf.lambda_gflops, vnf.backward_ms, d, v);
        if (!std::isfinite(back)) {
            return kInf;
        }
        base = std::max(per_second(vnf.lambda_gflops, vnf.forward_ms), back);
    }

    double extra = 0.0;
    if (n > 0 && a.placement[s][n - 1] != k) {
        const double d = inst.infra.cloud_distance_m[k][a.placement[s][n - 1]];
        const double c = stretched(vnf.lambda_gflops, vnf.backward_ms, d, v);
        if (!std::isfinite(c)) {
            return kInf;
        }
        extra = std::max(extra, std::max(c, base) - base);
    }
    if (n + 1 < chain.vnfs.size() && a.placement[s][n + 1] != k) {
        const double d = inst.infra.cloud_distance_m[k][a.placement[s][n + 1]];
        const double c = stretched(vnf.lambda_gflops, vnf.forward_ms, d, v);
        if (!std::isfinite(c)) {
            return kInf;
        }
        extra = std::max(extra, std::max(c, base) - base);
    }
    return base + extra;
}

struct Evaluation
{
    double objective = 0.0;
    std::vector<double> loads;
    bool feasible = true;
};

/// Rejected chains (empty rows) contribute nothing.
inline Evaluation evaluate(const Instance& inst, const Assignment& a)
{
    Evaluation e;
    e.loads.assign(inst.infra.cloud_count(), 0.0);
    for (std::size_t s = 0; s < inst.chains.size(); ++s) {
        if (a.placement[s].empty()) {
            continue;
        }
        for (std::size_t n = 0; n < inst.chains[s].vnfs.size(); ++n) {
            const double r = rate(inst, a, s, n);
            if (!std::isfinite(r)) {
                e.feasible = false;
                continue;
            }
            e.objective += r;
            e.loads[a.placement[s][n]] += r;
        }
    }
    for (std::size_t k = 0; k < e.loads.size(); ++k) {
        if (e.loads[k] > inst.infra.clouds[k].capacity_gflops_s + 1e-9) {
            e.feasible = false;
        }
    }
    return e;
}

/// Calls f(assignment) for every total assignment in lexicographic order.
template <typename F>
void for_each_assignment(const Instance& inst, F&& f)
{
    const std::size_t clouds = inst.infra.cloud_count();
    Assignment a;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t s = 0; s < inst.chains.size(); ++s) {
        a.placement.emplace_back(inst.chains[s].vnfs.size(), 0);
        for (std::size_t n = 0; n < inst.chains[s].vnfs.size(); ++n) {
            slots.push_back({s, n});
        }
    }
    while (true) {
        f(static_cast<const Assignment&>(a));
        std::size_t i = slots.size();
        while (i > 0) {
            auto& cell = a.placement[slots[i - 1].first][slots[i - 1].second];
            if (++cell < clouds) {
                break;
            }
            cell = 0;
            --i;
        }
        if (i == 0) {
            return;
        }
    }
}

struct Optimum
{
    bool feasible = false;
    double objective = kInf;
    Assignment assignment;
};

/// First (lexicographically smallest) assignment of minimum objective.
inline Optimum enumerate(const Instance& inst)
{
    Optimum best;
    for_each_assignment(inst, [&](const Assignment& a) {
        const Evaluation e = oracle::evaluate(inst, a);
        if (e.feasible && e.objective < best.objective) {
            best = {true, e.objective, a};
        }
    });
    return best;
}

struct RandomShape
{
    std::size_t max_chains = 3;
    std::size_t max_vnfs = 4;
    std::size_t max_edges = 2;
};

/// Small random instance. Distances mix zero, short and latency-breaking
/// values, and capacities range from generous to binding.
inline Instance random_instance(std::mt19937_64& rng, const RandomShape& shape = {})
{
    std::uniform_int_distribution<std::size_t> chains_d(1, shape.max_chains);
    std::uniform_int_distribution<std::size_t> vnfs_d(1, shape.max_vnfs);
    std::uniform_int_distribution<std::size_t> edges_d(0, shape.max_edges);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double kDistances[] = {0.0, 500.0, 1000.0, 30000.0, 60000.0, 90000.0, 150000.0};
    std::uniform_int_distribution<int> dist_d(0, 6);

    Instance inst;
    const std::size_t clouds = 1 + edges_d(rng);
    const std::size_t rrhs = 2;
    inst.infra.fiber_speed_m_per_us = 200.0;
    inst.infra.rrh_distance_m.assign(clouds, std::vector<double>(rrhs, 0.0));
    inst.infra.cloud_distance_m.assign(clouds, std::vector<double>(clouds, 0.0));
    for (std::size_t k = 0; k < clouds; ++k) {
        for (std::size_t r = 0; r < rrhs; ++r) {
            inst.infra.rrh_distance_m[k][r] = kDistances[dist_d(rng)];
        }
        for (std::size_t j = k + 1; j < clouds; ++j) {
            inst.infra.cloud_distance_m[k][j] = inst.infra.cloud_distance_m[j][k] = kDistances[1 + dist_d(rng) % 6];
        }
    }

    double total = 0.0;
    const std::size_t s_count = chains_d(rng);
    for (std::size_t s = 0; s < s_count; ++s) {
        vnfdeploy::ChainRequest c;
        c.id = "c" + std::to_string(s);
        c.rrh = s % rrhs;
        const std::size_t n_count = vnfs_d(rng);
        for (std::size_t n = 0; n < n_count; ++n) {
            vnfdeploy::VnfSpec v;
            v.lambda_gflops = unit(rng) < 0.1 ? 0.0 : 0.1 + 5.0 * unit(rng);
            v.forward_ms = 0.1 + 2.0 * unit(rng);
            v.backward_ms = 0.1 + 2.0 * unit(rng);
            c.vnfs.push_back(v);
            total += per_second(v.lambda_gflops, std::min(v.forward_ms, v.backward_ms));
        }
        inst.chains.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < clouds; ++k) {
        inst.infra.clouds.push_back({"k" + std::to_string(k), (0.2 + 1.5 * unit(rng)) * (total + 1.0), 0.0});
    }
    return inst;
}

} // namespace oracle

#endif // VNFDEPLOY_TESTS_ORACLE_HPP

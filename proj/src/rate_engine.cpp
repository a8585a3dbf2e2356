#include <vnfdeploy/rate_engine.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vnfdeploy {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// lambda [GFLOPS] / t [ms] -> GFLOPS/s
double rate_for(double lambda_gflops, double time_ms)
{
    return lambda_gflops / time_ms * 1000.0;
}

std::optional<double> finite_or_none(double x)
{
    if (std::isinf(x)) {
        return std::nullopt;
    }
    return x;
}

} // namespace

double colocated_rate(const VnfSpec& vnf)
{
    return rate_for(vnf.lambda_gflops, std::min(vnf.forward_ms, vnf.backward_ms));
}

double comm_delay_ms(double distance_m, double fiber_speed_m_per_us)
{
    return distance_m / fiber_speed_m_per_us / 1000.0;
}

bool latency_feasible(double bound_ms, double distance_m, double fiber_speed_m_per_us)
{
    if (distance_m == 0.0) {
        return true;
    }
    return bound_ms - comm_delay_ms(distance_m, fiber_speed_m_per_us) > kLatencySlackEpsilonMs;
}

bool split_feasible_fwd(const VnfSpec& vnf, double distance_m, double fiber_speed_m_per_us)
{
    return latency_feasible(vnf.forward_ms, distance_m, fiber_speed_m_per_us);
}

bool split_feasible_bwd(const VnfSpec& vnf, double distance_m, double fiber_speed_m_per_us)
{
    return latency_feasible(vnf.backward_ms, distance_m, fiber_speed_m_per_us);
}

std::optional<double> split_penalty(const VnfSpec& vnf, Direction direction, double distance_m,
                                    double fiber_speed_m_per_us)
{
    const double bound = direction == Direction::forward ? vnf.forward_ms : vnf.backward_ms;
    if (!latency_feasible(bound, distance_m, fiber_speed_m_per_us)) {
        return std::nullopt;
    }
    const double base = colocated_rate(vnf);
    if (distance_m == 0.0) {
        return 0.0;
    }
    const double slack = bound - comm_delay_ms(distance_m, fiber_speed_m_per_us);
    return std::max(rate_for(vnf.lambda_gflops, slack), base) - base;
}

std::optional<double> first_vnf_rate(const VnfSpec& vnf, double rrh_distance_m, double fiber_speed_m_per_us)
{
    if (!latency_feasible(vnf.backward_ms, rrh_distance_m, fiber_speed_m_per_us)) {
        return std::nullopt;
    }
    const double slack = vnf.backward_ms - comm_delay_ms(rrh_distance_m, fiber_speed_m_per_us);
    return std::max(rate_for(vnf.lambda_gflops, vnf.forward_ms), rate_for(vnf.lambda_gflops, slack));
}

RateTable::RateTable(const Instance& instance)
    : clouds_(instance.infra.cloud_count())
{
    const Infrastructure& infra = instance.infra;
    const double v = infra.fiber_speed_m_per_us;
    const std::size_t chains = instance.chains.size();

    chain_offset_.assign(chains + 1, 0);
    for (std::size_t s = 0; s < chains; ++s) {
        chain_offset_[s + 1] = chain_offset_[s] + instance.chains[s].vnfs.size();
    }
    const std::size_t total = chain_offset_.back();
    colocated_.assign(total, 0.0);
    first_.assign(chains * clouds_, kInfinity);
    forward_.assign(total * clouds_ * clouds_, kInfinity);
    backward_.assign(total * clouds_ * clouds_, kInfinity);

    for (std::size_t s = 0; s < chains; ++s) {
        const ChainRequest& chain = instance.chains[s];
        const std::size_t length = chain.vnfs.size();
        for (std::size_t n = 0; n < length; ++n) {
            colocated_[chain_offset_[s] + n] = colocated_rate(chain.vnfs[n]);
        }
        if (length == 0) {
            continue;
        }
        const VnfSpec& head = chain.vnfs.front();
        for (CloudIndex k = 0; k < clouds_; ++k) {
            first_[s * clouds_ + k] = first_vnf_rate(head, infra.rrh_distance_m[k][chain.rrh], v).value_or(kInfinity);
        }

        for (std::size_t n = 0; n < length; ++n) {
            const VnfSpec& vnf = chain.vnfs[n];
            for (CloudIndex k = 0; k < clouds_; ++k) {
                for (CloudIndex j = 0; j < clouds_; ++j) {
                    const std::size_t idx = ((chain_offset_[s] + n) * clouds_ + k) * clouds_ + j;
                    if (k == j) {
                        forward_[idx] = 0.0;
                        backward_[idx] = 0.0;
                        continue;
                    }
                    const double d = infra.cloud_distance_m[k][j];
                    if (n + 1 < length) {
                        if (n == 0) {
                            // Relative to C^k_{s,1}, which already carries the RRH delay.
                            const double base = first_[s * clouds_ + k];
                            if (std::isfinite(base) && split_feasible_fwd(vnf, d, v)) {
                                const double slack = vnf.forward_ms - comm_delay_ms(d, v);
                                forward_[idx] = d == 0.0 ? 0.0 : std::max(rate_for(vnf.lambda_gflops, slack), base) - base;
                            }
                        } else {
                            forward_[idx] = split_penalty(vnf, Direction::forward, d, v).value_or(kInfinity);
                        }
                    }
                    if (n > 0) {
                        backward_[idx] = split_penalty(vnf, Direction::backward, d, v).value_or(kInfinity);
                    }
                }
            }
        }
    }
}

std::optional<double> RateTable::first_vnf(std::size_t s, CloudIndex k) const
{
    return finite_or_none(first_[s * clouds_ + k]);
}

std::optional<double> RateTable::penalty(std::size_t s, std::size_t n, CloudIndex k, CloudIndex j,
                                         Direction direction) const
{
    return finite_or_none(penalty_raw(s, n, k, j, direction));
}

bool RateTable::split_feasible(std::size_t s, std::size_t n, CloudIndex k, CloudIndex j, Direction direction) const
{
    return std::isfinite(penalty_raw(s, n, k, j, direction));
}

std::optional<double> RateTable::vnf_rate(std::size_t s, std::size_t n, std::optional<CloudIndex> prev, CloudIndex k,
                                          std::optional<CloudIndex> next) const
{
    const double base = base_raw(s, n, k);
    if (std::isinf(base)) {
        return std::nullopt;
    }
    double extra = 0.0;
    if (next && *next != k) {
        const double p = penalty_raw(s, n, k, *next, Direction::forward);
        if (std::isinf(p)) {
            return std::nullopt;
        }
        extra = std::max(extra, p);
    }
    if (prev && *prev != k) {
        const double p = penalty_raw(s, n, k, *prev, Direction::backward);
        if (std::isinf(p)) {
            return std::nullopt;
        }
        extra = std::max(extra, p);
    }
    return base + extra;
}

double RateTable::min_chain_rate(std::size_t s) const
{
    double best_first = kInfinity;
    for (CloudIndex k = 0; k < clouds_; ++k) {
        best_first = std::min(best_first, first_[s * clouds_ + k]);
    }
    if (std::isinf(best_first)) {
        return kInfinity;
    }
    double total = best_first;
    for (std::size_t n = 1; n < chain_length(s); ++n) {
        total += colocated(s, n);
    }
    return total;
}

Assignment Assignment::empty_for(const Instance& instance)
{
    Assignment a;
    a.placement.resize(instance.chains.size());
    return a;
}

Assignment Assignment::all_at(const Instance& instance, CloudIndex k)
{
    Assignment a;
    for (const ChainRequest& chain : instance.chains) {
        a.placement.emplace_back(chain.vnfs.size(), k);
    }
    return a;
}

bool lex_less(const Assignment& a, const Assignment& b)
{
    const std::size_t rows = std::min(a.placement.size(), b.placement.size());
    for (std::size_t s = 0; s < rows; ++s) {
        const auto& ra = a.placement[s];
        const auto& rb = b.placement[s];
        const auto [ia, ib] = std::mismatch(ra.begin(), ra.end(), rb.begin(), rb.end());
        if (ia != ra.end() && ib != rb.end()) {
            return *ia < *ib;
        }
        if (ra.size() != rb.size()) {
            return ra.size() < rb.size();
        }
    }
    return a.placement.size() < b.placement.size();
}

std::size_t Solution::accepted_count() const
{
    return static_cast<std::size_t>(std::count_if(assignment.placement.begin(), assignment.placement.end(),
                                                  [](const auto& row) { return !row.empty(); }));
}

bool Solution::all_accepted() const
{
    return accepted_count() == assignment.placement.size();
}

std::optional<double> required_rate(const RateTable& table, const Assignment& a, std::size_t s, std::size_t n)
{
    const auto& row = a.placement[s];
    const std::optional<CloudIndex> prev = n > 0 ? std::optional<CloudIndex>(row[n - 1]) : std::nullopt;
    const std::optional<CloudIndex> next = n + 1 < row.size() ? std::optional<CloudIndex>(row[n + 1]) : std::nullopt;
    return table.vnf_rate(s, n, prev, row[n], next);
}

Solution evaluate(const Instance& instance, const RateTable& table, const Assignment& a)
{
    Solution sol;
    sol.assignment = a;
    sol.cloud_load.assign(instance.infra.cloud_count(), 0.0);
    sol.rates.resize(instance.chains.size());

    for (std::size_t s = 0; s < instance.chains.size(); ++s) {
        const auto& row = a.placement[s];
        if (row.empty()) {
            continue;
        }
        sol.rates[s].resize(row.size());
        for (std::size_t n = 0; n < row.size(); ++n) {
            const std::optional<double> rate = required_rate(table, a, s, n);
            if (rate) {
                sol.rates[s][n] = *rate;
            } else {
                sol.rates[s][n] = kInfinity;
                sol.feasible = false;
                std::ostringstream msg;
                msg << "chain " << instance.chains[s].id << " VNF " << n + 1 << " at cloud " << row[n] << ": ";
                if (n == 0 && !table.first_vnf(s, row[0])) {
                    msg << "RRH link exceeds the backward latency bound";
                    sol.violations.push_back({ViolationKind::placement, msg.str()});
                } else {
                    msg << "functional split exceeds a latency bound";
                    sol.violations.push_back({ViolationKind::split, msg.str()});
                }
            }
            sol.objective += sol.rates[s][n];
            sol.cloud_load[row[n]] += sol.rates[s][n];
        }
    }

    for (CloudIndex k = 0; k < sol.cloud_load.size(); ++k) {
        const double capacity = instance.infra.clouds[k].capacity_gflops_s;
        if (std::isfinite(sol.cloud_load[k]) && sol.cloud_load[k] > capacity + kCapacityTolerance) {
            sol.feasible = false;
            std::ostringstream msg;
            msg << "cloud " << k << " load " << sol.cloud_load[k] << " exceeds capacity " << capacity;
            sol.violations.push_back({ViolationKind::capacity, msg.str()});
        }
    }
    return sol;
}

Solution evaluate(const Instance& instance, const Assignment& a)
{
    return evaluate(instance, RateTable(instance), a);
}

} // namespace vnfdeploy

#include <vnfdeploy/heuristics.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

namespace vnfdeploy {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::string shortest(double x)
{
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::vector<CloudIndex> clouds_by_residual(const std::vector<double>& residual)
{
    std::vector<CloudIndex> order(residual.size());
    std::iota(order.begin(), order.end(), CloudIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](CloudIndex a, CloudIndex b) { return residual[a] < residual[b]; });
    return order;
}

double rate_or_inf(const std::optional<double>& r)
{
    return r.value_or(kInfinity);
}

// Costs of one chain under whole or single-split placements.
class ChainCoster
{
public:
    ChainCoster(const RateTable& table, std::size_t s) : table_(table), s_(s), length_(table.chain_length(s))
    {
        // interior_[n] = sum of C_{s,m} for 1 <= m < n
        interior_.assign(length_ + 1, 0.0);
        for (std::size_t n = 1; n < length_; ++n) {
            interior_[n + 1] = interior_[n] + table.colocated(s, n);
        }
    }

    std::size_t length() const { return length_; }

    double whole(CloudIndex k) const
    {
        double total = 0.0;
        for (std::size_t n = 0; n < length_; ++n) {
            total += rate_or_inf(table_.vnf_rate(s_, n, prev(n, k), k, next(n, k)));
        }
        return total;
    }

    /// VNFs [0, p) at k and [p, N) at j; p in 1..N-1.
    std::pair<double, double> split(CloudIndex k, CloudIndex j, std::size_t p) const
    {
        double prefix = rate_or_inf(table_.vnf_rate(s_, 0, std::nullopt, k, p == 1 ? j : k));
        if (p >= 2) {
            prefix += sum_colocated(1, p - 1) + rate_or_inf(table_.vnf_rate(s_, p - 1, k, k, j));
        }
        const std::optional<CloudIndex> after = p + 1 < length_ ? std::optional<CloudIndex>(j) : std::nullopt;
        double suffix = rate_or_inf(table_.vnf_rate(s_, p, k, j, after));
        suffix += sum_colocated(p + 1, length_);
        return {prefix, suffix};
    }

private:
    std::optional<CloudIndex> prev(std::size_t n, CloudIndex k) const
    {
        return n > 0 ? std::optional<CloudIndex>(k) : std::nullopt;
    }
    std::optional<CloudIndex> next(std::size_t n, CloudIndex k) const
    {
        return n + 1 < length_ ? std::optional<CloudIndex>(k) : std::nullopt;
    }
    // sum of C_{s,m} for m in [from, to), from >= 1
    double sum_colocated(std::size_t from, std::size_t to) const
    {
        return to > from ? interior_[to] - interior_[from] : 0.0;
    }

    const RateTable& table_;
    std::size_t s_;
    std::size_t length_;
    std::vector<double> interior_;
};

// Request-order admission of one predetermined row per chain.
template <typename RowFor>
HeuristicResult admit_in_order(const Instance& instance, const RateTable& table, RowFor row_for)
{
    HeuristicResult result;
    Assignment a = Assignment::empty_for(instance);
    std::vector<double> residual;
    for (const Cloud& c : instance.infra.clouds) {
        residual.push_back(c.capacity_gflops_s);
    }

    for (std::size_t s = 0; s < instance.chains.size(); ++s) {
        const std::vector<CloudIndex> row = row_for(s);
        std::vector<double> demand(residual.size(), 0.0);
        bool ok = !row.empty();
        for (std::size_t n = 0; ok && n < row.size(); ++n) {
            const auto prev = n > 0 ? std::optional<CloudIndex>(row[n - 1]) : std::nullopt;
            const auto next = n + 1 < row.size() ? std::optional<CloudIndex>(row[n + 1]) : std::nullopt;
            const auto rate = table.vnf_rate(s, n, prev, row[n], next);
            ok = rate.has_value();
            if (ok) {
                demand[row[n]] += *rate;
            }
        }
        for (CloudIndex k = 0; ok && k < residual.size(); ++k) {
            ok = demand[k] <= residual[k];
        }
        ++result.evaluations;

        DecisionLogEntry entry;
        entry.chain_index = s;
        entry.chain_id = instance.chains[s].id;
        if (ok) {
            for (CloudIndex k = 0; k < residual.size(); ++k) {
                residual[k] -= demand[k];
                entry.added_rate += demand[k];
            }
            const auto boundary = std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>());
            entry.k = row.front();
            entry.j = row.back();
            entry.p = boundary == row.end() ? row.size() : static_cast<std::size_t>(boundary - row.begin()) + 1;
            entry.kind = boundary == row.end() ? PlacementKind::whole : PlacementKind::split;
            a.placement[s] = row;
        }
        result.log.push_back(entry);
    }
    result.solution = evaluate(instance, table, a);
    return result;
}

} // namespace

std::string_view to_string(PlacementKind kind)
{
    switch (kind) {
    case PlacementKind::whole:
        return "whole";
    case PlacementKind::split:
        return "split";
    case PlacementKind::rejected:
        return "rejected";
    }
    return "unknown";
}

std::string format_log_line(const DecisionLogEntry& entry)
{
    std::string line = "chain=" + entry.chain_id + " decision=" + std::string(to_string(entry.kind));
    if (entry.kind != PlacementKind::rejected) {
        line += " k=" + std::to_string(entry.k) + " j=" + std::to_string(entry.j) + " p=" + std::to_string(entry.p) +
                " rate=" + shortest(entry.added_rate);
    }
    return line;
}

HeuristicResult b_first(const Instance& instance)
{
    return b_first(instance, RateTable(instance));
}

HeuristicResult b_first(const Instance& instance, const RateTable& table)
{
    HeuristicResult result;
    const std::size_t chains = instance.chains.size();
    Assignment a = Assignment::empty_for(instance);
    std::vector<double> residual;
    for (const Cloud& c : instance.infra.clouds) {
        residual.push_back(c.capacity_gflops_s);
    }

    std::vector<double> demand(chains, 0.0);
    for (std::size_t s = 0; s < chains; ++s) {
        for (std::size_t n = 0; n < table.chain_length(s); ++n) {
            demand[s] += table.colocated(s, n);
        }
    }
    std::vector<std::size_t> order(chains);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return demand[x] > demand[y]; });

    std::vector<CloudIndex> clouds = clouds_by_residual(residual);
    for (const std::size_t s : order) {
        const ChainCoster coster(table, s);
        const std::size_t length = coster.length();
        DecisionLogEntry entry;
        entry.chain_index = s;
        entry.chain_id = instance.chains[s].id;

        for (const CloudIndex k : clouds) {
            ++result.evaluations;
            const double cost = coster.whole(k);
            if (std::isfinite(cost) && cost <= residual[k]) {
                a.placement[s].assign(length, k);
                residual[k] -= cost;
                entry.kind = PlacementKind::whole;
                entry.k = entry.j = k;
                entry.p = length;
                entry.added_rate = cost;
                break;
            }
        }

        if (entry.kind == PlacementKind::rejected && length >= 2) {
            // (total, p, k, j) of the cheapest fitting split
            std::optional<std::tuple<double, std::size_t, CloudIndex, CloudIndex>> best;
            double best_prefix = 0.0;
            double best_suffix = 0.0;
            for (const CloudIndex k : clouds) {
                for (const CloudIndex j : clouds) {
                    if (j == k) {
                        continue;
                    }
                    for (std::size_t p = 1; p < length; ++p) {
                        ++result.evaluations;
                        const auto [prefix, suffix] = coster.split(k, j, p);
                        if (!std::isfinite(prefix) || !std::isfinite(suffix) || prefix > residual[k] ||
                            suffix > residual[j]) {
                            continue;
                        }
                        const auto candidate = std::make_tuple(prefix + suffix, p, k, j);
                        if (!best || candidate < *best) {
                            best = candidate;
                            best_prefix = prefix;
                            best_suffix = suffix;
                        }
                    }
                }
            }
            if (best) {
                const auto [total, p, k, j] = *best;
                auto& row = a.placement[s];
                row.assign(length, j);
                std::fill(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(p), k);
                residual[k] -= best_prefix;
                residual[j] -= best_suffix;
                entry.kind = PlacementKind::split;
                entry.k = k;
                entry.j = j;
                entry.p = p;
                entry.added_rate = total;
            }
        }

        if (entry.kind != PlacementKind::rejected) {
            clouds = clouds_by_residual(residual);
        }
        result.log.push_back(std::move(entry));
    }

    result.solution = evaluate(instance, table, a);
    return result;
}

std::optional<CloudIndex> nearest_edge(const Instance& instance, std::size_t rrh)
{
    std::optional<CloudIndex> best;
    for (CloudIndex k = 1; k < instance.infra.cloud_count(); ++k) {
        if (!best || instance.infra.rrh_distance_m[k][rrh] < instance.infra.rrh_distance_m[*best][rrh]) {
            best = k;
        }
    }
    return best;
}

HeuristicResult fixed_split(const Instance& instance, std::size_t split_after)
{
    return fixed_split(instance, RateTable(instance), split_after);
}

HeuristicResult fixed_split(const Instance& instance, const RateTable& table, std::size_t split_after)
{
    return admit_in_order(instance, table, [&](std::size_t s) {
        const ChainRequest& chain = instance.chains[s];
        const CloudIndex edge = nearest_edge(instance, chain.rrh).value_or(kCentralCloud);
        std::vector<CloudIndex> row(chain.vnfs.size(), kCentralCloud);
        std::fill(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(std::min(split_after, row.size())), edge);
        return row;
    });
}

HeuristicResult fixed_service(const Instance& instance)
{
    return fixed_service(instance, RateTable(instance));
}

HeuristicResult fixed_service(const Instance& instance, const RateTable& table)
{
    return admit_in_order(instance, table, [&](std::size_t s) {
        const ChainRequest& chain = instance.chains[s];
        const CloudIndex k = chain.service == ServiceKind::urllc2
                                 ? nearest_edge(instance, chain.rrh).value_or(kCentralCloud)
                                 : kCentralCloud;
        return std::vector<CloudIndex>(chain.vnfs.size(), k);
    });
}

} // namespace vnfdeploy

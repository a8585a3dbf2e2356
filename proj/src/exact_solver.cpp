#include <vnfdeploy/exact_solver.hpp>
#include <vnfdeploy/heuristics.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include <omp.h>

namespace vnfdeploy {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

// Slack on bound comparisons so that rounding in the differently ordered
// bound sum can never prune a leaf that ties the incumbent.
double prune_margin(double incumbent)
{
    return 1e-10 * (1.0 + std::abs(incumbent));
}

void atomic_min(std::atomic<double>& target, double value)
{
    double current = target.load(std::memory_order_relaxed);
    while (value < current && !target.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
    }
}

struct Incumbent
{
    double objective = kInfinity;
    std::vector<CloudIndex> flat;

    bool improved_by(double obj, const std::vector<CloudIndex>& candidate) const
    {
        return obj < objective ||
               (obj == objective && std::lexicographical_compare(candidate.begin(), candidate.end(), flat.begin(),
                                                                 flat.end()));
    }

    void offer(double obj, const std::vector<CloudIndex>& candidate)
    {
        if (improved_by(obj, candidate)) {
            objective = obj;
            flat = candidate;
        }
    }
};

struct State
{
    std::vector<CloudIndex> flat;
    std::vector<double> loads;
    double committed = 0.0;
};

class Search
{
public:
    Search(const Instance& instance, const RateTable& table, const SearchBudget& budget)
        : instance_(instance), table_(table), budget_(budget), clouds_(instance.infra.cloud_count())
    {
        for (std::size_t s = 0; s < instance.chains.size(); ++s) {
            chain_first_.push_back(vnfs_.size());
            for (std::size_t n = 0; n < instance.chains[s].vnfs.size(); ++n) {
                vnfs_.push_back({s, n});
            }
        }
        chain_first_.push_back(vnfs_.size());
        capacity_.reserve(clouds_);
        for (const Cloud& c : instance.infra.clouds) {
            capacity_.push_back(c.capacity_gflops_s);
            total_capacity_ += c.capacity_gflops_s;
        }
        // remaining_min_[v] = cheapest base of VNFs v..V-1
        remaining_min_.assign(vnfs_.size() + 1, 0.0);
        for (std::size_t v = vnfs_.size(); v-- > 0;) {
            const auto [s, n] = vnfs_[v];
            double cheapest = kInfinity;
            for (CloudIndex k = 0; k < clouds_; ++k) {
                cheapest = std::min(cheapest, table.base_raw(s, n, k));
            }
            remaining_min_[v] = remaining_min_[v + 1] + cheapest;
        }
        mu_.assign(clouds_, 0.0);
        price_tables();
        start_ = Clock::now();
    }

    void seed(double objective, const std::vector<CloudIndex>& flat)
    {
        seed_.offer(objective, flat);
        atomic_min(shared_best_, objective);
    }

    bool has_seed() const { return std::isfinite(seed_.objective); }

    SolveResult run()
    {
        SolveResult result;
        if (!budget_.optimality_required && has_seed()) {
            stopped_ = true;
        } else {
            if (budget_.use_lower_bound) {
                tune_multipliers();
            }
            if (budget_.threads <= 1 || budget_.trace != nullptr) {
                State root = root_state();
                Incumbent local;
                dfs(root, 0, local);
                seed_.offer(local.objective, local.flat);
            } else {
                run_parallel();
            }
        }

        result.nodes = nodes_.load();
        result.elapsed_s = std::chrono::duration<double>(Clock::now() - start_).count();
        const bool found = std::isfinite(seed_.objective);
        if (found) {
            result.status = stopped_ ? SolveStatus::feasible_incumbent : SolveStatus::optimal;
            Assignment a;
            a.placement.resize(instance_.chains.size());
            for (std::size_t v = 0; v < vnfs_.size(); ++v) {
                a.placement[vnfs_[v].first].push_back(seed_.flat[v]);
            }
            result.solution = evaluate(instance_, table_, a);
        } else if (stopped_) {
            result.status = SolveStatus::budget_exhausted;
        } else {
            result.status = SolveStatus::infeasible;
            result.binding = classify_infeasibility(instance_, table_);
        }
        return result;
    }

private:
    struct Child
    {
        CloudIndex k;
        double prev_rate;  // committed rate of VNF v-1 (0 when v starts a chain)
        double self_rate;  // committed rate of v when it closes its chain
        double bound;
    };

    State root_state() const
    {
        State root;
        root.flat.assign(vnfs_.size(), 0);
        root.loads.assign(clouds_, 0.0);
        return root;
    }

    bool out_of_budget()
    {
        if (stopped_.load(std::memory_order_relaxed)) {
            return true;
        }
        const std::uint64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (count > budget_.max_nodes) {
            stopped_ = true;
        } else if ((count & 0xFF) == 0 &&
                   std::chrono::duration<double>(Clock::now() - start_).count() > budget_.time_limit_s) {
            stopped_ = true;
        }
        return stopped_.load(std::memory_order_relaxed);
    }

    double rate(std::size_t v, std::optional<CloudIndex> prev, CloudIndex k, std::optional<CloudIndex> next) const
    {
        const auto [s, n] = vnfs_[v];
        return table_.vnf_rate(s, n, prev, k, next).value_or(kInfinity);
    }

    double& priced(std::size_t v, CloudIndex a, CloudIndex b) { return priced_[(v * clouds_ + a) * clouds_ + b]; }
    double priced(std::size_t v, CloudIndex a, CloudIndex b) const
    {
        return priced_[(v * clouds_ + a) * clouds_ + b];
    }

    // Capacity pricing: a rate placed at cloud k costs (1 + mu_k). For mu >= 0
    //   committed + cheapest priced completion - mu . (C - load)
    // never exceeds the cost of a capacity-feasible completion.
    //
    // priced(v, a, b): cheapest priced cost of VNFs v.. of v's chain with
    // VNF v-1 at a and v at b (a is ignored at the head of a chain).
    void price_tables()
    {
        priced_.assign(vnfs_.size() * clouds_ * clouds_, kInfinity);
        chain_price_.assign(instance_.chains.size(), kInfinity);
        for (std::size_t s = 0; s < instance_.chains.size(); ++s) {
            const std::size_t first = chain_first_[s];
            const std::size_t last = chain_first_[s + 1];
            for (std::size_t v = last; v-- > first;) {
                const bool head = v == first;
                for (CloudIndex a = 0; a < (head ? 1 : clouds_); ++a) {
                    const auto prev = head ? std::nullopt : std::optional<CloudIndex>(a);
                    for (CloudIndex b = 0; b < clouds_; ++b) {
                        const double w = 1.0 + mu_[b];
                        double best = kInfinity;
                        if (v + 1 == last) {
                            best = w * rate(v, prev, b, std::nullopt);
                        } else {
                            for (CloudIndex c = 0; c < clouds_; ++c) {
                                best = std::min(best, w * rate(v, prev, b, c) + priced(v + 1, b, c));
                            }
                        }
                        priced(v, a, b) = best;
                    }
                }
            }
            for (CloudIndex b = 0; b < clouds_ && first < last; ++b) {
                chain_price_[s] = std::min(chain_price_[s], priced(first, 0, b));
            }
        }
        price_suffix_.assign(instance_.chains.size() + 1, 0.0);
        for (std::size_t s = instance_.chains.size(); s-- > 0;) {
            price_suffix_[s] = price_suffix_[s + 1] + chain_price_[s];
        }
    }

    // Loads of the cheapest priced deployment of every chain.
    std::vector<double> priced_loads() const
    {
        std::vector<double> loads(clouds_, 0.0);
        for (std::size_t s = 0; s < instance_.chains.size(); ++s) {
            const std::size_t first = chain_first_[s];
            const std::size_t last = chain_first_[s + 1];
            if (first == last || !std::isfinite(chain_price_[s])) {
                continue;
            }
            CloudIndex b = 0;
            for (CloudIndex k = 1; k < clouds_; ++k) {
                if (priced(first, 0, k) < priced(first, 0, b)) {
                    b = k;
                }
            }
            std::optional<CloudIndex> prev;
            for (std::size_t v = first; v < last; ++v) {
                std::optional<CloudIndex> next;
                if (v + 1 < last) {
                    double best = kInfinity;
                    for (CloudIndex c = 0; c < clouds_; ++c) {
                        const double cost = (1.0 + mu_[b]) * rate(v, prev, b, c) + priced(v + 1, b, c);
                        if (cost < best) {
                            best = cost;
                            next = c;
                        }
                    }
                }
                loads[b] += rate(v, prev, b, next);
                prev = b;
                b = next.value_or(b);
            }
        }
        return loads;
    }

    double root_bound() const
    {
        double bound = price_suffix_[0];
        for (CloudIndex k = 0; k < clouds_; ++k) {
            bound -= mu_[k] * capacity_[k];
        }
        return bound;
    }

    // Projected subgradient ascent on the root bound; keeps the best multipliers.
    void tune_multipliers()
    {
        if (!std::isfinite(price_suffix_[0]) || vnfs_.empty()) {
            return;
        }
        std::vector<double> best_mu = mu_;
        double best = root_bound();
        double theta = 1.0;
        int stale = 0;
        for (int it = 0; it < 200 && theta > 1e-4; ++it) {
            const std::vector<double> loads = priced_loads();
            double norm = 0.0;
            std::vector<double> g(clouds_);
            for (CloudIndex k = 0; k < clouds_; ++k) {
                g[k] = loads[k] - capacity_[k];
                if (mu_[k] == 0.0 && g[k] < 0.0) {
                    g[k] = 0.0;
                }
                norm += g[k] * g[k];
            }
            if (norm == 0.0) {
                break;
            }
            const double incumbent = shared_best_.load();
            const double target = std::isfinite(incumbent) ? incumbent : 1.05 * std::abs(best) + 1.0;
            const double step = theta * std::max(target - root_bound(), 1e-9 * (1.0 + std::abs(target))) / norm;
            for (CloudIndex k = 0; k < clouds_; ++k) {
                mu_[k] = std::max(0.0, mu_[k] + step * g[k]);
            }
            price_tables();
            const double bound = root_bound();
            if (bound > best) {
                best = bound;
                best_mu = mu_;
                stale = 0;
            } else if (++stale >= 5) {
                theta /= 2.0;
                stale = 0;
            }
        }
        mu_ = best_mu;
        price_tables();
    }

    // Feasible placements of VNF v given the prefix in `st`, by bound.
    void children(const State& st, std::size_t v, std::vector<Child>& out) const
    {
        out.clear();
        const auto [s, n] = vnfs_[v];
        const bool closes_chain = v + 1 == chain_first_[s + 1];
        const std::optional<CloudIndex> prev = n > 0 ? std::optional<CloudIndex>(st.flat[v - 1]) : std::nullopt;
        const std::optional<CloudIndex> prev2 = n > 1 ? std::optional<CloudIndex>(st.flat[v - 2]) : std::nullopt;

        double used = 0.0;
        double slack_price = 0.0;
        for (CloudIndex k = 0; k < clouds_; ++k) {
            used += st.loads[k];
            slack_price += mu_[k] * (capacity_[k] - st.loads[k]);
        }

        for (CloudIndex k = 0; k < clouds_; ++k) {
            Child c{k, 0.0, 0.0, 0.0};
            if (prev) {
                c.prev_rate = rate(v - 1, prev2, *prev, k);
                if (!std::isfinite(c.prev_rate) || st.loads[*prev] + c.prev_rate > capacity_[*prev] + kCapacityTolerance) {
                    continue;
                }
            }
            // Base plus backward part; the final rate once the successor is known, or a lower estimate of it.
            const double own = rate(v, prev, k, std::nullopt);
            if (!std::isfinite(own)) {
                continue;
            }
            if (closes_chain) {
                c.self_rate = own;
            }
            // Same summation order as the commit, so the check is exact.
            const double load_k = st.loads[k] + (prev && *prev == k ? c.prev_rate : 0.0);
            if (load_k + own > capacity_[k] + kCapacityTolerance) {
                continue;
            }
            if (c.prev_rate + own + remaining_min_[v + 1] > total_capacity_ - used + prune_margin(total_capacity_)) {
                continue;
            }

            const double committed = st.committed + c.prev_rate + c.self_rate;
            const double simple = committed + (closes_chain ? 0.0 : own) + remaining_min_[v + 1];
            double pending = 0.0;
            if (!closes_chain) {
                pending = kInfinity;
                for (CloudIndex j = 0; j < clouds_; ++j) {
                    pending = std::min(pending, (1.0 + mu_[k]) * rate(v, prev, k, j) + priced(v + 1, k, j));
                }
            }
            double slack = slack_price;
            if (prev) {
                slack -= mu_[*prev] * c.prev_rate;
            }
            slack -= mu_[k] * c.self_rate;
            const double priced_bound = committed + pending + price_suffix_[s + 1] - slack;
            c.bound = std::max(simple, priced_bound);
            if (std::isinf(c.bound) && c.bound > 0.0) {
                continue;
            }
            out.push_back(c);
        }
        const CloudIndex same = prev.value_or(clouds_);
        std::sort(out.begin(), out.end(), [same](const Child& a, const Child& b) {
            if (a.bound != b.bound) {
                return a.bound < b.bound;
            }
            if ((a.k == same) != (b.k == same)) {
                return a.k == same;
            }
            return a.k < b.k;
        });
    }

    void apply(State& st, std::size_t v, const Child& c) const
    {
        const auto [s, n] = vnfs_[v];
        st.flat[v] = c.k;
        if (n > 0) {
            st.loads[st.flat[v - 1]] += c.prev_rate;
            st.committed += c.prev_rate;
        }
        if (v + 1 == chain_first_[s + 1]) {
            st.loads[c.k] += c.self_rate;
            st.committed += c.self_rate;
        }
    }

    bool pruned(double bound) const
    {
        if (!budget_.use_lower_bound) {
            return false;
        }
        const double best = shared_best_.load(std::memory_order_relaxed);
        return bound > best + prune_margin(best);
    }

    void dfs(State& st, std::size_t v, Incumbent& local)
    {
        if (out_of_budget()) {
            return;
        }
        if (v == vnfs_.size()) {
            if (local.improved_by(st.committed, st.flat)) {
                local.offer(st.committed, st.flat);
                atomic_min(shared_best_, st.committed);
                if (budget_.trace) {
                    *budget_.trace << "leaf nodes=" << nodes_.load() << " objective=" << st.committed << '\n';
                }
            }
            if (!budget_.optimality_required) {
                stopped_ = true;
            }
            return;
        }

        std::vector<Child> kids;
        children(st, v, kids);
        if (budget_.trace) {
            *budget_.trace << "node=" << nodes_.load() << " depth=" << v << " children=" << kids.size()
                           << " committed=" << st.committed << " incumbent=" << shared_best_.load() << '\n';
        }
        const CloudIndex before = st.flat[v];
        for (const Child& c : kids) {
            if (pruned(c.bound)) {
                continue;
            }
            const double committed = st.committed;
            const std::vector<double> loads = st.loads;
            apply(st, v, c);
            dfs(st, v + 1, local);
            st.committed = committed;
            st.loads = loads;
            if (stopped_.load(std::memory_order_relaxed)) {
                break;
            }
        }
        st.flat[v] = before;
    }

    void run_parallel()
    {
        const int threads = budget_.threads;
        const std::size_t wanted = static_cast<std::size_t>(threads) * 8;

        // Breadth-first expansion of the top levels; frontier stays in lexicographic order.
        std::vector<std::pair<State, std::size_t>> frontier;
        frontier.emplace_back(root_state(), 0);
        std::vector<Child> kids;
        while (frontier.size() < wanted) {
            std::vector<std::pair<State, std::size_t>> deeper;
            bool expanded = false;
            for (auto& [st, v] : frontier) {
                if (v == vnfs_.size()) {
                    deeper.emplace_back(std::move(st), v);
                    continue;
                }
                expanded = true;
                nodes_.fetch_add(1, std::memory_order_relaxed);
                children(st, v, kids);
                std::sort(kids.begin(), kids.end(), [](const Child& a, const Child& b) { return a.k < b.k; });
                for (const Child& c : kids) {
                    if (pruned(c.bound)) {
                        continue;
                    }
                    State next = st;
                    apply(next, v, c);
                    deeper.emplace_back(std::move(next), v + 1);
                }
            }
            frontier = std::move(deeper);
            if (!expanded) {
                break;
            }
        }

        std::vector<Incumbent> found(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
            auto& [st, v] = frontier[static_cast<std::size_t>(i)];
            dfs(st, v, found[static_cast<std::size_t>(i)]);
        }
        for (const Incumbent& inc : found) {
            seed_.offer(inc.objective, inc.flat);
        }
    }

    const Instance& instance_;
    const RateTable& table_;
    SearchBudget budget_;
    std::size_t clouds_;
    std::vector<std::pair<std::size_t, std::size_t>> vnfs_;
    std::vector<std::size_t> chain_first_;
    std::vector<double> capacity_;
    double total_capacity_ = 0.0;
    std::vector<double> remaining_min_;
    std::vector<double> mu_;
    std::vector<double> priced_;
    std::vector<double> chain_price_;
    std::vector<double> price_suffix_;
    Clock::time_point start_;

    Incumbent seed_;
    std::atomic<double> shared_best_{kInfinity};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stopped_{false};
};

std::vector<CloudIndex> flatten(const Assignment& a)
{
    std::vector<CloudIndex> flat;
    for (const auto& row : a.placement) {
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

} // namespace

std::string_view to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::optimal:
        return "optimal";
    case SolveStatus::feasible_incumbent:
        return "feasible_incumbent";
    case SolveStatus::infeasible:
        return "infeasible";
    case SolveStatus::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
}

std::string_view to_string(BindingClass binding)
{
    switch (binding) {
    case BindingClass::none:
        return "none";
    case BindingClass::placement:
        return "placement";
    case BindingClass::capacity:
        return "capacity";
    }
    return "unknown";
}

SolveResult solve_optimal(const Instance& instance, const SearchBudget& budget)
{
    return solve_optimal(instance, RateTable(instance), budget);
}

SolveResult solve_optimal(const Instance& instance, const RateTable& table, const SearchBudget& budget)
{
    Search search(instance, table, budget);
    if (budget.seed_incumbent) {
        for (const HeuristicResult& h :
             {b_first(instance, table), fixed_split(instance, table), fixed_service(instance, table)}) {
            if (h.solution.feasible && h.solution.all_accepted()) {
                search.seed(h.solution.objective, flatten(h.solution.assignment));
            }
        }
    }
    return search.run();
}

BindingClass classify_infeasibility(const Instance& instance, const RateTable& table)
{
    const std::size_t clouds = instance.infra.cloud_count();
    for (std::size_t s = 0; s < instance.chains.size(); ++s) {
        const std::size_t length = table.chain_length(s);
        std::vector<bool> reachable(clouds, false);
        for (CloudIndex k = 0; k < clouds; ++k) {
            reachable[k] = table.first_vnf(s, k).has_value();
        }
        for (std::size_t n = 1; n < length; ++n) {
            std::vector<bool> next(clouds, false);
            for (CloudIndex j = 0; j < clouds; ++j) {
                for (CloudIndex k = 0; k < clouds && !next[j]; ++k) {
                    next[j] = reachable[k] && (k == j || (table.split_feasible(s, n - 1, k, j, Direction::forward) &&
                                                          table.split_feasible(s, n, j, k, Direction::backward)));
                }
            }
            reachable = std::move(next);
        }
        if (length > 0 && std::none_of(reachable.begin(), reachable.end(), [](bool b) { return b; })) {
            return BindingClass::placement;
        }
    }
    return BindingClass::capacity;
}

double lower_bound(const Instance& instance, const RateTable& table, const Assignment& partial)
{
    double bound = 0.0;
    for (std::size_t s = 0; s < instance.chains.size(); ++s) {
        const std::size_t length = table.chain_length(s);
        const auto& row = s < partial.placement.size() ? partial.placement[s] : std::vector<CloudIndex>{};
        const std::size_t assigned = row.size();
        for (std::size_t n = 0; n < length; ++n) {
            const auto prev = n > 0 && n - 1 < assigned ? std::optional<CloudIndex>(row[n - 1]) : std::nullopt;
            if (n + 1 < assigned || (n + 1 == assigned && assigned == length)) {
                const auto next = n + 1 < assigned ? std::optional<CloudIndex>(row[n + 1]) : std::nullopt;
                const auto r = table.vnf_rate(s, n, prev, row[n], next);
                bound += r.value_or(kInfinity);
            } else if (n + 1 == assigned) {
                bound += table.vnf_rate(s, n, prev, row[n], std::nullopt).value_or(kInfinity);
            } else {
                double cheapest = kInfinity;
                for (CloudIndex k = 0; k < table.cloud_count(); ++k) {
                    cheapest = std::min(cheapest, table.base_raw(s, n, k));
                }
                bound += cheapest;
            }
        }
    }
    return bound;
}

std::uint64_t assignment_space_size(const Instance& instance)
{
    const std::uint64_t base = instance.infra.cloud_count();
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < instance.vnf_count(); ++v) {
        if (base != 0 && total > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= base;
    }
    return total;
}

SolveResult brute_force(const Instance& instance, const BruteForceOptions& options)
{
    const auto start = Clock::now();
    const std::uint64_t space = assignment_space_size(instance);
    if (space > options.cap) {
        throw oracle_cap_exceeded("brute force refuses " + std::to_string(space) + " assignments (cap " +
                                  std::to_string(options.cap) + ")");
    }
    const RateTable table(instance);
    const std::size_t clouds = instance.infra.cloud_count();
    std::vector<std::pair<std::size_t, std::size_t>> vnfs;
    for (std::size_t s = 0; s < instance.chains.size(); ++s) {
        for (std::size_t n = 0; n < instance.chains[s].vnfs.size(); ++n) {
            vnfs.push_back({s, n});
        }
    }
    const std::size_t count = vnfs.size();
    std::vector<double> capacity;
    for (const Cloud& c : instance.infra.clouds) {
        capacity.push_back(c.capacity_gflops_s);
    }

    // Objective of one complete assignment in canonical order, +inf if infeasible.
    auto cost = [&](const std::vector<CloudIndex>& flat, std::vector<double>& loads) {
        std::fill(loads.begin(), loads.end(), 0.0);
        double total = 0.0;
        for (std::size_t v = 0; v < count; ++v) {
            const auto [s, n] = vnfs[v];
            const std::size_t length = table.chain_length(s);
            const auto prev = n > 0 ? std::optional<CloudIndex>(flat[v - 1]) : std::nullopt;
            const auto next = n + 1 < length ? std::optional<CloudIndex>(flat[v + 1]) : std::nullopt;
            const auto r = table.vnf_rate(s, n, prev, flat[v], next);
            if (!r) {
                return kInfinity;
            }
            total += *r;
            loads[flat[v]] += *r;
        }
        for (CloudIndex k = 0; k < loads.size(); ++k) {
            if (loads[k] > capacity[k] + kCapacityTolerance) {
                return kInfinity;
            }
        }
        return total;
    };

    const int threads = std::max(1, options.threads);
    const std::uint64_t chunks = std::min<std::uint64_t>(space, static_cast<std::uint64_t>(threads) * 8);
    std::vector<Incumbent> found(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::uint64_t begin = space / chunks * static_cast<std::uint64_t>(c) +
                                    std::min<std::uint64_t>(static_cast<std::uint64_t>(c), space % chunks);
        const std::uint64_t size = space / chunks + (static_cast<std::uint64_t>(c) < space % chunks ? 1 : 0);
        std::vector<CloudIndex> flat(count, 0);
        std::uint64_t code = begin;
        for (std::size_t v = count; v-- > 0;) {
            flat[v] = static_cast<CloudIndex>(code % clouds);
            code /= clouds;
        }
        std::vector<double> loads(clouds, 0.0);
        Incumbent& local = found[static_cast<std::size_t>(c)];
        for (std::uint64_t i = 0; i < size; ++i) {
            const double obj = cost(flat, loads);
            if (obj < local.objective) {
                local.objective = obj;
                local.flat = flat;
            }
            for (std::size_t v = count; v-- > 0;) {
                if (++flat[v] < clouds) {
                    break;
                }
                flat[v] = 0;
            }
        }
    }

    Incumbent best;
    for (const Incumbent& inc : found) {
        if (inc.objective < best.objective) {
            best = inc;
        }
    }

    SolveResult result;
    result.nodes = space;
    if (std::isfinite(best.objective)) {
        result.status = SolveStatus::optimal;
        Assignment a;
        a.placement.resize(instance.chains.size());
        for (std::size_t v = 0; v < count; ++v) {
            a.placement[vnfs[v].first].push_back(best.flat[v]);
        }
        result.solution = evaluate(instance, table, a);
    } else {
        result.status = SolveStatus::infeasible;
        result.binding = classify_infeasibility(instance, table);
    }
    result.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

} // namespace vnfdeploy

#include <vnfdeploy/methods.hpp>

#include <numeric>

namespace vnfdeploy {

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::optimal:
        return "optimal";
    case Method::brute:
        return "brute";
    case Method::b_first:
        return "bfirst";
    case Method::fixed_split:
        return "fixed-split";
    case Method::fixed_service:
        return "fixed-service";
    }
    return "unknown";
}

Method parse_method(std::string_view text)
{
    for (Method m : kAllMethods) {
        if (text == to_string(m)) {
            return m;
        }
    }
    if (text == "b_first" || text == "b-first") {
        return Method::b_first;
    }
    if (text == "fixed_split") {
        return Method::fixed_split;
    }
    if (text == "fixed_service") {
        return Method::fixed_service;
    }
    throw config_error("unknown method '" + std::string(text) + "'");
}

bool is_exact(Method method)
{
    return method == Method::optimal || method == Method::brute;
}

bool MethodResult::accepts_all() const
{
    return status != SolveStatus::infeasible && status != SolveStatus::budget_exhausted && solution.feasible &&
           solution.all_accepted();
}

MethodResult run_method(const Instance& instance, Method method, const SearchBudget& budget,
                        const BruteForceOptions& brute)
{
    MethodResult out;
    out.method = method;
    if (is_exact(method)) {
        SolveResult r = method == Method::optimal ? solve_optimal(instance, budget) : brute_force(instance, brute);
        out.status = r.status;
        out.solution = std::move(r.solution);
        out.binding = r.binding;
        out.evaluations = static_cast<std::size_t>(r.nodes);
        if (!r.has_solution()) {
            out.solution.assignment = Assignment::empty_for(instance);
            out.solution.cloud_load.assign(instance.infra.cloud_count(), 0.0);
            out.solution.rates.resize(instance.chains.size());
        }
        return out;
    }

    const RateTable table(instance);
    HeuristicResult h = method == Method::b_first       ? b_first(instance, table)
                        : method == Method::fixed_split ? fixed_split(instance, table)
                                                        : fixed_service(instance, table);
    out.solution = std::move(h.solution);
    out.log = std::move(h.log);
    out.evaluations = h.evaluations;
    out.status = out.solution.feasible && out.solution.all_accepted() ? SolveStatus::optimal : SolveStatus::infeasible;
    if (out.status == SolveStatus::infeasible) {
        out.binding = classify_infeasibility(instance, table);
    }
    return out;
}

Instance subset(const Instance& instance, const std::vector<std::size_t>& indices)
{
    Instance out;
    out.infra = instance.infra;
    for (std::size_t i : indices) {
        out.chains.push_back(instance.chains.at(i));
    }
    return out;
}

std::size_t max_accepted_prefix(const Instance& instance, Method method, const SearchBudget& budget)
{
    std::size_t best = 0;
    std::vector<std::size_t> prefix;
    for (std::size_t m = 1; m <= instance.chains.size(); ++m) {
        prefix.push_back(m - 1);
        const bool ok = run_method(subset(instance, prefix), method, budget).accepts_all();
        if (ok) {
            best = m;
        } else if (is_exact(method)) {
            break;
        }
    }
    return best;
}

std::size_t max_accepted_incremental(const Instance& instance, Method method, const SearchBudget& budget)
{
    std::vector<std::size_t> kept;
    for (std::size_t s = 0; s < instance.chains.size(); ++s) {
        kept.push_back(s);
        if (!run_method(subset(instance, kept), method, budget).accepts_all()) {
            kept.pop_back();
        }
    }
    return kept.size();
}

} // namespace vnfdeploy

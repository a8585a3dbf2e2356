#ifndef VNFDEPLOY_METHODS_HPP
#define VNFDEPLOY_METHODS_HPP

#include <vnfdeploy/exact_solver.hpp>
#include <vnfdeploy/heuristics.hpp>

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace vnfdeploy {

enum class Method { optimal, brute, b_first, fixed_split, fixed_service };

inline constexpr std::array<Method, 5> kAllMethods = {Method::optimal, Method::brute, Method::b_first,
                                                      Method::fixed_split, Method::fixed_service};

/// CLI spelling: optimal, brute, bfirst, fixed-split, fixed-service.
std::string_view to_string(Method method);
Method parse_method(std::string_view text);

bool is_exact(Method method);

struct MethodResult
{
    Method method = Method::optimal;
    /// Exact methods report their search status; heuristics report optimal
    /// when every chain is accepted and infeasible otherwise.
    SolveStatus status = SolveStatus::infeasible;
    Solution solution;
    std::vector<DecisionLogEntry> log;
    BindingClass binding = BindingClass::none;
    std::size_t evaluations = 0;

    /// All chains deployed within every constraint.
    bool accepts_all() const;
};

MethodResult run_method(const Instance& instance, Method method, const SearchBudget& budget = {},
                        const BruteForceOptions& brute = {});

/// Instance restricted to the chains at `indices` (same infrastructure).
Instance subset(const Instance& instance, const std::vector<std::size_t>& indices);

/// Largest m such that the first m chains are all deployed by `method`.
/// Exact methods stop at the first failing m (feasibility is inherited by
/// prefixes); heuristics are scanned over every m.
std::size_t max_accepted_prefix(const Instance& instance, Method method, const SearchBudget& budget = {});

/// Greedy admission in request order: each chain is kept when the method
/// still deploys every kept chain together with it.
std::size_t max_accepted_incremental(const Instance& instance, Method method, const SearchBudget& budget = {});

} // namespace vnfdeploy

#endif // VNFDEPLOY_METHODS_HPP

#ifndef VNFDEPLOY_EXACT_SOLVER_HPP
#define VNFDEPLOY_EXACT_SOLVER_HPP

#include <vnfdeploy/model.hpp>
#include <vnfdeploy/rate_engine.hpp>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string_view>

namespace vnfdeploy {

struct SearchBudget
{
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double time_limit_s = 600.0;
    /// When false the search stops at the first feasible assignment.
    bool optimality_required = true;
    /// OpenMP threads over root subproblems; 1 runs the serial search.
    int threads = 1;
    /// Disabling the bound must not change the result, only the node count.
    bool use_lower_bound = true;
    /// Seed the incumbent with the heuristics' solutions when they accept every chain.
    bool seed_incumbent = true;
    /// One line per expanded node. Forces the serial search.
    std::ostream* trace = nullptr;
};

enum class SolveStatus { optimal, feasible_incumbent, infeasible, budget_exhausted };

std::string_view to_string(SolveStatus status);

/// What makes an infeasible instance infeasible: some chain has no
/// latency-feasible placement at all, or only the capacities are violated.
enum class BindingClass { none, placement, capacity };

std::string_view to_string(BindingClass binding);

struct SolveResult
{
    SolveStatus status = SolveStatus::infeasible;
    /// Meaningful for optimal and feasible_incumbent.
    Solution solution;
    BindingClass binding = BindingClass::none;
    std::uint64_t nodes = 0;
    double elapsed_s = 0.0;

    bool has_solution() const
    {
        return status == SolveStatus::optimal || status == SolveStatus::feasible_incumbent;
    }
};

/// Depth-first branch-and-bound over VNFs in (chain, position) order. Among
/// optimal assignments the lexicographically smallest is returned, so serial
/// and parallel runs agree whenever the search completes.
SolveResult solve_optimal(const Instance& instance, const SearchBudget& budget = {});
SolveResult solve_optimal(const Instance& instance, const RateTable& table, const SearchBudget& budget);

class oracle_cap_exceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct BruteForceOptions
{
    /// Refuse instances with more than this many assignments.
    std::uint64_t cap = 10'000'000;
    int threads = 1;
};

/// Enumerates every assignment in lexicographic order. Same tie-break as
/// solve_optimal().
SolveResult brute_force(const Instance& instance, const BruteForceOptions& options = {});

/// (K+1)^(sum N_s), saturating at uint64 max.
std::uint64_t assignment_space_size(const Instance& instance);

/// Admissible bound for a prefix-consistent partial assignment: chains
/// before the first incomplete row are complete, later rows are empty.
/// Committed rates, plus base and backward penalty of the last assigned VNF
/// when its successor is still open, plus the cheapest base of everything
/// unassigned.
double lower_bound(const Instance& instance, const RateTable& table, const Assignment& partial);

/// Placement or capacity, for an instance known to be infeasible.
BindingClass classify_infeasibility(const Instance& instance, const RateTable& table);

} // namespace vnfdeploy

#endif // VNFDEPLOY_EXACT_SOLVER_HPP

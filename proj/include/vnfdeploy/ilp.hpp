#ifndef VNFDEPLOY_ILP_HPP
#define VNFDEPLOY_ILP_HPP

#include <vnfdeploy/model.hpp>
#include <vnfdeploy/rate_engine.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vnfdeploy {

enum class Sense { less_equal, greater_equal, equal };

struct LinearTerm
{
    std::size_t var = 0;
    double coef = 0.0;

    friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct LinearConstraint
{
    std::string name;
    std::vector<LinearTerm> terms;
    Sense sense = Sense::greater_equal;
    double rhs = 0.0;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Linear model over binaries x_s{s}_n{n}_k{k} and continuous r_s{s}_n{n}_k{k} >= 0
/// (s is the chain index, n the 1-based VNF position, k the cloud).
struct IlpModel
{
    std::vector<std::string> var_names;
    std::vector<bool> binary;
    /// Objective coefficient per variable (minimised).
    std::vector<double> objective;
    std::vector<LinearConstraint> constraints;

    std::size_t binary_count() const;
    std::size_t continuous_count() const;
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const IlpModel&, const IlpModel&) = default;
};

std::string rate_var_name(std::size_t s, std::size_t n, CloudIndex k);
std::string placement_var_name(std::size_t s, std::size_t n, CloudIndex k);

/// Linearised program: one-hot rows, per-cloud capacity, x = 0 fixings for
/// unreachable first-VNF placements, x + x' <= 1 cuts for infeasible splits,
/// and r >= base*x plus r >= base*x + dC*(x + x' - 1) rate rows.
/// `n` is 0-based here; variable names use 1-based positions.
IlpModel build_ilp(const Instance& instance);
IlpModel build_ilp(const Instance& instance, const RateTable& table);

/// CPLEX LP text; byte-stable for a given model.
std::string emit_lp_text(const IlpModel& model);

class lp_parse_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Reads text produced by emit_lp_text() back into a model.
IlpModel parse_lp_text(std::string_view text);

struct Completion
{
    bool feasible = false;
    /// Value of every variable (x fixed, r at its smallest admissible value).
    std::vector<double> values;
    double objective = 0.0;
    /// Name of the first violated constraint, if any.
    std::string violated;
};

/// Fixes the binaries, lowers each continuous variable to the largest lower
/// bound implied by single-continuous >= rows, then checks every row with
/// absolute `tolerance`.
Completion minimal_completion(const IlpModel& model, const std::vector<double>& binaries_by_var,
                              double tolerance = kCapacityTolerance);

/// Binary vector (indexed by model variable) encoding an assignment.
std::vector<double> assignment_to_binaries(const IlpModel& model, const Assignment& a);

} // namespace vnfdeploy

#endif // VNFDEPLOY_ILP_HPP

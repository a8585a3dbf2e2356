#ifndef VNFDEPLOY_RATE_ENGINE_HPP
#define VNFDEPLOY_RATE_ENGINE_HPP

#include <vnfdeploy/model.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vnfdeploy {

/// A split or placement whose latency slack (bound - d/v) is at most 1 ns is
/// infeasible: the required rate would be unbounded.
inline constexpr double kLatencySlackEpsilonMs = 1e-6;

/// Absolute tolerance of capacity comparisons, GFLOPS/s.
inline constexpr double kCapacityTolerance = 1e-9;

enum class Direction { forward, backward };

/// Rate needed when both neighbours share the cloud: lambda / min{f, b}.
double colocated_rate(const VnfSpec& vnf);

/// One-way fiber delay in ms.
double comm_delay_ms(double distance_m, double fiber_speed_m_per_us);

/// True iff the latency bound leaves positive slack after the d/v delay.
bool latency_feasible(double bound_ms, double distance_m, double fiber_speed_m_per_us);

bool split_feasible_fwd(const VnfSpec& vnf, double distance_m, double fiber_speed_m_per_us);
bool split_feasible_bwd(const VnfSpec& vnf, double distance_m, double fiber_speed_m_per_us);

/// Additional rate over colocated_rate() when the neighbour in `direction`
/// runs `distance_m` away. nullopt when the split is infeasible.
std::optional<double> split_penalty(const VnfSpec& vnf, Direction direction, double distance_m,
                                    double fiber_speed_m_per_us);

/// Rate of the first VNF co-located with VNF 2 at a cloud `rrh_distance_m`
/// away from the RRH: max{lambda/f, lambda/(b - d/v)}. nullopt when the RRH
/// link alone violates b.
std::optional<double> first_vnf_rate(const VnfSpec& vnf, double rrh_distance_m, double fiber_speed_m_per_us);

/// Per-instance table of every base rate and split penalty.
///
/// Infeasible entries hold +infinity internally; the accessors translate them
/// into nullopt. Chain positions `n` are 0-based.
class RateTable
{
public:
    explicit RateTable(const Instance& instance);

    std::size_t chain_count() const { return chain_offset_.size() - 1; }
    std::size_t cloud_count() const { return clouds_; }
    std::size_t chain_length(std::size_t s) const { return chain_offset_[s + 1] - chain_offset_[s]; }

    /// C_{s,n}; cloud-independent.
    double colocated(std::size_t s, std::size_t n) const { return colocated_[chain_offset_[s] + n]; }

    /// C^k_{s,1}.
    std::optional<double> first_vnf(std::size_t s, CloudIndex k) const;

    /// Base rate of VNF n at cloud k: first_vnf() for n = 0, colocated() otherwise.
    double base_raw(std::size_t s, std::size_t n, CloudIndex k) const
    {
        return n == 0 ? first_[s * clouds_ + k] : colocated_[chain_offset_[s] + n];
    }

    /// Extra rate of VNF n at k when its neighbour in `direction` runs at j != k.
    /// The forward penalty of the first VNF is taken relative to C^k_{s,1}.
    std::optional<double> penalty(std::size_t s, std::size_t n, CloudIndex k, CloudIndex j, Direction direction) const;

    /// Raw table entry, +infinity when infeasible.
    double penalty_raw(std::size_t s, std::size_t n, CloudIndex k, CloudIndex j, Direction direction) const
    {
        const std::size_t idx = ((chain_offset_[s] + n) * clouds_ + k) * clouds_ + j;
        return direction == Direction::forward ? forward_[idx] : backward_[idx];
    }

    bool split_feasible(std::size_t s, std::size_t n, CloudIndex k, CloudIndex j, Direction direction) const;

    /// Rate of VNF n at cloud k given the clouds of its neighbours (absent at
    /// chain ends): base + max over split neighbours of their penalty.
    /// nullopt when the placement or any implied split is infeasible.
    std::optional<double> vnf_rate(std::size_t s, std::size_t n, std::optional<CloudIndex> prev, CloudIndex k,
                                   std::optional<CloudIndex> next) const;

    /// Cheapest feasible whole-chain rate, min_k (C^k_{s,1} + sum_{n>=2} C_{s,n});
    /// +infinity when no cloud can host the first VNF.
    double min_chain_rate(std::size_t s) const;

private:
    std::size_t clouds_ = 0;
    std::vector<std::size_t> chain_offset_;
    std::vector<double> colocated_;
    std::vector<double> first_;
    std::vector<double> forward_;
    std::vector<double> backward_;
};

/// x^k_{s,n} as a cloud index per (chain, VNF). An empty row marks a chain
/// that is not deployed (rejected by a heuristic); a solver's assignment is
/// total on every chain.
struct Assignment
{
    std::vector<std::vector<CloudIndex>> placement;

    static Assignment empty_for(const Instance& instance);
    static Assignment all_at(const Instance& instance, CloudIndex k);

    bool deployed(std::size_t s) const { return !placement[s].empty(); }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Lexicographic order over the flattened (s, n) vector.
bool lex_less(const Assignment& a, const Assignment& b);

enum class ViolationKind { placement, split, capacity };

struct Violation
{
    ViolationKind kind;
    std::string message;
};

struct Solution
{
    Assignment assignment;
    /// R^k_{s,n} at the assigned cloud; +infinity marks an infeasible split or placement.
    std::vector<std::vector<double>> rates;
    double objective = 0.0;
    std::vector<double> cloud_load;
    bool feasible = true;
    std::vector<Violation> violations;

    std::size_t accepted_count() const;
    bool all_accepted() const;
};

/// R^k_{s,n} for k = a(s,n).
std::optional<double> required_rate(const RateTable& table, const Assignment& a, std::size_t s, std::size_t n);

/// Objective, loads and feasibility of an assignment; infeasibility is data.
Solution evaluate(const Instance& instance, const RateTable& table, const Assignment& a);
Solution evaluate(const Instance& instance, const Assignment& a);

} // namespace vnfdeploy

#endif // VNFDEPLOY_RATE_ENGINE_HPP

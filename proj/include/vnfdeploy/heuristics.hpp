#ifndef VNFDEPLOY_HEURISTICS_HPP
#define VNFDEPLOY_HEURISTICS_HPP

#include <vnfdeploy/model.hpp>
#include <vnfdeploy/rate_engine.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vnfdeploy {

enum class PlacementKind { whole, split, rejected };

std::string_view to_string(PlacementKind kind);

/// One B-FIRST decision. For a whole placement k == j and p == N_s; for a
/// split VNFs 1..p run at k and p+1..N_s at j. Rejections carry no clouds.
struct DecisionLogEntry
{
    std::size_t chain_index = 0;
    std::string chain_id;
    PlacementKind kind = PlacementKind::rejected;
    CloudIndex k = 0;
    CloudIndex j = 0;
    std::size_t p = 0;
    double added_rate = 0.0;
};

/// key=value text line, e.g. "chain=c3 decision=split k=1 j=0 p=4 rate=812.5".
std::string format_log_line(const DecisionLogEntry& entry);

struct HeuristicResult
{
    /// Rejected chains have empty assignment rows.
    Solution solution;
    std::vector<DecisionLogEntry> log;
    /// Whole-chain and (k, j, p) candidates costed.
    std::size_t evaluations = 0;
};

/// Best fit decreasing with at most one split per chain.
HeuristicResult b_first(const Instance& instance);
HeuristicResult b_first(const Instance& instance, const RateTable& table);

/// Edge cloud closest to the RRH (lower id on ties); nullopt without edges.
std::optional<CloudIndex> nearest_edge(const Instance& instance, std::size_t rrh);

/// VNFs 1..p* after the lower MAC run at the nearest edge cloud, the rest centrally.
inline constexpr std::size_t kLowerMacPosition = 4;

/// Chains admitted in request order; a chain is rejected when its fixed
/// placement violates a latency bound or does not fit the residual capacity.
HeuristicResult fixed_split(const Instance& instance, std::size_t split_after = kLowerMacPosition);
HeuristicResult fixed_split(const Instance& instance, const RateTable& table,
                            std::size_t split_after = kLowerMacPosition);

/// URLLC2 chains whole at their nearest edge cloud, everything else whole at
/// the central cloud; same admission rule as fixed_split().
HeuristicResult fixed_service(const Instance& instance);
HeuristicResult fixed_service(const Instance& instance, const RateTable& table);

} // namespace vnfdeploy

#endif // VNFDEPLOY_HEURISTICS_HPP

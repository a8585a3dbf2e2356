#ifndef VNFDEPLOY_SCENARIO_HPP
#define VNFDEPLOY_SCENARIO_HPP

#include <vnfdeploy/methods.hpp>
#include <vnfdeploy/model.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vnfdeploy {

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

struct HexLayout
{
    /// Site 0 is the centre; then ring 1, ring 2, ...
    std::vector<Point> sites;
    /// Euclidean distance between sites, m.
    std::vector<std::vector<double>> distance_m;
};

/// 1 + 3r(r+1) sites on a hexagonal grid with neighbour spacing `isd_m`.
HexLayout gen_hex_layout(int rings, double isd_m);

enum class MixKind { mixed, embb_only };
/// Edge clouds at the centre site only (two-cloud case) or at every site.
enum class EdgePlacement { center, every_site };

std::string_view to_string(MixKind kind);
MixKind parse_mix_kind(std::string_view text);
std::string_view to_string(EdgePlacement placement);
EdgePlacement parse_edge_placement(std::string_view text);

struct MixEntry
{
    ServiceKind service = ServiceKind::embb;
    std::size_t rrh = 0;

    friend bool operator==(const MixEntry&, const MixEntry&) = default;
};

/// Request order for S chains. The mixed request order starts with one mMTC chain at
/// the centre RRH and then cycles eMBB, URLLC1, URLLC2; the remainder of
/// (S-1)/3 therefore goes to eMBB first, then URLLC1. Other chains draw their
/// RRH uniformly from `sites` with a seeded mt19937_64.
std::vector<MixEntry> gen_mix(std::size_t chains, MixKind kind, std::uint64_t seed, std::size_t sites);

struct ScenarioConfig
{
    int rings = 1;
    double isd_m = 500.0;
    std::vector<double> central_dist_m = {30000.0, 60000.0, 90000.0, 150000.0};
    double central_capacity = 8960.0;
    /// Capacity of each edge cloud; one entry per point of the C^e axis.
    std::vector<double> edge_capacity = {4480.0};
    EdgePlacement edges = EdgePlacement::center;
    MixKind mix = MixKind::mixed;
    /// S axis.
    std::vector<std::size_t> mix_size = {7};
    std::uint64_t seed = 1;
    /// Seeded RRH draws per axis point; draw r uses seed + r.
    std::size_t repetitions = 10;
    double fiber_speed_m_per_us = 200.0;
    double central_cpu_ghz = 2.50;
    double edge_cpu_ghz = 2.20;
    ComputeModel compute_model = default_compute_model();
};

std::vector<std::string> validate_scenario(const ScenarioConfig& cfg);

/// One instance: central cloud at (d0, 0) from the centre site, edge clouds
/// co-located with their sites.
Instance build_scenario_instance(const ScenarioConfig& cfg, std::size_t chains, double central_dist_m,
                                 double edge_capacity, std::uint64_t seed);

/// Edge clouds removed; the central cloud gets the whole capacity.
Instance cran_only(const Instance& hybrid);

/// 100 (base - variant) / base. Throws std::domain_error for base <= 0.
double efficiency_improvement(double rate_baseline, double rate_variant);

/// optimal, brute, bfirst, fixed-split, fixed-service or cran-only.
struct SweepMethod
{
    std::optional<Method> method;  // nullopt: cran-only (optimal on cran_only())

    std::string name() const;
    static SweepMethod parse(std::string_view text);
};

struct SweepRecord
{
    std::string scenario;
    std::string method;
    std::size_t chains = 0;
    double central_dist_m = 0.0;
    /// Rate of the reported deployment; NaN when nothing was deployed.
    double objective = 0.0;
    std::size_t accepted = 0;
    std::vector<double> loads;
    /// Wall-clock of the solve call; NaN when not measured.
    double runtime_s = 0.0;
    std::string status;
};

struct SweepOptions
{
    SearchBudget budget;
    int jobs = 1;
    bool timing = false;
};

/// One record per (method, S, d0, C^e, repetition), in that nesting order.
/// Exact methods that cannot deploy all S chains report the largest
/// deployable prefix instead (accepted < S).
std::vector<SweepRecord> run_sweep(const ScenarioConfig& cfg, const std::vector<SweepMethod>& methods,
                                   const SweepOptions& options = {});

/// Header: scenario,method,S,d0_m,objective_gflops_s,accepted,k0..kK,runtime_s,status
void export_csv(const std::vector<SweepRecord>& records, std::ostream& out);
std::vector<SweepRecord> parse_csv(std::istream& in);

struct EfficiencyRow
{
    std::string scenario;
    std::string method;
    std::size_t chains = 0;
    double central_dist_m = 0.0;
    double improvement_pct = 0.0;
};

/// Improvement of every non-baseline record over the cran-only record of the
/// same scenario; scenarios without a usable baseline are skipped.
std::vector<EfficiencyRow> efficiency_table(const std::vector<SweepRecord>& records);
void export_efficiency_csv(const std::vector<EfficiencyRow>& rows, std::ostream& out);

/// Shortest round-trip decimal form; empty for NaN.
std::string format_double(double x);

} // namespace vnfdeploy

#endif // VNFDEPLOY_SCENARIO_HPP

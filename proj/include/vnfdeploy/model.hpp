#ifndef VNFDEPLOY_MODEL_HPP
#define VNFDEPLOY_MODEL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vnfdeploy {

// Units used throughout the library:
//   computational demand  GFLOPS
//   computational rate    GFLOPS/s
//   latency               ms
//   distance              m
//   fiber speed           m/us

using CloudIndex = std::size_t;

/// Index of the central cloud; edge clouds are 1..K.
inline constexpr CloudIndex kCentralCloud = 0;

class config_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class ServiceKind { embb, mmtc, urllc1, urllc2 };

std::string_view to_string(ServiceKind kind);

/// Accepts "eMBB", "mMTC", "URLLC1", "URLLC2" (case-insensitive, optional space
/// or underscore before the digit).
ServiceKind parse_service_kind(std::string_view text);

inline constexpr std::array<ServiceKind, 4> kAllServiceKinds = {
    ServiceKind::embb, ServiceKind::mmtc, ServiceKind::urllc1, ServiceKind::urllc2};

struct ServiceClass
{
    ServiceKind kind = ServiceKind::embb;
    int resource_blocks = 1;
    int mcs_dl = 0;
    int mcs_ul = 0;
    /// Backward latency bound of each VNF, chain order.
    std::vector<double> latency_profile_ms;
    /// Forward bound of the last VNF. Falls back to the last profile entry.
    std::optional<double> terminal_forward_ms;

    double terminal_forward() const;
};

/// Returns an empty list iff the class satisfies its invariants.
std::vector<std::string> validate_service_class(const ServiceClass& service);

inline constexpr int kMaxMcsIndex = 28;

/// Quadratic fitting coefficients of one VNF position; index = polynomial degree.
struct PolynomialCoefficients
{
    std::array<double, 3> downlink{};
    std::array<double, 3> uplink{};
};

struct ComputeModel
{
    double c_exp_gflops_s = 1.0;
    double f_cpu_ghz = 1.0;
    std::vector<PolynomialCoefficients> alpha;
};

std::vector<std::string> validate_compute_model(const ComputeModel& model);

struct VnfSpec
{
    double lambda_gflops = 0.0;
    double forward_ms = 1.0;
    double backward_ms = 1.0;
};

struct ChainRequest
{
    std::string id;
    ServiceKind service = ServiceKind::embb;
    std::size_t rrh = 0;
    std::vector<VnfSpec> vnfs;
};

struct Cloud
{
    std::string name;
    double capacity_gflops_s = 0.0;
    /// Informational only; capacities are already expressed in GFLOPS/s.
    double cpu_ghz = 0.0;
};

struct Infrastructure
{
    std::vector<Cloud> clouds;
    /// rrh_distance_m[k][r]: distance between cloud k and RRH r.
    std::vector<std::vector<double>> rrh_distance_m;
    /// cloud_distance_m[k][j], symmetric with a zero diagonal.
    std::vector<std::vector<double>> cloud_distance_m;
    double fiber_speed_m_per_us = 200.0;

    std::size_t cloud_count() const { return clouds.size(); }
    std::size_t rrh_count() const { return rrh_distance_m.empty() ? 0 : rrh_distance_m.front().size(); }
};

struct Instance
{
    Infrastructure infra;
    std::vector<ChainRequest> chains;

    std::size_t vnf_count() const;
};

/// Computational demand of the VNF at 0-based chain position `position`.
/// Throws config_error when the coefficient table has no row for it.
double compute_lambda(const ComputeModel& model, const ServiceClass& service, std::size_t position);

/// Builds the VNF chain of `service`: b from the latency profile, f_n = b_{n+1},
/// terminal f from ServiceClass::terminal_forward().
ChainRequest build_chain(const ComputeModel& model, const ServiceClass& service, std::string id, std::size_t rrh);

/// Lists every violated invariant; empty iff the instance is well formed.
std::vector<std::string> validate_instance(const Instance& instance);

/// Service classes with the reference RB/MCS settings and latency profiles.
ServiceClass default_service_class(ServiceKind kind);

/// Synthetic 8-position coefficient set shipped with the library (see
/// data/compute_model.json). Lower layers carry larger coefficients.
ComputeModel default_compute_model();

} // namespace vnfdeploy

#endif // VNFDEPLOY_MODEL_HPP

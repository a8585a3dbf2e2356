#include <vnfdeploy/model.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace vnfdeploy {

namespace {

std::string lowercase_alnum(std::string_view text)
{
    std::string out;
    for (char c : text) {
        if (c == ' ' || c == '_' || c == '-') {
            continue;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

bool is_finite_positive(double x)
{
    return std::isfinite(x) && x > 0.0;
}

} // namespace

std::string_view to_string(ServiceKind kind)
{
    switch (kind) {
    case ServiceKind::embb:
        return "eMBB";
    case ServiceKind::mmtc:
        return "mMTC";
    case ServiceKind::urllc1:
        return "URLLC1";
    case ServiceKind::urllc2:
        return "URLLC2";
    }
    return "unknown";
}

ServiceKind parse_service_kind(std::string_view text)
{
    const std::string key = lowercase_alnum(text);
    for (ServiceKind kind : kAllServiceKinds) {
        if (key == lowercase_alnum(to_string(kind))) {
            return kind;
        }
    }
    throw config_error("unknown service class '" + std::string(text) + "'");
}

double ServiceClass::terminal_forward() const
{
    if (terminal_forward_ms) {
        return *terminal_forward_ms;
    }
    if (latency_profile_ms.empty()) {
        throw config_error("service " + std::string(to_string(kind)) + " has an empty latency profile");
    }
    return latency_profile_ms.back();
}

std::vector<std::string> validate_service_class(const ServiceClass& service)
{
    std::vector<std::string> report;
    const std::string name(to_string(service.kind));
    if (service.resource_blocks < 1) {
        report.push_back("service " + name + ": resource blocks must be >= 1");
    }
    if (service.mcs_dl < 0 || service.mcs_dl > kMaxMcsIndex) {
        report.push_back("service " + name + ": downlink MCS index out of [0, 28]");
    }
    if (service.mcs_ul < 0 || service.mcs_ul > kMaxMcsIndex) {
        report.push_back("service " + name + ": uplink MCS index out of [0, 28]");
    }
    if (service.latency_profile_ms.empty()) {
        report.push_back("service " + name + ": latency profile is empty");
    }
    for (std::size_t n = 0; n < service.latency_profile_ms.size(); ++n) {
        if (!is_finite_positive(service.latency_profile_ms[n])) {
            report.push_back("service " + name + ": latency bound of VNF " + std::to_string(n + 1) +
                             " must be > 0");
        }
    }
    if (service.terminal_forward_ms && !is_finite_positive(*service.terminal_forward_ms)) {
        report.push_back("service " + name + ": terminal forward bound must be > 0");
    }
    return report;
}

std::vector<std::string> validate_compute_model(const ComputeModel& model)
{
    std::vector<std::string> report;
    if (!is_finite_positive(model.c_exp_gflops_s)) {
        report.push_back("compute model: c_exp must be > 0");
    }
    if (!is_finite_positive(model.f_cpu_ghz)) {
        report.push_back("compute model: f_cpu must be > 0");
    }
    if (model.alpha.empty()) {
        report.push_back("compute model: coefficient table is empty");
    }
    return report;
}

double compute_lambda(const ComputeModel& model, const ServiceClass& service, std::size_t position)
{
    if (position >= model.alpha.size()) {
        throw config_error("no fitting coefficients for VNF position " + std::to_string(position + 1) +
                           " (table has " + std::to_string(model.alpha.size()) + " rows)");
    }
    const PolynomialCoefficients& row = model.alpha[position];
    const double i_dl = service.mcs_dl;
    const double i_ul = service.mcs_ul;
    double poly = 0.0;
    double dl_power = 1.0;
    double ul_power = 1.0;
    for (std::size_t k = 0; k < 3; ++k) {
        poly += row.downlink[k] * dl_power + row.uplink[k] * ul_power;
        dl_power *= i_dl;
        ul_power *= i_ul;
    }
    return model.c_exp_gflops_s * service.resource_blocks / model.f_cpu_ghz * poly;
}

ChainRequest build_chain(const ComputeModel& model, const ServiceClass& service, std::string id, std::size_t rrh)
{
    if (auto problems = validate_service_class(service); !problems.empty()) {
        throw config_error(problems.front());
    }
    const std::vector<double>& profile = service.latency_profile_ms;
    if (model.alpha.size() < profile.size()) {
        throw config_error("coefficient table covers " + std::to_string(model.alpha.size()) +
                           " positions but service " + std::string(to_string(service.kind)) + " has " +
                           std::to_string(profile.size()) + " VNFs");
    }

    ChainRequest chain;
    chain.id = std::move(id);
    chain.service = service.kind;
    chain.rrh = rrh;
    chain.vnfs.reserve(profile.size());
    for (std::size_t n = 0; n < profile.size(); ++n) {
        VnfSpec vnf;
        vnf.lambda_gflops = compute_lambda(model, service, n);
        vnf.backward_ms = profile[n];
        vnf.forward_ms = n + 1 < profile.size() ? profile[n + 1] : service.terminal_forward();
        chain.vnfs.push_back(vnf);
    }
    return chain;
}

std::size_t Instance::vnf_count() const
{
    std::size_t total = 0;
    for (const ChainRequest& chain : chains) {
        total += chain.vnfs.size();
    }
    return total;
}

std::vector<std::string> validate_instance(const Instance& instance)
{
    std::vector<std::string> report;
    const Infrastructure& infra = instance.infra;
    const std::size_t clouds = infra.cloud_count();

    if (clouds == 0) {
        report.push_back("infrastructure has no clouds");
    }
    for (std::size_t k = 0; k < clouds; ++k) {
        if (!is_finite_positive(infra.clouds[k].capacity_gflops_s)) {
            std::ostringstream msg;
            msg << "cloud " << k << " (" << infra.clouds[k].name << "): capacity "
                << infra.clouds[k].capacity_gflops_s << " must be > 0";
            report.push_back(msg.str());
        }
    }
    if (!is_finite_positive(infra.fiber_speed_m_per_us)) {
        report.push_back("fiber speed must be > 0");
    }

    if (infra.rrh_distance_m.size() != clouds) {
        report.push_back("rrh distance table must have one row per cloud");
    }
    const std::size_t rrhs = infra.rrh_count();
    for (std::size_t k = 0; k < infra.rrh_distance_m.size(); ++k) {
        const auto& row = infra.rrh_distance_m[k];
        if (row.size() != rrhs) {
            report.push_back("rrh distance row of cloud " + std::to_string(k) + " has the wrong length");
            continue;
        }
        for (std::size_t r = 0; r < row.size(); ++r) {
            if (!std::isfinite(row[r]) || row[r] < 0.0) {
                report.push_back("distance between cloud " + std::to_string(k) + " and rrh " + std::to_string(r) +
                                 " must be >= 0");
            }
        }
    }

    bool square = infra.cloud_distance_m.size() == clouds;
    for (const auto& row : infra.cloud_distance_m) {
        square = square && row.size() == clouds;
    }
    if (!square) {
        report.push_back("cloud distance matrix must be (K+1)x(K+1)");
    } else {
        for (std::size_t k = 0; k < clouds; ++k) {
            if (infra.cloud_distance_m[k][k] != 0.0) {
                report.push_back("cloud distance d(" + std::to_string(k) + "," + std::to_string(k) + ") must be 0");
            }
            for (std::size_t j = 0; j < clouds; ++j) {
                const double d = infra.cloud_distance_m[k][j];
                if (!std::isfinite(d) || d < 0.0) {
                    report.push_back("cloud distance d(" + std::to_string(k) + "," + std::to_string(j) +
                                     ") must be >= 0");
                }
                if (j > k && d != infra.cloud_distance_m[j][k]) {
                    report.push_back("cloud distance is asymmetric for pair (" + std::to_string(k) + "," +
                                     std::to_string(j) + ")");
                }
            }
        }
    }

    std::set<std::string> ids;
    for (std::size_t s = 0; s < instance.chains.size(); ++s) {
        const ChainRequest& chain = instance.chains[s];
        const std::string label = "chain " + std::to_string(s) + " (" + chain.id + ")";
        if (!ids.insert(chain.id).second) {
            report.push_back(label + ": duplicate chain id");
        }
        if (chain.rrh >= rrhs) {
            report.push_back(label + ": rrh " + std::to_string(chain.rrh) + " has no distance entries");
        }
        if (chain.vnfs.empty()) {
            report.push_back(label + ": chain has no VNFs");
        }
        for (std::size_t n = 0; n < chain.vnfs.size(); ++n) {
            const VnfSpec& vnf = chain.vnfs[n];
            if (!std::isfinite(vnf.lambda_gflops) || vnf.lambda_gflops < 0.0) {
                report.push_back(label + ": VNF " + std::to_string(n + 1) + " has negative demand");
            }
            if (!is_finite_positive(vnf.forward_ms) || !is_finite_positive(vnf.backward_ms)) {
                report.push_back(label + ": VNF " + std::to_string(n + 1) + " latency bounds must be > 0");
            }
        }
    }
    return report;
}

ServiceClass default_service_class(ServiceKind kind)
{
    ServiceClass service;
    service.kind = kind;
    switch (kind) {
    case ServiceKind::embb:
        service.resource_blocks = 250;
        service.mcs_dl = 27;
        service.mcs_ul = 16;
        service.latency_profile_ms = {1, 3, 3, 3, 22.5, 22.5, 22.5, 22.5};
        break;
    case ServiceKind::mmtc:
        service.resource_blocks = 5;
        service.mcs_dl = 13;
        service.mcs_ul = 8;
        service.latency_profile_ms = {10, 10, 10, 10, 200, 500, 1e4, 2e3};
        break;
    case ServiceKind::urllc1:
        service.resource_blocks = 25;
        service.mcs_dl = 27;
        service.mcs_ul = 16;
        service.latency_profile_ms = std::vector<double>(8, 0.2);
        break;
    case ServiceKind::urllc2:
        service.resource_blocks = 500;
        service.mcs_dl = 27;
        service.mcs_ul = 16;
        service.latency_profile_ms = std::vector<double>(8, 0.5);
        break;
    }
    return service;
}

ComputeModel default_compute_model()
{
    // Synthetic: a shared quadratic shape scaled per position, decreasing from
    // the low PHY (position 1) to RRC (position 8).
    constexpr std::array<double, 8> position_scale = {1.0, 0.6, 0.25, 0.15, 0.05, 0.04, 0.03, 0.02};
    constexpr std::array<double, 3> dl_shape = {1.0e-5, 2.0e-6, 3.0e-7};
    constexpr std::array<double, 3> ul_shape = {5.0e-6, 1.0e-6, 1.5e-7};

    ComputeModel model;
    model.c_exp_gflops_s = 5.0;
    model.f_cpu_ghz = 2.0;
    for (double scale : position_scale) {
        PolynomialCoefficients row;
        for (std::size_t k = 0; k < 3; ++k) {
            row.downlink[k] = scale * dl_shape[k];
            row.uplink[k] = scale * ul_shape[k];
        }
        model.alpha.push_back(row);
    }
    return model;
}

} // namespace vnfdeploy

#include <vnfdeploy/scenario.hpp>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vnfdeploy {

namespace {

double euclid(const Point& a, const Point& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace

HexLayout gen_hex_layout(int rings, double isd_m)
{
    if (rings < 0) {
        throw config_error("rings must be >= 0");
    }
    // Axial coordinates; neighbours differ by one of six unit steps.
    constexpr std::array<std::array<int, 2>, 6> steps = {{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
    std::vector<std::array<int, 2>> axial = {{0, 0}};
    for (int r = 1; r <= rings; ++r) {
        std::array<int, 2> hex = {steps[4][0] * r, steps[4][1] * r};
        for (const auto& step : steps) {
            for (int i = 0; i < r; ++i) {
                axial.push_back(hex);
                hex = {hex[0] + step[0], hex[1] + step[1]};
            }
        }
    }

    HexLayout layout;
    const double row_height = isd_m * std::sqrt(3.0) / 2.0;
    for (const auto& [q, r] : axial) {
        layout.sites.push_back({isd_m * (q + r / 2.0), row_height * r});
    }
    const std::size_t n = layout.sites.size();
    layout.distance_m.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            layout.distance_m[a][b] = layout.distance_m[b][a] = euclid(layout.sites[a], layout.sites[b]);
        }
    }
    return layout;
}

std::string_view to_string(MixKind kind)
{
    return kind == MixKind::mixed ? "mixed" : "embb";
}

MixKind parse_mix_kind(std::string_view text)
{
    if (text == "mixed") {
        return MixKind::mixed;
    }
    if (text == "embb" || text == "embb-only" || text == "embb_only") {
        return MixKind::embb_only;
    }
    throw config_error("unknown mix kind '" + std::string(text) + "'");
}

std::string_view to_string(EdgePlacement placement)
{
    return placement == EdgePlacement::center ? "center" : "every-site";
}

EdgePlacement parse_edge_placement(std::string_view text)
{
    if (text == "center" || text == "centre") {
        return EdgePlacement::center;
    }
    if (text == "every-site" || text == "every_site" || text == "all") {
        return EdgePlacement::every_site;
    }
    throw config_error("unknown edge placement '" + std::string(text) + "'");
}

std::vector<MixEntry> gen_mix(std::size_t chains, MixKind kind, std::uint64_t seed, std::size_t sites)
{
    if (sites == 0) {
        throw config_error("a mix needs at least one RRH");
    }
    std::mt19937_64 rng(seed);
    std::vector<MixEntry> mix;
    if (kind == MixKind::embb_only) {
        for (std::size_t i = 0; i < chains; ++i) {
            mix.push_back({ServiceKind::embb, static_cast<std::size_t>(rng() % sites)});
        }
        return mix;
    }
    constexpr std::array<ServiceKind, 3> cycle = {ServiceKind::embb, ServiceKind::urllc1, ServiceKind::urllc2};
    for (std::size_t i = 0; i < chains; ++i) {
        if (i == 0) {
            mix.push_back({ServiceKind::mmtc, 0});
        } else {
            mix.push_back({cycle[(i - 1) % cycle.size()], static_cast<std::size_t>(rng() % sites)});
        }
    }
    return mix;
}

std::vector<std::string> validate_scenario(const ScenarioConfig& cfg)
{
    std::vector<std::string> report;
    if (cfg.rings < 0) {
        report.push_back("rings must be >= 0");
    }
    if (!(cfg.isd_m > 0.0)) {
        report.push_back("inter-site distance must be > 0");
    }
    if (!(cfg.central_capacity > 0.0)) {
        report.push_back("central capacity must be > 0");
    }
    for (double c : cfg.edge_capacity) {
        if (!(c > 0.0)) {
            report.push_back("edge capacities must be > 0");
        }
    }
    for (double d : cfg.central_dist_m) {
        if (!(d >= 0.0)) {
            report.push_back("central distances must be >= 0");
        }
    }
    if (cfg.central_dist_m.empty() || cfg.edge_capacity.empty() || cfg.mix_size.empty()) {
        report.push_back("every sweep axis needs at least one value");
    }
    if (cfg.repetitions == 0) {
        report.push_back("repetitions must be >= 1");
    }
    if (!(cfg.fiber_speed_m_per_us > 0.0)) {
        report.push_back("fiber speed must be > 0");
    }
    for (const std::string& problem : validate_compute_model(cfg.compute_model)) {
        report.push_back(problem);
    }
    return report;
}

Instance build_scenario_instance(const ScenarioConfig& cfg, std::size_t chains, double central_dist_m,
                                 double edge_capacity, std::uint64_t seed)
{
    const HexLayout layout = gen_hex_layout(cfg.rings, cfg.isd_m);
    const std::size_t sites = layout.sites.size();
    const Point central{central_dist_m, 0.0};

    std::vector<std::size_t> edge_sites;
    if (cfg.edges == EdgePlacement::center) {
        edge_sites.push_back(0);
    } else {
        for (std::size_t i = 0; i < sites; ++i) {
            edge_sites.push_back(i);
        }
    }

    Instance inst;
    Infrastructure& infra = inst.infra;
    infra.fiber_speed_m_per_us = cfg.fiber_speed_m_per_us;
    infra.clouds.push_back({"central", cfg.central_capacity, cfg.central_cpu_ghz});
    for (std::size_t site : edge_sites) {
        infra.clouds.push_back({"edge" + std::to_string(site), edge_capacity, cfg.edge_cpu_ghz});
    }

    std::vector<double> central_row;
    for (const Point& p : layout.sites) {
        central_row.push_back(euclid(p, central));
    }
    infra.rrh_distance_m.push_back(central_row);
    for (std::size_t site : edge_sites) {
        infra.rrh_distance_m.push_back(layout.distance_m[site]);
    }

    const std::size_t clouds = infra.clouds.size();
    infra.cloud_distance_m.assign(clouds, std::vector<double>(clouds, 0.0));
    for (std::size_t e = 0; e < edge_sites.size(); ++e) {
        const double d = central_row[edge_sites[e]];
        infra.cloud_distance_m[0][e + 1] = infra.cloud_distance_m[e + 1][0] = d;
        for (std::size_t f = 0; f < edge_sites.size(); ++f) {
            infra.cloud_distance_m[e + 1][f + 1] = layout.distance_m[edge_sites[e]][edge_sites[f]];
        }
    }

    const std::vector<MixEntry> mix = gen_mix(chains, cfg.mix, seed, sites);
    for (std::size_t i = 0; i < mix.size(); ++i) {
        inst.chains.push_back(
            build_chain(cfg.compute_model, default_service_class(mix[i].service), "c" + std::to_string(i), mix[i].rrh));
    }
    return inst;
}

Instance cran_only(const Instance& hybrid)
{
    Instance out;
    out.chains = hybrid.chains;
    Infrastructure& infra = out.infra;
    infra.fiber_speed_m_per_us = hybrid.infra.fiber_speed_m_per_us;
    Cloud central = hybrid.infra.clouds.at(kCentralCloud);
    for (std::size_t k = 1; k < hybrid.infra.clouds.size(); ++k) {
        central.capacity_gflops_s += hybrid.infra.clouds[k].capacity_gflops_s;
    }
    infra.clouds = {central};
    infra.rrh_distance_m = {hybrid.infra.rrh_distance_m.at(kCentralCloud)};
    infra.cloud_distance_m = {{0.0}};
    return out;
}

double efficiency_improvement(double rate_baseline, double rate_variant)
{
    if (!(rate_baseline > 0.0)) {
        throw std::domain_error("efficiency improvement needs a positive baseline rate");
    }
    return 100.0 * (rate_baseline - rate_variant) / rate_baseline;
}

std::string SweepMethod::name() const
{
    return method ? std::string(to_string(*method)) : "cran-only";
}

SweepMethod SweepMethod::parse(std::string_view text)
{
    if (text == "cran-only" || text == "cran_only" || text == "cran") {
        return SweepMethod{};
    }
    return SweepMethod{parse_method(text)};
}

} // namespace vnfdeploy

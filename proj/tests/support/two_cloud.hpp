// Two-cloud (one central, one edge) rate expressions written with the binary
// x = 1 for "central" and the split indicators dx = max{x - x', 0}. Kept
// separate from the general oracle so the K = 1 check exercises a different
// formulation of the same model.
#ifndef VNFDEPLOY_TESTS_TWO_CLOUD_HPP
#define VNFDEPLOY_TESTS_TWO_CLOUD_HPP

#include <vnfdeploy/model.hpp>
#include <vnfdeploy/rate_engine.hpp>

#include <algorithm>
#include <optional>
#include <random>

namespace two_cloud {

struct Params
{
    double lambda = 1.0;
    double f = 1.0;
    double b = 1.0;
};

struct Geometry
{
    double d_c = 0.0;   // RRH to central, m
    double d_e = 0.0;   // RRH to edge, m
    double d_ec = 0.0;  // edge to central, m
    double v = 200.0;   // m/us
};

inline constexpr double kEps = 1e-6;

inline bool split_ok(double bound_ms, double d, double v)
{
    return d == 0.0 || bound_ms - d / v / 1000.0 > kEps;
}

/// Rate of VNF n (0-based) of a chain with parameters `p`, under placement
/// bits x (1 = central). nullopt when a latency constraint is violated.
inline std::optional<double> rate(const std::vector<Params>& p, const std::vector<int>& x, std::size_t n,
                                  const Geometry& g)
{
    const std::size_t last = p.size() - 1;
    // GFLOPS per ms budget, expressed per second.
    const double lam = 1000.0 * p[n].lambda;
    const double delay = g.d_ec / g.v / 1000.0;
    const int xn = x[n];

    // Split indicators toward the previous and next VNF, per side.
    const int dx_c_minus = n > 0 ? std::max(xn - x[n - 1], 0) : 0;
    const int dx_e_minus = n > 0 ? std::max(-xn + x[n - 1], 0) : 0;
    const int dx_c_plus = n < last ? std::max(xn - x[n + 1], 0) : 0;
    const int dx_e_plus = n < last ? std::max(-xn + x[n + 1], 0) : 0;

    if ((dx_c_plus + dx_e_plus) > 0 && !split_ok(p[n].f, g.d_ec, g.v)) {
        return std::nullopt;
    }
    if ((dx_c_minus + dx_e_minus) > 0 && !split_ok(p[n].b, g.d_ec, g.v)) {
        return std::nullopt;
    }

    if (n == 0) {
        const double d_first = xn == 1 ? g.d_c : g.d_e;
        if (!split_ok(p[0].b, d_first, g.v)) {
            return std::nullopt;
        }
        const double c_c =
            std::max(lam / p[0].f, g.d_c == 0.0 ? lam / p[0].b : lam / (p[0].b - g.d_c / g.v / 1000.0));
        const double c_e =
            std::max(lam / p[0].f, g.d_e == 0.0 ? lam / p[0].b : lam / (p[0].b - g.d_e / g.v / 1000.0));
        double dc_c_plus = 0.0;
        double dc_e_plus = 0.0;
        if (last > 0 && g.d_ec > 0.0 && split_ok(p[0].f, g.d_ec, g.v)) {
            dc_c_plus = std::max(lam / (p[0].f - delay), c_c) - c_c;
            dc_e_plus = std::max(lam / (p[0].f - delay), c_e) - c_e;
        }
        const double r_c = xn == 1 ? c_c * xn + dc_c_plus * dx_c_plus : 0.0;
        const double r_e = xn == 0 ? c_e * (1 - xn) + dc_e_plus * dx_e_plus : 0.0;
        return r_c + r_e;
    }

    const double c = lam / std::min(p[n].f, p[n].b);
    const double dc_minus =
        g.d_ec > 0.0 && split_ok(p[n].b, g.d_ec, g.v) ? std::max(lam / (p[n].b - delay), c) - c : 0.0;
    if (n == last) {
        const double r_c = c * xn + dc_minus * dx_c_minus;
        const double r_e = c * (1 - xn) + dc_minus * dx_e_minus;
        return r_c + r_e;
    }
    const double dc_plus =
        g.d_ec > 0.0 && split_ok(p[n].f, g.d_ec, g.v) ? std::max(lam / (p[n].f - delay), c) - c : 0.0;
    const double r_c = c * xn + std::max(dc_minus * dx_c_minus, dc_plus * dx_c_plus);
    const double r_e = c * (1 - xn) + std::max(dc_minus * dx_e_minus, dc_plus * dx_e_plus);
    return r_c + r_e;
}

/// Single-chain instance with central = cloud 0 and edge = cloud 1.
inline vnfdeploy::Instance instance(const std::vector<Params>& p, const Geometry& g)
{
    vnfdeploy::Instance inst;
    inst.infra.clouds = {{"central", 1e12, 0.0}, {"edge", 1e12, 0.0}};
    inst.infra.fiber_speed_m_per_us = g.v;
    inst.infra.rrh_distance_m = {{g.d_c}, {g.d_e}};
    inst.infra.cloud_distance_m = {{0.0, g.d_ec}, {g.d_ec, 0.0}};
    vnfdeploy::ChainRequest chain;
    chain.id = "s";
    for (const Params& q : p) {
        chain.vnfs.push_back({q.lambda, q.f, q.b});
    }
    inst.chains.push_back(chain);
    return inst;
}

struct Draw
{
    std::vector<Params> params;
    Geometry geometry;
    std::vector<int> x;
};

inline Draw random_draw(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<int> bit(0, 1);
    Draw d;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        d.params.push_back({10.0 * unit(rng), 0.1 + 3.0 * unit(rng), 0.1 + 3.0 * unit(rng)});
        d.x.push_back(bit(rng));
    }
    const double scale[] = {0.0, 1000.0, 30000.0, 150000.0};
    d.geometry.d_c = scale[bit(rng) + 2] * unit(rng);
    d.geometry.d_e = scale[bit(rng)] * unit(rng);
    d.geometry.d_ec = unit(rng) < 0.1 ? 0.0 : 200000.0 * unit(rng);
    d.geometry.v = 100.0 + 200.0 * unit(rng);
    return d;
}

} // namespace two_cloud

#endif // VNFDEPLOY_TESTS_TWO_CLOUD_HPP

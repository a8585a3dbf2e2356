#include <vnfdeploy/exact_solver.hpp>
#include <vnfdeploy/ilp.hpp>

#include "support/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace vnfdeploy;

namespace {

Instance two_clouds(std::vector<VnfSpec> vnfs, double edge_rrh_m, double central_rrh_m, double between_m)
{
    Instance inst;
    inst.infra.clouds = {{"central", 10000.0, 0.0}, {"edge", 8000.0, 0.0}};
    inst.infra.rrh_distance_m = {{central_rrh_m}, {edge_rrh_m}};
    inst.infra.cloud_distance_m = {{0.0, between_m}, {between_m, 0.0}};
    inst.chains.push_back({"c", ServiceKind::embb, 0, std::move(vnfs)});
    return inst;
}

std::size_t rows_with_prefix(const IlpModel& m, std::string_view prefix)
{
    return static_cast<std::size_t>(std::count_if(m.constraints.begin(), m.constraints.end(), [&](const auto& c) {
        return std::string_view(c.name).substr(0, prefix.size()) == prefix;
    }));
}

} // namespace

TEST_CASE("variable and row counts of a 3-VNF two-cloud model")
{
    const IlpModel m = build_ilp(two_clouds({{4, 1, 1}, {2, 1, 1}, {1, 1, 1}}, 1000.0, 30000.0, 30000.0));
    CHECK(m.binary_count() == 6);
    CHECK(m.continuous_count() == 6);
    CHECK(rows_with_prefix(m, "onehot_") == 3);
    CHECK(rows_with_prefix(m, "cap_") == 2);
    CHECK(m.find(placement_var_name(0, 0, 1)).has_value());
    CHECK(m.find("r_s0_n3_k1").has_value());
    CHECK_FALSE(m.find("r_s0_n4_k0").has_value());
}

TEST_CASE("infeasible splits become cuts that keep the chain together")
{
    const VnfSpec u{0.1, 0.2, 0.2};
    const Instance inst = two_clouds({u, u, u}, 100.0, 100.0, 90000.0);
    const IlpModel m = build_ilp(inst);
    CHECK(rows_with_prefix(m, "cut_") > 0);
    CHECK(rows_with_prefix(m, "fwd_") == 0);
    CHECK(rows_with_prefix(m, "bwd_") == 0);
    oracle::for_each_assignment(inst, [&](const Assignment& a) {
        const bool together = std::all_of(a.placement[0].begin(), a.placement[0].end(),
                                          [&](CloudIndex k) { return k == a.placement[0][0]; });
        CHECK(minimal_completion(m, assignment_to_binaries(m, a)).feasible == together);
    });
}

TEST_CASE("zero distances need only base rows")
{
    const IlpModel m = build_ilp(two_clouds({{4, 1, 1}, {2, 1, 1}, {1, 1, 1}}, 0.0, 0.0, 0.0));
    CHECK(rows_with_prefix(m, "fwd_") == 0);
    CHECK(rows_with_prefix(m, "bwd_") == 0);
    CHECK(rows_with_prefix(m, "cut_") == 0);
    CHECK(rows_with_prefix(m, "base_") == 6);
}

TEST_CASE("empty instance")
{
    Instance inst = two_clouds({{1, 1, 1}}, 0, 0, 0);
    inst.chains.clear();
    const IlpModel m = build_ilp(inst);
    CHECK(m.constraints.empty());
    CHECK(m.var_names.empty());
    const std::string text = emit_lp_text(m);
    CHECK(text.find("obj: 0") != std::string::npos);
    CHECK(parse_lp_text(text) == m);
}

TEST_CASE("LP text round trip")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const IlpModel m = build_ilp(oracle::random_instance(rng));
        const std::string text = emit_lp_text(m);
        const IlpModel back = parse_lp_text(text);
        CHECK(back == m);
        CHECK(emit_lp_text(back) == text);
    }
}

TEST_CASE("LP text is byte-stable")
{
    std::mt19937_64 a(5);
    std::mt19937_64 b(5);
    CHECK(emit_lp_text(build_ilp(oracle::random_instance(a))) == emit_lp_text(build_ilp(oracle::random_instance(b))));
}

TEST_CASE("malformed LP text is rejected")
{
    CHECK_THROWS_AS(parse_lp_text("Maximize\n obj: x\nEnd\n"), lp_parse_error);
    CHECK_THROWS_AS(parse_lp_text("Minimize\n obj: x\nSubject To\n c1: x >= \nEnd\n"), lp_parse_error);
}

TEST_CASE("constraint satisfaction matches rate engine feasibility")
{
    std::mt19937_64 rng(22);
    int instances = 0;
    int assignments = 0;
    while (instances < 60) {
        const Instance inst = oracle::random_instance(rng, {2, 3, 2});
        if (assignment_space_size(inst) > 4096) {
            continue;
        }
        ++instances;
        const RateTable table(inst);
        const IlpModel m = build_ilp(inst, table);
        oracle::for_each_assignment(inst, [&](const Assignment& a) {
            const Solution sol = evaluate(inst, table, a);
            const Completion c = minimal_completion(m, assignment_to_binaries(m, a));
            CHECK(c.feasible == sol.feasible);
            if (c.feasible && sol.feasible) {
                CHECK(std::abs(c.objective - sol.objective) <= 1e-6 * std::max(1.0, sol.objective));
            }
            ++assignments;
        });
    }
    CHECK(assignments > 500);
}

TEST_CASE("non-one-hot binaries violate the model")
{
    const Instance inst = two_clouds({{4, 1, 1}, {2, 1, 1}}, 1000.0, 30000.0, 30000.0);
    const IlpModel m = build_ilp(inst);
    std::vector<double> bits(m.var_names.size(), 0.0);
    const Completion c = minimal_completion(m, bits);
    CHECK_FALSE(c.feasible);
    CHECK(c.violated.rfind("onehot_", 0) == 0);
}

TEST_CASE("row count grows at most quadratically")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Instance inst = oracle::random_instance(rng, {3, 4, 2});
        const IlpModel m = build_ilp(inst);
        const double v = static_cast<double>(inst.vnf_count() * inst.infra.cloud_count());
        CHECK(static_cast<double>(m.constraints.size()) <= 4.0 * v * v + 4.0 * v + 8.0);
    }
}

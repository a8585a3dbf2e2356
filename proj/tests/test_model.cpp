#include <vnfdeploy/config.hpp>
#include <vnfdeploy/model.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace vnfdeploy;

namespace {

ComputeModel single_term_model(std::size_t degree, bool downlink)
{
    ComputeModel m;
    m.c_exp_gflops_s = 1.0;
    m.f_cpu_ghz = 1.0;
    PolynomialCoefficients c;
    (downlink ? c.downlink : c.uplink)[degree] = 1.0;
    m.alpha.push_back(c);
    return m;
}

ServiceClass service(int rb, int dl, int ul)
{
    ServiceClass s = default_service_class(ServiceKind::mmtc);
    s.resource_blocks = rb;
    s.mcs_dl = dl;
    s.mcs_ul = ul;
    return s;
}

Instance two_cloud_instance()
{
    Instance inst;
    inst.infra.clouds = {{"central", 8960.0, 2.5}, {"edge", 4480.0, 2.2}};
    inst.infra.rrh_distance_m = {{30000.0}, {0.0}};
    inst.infra.cloud_distance_m = {{0.0, 30000.0}, {30000.0, 0.0}};
    inst.chains.push_back(build_chain(default_compute_model(), default_service_class(ServiceKind::embb), "a", 0));
    return inst;
}

} // namespace

TEST_CASE("zero coefficients give zero demand")
{
    ComputeModel m;
    m.alpha.resize(1);
    for (int rb : {1, 25, 500}) {
        CHECK(compute_lambda(m, service(rb, 27, 16), 0) == 0.0);
    }
}

TEST_CASE("constant downlink coefficient scales with RB")
{
    CHECK(compute_lambda(single_term_model(0, true), service(5, 13, 8), 0) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("quadratic downlink coefficient")
{
    CHECK(compute_lambda(single_term_model(2, true), service(5, 13, 8), 0) == doctest::Approx(845.0).epsilon(1e-12));
}

TEST_CASE("uplink terms use the uplink MCS")
{
    CHECK(compute_lambda(single_term_model(1, false), service(2, 13, 8), 0) == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("missing coefficient row is a configuration error")
{
    CHECK_THROWS_AS(compute_lambda(single_term_model(0, true), service(5, 13, 8), 3), config_error);
}

TEST_CASE("demand is monotone in RB and MCS for non-negative coefficients")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(0.0, 1e-3);
    std::uniform_int_distribution<int> rb_d(1, 400);
    std::uniform_int_distribution<int> mcs_d(0, kMaxMcsIndex - 1);
    for (int trial = 0; trial < 200; ++trial) {
        ComputeModel m;
        m.c_exp_gflops_s = 1.0 + coef(rng) * 1e3;
        m.f_cpu_ghz = 2.0;
        PolynomialCoefficients c;
        for (int d = 0; d < 3; ++d) {
            c.downlink[d] = coef(rng);
            c.uplink[d] = coef(rng);
        }
        m.alpha.push_back(c);
        const int rb = rb_d(rng);
        const int dl = mcs_d(rng);
        const int ul = mcs_d(rng);
        const double base = compute_lambda(m, service(rb, dl, ul), 0);
        CHECK(compute_lambda(m, service(rb + 1, dl, ul), 0) >= base);
        CHECK(compute_lambda(m, service(rb, dl + 1, ul), 0) >= base);
        CHECK(compute_lambda(m, service(rb, dl, ul + 1), 0) >= base);
    }
}

TEST_CASE("forward bound is the next backward bound")
{
    const ComputeModel m = default_compute_model();
    for (ServiceKind kind : kAllServiceKinds) {
        const ServiceClass svc = default_service_class(kind);
        const ChainRequest chain = build_chain(m, svc, "x", 0);
        REQUIRE(chain.vnfs.size() == svc.latency_profile_ms.size());
        for (std::size_t n = 0; n + 1 < chain.vnfs.size(); ++n) {
            CHECK(chain.vnfs[n].forward_ms == chain.vnfs[n + 1].backward_ms);
        }
        CHECK(chain.vnfs.back().forward_ms == svc.latency_profile_ms.back());
    }
}

TEST_CASE("URLLC1 chain has 0.2 ms bounds everywhere")
{
    const ChainRequest chain =
        build_chain(default_compute_model(), default_service_class(ServiceKind::urllc1), "u", 0);
    for (const VnfSpec& v : chain.vnfs) {
        CHECK(v.forward_ms == 0.2);
        CHECK(v.backward_ms == 0.2);
    }
}

TEST_CASE("eMBB backward profile")
{
    const ChainRequest chain = build_chain(default_compute_model(), default_service_class(ServiceKind::embb), "e", 0);
    std::vector<double> b;
    for (const VnfSpec& v : chain.vnfs) {
        b.push_back(v.backward_ms);
    }
    CHECK(b == std::vector<double>{1, 3, 3, 3, 22.5, 22.5, 22.5, 22.5});
}

TEST_CASE("single-VNF chain uses the terminal bound")
{
    ServiceClass svc = default_service_class(ServiceKind::embb);
    svc.latency_profile_ms = {2.0};
    svc.terminal_forward_ms = 0.7;
    const ChainRequest chain = build_chain(default_compute_model(), svc, "one", 0);
    REQUIRE(chain.vnfs.size() == 1);
    CHECK(chain.vnfs[0].forward_ms == 0.7);
    CHECK(chain.vnfs[0].backward_ms == 2.0);
}

TEST_CASE("default demand ordering by service")
{
    const ComputeModel m = default_compute_model();
    const auto lambdas = [&](ServiceKind k) { return build_chain(m, default_service_class(k), "x", 0).vnfs; };
    const auto u2 = lambdas(ServiceKind::urllc2);
    const auto e = lambdas(ServiceKind::embb);
    const auto mm = lambdas(ServiceKind::mmtc);
    for (std::size_t n = 0; n < e.size(); ++n) {
        CHECK(u2[n].lambda_gflops >= e[n].lambda_gflops);
        CHECK(e[n].lambda_gflops >= mm[n].lambda_gflops);
    }
}

TEST_CASE("default coefficients decrease toward upper layers")
{
    const auto chain = build_chain(default_compute_model(), default_service_class(ServiceKind::embb), "e", 0).vnfs;
    for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
        CHECK(chain[n].lambda_gflops > chain[n + 1].lambda_gflops);
    }
}

TEST_CASE("reference service parameters")
{
    const ServiceClass e = default_service_class(ServiceKind::embb);
    CHECK(e.resource_blocks == 250);
    CHECK(e.mcs_dl == 27);
    CHECK(e.mcs_ul == 16);
    const ServiceClass m = default_service_class(ServiceKind::mmtc);
    CHECK(m.resource_blocks == 5);
    CHECK(m.mcs_dl == 13);
    CHECK(m.mcs_ul == 8);
    CHECK(m.latency_profile_ms == std::vector<double>{10, 10, 10, 10, 200, 500, 1e4, 2e3});
    CHECK(default_service_class(ServiceKind::urllc1).resource_blocks == 25);
    CHECK(default_service_class(ServiceKind::urllc2).resource_blocks == 500);
    CHECK(default_service_class(ServiceKind::urllc2).latency_profile_ms == std::vector<double>(8, 0.5));
}

TEST_CASE("service names parse")
{
    CHECK(parse_service_kind("eMBB") == ServiceKind::embb);
    CHECK(parse_service_kind("urllc_1") == ServiceKind::urllc1);
    CHECK(parse_service_kind("URLLC 2") == ServiceKind::urllc2);
    CHECK(parse_service_kind("mmtc") == ServiceKind::mmtc);
    CHECK_THROWS(parse_service_kind("lte"));
    for (ServiceKind k : kAllServiceKinds) {
        CHECK(parse_service_kind(to_string(k)) == k);
    }
}

TEST_CASE("validation")
{
    SUBCASE("well-formed instance")
    {
        CHECK(validate_instance(two_cloud_instance()).empty());
    }
    SUBCASE("negative capacity names the cloud")
    {
        Instance inst = two_cloud_instance();
        inst.infra.clouds[1].capacity_gflops_s = -1.0;
        const auto report = validate_instance(inst);
        REQUIRE(report.size() == 1);
        CHECK(report[0].find("edge") != std::string::npos);
    }
    SUBCASE("asymmetric distances name the pair")
    {
        Instance inst = two_cloud_instance();
        inst.infra.cloud_distance_m[0][1] = 100.0;
        const auto report = validate_instance(inst);
        REQUIRE(!report.empty());
        CHECK(report[0].find("(0,1)") != std::string::npos);
    }
    SUBCASE("duplicate ids and unknown rrh")
    {
        Instance inst = two_cloud_instance();
        inst.chains.push_back(inst.chains[0]);
        inst.chains.back().rrh = 3;
        const auto report = validate_instance(inst);
        CHECK(report.size() == 2);
    }
    SUBCASE("service class checks")
    {
        ServiceClass s = default_service_class(ServiceKind::embb);
        s.mcs_dl = 29;
        s.resource_blocks = 0;
        CHECK(validate_service_class(s).size() == 2);
    }
}

TEST_CASE("shipped coefficient file matches the built-in defaults")
{
    const ComputeModel file = load_compute_model(VNFDEPLOY_DATA_DIR "/compute_model.json");
    const ComputeModel builtin = default_compute_model();
    CHECK(file.c_exp_gflops_s == builtin.c_exp_gflops_s);
    CHECK(file.f_cpu_ghz == builtin.f_cpu_ghz);
    REQUIRE(file.alpha.size() == builtin.alpha.size());
    for (std::size_t n = 0; n < file.alpha.size(); ++n) {
        CHECK(file.alpha[n].downlink == builtin.alpha[n].downlink);
        CHECK(file.alpha[n].uplink == builtin.alpha[n].uplink);
    }
}

TEST_CASE("instance JSON round trip")
{
    const Instance inst = two_cloud_instance();
    const Instance back = instance_from_json(instance_to_json(inst));
    CHECK(instance_to_json(back) == instance_to_json(inst));
    CHECK(back.chains[0].vnfs.size() == 8);
}

TEST_CASE("chains without explicit VNFs are built from service classes")
{
    const std::string text = R"({
      "clouds": [{"name": "c", "capacity_gflops_s": 100}],
      "rrh_distance_m": [[0]],
      "cloud_distance_m": [[0]],
      "chains": [{"id": "m", "service": "mMTC", "rrh": 0}]
    })";
    const Instance inst = instance_from_json(text);
    REQUIRE(inst.chains.size() == 1);
    CHECK(inst.chains[0].vnfs.size() == 8);
    CHECK(inst.chains[0].vnfs[0].backward_ms == 10.0);
}

TEST_CASE("malformed configuration is reported")
{
    CHECK_THROWS_AS(instance_from_json("{"), config_error);
    CHECK_THROWS_AS(instance_from_json(R"({"clouds": []})"), config_error);
    CHECK_THROWS_AS(compute_model_from_json(R"({"c_exp_gflops_s": 0, "f_cpu_ghz": 1, "alpha": []})"), config_error);
}

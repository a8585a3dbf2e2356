#include <vnfdeploy/config.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace vnfdeploy {

namespace {

using json = nlohmann::json;

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("invalid JSON: ") + e.what());
    }
}

template <typename T>
T get(const json& j, const char* key)
{
    if (!j.contains(key)) {
        throw config_error(std::string("missing key '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw config_error(std::string("bad value for '") + key + "': " + e.what());
    }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback)
{
    return j.contains(key) ? get<T>(j, key) : fallback;
}

void throw_if_invalid(const std::vector<std::string>& problems, const std::string& what)
{
    if (!problems.empty()) {
        std::string msg = what + " is invalid:";
        for (const std::string& p : problems) {
            msg += "\n  " + p;
        }
        throw config_error(msg);
    }
}

json model_json(const ComputeModel& model)
{
    json alpha = json::array();
    for (const PolynomialCoefficients& row : model.alpha) {
        alpha.push_back({{"dl", row.downlink}, {"ul", row.uplink}});
    }
    return {{"c_exp_gflops_s", model.c_exp_gflops_s}, {"f_cpu_ghz", model.f_cpu_ghz}, {"alpha", alpha}};
}

ComputeModel model_from(const json& j)
{
    ComputeModel model;
    model.c_exp_gflops_s = get<double>(j, "c_exp_gflops_s");
    model.f_cpu_ghz = get<double>(j, "f_cpu_ghz");
    for (const json& row : get<json>(j, "alpha")) {
        PolynomialCoefficients c;
        c.downlink = get<std::array<double, 3>>(row, "dl");
        c.uplink = get<std::array<double, 3>>(row, "ul");
        model.alpha.push_back(c);
    }
    throw_if_invalid(validate_compute_model(model), "compute model");
    return model;
}

ServiceClass service_from(const json& j)
{
    ServiceClass service = default_service_class(parse_service_kind(get<std::string>(j, "name")));
    service.resource_blocks = get_or<int>(j, "rb", service.resource_blocks);
    service.mcs_dl = get_or<int>(j, "mcs_dl", service.mcs_dl);
    service.mcs_ul = get_or<int>(j, "mcs_ul", service.mcs_ul);
    service.latency_profile_ms = get_or<std::vector<double>>(j, "latency_profile_ms", service.latency_profile_ms);
    if (j.contains("terminal_forward_ms")) {
        service.terminal_forward_ms = get<double>(j, "terminal_forward_ms");
    }
    throw_if_invalid(validate_service_class(service), "service class");
    return service;
}

} // namespace

ComputeModel compute_model_from_json(const std::string& text)
{
    return model_from(parse(text));
}

std::string compute_model_to_json(const ComputeModel& model)
{
    return model_json(model).dump(2) + "\n";
}

Instance instance_from_json(const std::string& text)
{
    const json j = parse(text);
    Instance inst;
    Infrastructure& infra = inst.infra;
    infra.fiber_speed_m_per_us = get_or<double>(j, "fiber_speed_m_per_us", 200.0);
    for (const json& c : get<json>(j, "clouds")) {
        infra.clouds.push_back(
            {get_or<std::string>(c, "name", ""), get<double>(c, "capacity_gflops_s"), get_or<double>(c, "cpu_ghz", 0.0)});
    }
    infra.rrh_distance_m = get<std::vector<std::vector<double>>>(j, "rrh_distance_m");
    infra.cloud_distance_m = get<std::vector<std::vector<double>>>(j, "cloud_distance_m");

    const ComputeModel model = j.contains("compute_model") ? model_from(j.at("compute_model")) : default_compute_model();
    std::map<ServiceKind, ServiceClass> services;
    for (ServiceKind kind : kAllServiceKinds) {
        services[kind] = default_service_class(kind);
    }
    if (j.contains("service_classes")) {
        for (const json& s : j.at("service_classes")) {
            const ServiceClass service = service_from(s);
            services[service.kind] = service;
        }
    }

    for (const json& c : get<json>(j, "chains")) {
        const ServiceKind kind = parse_service_kind(get<std::string>(c, "service"));
        const std::string id = get<std::string>(c, "id");
        const std::size_t rrh = get<std::size_t>(c, "rrh");
        if (c.contains("vnfs")) {
            ChainRequest chain;
            chain.id = id;
            chain.service = kind;
            chain.rrh = rrh;
            for (const json& v : c.at("vnfs")) {
                chain.vnfs.push_back({get<double>(v, "lambda_gflops"), get<double>(v, "f_ms"), get<double>(v, "b_ms")});
            }
            inst.chains.push_back(std::move(chain));
        } else {
            inst.chains.push_back(build_chain(model, services.at(kind), id, rrh));
        }
    }
    throw_if_invalid(validate_instance(inst), "instance");
    return inst;
}

std::string instance_to_json(const Instance& instance)
{
    json clouds = json::array();
    for (const Cloud& c : instance.infra.clouds) {
        clouds.push_back({{"name", c.name}, {"capacity_gflops_s", c.capacity_gflops_s}, {"cpu_ghz", c.cpu_ghz}});
    }
    json chains = json::array();
    for (const ChainRequest& chain : instance.chains) {
        json vnfs = json::array();
        for (const VnfSpec& v : chain.vnfs) {
            vnfs.push_back({{"lambda_gflops", v.lambda_gflops}, {"f_ms", v.forward_ms}, {"b_ms", v.backward_ms}});
        }
        chains.push_back(
            {{"id", chain.id}, {"service", std::string(to_string(chain.service))}, {"rrh", chain.rrh}, {"vnfs", vnfs}});
    }
    json j = {{"fiber_speed_m_per_us", instance.infra.fiber_speed_m_per_us},
              {"clouds", clouds},
              {"rrh_distance_m", instance.infra.rrh_distance_m},
              {"cloud_distance_m", instance.infra.cloud_distance_m},
              {"chains", chains}};
    return j.dump(2) + "\n";
}

ScenarioConfig scenario_from_json(const std::string& text)
{
    const json j = parse(text);
    ScenarioConfig cfg;
    cfg.rings = get_or<int>(j, "rings", cfg.rings);
    cfg.isd_m = get_or<double>(j, "isd_m", cfg.isd_m);
    cfg.central_dist_m = get_or<std::vector<double>>(j, "central_dist_m", cfg.central_dist_m);
    cfg.central_capacity = get_or<double>(j, "central_capacity", cfg.central_capacity);
    cfg.edge_capacity = get_or<std::vector<double>>(j, "edge_capacity", cfg.edge_capacity);
    if (j.contains("edges")) {
        cfg.edges = parse_edge_placement(get<std::string>(j, "edges"));
    }
    if (j.contains("mix")) {
        cfg.mix = parse_mix_kind(get<std::string>(j, "mix"));
    }
    cfg.mix_size = get_or<std::vector<std::size_t>>(j, "mix_size", cfg.mix_size);
    cfg.seed = get_or<std::uint64_t>(j, "seed", cfg.seed);
    cfg.repetitions = get_or<std::size_t>(j, "repetitions", cfg.repetitions);
    cfg.fiber_speed_m_per_us = get_or<double>(j, "fiber_speed_m_per_us", cfg.fiber_speed_m_per_us);
    cfg.central_cpu_ghz = get_or<double>(j, "central_cpu_ghz", cfg.central_cpu_ghz);
    cfg.edge_cpu_ghz = get_or<double>(j, "edge_cpu_ghz", cfg.edge_cpu_ghz);
    if (j.contains("compute_model")) {
        cfg.compute_model = model_from(j.at("compute_model"));
    }
    throw_if_invalid(validate_scenario(cfg), "scenario");
    return cfg;
}

std::string scenario_to_json(const ScenarioConfig& cfg)
{
    const json j = {{"rings", cfg.rings},
                    {"isd_m", cfg.isd_m},
                    {"central_dist_m", cfg.central_dist_m},
                    {"central_capacity", cfg.central_capacity},
                    {"edge_capacity", cfg.edge_capacity},
                    {"edges", std::string(to_string(cfg.edges))},
                    {"mix", std::string(to_string(cfg.mix))},
                    {"mix_size", cfg.mix_size},
                    {"seed", cfg.seed},
                    {"repetitions", cfg.repetitions},
                    {"fiber_speed_m_per_us", cfg.fiber_speed_m_per_us},
                    {"central_cpu_ghz", cfg.central_cpu_ghz},
                    {"edge_cpu_ghz", cfg.edge_cpu_ghz},
                    {"compute_model", model_json(cfg.compute_model)}};
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw config_error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

Instance load_instance(const std::filesystem::path& path)
{
    return instance_from_json(read_text_file(path));
}

ComputeModel load_compute_model(const std::filesystem::path& path)
{
    return compute_model_from_json(read_text_file(path));
}

ScenarioConfig load_scenario(const std::filesystem::path& path)
{
    return scenario_from_json(read_text_file(path));
}

} // namespace vnfdeploy

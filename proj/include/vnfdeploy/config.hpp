#ifndef VNFDEPLOY_CONFIG_HPP
#define VNFDEPLOY_CONFIG_HPP

#include <vnfdeploy/model.hpp>
#include <vnfdeploy/scenario.hpp>

#include <filesystem>
#include <string>

namespace vnfdeploy {

// JSON documents. Every loader throws config_error with a readable message
// on malformed input, including failed validation.

/// {"c_exp_gflops_s", "f_cpu_ghz", "alpha": [{"dl": [a0,a1,a2], "ul": [...]}, ...]}
ComputeModel compute_model_from_json(const std::string& text);
std::string compute_model_to_json(const ComputeModel& model);

/// {"fiber_speed_m_per_us", "clouds": [{"name", "capacity_gflops_s", "cpu_ghz"}],
///  "rrh_distance_m": [[...] per cloud], "cloud_distance_m": [[...]],
///  "chains": [{"id", "service", "rrh", "vnfs": [{"lambda_gflops", "f_ms", "b_ms"}]}],
///  optional "compute_model" and "service_classes" used for chains without "vnfs"}
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& instance);

/// Scenario keys mirror ScenarioConfig field names; all optional.
ScenarioConfig scenario_from_json(const std::string& text);
std::string scenario_to_json(const ScenarioConfig& cfg);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Instance load_instance(const std::filesystem::path& path);
ComputeModel load_compute_model(const std::filesystem::path& path);
ScenarioConfig load_scenario(const std::filesystem::path& path);

} // namespace vnfdeploy

#endif // VNFDEPLOY_CONFIG_HPP

#include <vnfdeploy/scenario.hpp>

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace vnfdeploy {

namespace {

std::string quote(const std::string& field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_row(const std::string& line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    return fields;
}

double parse_double(const std::string& field)
{
    if (field.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::runtime_error("malformed number '" + field + "' in CSV");
    }
    return value;
}

std::size_t parse_count(const std::string& field)
{
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::runtime_error("malformed count '" + field + "' in CSV");
    }
    return value;
}

} // namespace

std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "";
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string();
}

void export_csv(const std::vector<SweepRecord>& records, std::ostream& out)
{
    if (records.empty()) {
        throw std::invalid_argument("no records to export");
    }
    std::size_t clouds = 0;
    for (const SweepRecord& r : records) {
        clouds = std::max(clouds, r.loads.size());
    }
    out << "scenario,method,S,d0_m,objective_gflops_s,accepted";
    for (std::size_t k = 0; k < clouds; ++k) {
        out << ",k" << k;
    }
    out << ",runtime_s,status\n";
    for (const SweepRecord& r : records) {
        out << quote(r.scenario) << ',' << quote(r.method) << ',' << r.chains << ',' << format_double(r.central_dist_m)
            << ',' << format_double(r.objective) << ',' << r.accepted;
        for (std::size_t k = 0; k < clouds; ++k) {
            out << ',' << (k < r.loads.size() ? format_double(r.loads[k]) : std::string("0"));
        }
        out << ',' << format_double(r.runtime_s) << ',' << quote(r.status) << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed to write CSV");
    }
}

std::vector<SweepRecord> parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty CSV");
    }
    const std::vector<std::string> header = split_row(line);
    if (header.size() < 8 || header[0] != "scenario" || header[header.size() - 2] != "runtime_s") {
        throw std::runtime_error("unexpected CSV header");
    }
    const std::size_t clouds = header.size() - 8;

    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = split_row(line);
        if (f.size() != header.size()) {
            throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields, expected " +
                                     std::to_string(header.size()));
        }
        SweepRecord r;
        r.scenario = f[0];
        r.method = f[1];
        r.chains = parse_count(f[2]);
        r.central_dist_m = parse_double(f[3]);
        r.objective = parse_double(f[4]);
        r.accepted = parse_count(f[5]);
        for (std::size_t k = 0; k < clouds; ++k) {
            r.loads.push_back(parse_double(f[6 + k]));
        }
        r.runtime_s = parse_double(f[6 + clouds]);
        r.status = f[7 + clouds];
        records.push_back(std::move(r));
    }
    return records;
}

void export_efficiency_csv(const std::vector<EfficiencyRow>& rows, std::ostream& out)
{
    out << "scenario,method,S,d0_m,efficiency_improvement_pct\n";
    for (const EfficiencyRow& r : rows) {
        out << quote(r.scenario) << ',' << quote(r.method) << ',' << r.chains << ',' << format_double(r.central_dist_m)
            << ',' << format_double(r.improvement_pct) << '\n';
    }
}

} // namespace vnfdeploy

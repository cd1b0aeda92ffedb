// config.cpp — strict flat configuration and deterministic output files.
#include "fluxbus/config.hpp"

#include "fluxbus/physpar.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace fluxbus {

namespace {

// Schema: every known key with its default value (empty = no default).
const std::map<std::string, std::string>& schema() {
    static const std::map<std::string, std::string> keys = {
        {"params.omega_q", "2.0"},
        {"params.omega_r", "1.0"},
        {"params.omega_s", "1.0"},
        {"params.g_qr", "0.05"},
        {"params.g_qs", "0.05"},
        {"params.unit", "MHz"},
        {"cutoffs.n_photon", "6"},
        {"cutoffs.n_spinmode", "6"},
        {"transfer.kind", "rabi_full"},
        {"transfer.t_max", "4.0"},
        {"transfer.n_steps", "2001"},
        {"transfer.initial", ""},
        {"transfer.target", ""},
        {"transfer.n_spins", "3"},
        {"fig4.g_single_hybrid_mhz", "0.012"},
        {"fig4.g_single_direct_mhz", "1e-5"},
        {"fig4.g_qr_mhz", "100.0"},
        {"fig4.delta_mhz", "1000.0"},
        {"fig6.g_values", "0.025,0.05,0.1,0.15,0.2,0.3"},
        {"couplings.area_um2", "250.0"},
        {"couplings.aspect", "50.0"},
        {"couplings.thickness_um", "5.0"},
        {"couplings.current_na", "900.0"},
        {"couplings.density_per_um3", "3e6"},
        {"couplings.resonator_ghz", "5.0"},
        {"couplings.inductance_nh", "10.0"},
        {"couplings.mutual_ph", "4.05"},
        {"couplings.delta_over_g", "3.0"},
        {"fncheck.regime", "nonrwa"},
        {"fncheck.excluded_levels", "2"},
        {"fncheck.tolerance", "1e-8"},
        {"oracle.n_spins", "3"},
    };
    return keys;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Config::Config() : values_(schema()) {}

void Config::set_checked(const std::string& key, const std::string& value) {
    if (schema().find(key) == schema().end())
        throw config_error("unknown config key '" + key + "'");
    values_[key] = value;
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string text = trim(line);
        if (text.empty()) continue;
        size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value', got '" + text + "'");
        set_checked(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    }
}

void Config::set_override(const std::string& assignment) {
    size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw config_error("override '" + assignment + "' is not of the form key=value");
    set_checked(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

double Config::get_double(const std::string& key) const {
    const std::string& raw = get_string(key);
    try {
        size_t used = 0;
        double v = std::stod(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': cannot parse '" + raw + "' as a number");
    }
}

int Config::get_int(const std::string& key) const {
    const std::string& raw = get_string(key);
    try {
        size_t used = 0;
        int v = std::stoi(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': cannot parse '" + raw + "' as an integer");
    }
}

std::string Config::get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw config_error("unknown config key '" + key + "'");
    return it->second;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    std::string raw = get_string(key);
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw config_error("config key '" + key + "': cannot parse list item '" + item + "'");
        }
    }
    if (out.empty()) throw config_error("config key '" + key + "': empty list");
    return out;
}

std::vector<int> Config::get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (double v : get_double_list(key)) {
        int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw config_error("config key '" + key + "': list item " + format_value(v) +
                               " is not an integer");
        out.push_back(i);
    }
    return out;
}

bool Config::has_value(const std::string& key) const {
    auto it = values_.find(key);
    return it != values_.end() && !it->second.empty();
}

// ---- output files ----

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write '" + path + "'");
    for (size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw config_error("csv row width does not match header in '" + path + "'");
        for (size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_value(row[i]);
        out << "\n";
    }
    if (!out) throw config_error("write failed for '" + path + "'");
}

void write_manifest(const std::string& path, const std::map<std::string, std::string>& entries) {
    std::map<std::string, std::string> all = entries;
    all["constants.g_e"] = format_value(k_g_e);
    all["constants.mu_mhz_per_mt"] = format_value(k_mu_mhz_per_mt);
    all["constants.mu0"] = format_value(k_mu0);
    all["constants.planck_h"] = format_value(k_planck_h);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write '" + path + "'");
    for (const auto& [key, value] : all)
        out << key << " = " << value << "\n";
    if (!out) throw config_error("write failed for '" + path + "'");
}

} // namespace fluxbus

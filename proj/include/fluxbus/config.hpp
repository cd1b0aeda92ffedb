// config.hpp — flat key=value configuration, manifests, CSV output.
//
// Config files are `key = value` lines with `#` comments; dotted prefixes
// group keys (params.omega_r, cutoffs.n_photon).  Parsing is strict: a key
// outside the schema fails fast naming the offender.  Every run writes a
// manifest.txt echoing all resolved keys plus the physical constants, sorted,
// so outputs are self-describing and byte-reproducible.
#pragma once

#include "fluxbus/errors.hpp"

#include <map>
#include <string>
#include <vector>

namespace fluxbus {

class Config {
public:
    // Starts from the schema defaults.
    Config();

    // Merge a config file (throws config_error on unknown keys or bad syntax).
    void load_file(const std::string& path);

    // Merge one "key=value" override.
    void set_override(const std::string& assignment);

    // Typed getters; throw config_error on parse failure.
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const; // comma-separated
    std::vector<int> get_int_list(const std::string& key) const;
    bool has_value(const std::string& key) const; // value non-empty

    // All resolved keys, for the manifest.
    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    void set_checked(const std::string& key, const std::string& value);
    std::map<std::string, std::string> values_;
};

// 12-significant-digit decimal formatting shared by CSV and manifest.
std::string format_value(double v);

// CSV with mandatory header, '.' decimal, 12 significant digits, LF endings.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Sorted key=value manifest including the physical-constant table.
void write_manifest(const std::string& path, const std::map<std::string, std::string>& entries);

} // namespace fluxbus

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk::cli {

enum class OutputFormat { csv, json };

/// A fully validated run description.
struct RunConfig {
    InitialState init;
    Schedule schedule;
    long long steps = 0;
    std::vector<long long> checkpoints;  // strictly increasing, within [0, steps]
    OutputFormat format = OutputFormat::csv;
    std::string out_dir;
    bool parity_filter = true;
    long long ensemble = 1;    // random_phase only
    bool gaussian_ref = false; // emit a moment-matched Gaussian column with the PMF
};

/// Parse/validation failure; the message carries the offending line or field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string message, int line = 0, std::string key = {})
        : std::runtime_error(std::move(message)), line_(line), key_(std::move(key)) {}

    int line() const { return line_; }
    const std::string& key() const { return key_; }

private:
    int line_;
    std::string key_;
};

/// Parses the flat `key = value` config format ('#' comments, one key per
/// line, unknown or duplicate keys rejected).
RunConfig parse_config(std::string_view text);

/// Splits config text into key/value pairs without validating them.
/// Used by sweeps to override keys before building the final config.
std::map<std::string, std::string> config_to_map(std::string_view text);

/// Builds and validates a RunConfig from raw key/value pairs.
RunConfig build_config(const std::map<std::string, std::string>& keys);

/// Angle literal: a plain float, or "pi", "-pi", "N*pi", "pi/N", "N*pi/M".
double parse_angle(const std::string& text);

std::vector<long long> parse_int_list(const std::string& text);
std::vector<double> parse_angle_list(const std::string& text);

}  // namespace qwalk::cli

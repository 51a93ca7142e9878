#include "qwalk/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace qwalk::cli {

namespace {

constexpr double pi = 3.14159265358979323846;

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        parts.push_back(trim(item));
    }
    return parts;
}

double parse_plain_double(const std::string& text) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: \"" + text + "\"");
    }
    if (used != text.size()) {
        throw ConfigError("trailing characters in number: \"" + text + "\"");
    }
    if (!std::isfinite(v)) {
        throw ConfigError("non-finite value: \"" + text + "\"");
    }
    return v;
}

long long parse_int(const std::string& text) {
    std::size_t used = 0;
    long long v;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("not an integer: \"" + text + "\"");
    }
    if (used != text.size()) {
        throw ConfigError("trailing characters in integer: \"" + text + "\"");
    }
    return v;
}

std::uint64_t parse_uint64(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("not an unsigned integer: \"" + text + "\"");
    }
    if (used != text.size() || (!text.empty() && text[0] == '-')) {
        throw ConfigError("not an unsigned integer: \"" + text + "\"");
    }
    return v;
}

bool parse_switch(const std::string& text, const std::string& key) {
    if (text == "on") {
        return true;
    }
    if (text == "off") {
        return false;
    }
    throw ConfigError("key \"" + key + "\" expects on or off, got \"" + text + "\"", 0, key);
}

}  // namespace

double parse_angle(const std::string& raw) {
    const std::string text = trim(raw);
    const std::size_t pos = text.find("pi");
    if (pos == std::string::npos) {
        return parse_plain_double(text);
    }

    std::string left = trim(text.substr(0, pos));
    std::string right = trim(text.substr(pos + 2));

    double coef = 1.0;
    if (left == "-") {
        coef = -1.0;
    } else if (left == "+" || left.empty()) {
        coef = 1.0;
    } else {
        if (left.back() != '*') {
            throw ConfigError("malformed angle: \"" + text + "\"");
        }
        coef = parse_plain_double(trim(left.substr(0, left.size() - 1)));
    }

    double div = 1.0;
    if (!right.empty()) {
        if (right.front() != '/') {
            throw ConfigError("malformed angle: \"" + text + "\"");
        }
        div = parse_plain_double(trim(right.substr(1)));
        if (div == 0.0) {
            throw ConfigError("division by zero in angle: \"" + text + "\"");
        }
    }
    return coef * pi / div;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& item : split(text, ',')) {
        if (!item.empty()) {
            out.push_back(parse_int(item));
        }
    }
    return out;
}

std::vector<double> parse_angle_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& item : split(text, ',')) {
        if (!item.empty()) {
            out.push_back(parse_angle(item));
        }
    }
    return out;
}

std::map<std::string, std::string> config_to_map(std::string_view text) {
    std::map<std::string, std::string> keys;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value",
                              line_no);
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value",
                              line_no);
        }
        if (keys.count(key)) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key \"" + key +
                                  "\"",
                              line_no, key);
        }
        keys.emplace(key, value);
    }
    return keys;
}

namespace {

const std::set<std::string> general_keys = {
    "eta",    "gamma",       "steps", "schedule",      "seed",     "checkpoints",
    "format", "out",         "parity_filter", "ensemble", "gaussian_ref",
};

// keys each schedule kind accepts beyond the general set
const std::map<std::string, std::set<std::string>> kind_keys = {
    {"constant", {"theta", "alpha", "beta"}},
    {"linear_beta", {"theta", "beta1", "beta2"}},
    {"alternating_alpha", {"theta", "alpha1", "alpha2", "beta1"}},
    {"random_phase", {"theta", "random_target", "alpha", "beta"}},
    {"explicit_list", {"alpha_list", "beta_list", "theta_list"}},
    {"alpha_beta_lock", {"theta", "phases"}},
};

std::string require(const std::map<std::string, std::string>& keys, const std::string& key,
                    const std::string& kind) {
    const auto it = keys.find(key);
    if (it == keys.end()) {
        throw ConfigError("schedule \"" + kind + "\" requires key \"" + key + "\"", 0, key);
    }
    return it->second;
}

std::string get_or(const std::map<std::string, std::string>& keys, const std::string& key,
                   const std::string& fallback) {
    const auto it = keys.find(key);
    return it == keys.end() ? fallback : it->second;
}

}  // namespace

RunConfig build_config(const std::map<std::string, std::string>& keys) {
    const std::string kind = [&] {
        const auto it = keys.find("schedule");
        if (it == keys.end()) {
            throw ConfigError("missing required key \"schedule\"", 0, "schedule");
        }
        return it->second;
    }();
    const auto kind_it = kind_keys.find(kind);
    if (kind_it == kind_keys.end()) {
        throw ConfigError("unknown schedule kind \"" + kind + "\"", 0, "schedule");
    }

    for (const auto& [key, value] : keys) {
        if (!general_keys.count(key) && !kind_it->second.count(key)) {
            if (key == "theta" || key == "alpha" || key == "beta" || key == "alpha1" ||
                key == "alpha2" || key == "beta1" || key == "beta2" || key == "random_target" ||
                key == "phases" || key == "alpha_list" || key == "beta_list" ||
                key == "theta_list") {
                throw ConfigError("key \"" + key + "\" is not valid for schedule \"" + kind +
                                      "\"",
                                  0, key);
            }
            throw ConfigError("unknown key \"" + key + "\"", 0, key);
        }
    }

    RunConfig cfg;
    cfg.init.eta = parse_angle(require(keys, "eta", "any"));
    cfg.init.gamma = parse_angle(get_or(keys, "gamma", "0"));

    cfg.steps = parse_int(require(keys, "steps", "any"));
    if (cfg.steps < 0) {
        throw ConfigError("steps must be >= 0", 0, "steps");
    }

    Schedule& s = cfg.schedule;
    if (kind == "constant") {
        s = Schedule::constant_coin(parse_angle(get_or(keys, "alpha", "0")),
                                    parse_angle(get_or(keys, "beta", "0")),
                                    parse_angle(require(keys, "theta", kind)));
    } else if (kind == "linear_beta") {
        s = Schedule::linear_beta(parse_angle(require(keys, "beta1", kind)),
                                  parse_angle(require(keys, "beta2", kind)),
                                  parse_angle(require(keys, "theta", kind)));
    } else if (kind == "alternating_alpha") {
        s = Schedule::alternating_alpha(parse_angle(require(keys, "alpha1", kind)),
                                        parse_angle(require(keys, "alpha2", kind)),
                                        parse_angle(get_or(keys, "beta1", "0")),
                                        parse_angle(require(keys, "theta", kind)));
    } else if (kind == "random_phase") {
        const std::string target = require(keys, "random_target", kind);
        RandomTarget rt;
        if (target == "alpha") {
            rt = RandomTarget::alpha;
        } else if (target == "beta") {
            rt = RandomTarget::beta;
        } else if (target == "both") {
            rt = RandomTarget::both;
        } else {
            throw ConfigError("random_target must be alpha, beta or both", 0, "random_target");
        }
        s = Schedule::random_phase(rt, parse_angle(require(keys, "theta", kind)), 0,
                                   parse_angle(get_or(keys, "alpha", "0")),
                                   parse_angle(get_or(keys, "beta", "0")));
    } else if (kind == "explicit_list") {
        const auto alphas = parse_angle_list(require(keys, "alpha_list", kind));
        const auto betas = parse_angle_list(require(keys, "beta_list", kind));
        const auto thetas = parse_angle_list(require(keys, "theta_list", kind));
        if (alphas.size() != betas.size() || alphas.size() != thetas.size()) {
            throw ConfigError("alpha_list, beta_list and theta_list must have equal lengths", 0,
                              "alpha_list");
        }
        if (alphas.empty()) {
            throw ConfigError("explicit_list schedule needs at least one entry", 0, "alpha_list");
        }
        std::vector<CoinParams> entries(alphas.size());
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            entries[i] = {alphas[i], betas[i], thetas[i]};
        }
        s = Schedule::explicit_list(std::move(entries));
    } else {  // alpha_beta_lock
        auto phases = parse_angle_list(require(keys, "phases", kind));
        if (phases.empty()) {
            throw ConfigError("alpha_beta_lock schedule needs at least one phase", 0, "phases");
        }
        s = Schedule::alpha_beta_lock(std::move(phases), parse_angle(require(keys, "theta", kind)));
    }
    s.seed = parse_uint64(get_or(keys, "seed", "0"));

    cfg.checkpoints = parse_int_list(get_or(keys, "checkpoints", ""));
    for (std::size_t i = 0; i < cfg.checkpoints.size(); ++i) {
        if (cfg.checkpoints[i] < 0 || cfg.checkpoints[i] > cfg.steps) {
            throw ConfigError("checkpoint " + std::to_string(cfg.checkpoints[i]) +
                                  " outside [0, steps]",
                              0, "checkpoints");
        }
        if (i > 0 && cfg.checkpoints[i] <= cfg.checkpoints[i - 1]) {
            throw ConfigError("checkpoints must be strictly increasing", 0, "checkpoints");
        }
    }

    const std::string format = get_or(keys, "format", "csv");
    if (format == "csv") {
        cfg.format = OutputFormat::csv;
    } else if (format == "json") {
        cfg.format = OutputFormat::json;
    } else {
        throw ConfigError("format must be csv or json", 0, "format");
    }

    cfg.out_dir = get_or(keys, "out", "");
    cfg.parity_filter = parse_switch(get_or(keys, "parity_filter", "on"), "parity_filter");

    cfg.ensemble = parse_int(get_or(keys, "ensemble", "1"));
    if (cfg.ensemble < 1) {
        throw ConfigError("ensemble must be >= 1", 0, "ensemble");
    }
    if (cfg.ensemble > 1 && s.kind != ScheduleKind::random_phase) {
        throw ConfigError("ensemble > 1 requires schedule = random_phase", 0, "ensemble");
    }

    const bool default_gauss = s.kind == ScheduleKind::random_phase;
    cfg.gaussian_ref =
        parse_switch(get_or(keys, "gaussian_ref", default_gauss ? "on" : "off"), "gaussian_ref");

    return cfg;
}

RunConfig parse_config(std::string_view text) {
    return build_config(config_to_map(text));
}

}  // namespace qwalk::cli

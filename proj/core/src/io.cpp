#include "qwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace qwalk::cli {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

constexpr const char* state_header =
    "n,re_psi_plus,im_psi_plus,re_psi_minus,im_psi_minus,rho,magnetization";

void append_state_row(std::string& out, const WalkState& state, long long n) {
    const Complex p = state.psi_plus(n);
    const Complex m = state.psi_minus(n);
    const double rho = std::norm(p) + std::norm(m);
    out += std::to_string(n);
    out += ',';
    out += format_double(p.real());
    out += ',';
    out += format_double(p.imag());
    out += ',';
    out += format_double(m.real());
    out += ',';
    out += format_double(m.imag());
    out += ',';
    out += format_double(rho);
    out += ',';
    out += format_double(std::norm(p) - std::norm(m));
    out += '\n';
}

}  // namespace

std::string state_csv(const WalkState& state, bool parity_filter) {
    std::string out = "# t=" + std::to_string(state.t()) + "\n";
    out += state_header;
    out += '\n';
    const long long stride = parity_filter ? 2 : 1;
    for (long long n = -state.t(); n <= state.t(); n += stride) {
        append_state_row(out, state, n);
    }
    return out;
}

WalkState parse_state_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# t=", 0) != 0) {
        throw std::invalid_argument("state CSV: missing '# t=' marker line");
    }
    const long long t = std::stoll(line.substr(4));
    if (!std::getline(in, line) || line != state_header) {
        throw std::invalid_argument("state CSV: unexpected header");
    }

    std::vector<Complex> plus(static_cast<std::size_t>(2 * t + 1)),
        minus(static_cast<std::size_t>(2 * t + 1));
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::string field;
        auto next = [&]() {
            if (!std::getline(row, field, ',')) {
                throw std::invalid_argument("state CSV: short row: " + line);
            }
            return field;
        };
        const long long n = std::stoll(next());
        if (n < -t || n > t) {
            throw std::invalid_argument("state CSV: site out of range: " + line);
        }
        const double pr = std::stod(next());
        const double pi = std::stod(next());
        const double mr = std::stod(next());
        const double mi = std::stod(next());
        plus[static_cast<std::size_t>(n + t)] = {pr, pi};
        minus[static_cast<std::size_t>(n + t)] = {mr, mi};
    }
    return WalkState::from_amplitudes(t, std::move(plus), std::move(minus));
}

std::string state_json(const WalkState& state, bool parity_filter) {
    nlohmann::ordered_json doc;
    doc["t"] = state.t();
    auto& sites = doc["sites"] = nlohmann::ordered_json::array();
    const long long stride = parity_filter ? 2 : 1;
    for (long long n = -state.t(); n <= state.t(); n += stride) {
        const Complex p = state.psi_plus(n);
        const Complex m = state.psi_minus(n);
        sites.push_back({
            {"n", n},
            {"psi_plus", {p.real(), p.imag()}},
            {"psi_minus", {m.real(), m.imag()}},
            {"rho", std::norm(p) + std::norm(m)},
            {"magnetization", std::norm(p) - std::norm(m)},
        });
    }
    return doc.dump(2) + "\n";
}

std::string pmf_csv(long long t, const Pmf& rho, const Pmf* gaussian, bool parity_filter) {
    std::string out = "# t=" + std::to_string(t) + "\n";
    out += gaussian ? "n,rho,gaussian_ref\n" : "n,rho\n";
    auto value = [](const Pmf& f, long long n) {
        const auto it = f.find(n);
        return it == f.end() ? 0.0 : it->second;
    };
    const long long stride = parity_filter ? 2 : 1;
    for (long long n = -t; n <= t; n += stride) {
        out += std::to_string(n);
        out += ',';
        out += format_double(value(rho, n));
        if (gaussian) {
            out += ',';
            out += format_double(value(*gaussian, n));
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw std::system_error(ec, "creating " + path.parent_path().string());
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::system_error(std::make_error_code(std::errc::io_error),
                                "opening " + path.string());
    }
    out << content;
    if (!out.flush()) {
        throw std::system_error(std::make_error_code(std::errc::io_error),
                                "writing " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                                "opening " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::map<std::string, std::string> schedule_echo(const Schedule& s) {
    std::map<std::string, std::string> echo;
    echo["kind"] = kind_name(s.kind);
    switch (s.kind) {
        case ScheduleKind::constant:
            echo["alpha"] = format_double(s.alpha);
            echo["beta"] = format_double(s.beta);
            echo["theta"] = format_double(s.theta);
            break;
        case ScheduleKind::linear_beta:
            echo["beta1"] = format_double(s.beta1);
            echo["beta2"] = format_double(s.beta2);
            echo["theta"] = format_double(s.theta);
            break;
        case ScheduleKind::alternating_alpha:
            echo["alpha1"] = format_double(s.alpha1);
            echo["alpha2"] = format_double(s.alpha2);
            echo["beta1"] = format_double(s.beta1);
            echo["theta"] = format_double(s.theta);
            break;
        case ScheduleKind::random_phase:
            echo["random_target"] = target_name(s.target);
            echo["alpha"] = format_double(s.alpha);
            echo["beta"] = format_double(s.beta);
            echo["theta"] = format_double(s.theta);
            break;
        case ScheduleKind::explicit_list:
            echo["entries"] = std::to_string(s.entries.size());
            break;
        case ScheduleKind::alpha_beta_lock: {
            std::string phases;
            for (double phi : s.lock_phases) {
                if (!phases.empty()) {
                    phases += ',';
                }
                phases += format_double(phi);
            }
            echo["phases"] = phases;
            echo["theta"] = format_double(s.theta);
            break;
        }
    }
    return echo;
}

std::string run_summary_json(const RunConfig& config,
                             const std::vector<CheckpointSummary>& checkpoints,
                             const std::vector<std::uint64_t>& member_seeds,
                             double wall_time_ms) {
    nlohmann::ordered_json doc;
    doc["eta"] = config.init.eta;
    doc["gamma"] = config.init.gamma;
    doc["steps"] = config.steps;
    doc["seed"] = config.schedule.seed;
    doc["schedule"] = schedule_echo(config.schedule);
    doc["parity_filter"] = config.parity_filter;
    if (member_seeds.size() > 1) {
        doc["ensemble"] = member_seeds.size();
        doc["member_seeds"] = member_seeds;
    }
    auto& arr = doc["checkpoints"] = nlohmann::ordered_json::array();
    for (const CheckpointSummary& c : checkpoints) {
        arr.push_back({
            {"t", c.t},
            {"mean", c.mean},
            {"variance", c.variance},
            {"p_plus", c.p_plus},
            {"p_minus", c.p_minus},
            {"total_probability", c.total_probability},
        });
    }
    doc["wall_time_ms"] = wall_time_ms;
    return doc.dump(2) + "\n";
}

}  // namespace qwalk::cli

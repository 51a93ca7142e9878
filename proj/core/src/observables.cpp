#include "qwalk/observables.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "qwalk/angles.hpp"

namespace qwalk {

Pmf pmf(const WalkState& state) {
    Pmf rho;
    for (long long n = -state.t(); n <= state.t(); n += 2) {
        rho.emplace_hint(rho.end(), n, std::norm(state.psi_plus(n)) + std::norm(state.psi_minus(n)));
    }
    return rho;
}

std::pair<double, double> chirality_probs(const WalkState& state) {
    double plus = 0.0, minus = 0.0;
    for (const Complex& a : state.plus()) {
        plus += std::norm(a);
    }
    for (const Complex& a : state.minus()) {
        minus += std::norm(a);
    }
    return {plus, minus};
}

std::map<long long, double> magnetization(const WalkState& state) {
    std::map<long long, double> m;
    for (long long n = -state.t(); n <= state.t(); n += 2) {
        m.emplace_hint(m.end(), n, std::norm(state.psi_plus(n)) - std::norm(state.psi_minus(n)));
    }
    return m;
}

Moments moments(const WalkState& state) {
    double mean = 0.0, second = 0.0;
    for (long long n = -state.t(); n <= state.t(); n += 2) {
        const double rho = std::norm(state.psi_plus(n)) + std::norm(state.psi_minus(n));
        mean += static_cast<double>(n) * rho;
        second += static_cast<double>(n) * static_cast<double>(n) * rho;
    }
    return {mean, second - mean * mean};
}

double gauge_twist_check(const WalkState& time_dependent, const WalkState& reference,
                         double delta, TwistMode mode) {
    if (time_dependent.t() != reference.t()) {
        throw std::invalid_argument("gauge_twist_check: states are at different times");
    }
    const long long t = time_dependent.t();
    const double half = delta / 2.0;

    double max_err = 0.0;
    for (long long n = -t; n <= t; n += 2) {
        double phase_plus, phase_minus;
        if (mode == TwistMode::linear_beta) {
            phase_plus = static_cast<double>(n - t) * half;
            phase_minus = static_cast<double>(n + t) * half;
        } else if (t % 2 == 0) {
            phase_plus = static_cast<double>(n) * half;
            phase_minus = phase_plus;
        } else {
            phase_plus = static_cast<double>(n - 1) * half;
            phase_minus = static_cast<double>(n + 1) * half;
        }
        const Complex tw_p = std::polar(1.0, wrap_angle(phase_plus));
        const Complex tw_m = std::polar(1.0, wrap_angle(phase_minus));
        max_err = std::max(max_err,
                           std::abs(time_dependent.psi_plus(n) - tw_p * reference.psi_plus(n)));
        max_err = std::max(max_err,
                           std::abs(time_dependent.psi_minus(n) - tw_m * reference.psi_minus(n)));
    }
    return max_err;
}

namespace {

double pmf_sum(const Pmf& p) {
    double s = 0.0;
    for (const auto& [n, v] : p) {
        s += v;
    }
    return s;
}

}  // namespace

DistanceReport distribution_distance(const Pmf& p, const Pmf& q) {
    if (std::abs(pmf_sum(p) - 1.0) > 1e-6 || std::abs(pmf_sum(q) - 1.0) > 1e-6) {
        throw std::invalid_argument("distribution_distance: inputs must be normalized");
    }

    std::set<long long> sites;
    for (const auto& [n, v] : p) {
        sites.insert(n);
    }
    for (const auto& [n, v] : q) {
        sites.insert(n);
    }

    auto value = [](const Pmf& f, long long n) {
        const auto it = f.find(n);
        return it == f.end() ? 0.0 : it->second;
    };

    double tv = 0.0, ks = 0.0, cdf_p = 0.0, cdf_q = 0.0;
    for (long long n : sites) {
        const double pv = value(p, n), qv = value(q, n);
        tv += std::abs(pv - qv);
        cdf_p += pv;
        cdf_q += qv;
        ks = std::max(ks, std::abs(cdf_p - cdf_q));
    }
    return {0.5 * tv, ks};
}

Pmf gaussian_reference(double mean, double variance, long long t) {
    if (!(variance > 0.0)) {
        throw std::invalid_argument("gaussian_reference: variance must be positive");
    }
    Pmf g;
    double sum = 0.0;
    // -t itself has the parity of t, so stepping by 2 visits the allowed sublattice
    for (long long n = -t; n <= t; n += 2) {
        const double d = static_cast<double>(n) - mean;
        const double w = std::exp(-d * d / (2.0 * variance));
        g.emplace_hint(g.end(), n, w);
        sum += w;
    }
    for (auto& [n, v] : g) {
        v /= sum;
    }
    return g;
}

ObservableReport observe(const WalkState& state) {
    ObservableReport report;
    report.t = state.t();
    report.pmf = pmf(state);
    std::tie(report.p_plus, report.p_minus) = chirality_probs(state);
    report.magnetization = magnetization(state);
    const Moments m = moments(state);
    report.mean = m.mean;
    report.variance = m.variance;
    return report;
}

}  // namespace qwalk

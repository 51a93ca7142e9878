#pragma once

#include <map>
#include <utility>

#include "qwalk/state.hpp"

namespace qwalk {

/// Probability by site, over the parity-allowed support sites.
using Pmf = std::map<long long, double>;

/// rho(n,t) = |psi+(n,t)|^2 + |psi-(n,t)|^2 for every allowed site.
Pmf pmf(const WalkState& state);

/// (P+, P-): probability of measuring coin state + or -, summed over sites.
std::pair<double, double> chirality_probs(const WalkState& state);

/// M(n,t) = |psi+(n,t)|^2 - |psi-(n,t)|^2 over the allowed sites.
std::map<long long, double> magnetization(const WalkState& state);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Position mean and variance under the PMF.
Moments moments(const WalkState& state);

enum class TwistMode { linear_beta, alternating_alpha };

/// Max over sites and components of |psi_td - twist * psi_ref| where twist is
/// the pure phase connecting a time-dependent run to its constant-coin
/// reference:
///   linear_beta       : e^{i(n-t)delta/2} on psi+, e^{i(n+t)delta/2} on psi-
///                       (delta = beta2 - beta1)
///   alternating_alpha : e^{i n delta/2} on both components at even t;
///                       e^{i(n-1)delta/2} / e^{i(n+1)delta/2} at odd t
///                       (delta = alpha2 - alpha1)
/// Throws std::invalid_argument when the states are at different times.
double gauge_twist_check(const WalkState& time_dependent, const WalkState& reference,
                         double delta, TwistMode mode);

struct DistanceReport {
    double total_variation = 0.0;
    double kolmogorov_smirnov = 0.0;
};

/// TV = (1/2) sum |p - q|, KS = max |CDF_p - CDF_q|. Both inputs must be
/// normalized within 1e-6 or std::invalid_argument is thrown.
DistanceReport distribution_distance(const Pmf& p, const Pmf& q);

/// Discrete Gaussian with the given moments, evaluated on the sites allowed
/// at time t (|n| <= t, n = t mod 2) and renormalized; the doubled lattice
/// spacing is absorbed by the renormalization. variance must be positive.
Pmf gaussian_reference(double mean, double variance, long long t);

/// Everything measured from one state.
struct ObservableReport {
    long long t = 0;
    Pmf pmf;
    double p_plus = 0.0;
    double p_minus = 0.0;
    std::map<long long, double> magnetization;
    double mean = 0.0;
    double variance = 0.0;
};

ObservableReport observe(const WalkState& state);

}  // namespace qwalk

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

enum class ScheduleKind {
    constant,
    linear_beta,
    alternating_alpha,
    random_phase,
    explicit_list,
    alpha_beta_lock,
};

enum class RandomTarget { alpha, beta, both };

std::string kind_name(ScheduleKind kind);
std::string target_name(RandomTarget target);

/// Thrown when an explicit_list or alpha_beta_lock schedule is asked for a
/// step beyond its configured entries.
class ScheduleExhausted : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Rule producing the coin parameters for each step t >= 1. For a fixed kind,
/// parameter set and seed, generate_params is a pure function of t, so
/// identical seeds reproduce identical runs bit for bit.
struct Schedule {
    ScheduleKind kind = ScheduleKind::constant;

    double theta = 0.0;

    // constant; also the fixed values of the non-random phases of random_phase
    double alpha = 0.0;
    double beta = 0.0;

    // linear_beta: beta_t = beta1 + (t-1)(beta2 - beta1), reduced mod 2*pi
    double beta1 = 0.0;
    double beta2 = 0.0;

    // alternating_alpha: alpha1 at odd t, alpha2 at even t, beta = beta1
    double alpha1 = 0.0;
    double alpha2 = 0.0;

    // random_phase
    RandomTarget target = RandomTarget::alpha;
    std::uint64_t seed = 0;

    // explicit_list
    std::vector<CoinParams> entries;

    // alpha_beta_lock: (phi_t, -phi_t, theta)
    std::vector<double> lock_phases;

    static Schedule constant_coin(double alpha, double beta, double theta);
    static Schedule linear_beta(double beta1, double beta2, double theta);
    static Schedule alternating_alpha(double alpha1, double alpha2, double beta, double theta);
    static Schedule random_phase(RandomTarget target, double theta, std::uint64_t seed,
                                 double fixed_alpha = 0.0, double fixed_beta = 0.0);
    static Schedule explicit_list(std::vector<CoinParams> entries);
    static Schedule alpha_beta_lock(std::vector<double> phases, double theta);
};

/// Coin parameters for step t >= 1.
/// Throws std::invalid_argument for t < 1 and ScheduleExhausted when a list
/// schedule runs out of entries.
CoinParams generate_params(const Schedule& schedule, long long t);

/// The constant-coin run the invariance theorem compares against:
/// linear_beta -> (0, beta1, theta); alternating_alpha -> (alpha1, beta1, theta);
/// alpha_beta_lock -> (phi_1, -phi_1, theta). Throws for kinds without a
/// natural reference.
Schedule constant_reference(const Schedule& schedule);

}  // namespace qwalk

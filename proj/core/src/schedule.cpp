#include "qwalk/schedule.hpp"

#include <stdexcept>

#include "qwalk/angles.hpp"

namespace qwalk {

std::string kind_name(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::constant: return "constant";
        case ScheduleKind::linear_beta: return "linear_beta";
        case ScheduleKind::alternating_alpha: return "alternating_alpha";
        case ScheduleKind::random_phase: return "random_phase";
        case ScheduleKind::explicit_list: return "explicit_list";
        case ScheduleKind::alpha_beta_lock: return "alpha_beta_lock";
    }
    return "unknown";
}

std::string target_name(RandomTarget target) {
    switch (target) {
        case RandomTarget::alpha: return "alpha";
        case RandomTarget::beta: return "beta";
        case RandomTarget::both: return "both";
    }
    return "unknown";
}

Schedule Schedule::constant_coin(double alpha, double beta, double theta) {
    Schedule s;
    s.kind = ScheduleKind::constant;
    s.alpha = alpha;
    s.beta = beta;
    s.theta = theta;
    return s;
}

Schedule Schedule::linear_beta(double beta1, double beta2, double theta) {
    Schedule s;
    s.kind = ScheduleKind::linear_beta;
    s.beta1 = beta1;
    s.beta2 = beta2;
    s.theta = theta;
    return s;
}

Schedule Schedule::alternating_alpha(double alpha1, double alpha2, double beta, double theta) {
    Schedule s;
    s.kind = ScheduleKind::alternating_alpha;
    s.alpha1 = alpha1;
    s.alpha2 = alpha2;
    s.beta1 = beta;
    s.theta = theta;
    return s;
}

Schedule Schedule::random_phase(RandomTarget target, double theta, std::uint64_t seed,
                                double fixed_alpha, double fixed_beta) {
    Schedule s;
    s.kind = ScheduleKind::random_phase;
    s.target = target;
    s.theta = theta;
    s.seed = seed;
    s.alpha = fixed_alpha;
    s.beta = fixed_beta;
    return s;
}

Schedule Schedule::explicit_list(std::vector<CoinParams> entries) {
    Schedule s;
    s.kind = ScheduleKind::explicit_list;
    s.entries = std::move(entries);
    return s;
}

Schedule Schedule::alpha_beta_lock(std::vector<double> phases, double theta) {
    Schedule s;
    s.kind = ScheduleKind::alpha_beta_lock;
    s.lock_phases = std::move(phases);
    s.theta = theta;
    return s;
}

CoinParams generate_params(const Schedule& schedule, long long t) {
    if (t < 1) {
        throw std::invalid_argument("generate_params: step index must be >= 1");
    }
    switch (schedule.kind) {
        case ScheduleKind::constant:
            return {schedule.alpha, schedule.beta, schedule.theta};

        case ScheduleKind::linear_beta:
            // beta_t = beta1 + (t-1)(beta2-beta1), reduced mod 2*pi before it
            // ever reaches a trig function
            return {0.0, linear_phase(schedule.beta1, schedule.beta2 - schedule.beta1, t - 1),
                    schedule.theta};

        case ScheduleKind::alternating_alpha:
            return {(t % 2 == 1) ? schedule.alpha1 : schedule.alpha2, schedule.beta1,
                    schedule.theta};

        case ScheduleKind::random_phase: {
            CoinParams p{schedule.alpha, schedule.beta, schedule.theta};
            const bool on_alpha = schedule.target != RandomTarget::beta;
            const bool on_beta = schedule.target != RandomTarget::alpha;
            if (on_alpha) {
                p.alpha = random_phase_at(schedule.seed, t, 0);
            }
            if (on_beta) {
                p.beta = random_phase_at(schedule.seed, t, 1);
            }
            return p;
        }

        case ScheduleKind::explicit_list:
            if (static_cast<std::size_t>(t) > schedule.entries.size()) {
                throw ScheduleExhausted("explicit_list schedule exhausted at t=" +
                                        std::to_string(t) + " (have " +
                                        std::to_string(schedule.entries.size()) + " entries)");
            }
            return schedule.entries[static_cast<std::size_t>(t - 1)];

        case ScheduleKind::alpha_beta_lock: {
            if (static_cast<std::size_t>(t) > schedule.lock_phases.size()) {
                throw ScheduleExhausted("alpha_beta_lock schedule exhausted at t=" +
                                        std::to_string(t) + " (have " +
                                        std::to_string(schedule.lock_phases.size()) + " phases)");
            }
            const double phi = schedule.lock_phases[static_cast<std::size_t>(t - 1)];
            return {phi, -phi, schedule.theta};
        }
    }
    throw std::logic_error("generate_params: unhandled schedule kind");
}

Schedule constant_reference(const Schedule& schedule) {
    switch (schedule.kind) {
        case ScheduleKind::constant:
            return schedule;
        case ScheduleKind::linear_beta:
            return Schedule::constant_coin(0.0, schedule.beta1, schedule.theta);
        case ScheduleKind::alternating_alpha:
            return Schedule::constant_coin(schedule.alpha1, schedule.beta1, schedule.theta);
        case ScheduleKind::alpha_beta_lock: {
            if (schedule.lock_phases.empty()) {
                throw std::invalid_argument("constant_reference: lock schedule has no phases");
            }
            const double phi = schedule.lock_phases.front();
            return Schedule::constant_coin(phi, -phi, schedule.theta);
        }
        default:
            throw std::invalid_argument("constant_reference: no constant-coin reference for " +
                                        kind_name(schedule.kind));
    }
}

}  // namespace qwalk

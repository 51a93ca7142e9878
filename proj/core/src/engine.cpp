#include "qwalk/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwalk {

namespace {

// One application of shift * coin on dense buffers. Pointers address site
// n = 0; the input occupies the parity sites of [-t_in, t_in], the output the
// parity sites of [-t_in-1, t_in+1]. Outputs at the far edges are written as
// exact zeros so reused buffers never leak stale amplitudes. The coin
// arithmetic is spelled out on the real parts to keep the loop free of
// library complex-multiplication calls.
void step_kernel(const Complex* in_p, const Complex* in_m, long long t_in, Complex* out_p,
                 Complex* out_m, const CoinMatrix& u) {
    const double ar = u.u_pp.real(), ai = u.u_pp.imag();
    const double br = u.u_pm.real(), bi = u.u_pm.imag();
    const double cr = u.u_mp.real(), ci = u.u_mp.imag();
    const double dr = u.u_mm.real(), di = u.u_mm.imag();
    const long long t_out = t_in + 1;

    {
        // rightmost site: fed only by right-movers
        const Complex p = in_p[t_in], m = in_m[t_in];
        out_p[t_out] = {ar * p.real() - ai * p.imag() + br * m.real() - bi * m.imag(),
                        ar * p.imag() + ai * p.real() + br * m.imag() + bi * m.real()};
        out_m[t_out] = {0.0, 0.0};
    }
    {
        const Complex p = in_p[-t_in], m = in_m[-t_in];
        out_m[-t_out] = {cr * p.real() - ci * p.imag() + dr * m.real() - di * m.imag(),
                         cr * p.imag() + ci * p.real() + dr * m.imag() + di * m.real()};
        out_p[-t_out] = {0.0, 0.0};
    }
    for (long long n = -t_out + 2; n <= t_out - 2; n += 2) {
        const Complex pl = in_p[n - 1], ml = in_m[n - 1];
        const Complex pr = in_p[n + 1], mr = in_m[n + 1];
        out_p[n] = {ar * pl.real() - ai * pl.imag() + br * ml.real() - bi * ml.imag(),
                    ar * pl.imag() + ai * pl.real() + br * ml.imag() + bi * ml.real()};
        out_m[n] = {cr * pr.real() - ci * pr.imag() + dr * mr.real() - di * mr.imag(),
                    cr * pr.imag() + ci * pr.real() + dr * mr.imag() + di * mr.real()};
    }
}

double support_probability(const Complex* p, const Complex* m, long long t) {
    double sum = 0.0;
    for (long long n = -t; n <= t; n += 2) {
        sum += std::norm(p[n]) + std::norm(m[n]);
    }
    return sum;
}

void check_norm(const Complex* p, const Complex* m, long long t, double tolerance) {
    const double total = support_probability(p, m, t);
    if (std::abs(total - 1.0) > tolerance) {
        throw integrity_error("unitarity violated at t=" + std::to_string(t) +
                              ": total probability " + std::to_string(total));
    }
}

}  // namespace

WalkState step(const WalkState& state, const CoinParams& params) {
    const CoinMatrix u = coin_matrix(params);
    const long long t_in = state.t();
    const long long t_out = t_in + 1;

    std::vector<Complex> plus(static_cast<std::size_t>(2 * t_out + 1), Complex{});
    std::vector<Complex> minus(static_cast<std::size_t>(2 * t_out + 1), Complex{});
    step_kernel(state.plus().data() + t_in, state.minus().data() + t_in, t_in,
                plus.data() + t_out, minus.data() + t_out, u);
    return WalkState::from_amplitudes(t_out, std::move(plus), std::move(minus));
}

const WalkState& Trajectory::at_time(long long t) const {
    for (const WalkState& s : snapshots) {
        if (s.t() == t) {
            return s;
        }
    }
    throw std::invalid_argument("trajectory has no snapshot at t=" + std::to_string(t));
}

Trajectory evolve(const InitialState& init, const Schedule& schedule, long long steps,
                  const std::vector<long long>& checkpoints, const EvolveOptions& options) {
    if (steps < 0) {
        throw std::invalid_argument("evolve: negative step count");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 0 || checkpoints[i] > steps) {
            throw std::invalid_argument("evolve: checkpoint " + std::to_string(checkpoints[i]) +
                                        " outside [0, " + std::to_string(steps) + "]");
        }
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
            throw std::invalid_argument("evolve: checkpoints must be strictly increasing");
        }
    }
    if (options.norm_check_interval < 1) {
        throw std::invalid_argument("evolve: norm_check_interval must be >= 1");
    }

    // double buffer over the full preallocated range -steps..steps
    const std::size_t width = static_cast<std::size_t>(2 * steps + 1);
    std::vector<Complex> plus_a(width), minus_a(width), plus_b(width), minus_b(width);
    Complex* cur_p = plus_a.data() + steps;
    Complex* cur_m = minus_a.data() + steps;
    Complex* nxt_p = plus_b.data() + steps;
    Complex* nxt_m = minus_b.data() + steps;

    auto [up, um] = initial_spinor(init);
    cur_p[0] = up;
    cur_m[0] = um;

    Trajectory trajectory;
    auto snapshot = [&](long long t) {
        std::vector<Complex> p(cur_p - t, cur_p + t + 1);
        std::vector<Complex> m(cur_m - t, cur_m + t + 1);
        trajectory.snapshots.push_back(WalkState::from_amplitudes(t, std::move(p), std::move(m)));
    };

    std::size_t next_checkpoint = 0;
    if (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == 0) {
        snapshot(0);
        ++next_checkpoint;
    }

    for (long long t = 1; t <= steps; ++t) {
        const CoinMatrix u = coin_matrix(generate_params(schedule, t));
        step_kernel(cur_p, cur_m, t - 1, nxt_p, nxt_m, u);
        std::swap(cur_p, nxt_p);
        std::swap(cur_m, nxt_m);

        if (t % options.norm_check_interval == 0) {
            check_norm(cur_p, cur_m, t, options.norm_tolerance);
        }
        if (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == t) {
            snapshot(t);
            ++next_checkpoint;
        }
    }

    check_norm(cur_p, cur_m, steps, options.norm_tolerance);
    if (trajectory.snapshots.empty() || trajectory.snapshots.back().t() != steps) {
        snapshot(steps);
    }
    return trajectory;
}

}  // namespace qwalk

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Wave function of the walker at one time step: dense complex amplitudes for
/// both coin components over the sites n in {-t, ..., t}. Sites with the
/// wrong parity (n != t mod 2) hold exact zeros, never merely small values.
class WalkState {
public:
    WalkState() : plus_(1, Complex{1.0, 0.0}), minus_(1, Complex{0.0, 0.0}) {}

    /// Walker localized at the origin in the given coin superposition (t = 0).
    static WalkState initial(const InitialState& init);

    /// Wraps existing amplitude arrays (dense over -t..t, size 2t+1 each).
    static WalkState from_amplitudes(long long t,
                                     std::vector<Complex> plus,
                                     std::vector<Complex> minus);

    long long t() const { return t_; }
    long long min_site() const { return -t_; }
    long long max_site() const { return t_; }

    /// Array index of site n = 0.
    long long origin_offset() const { return t_; }

    /// Amplitudes; exact 0 outside [-t, t].
    Complex psi_plus(long long n) const {
        return in_range(n) ? plus_[static_cast<std::size_t>(n + t_)] : Complex{};
    }
    Complex psi_minus(long long n) const {
        return in_range(n) ? minus_[static_cast<std::size_t>(n + t_)] : Complex{};
    }

    /// Dense arrays over n = -t..t; index i holds site n = i - t.
    std::span<const Complex> plus() const { return plus_; }
    std::span<const Complex> minus() const { return minus_; }

    /// True when site n may carry amplitude: |n| <= t and n = t (mod 2).
    bool parity_allowed(long long n) const {
        return in_range(n) && (((n ^ t_) & 1LL) == 0);
    }

    double total_probability() const;

private:
    bool in_range(long long n) const { return n >= -t_ && n <= t_; }

    long long t_ = 0;
    std::vector<Complex> plus_, minus_;
};

}  // namespace qwalk

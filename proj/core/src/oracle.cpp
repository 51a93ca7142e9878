#include "qwalk/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qwalk::oracle {

namespace {

Complex ei(double x) {
    return std::polar(1.0, x);
}

struct AB {
    Complex a, b;
    double phi;
};

// a, b and phi written out from their defining expressions; kept local so the
// oracle stays independent of coin.cpp.
AB ab_of(const InitialState& init, const CoinParams& p1) {
    const double phi = p1.alpha + p1.beta - init.gamma;
    const Complex w = ei(-phi);
    const double ce = std::cos(init.eta), se = std::sin(init.eta);
    const double c1 = std::cos(p1.theta), s1 = std::sin(p1.theta);
    return {ce * c1 + w * se * s1, ce * s1 - w * se * c1, phi};
}

}  // namespace

Complex ClosedFormState::psi(int component, long long n) const {
    const auto it = amplitudes.find({component, n});
    return it == amplitudes.end() ? Complex{} : it->second;
}

double ClosedFormState::norm_squared() const {
    double sum = 0.0;
    for (const auto& [key, amp] : amplitudes) {
        sum += std::norm(amp);
    }
    return sum;
}

ClosedFormState closed_form(const InitialState& init, const CoinParams& p1,
                            const CoinParams& p2, const CoinParams& p3, long long t) {
    if (t < 1 || t > 3) {
        throw std::invalid_argument("closed_form: only t in {1, 2, 3} is supported");
    }
    const auto [a, b, phi] = ab_of(init, p1);
    const double a1 = p1.alpha, b1 = p1.beta;
    const double a2 = p2.alpha, b2 = p2.beta, th2 = p2.theta;
    const double a3 = p3.alpha, b3 = p3.beta, th3 = p3.theta;

    ClosedFormState s;
    s.t = t;
    if (t == 1) {
        s.amplitudes[{+1, 1}] = ei(a1) * a;
        s.amplitudes[{-1, -1}] = ei(b1) * b;
        return s;
    }

    const double c2 = std::cos(th2), s2 = std::sin(th2);
    if (t == 2) {
        s.amplitudes[{+1, 2}] = ei(a1 + a2) * c2 * a;
        s.amplitudes[{+1, 0}] = ei(b1 - b2) * s2 * b;
        s.amplitudes[{-1, 0}] = ei(a1 + b2) * s2 * a;
        s.amplitudes[{-1, -2}] = -ei(b1 - a2) * c2 * b;
        return s;
    }

    const double c3 = std::cos(th3), s3 = std::sin(th3);
    s.amplitudes[{+1, 3}] = ei(a1 + a2 + a3) * c3 * c2 * a;
    s.amplitudes[{+1, 1}] = ei(b1 - b2 + a3) * c3 * s2 * b + ei(a1 + b2 - b3) * s3 * s2 * a;
    s.amplitudes[{-1, 1}] = ei(a1 + a2 + b3) * s3 * c2 * a;
    s.amplitudes[{+1, -1}] = -ei(b1 - a2 - b3) * s3 * c2 * b;
    s.amplitudes[{-1, -1}] = -ei(a1 + b2 - a3) * c3 * s2 * a + ei(b1 - b2 + b3) * s3 * s2 * b;
    s.amplitudes[{-1, -3}] = ei(b1 - a2 - a3) * c3 * c2 * b;
    return s;
}

WalkState dense_evolve(const InitialState& init, const Schedule& schedule, long long steps) {
    if (steps < 0 || steps > max_dense_steps) {
        throw std::invalid_argument("dense_evolve: supported range is 0 <= T <= " +
                                    std::to_string(max_dense_steps));
    }
    const long long T = steps;
    const long long L = 2 * T + 1;
    const std::size_t dim = static_cast<std::size_t>(2 * L);
    const auto at = [L, T](int comp, long long n) {
        return static_cast<std::size_t>(comp) * static_cast<std::size_t>(L) +
               static_cast<std::size_t>(n + T);
    };

    std::vector<Complex> state(dim, Complex{});
    auto [up, um] = initial_spinor(init);
    state[at(0, 0)] = up;
    state[at(1, 0)] = um;

    // shift: |+,n> -> |+,n+1>, |-,n> -> |-,n-1>; rows leaving the truncated
    // basis are dropped (never populated for walks started at the origin)
    std::vector<Complex> shift(dim * dim, Complex{});
    for (long long n = -T; n <= T; ++n) {
        if (n + 1 <= T) {
            shift[at(0, n + 1) * dim + at(0, n)] = 1.0;
        }
        if (n - 1 >= -T) {
            shift[at(1, n - 1) * dim + at(1, n)] = 1.0;
        }
    }

    std::vector<Complex> coin(dim * dim), full(dim * dim), next(dim);
    for (long long t = 1; t <= T; ++t) {
        const CoinParams p = generate_params(schedule, t);
        const Complex upp = ei(p.alpha) * std::cos(p.theta);
        const Complex upm = ei(-p.beta) * std::sin(p.theta);
        const Complex ump = ei(p.beta) * std::sin(p.theta);
        const Complex umm = -ei(-p.alpha) * std::cos(p.theta);

        std::fill(coin.begin(), coin.end(), Complex{});
        for (long long n = -T; n <= T; ++n) {
            coin[at(0, n) * dim + at(0, n)] = upp;
            coin[at(0, n) * dim + at(1, n)] = upm;
            coin[at(1, n) * dim + at(0, n)] = ump;
            coin[at(1, n) * dim + at(1, n)] = umm;
        }

        // full = shift * coin, then one matrix-vector product
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                Complex acc{};
                for (std::size_t k = 0; k < dim; ++k) {
                    acc += shift[i * dim + k] * coin[k * dim + j];
                }
                full[i * dim + j] = acc;
            }
        }
        for (std::size_t i = 0; i < dim; ++i) {
            Complex acc{};
            for (std::size_t j = 0; j < dim; ++j) {
                acc += full[i * dim + j] * state[j];
            }
            next[i] = acc;
        }
        state.swap(next);
    }

    std::vector<Complex> plus(static_cast<std::size_t>(L)), minus(static_cast<std::size_t>(L));
    for (long long n = -T; n <= T; ++n) {
        plus[static_cast<std::size_t>(n + T)] = state[at(0, n)];
        minus[static_cast<std::size_t>(n + T)] = state[at(1, n)];
    }
    return WalkState::from_amplitudes(T, std::move(plus), std::move(minus));
}

PmfTables pmf_formulas_t123(const InitialState& init, const CoinParams& p1,
                            const CoinParams& p2, const CoinParams& p3) {
    const auto [a, b, phi] = ab_of(init, p1);

    // t = 1 from the trigonometric form, not from |a|^2 and |b|^2
    const double cross = std::cos(2.0 * init.eta) * std::cos(2.0 * p1.theta) +
                         std::sin(2.0 * init.eta) * std::sin(2.0 * p1.theta) * std::cos(phi);
    const double rho_p1 = 0.5 * (1.0 + cross);
    const double rho_m1 = 0.5 * (1.0 - cross);

    const double c2sq = std::cos(p2.theta) * std::cos(p2.theta);
    const double s2sq = std::sin(p2.theta) * std::sin(p2.theta);
    const double c3sq = std::cos(p3.theta) * std::cos(p3.theta);
    const double s3sq = std::sin(p3.theta) * std::sin(p3.theta);
    const double c = (ei(p1.alpha - p3.alpha) * ei(-(p1.beta - 2.0 * p2.beta + p3.beta)) *
                      std::conj(b) * a)
                         .real();

    PmfTables tables;
    tables.t1 = {{1, rho_p1}, {-1, rho_m1}};
    tables.t2 = {{2, c2sq * rho_p1}, {0, s2sq}, {-2, c2sq * rho_m1}};
    tables.t3 = {
        {3, c3sq * c2sq * rho_p1},
        {1, s3sq * rho_p1 + c3sq * s2sq * rho_m1 + std::sin(2.0 * p3.theta) * s2sq * c},
        {-1, c3sq * s2sq * rho_p1 + s3sq * rho_m1 - std::sin(2.0 * p3.theta) * s2sq * c},
        {-3, c3sq * c2sq * rho_m1},
    };
    return tables;
}

std::pair<double, double> chirality_t2_formula(const InitialState& init, const CoinParams& p1,
                                               const CoinParams& p2) {
    const auto tables = pmf_formulas_t123(init, p1, p2, p2);
    const double c2sq = std::cos(p2.theta) * std::cos(p2.theta);
    const double s2sq = std::sin(p2.theta) * std::sin(p2.theta);
    const double rho_p1 = tables.t1.at(1), rho_m1 = tables.t1.at(-1);
    return {c2sq * rho_p1 + s2sq * rho_m1, c2sq * rho_m1 + s2sq * rho_p1};
}

std::pair<double, double> chirality_t3_formula(const InitialState& init, const CoinParams& p1,
                                               const CoinParams& p2, const CoinParams& p3) {
    const auto [a, b, phi] = ab_of(init, p1);
    const double c = (ei(p1.alpha - p3.alpha) * ei(-(p1.beta - 2.0 * p2.beta + p3.beta)) *
                      std::conj(b) * a)
                         .real();
    const double balance = std::norm(a) - std::norm(b);
    const double sym = 0.5 * (1.0 + std::cos(2.0 * p3.theta) * std::cos(2.0 * p2.theta) * balance);
    const double skew = std::sin(2.0 * p3.theta) * std::sin(p2.theta) * std::sin(p2.theta) * c;
    return {sym + skew, 1.0 - sym - skew};
}

}  // namespace qwalk::oracle

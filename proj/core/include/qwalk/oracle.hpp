#pragma once

#include <map>
#include <utility>

#include "qwalk/schedule.hpp"
#include "qwalk/state.hpp"

// Independent reference implementations used to validate the engine. These
// deliberately share no evolution code with qwalk::step/evolve: the closed
// forms are transcribed term by term and the dense evolver multiplies
// explicit matrices over the truncated basis.
namespace qwalk::oracle {

/// Closed-form state for t in {1, 2, 3}; amplitudes keyed by
/// (coin component: +1 / -1, site n).
struct ClosedFormState {
    long long t = 0;
    std::map<std::pair<int, long long>, Complex> amplitudes;

    Complex psi(int component, long long n) const;
    double norm_squared() const;
};

/// Transcription of the explicit t = 1, 2, 3 states, every phase factor
/// included. Throws std::invalid_argument for t outside {1, 2, 3}.
ClosedFormState closed_form(const InitialState& init, const CoinParams& p1,
                            const CoinParams& p2, const CoinParams& p3, long long t);

inline constexpr long long max_dense_steps = 14;

/// Evolves by building shift * (coin (x) identity) as explicit dense matrices
/// over the truncated position basis -T..T and multiplying them out.
/// Supports 0 <= T <= 14 (matrix dimension 2(2T+1) <= 58).
WalkState dense_evolve(const InitialState& init, const Schedule& schedule, long long steps);

/// PMFs for t = 1, 2, 3 via the trigonometric closed forms, e.g.
/// rho(1,1) = (1 + cos 2eta cos 2theta1 + sin 2eta sin 2theta1 cos phi) / 2.
struct PmfTables {
    std::map<long long, double> t1, t2, t3;
};

PmfTables pmf_formulas_t123(const InitialState& init, const CoinParams& p1,
                            const CoinParams& p2, const CoinParams& p3);

/// P+-(t=2) = cos^2(theta2) rho(+-1,1) + sin^2(theta2) rho(-+1,1).
std::pair<double, double> chirality_t2_formula(const InitialState& init, const CoinParams& p1,
                                               const CoinParams& p2);

/// P+-(t=3) = [1 +- cos 2theta3 cos 2theta2 (|a|^2 - |b|^2)] / 2
///            +- sin 2theta3 sin^2(theta2) c.
std::pair<double, double> chirality_t3_formula(const InitialState& init, const CoinParams& p1,
                                               const CoinParams& p2, const CoinParams& p3);

}  // namespace qwalk::oracle

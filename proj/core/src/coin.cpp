#include "qwalk/coin.hpp"

#include <cmath>
#include <stdexcept>

#include "qwalk/angles.hpp"

namespace qwalk {

namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string("non-finite coin parameter: ") + name);
    }
}

}  // namespace

CoinParams canonical(const CoinParams& p) {
    return {wrap_angle(p.alpha), wrap_angle(p.beta), wrap_angle(p.theta)};
}

CoinMatrix coin_matrix(const CoinParams& p) {
    require_finite(p.alpha, "alpha");
    require_finite(p.beta, "beta");
    require_finite(p.theta, "theta");

    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const Complex ea = std::polar(1.0, p.alpha);
    const Complex eb = std::polar(1.0, p.beta);

    return {ea * c, std::conj(eb) * s, eb * s, -std::conj(ea) * c};
}

std::pair<Complex, Complex> initial_spinor(const InitialState& init) {
    require_finite(init.eta, "eta");
    require_finite(init.gamma, "gamma");
    return {Complex{std::cos(init.eta), 0.0}, std::polar(1.0, init.gamma) * std::sin(init.eta)};
}

double phi_angle(const InitialState& init, const CoinParams& first) {
    return first.alpha + first.beta - init.gamma;
}

std::pair<Complex, Complex> ab_amplitudes(const InitialState& init, const CoinParams& first) {
    const double ce = std::cos(init.eta);
    const double se = std::sin(init.eta);
    const double c1 = std::cos(first.theta);
    const double s1 = std::sin(first.theta);
    const Complex w = std::polar(1.0, -phi_angle(init, first));
    return {ce * c1 + w * se * s1, ce * s1 - w * se * c1};
}

double interference_c(double alpha1, double alpha3, double beta1, double beta2, double beta3,
                      Complex a, Complex b) {
    const Complex phase = std::polar(1.0, (alpha1 - alpha3) - (beta1 - 2.0 * beta2 + beta3));
    return (phase * std::conj(b) * a).real();
}

BlochVector bloch_vector(double theta, double beta) {
    const double s = std::sin(theta);
    return {s * std::cos(beta), s * std::sin(beta), std::cos(theta)};
}

CoinMatrix pauli_projection(const BlochVector& u) {
    // x sigma_x + y sigma_y + z sigma_z in the (+, -) basis
    return {Complex{u.z, 0.0}, Complex{u.x, -u.y}, Complex{u.x, u.y}, Complex{-u.z, 0.0}};
}

}  // namespace qwalk

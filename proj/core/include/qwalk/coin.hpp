#pragma once

#include <complex>
#include <utility>

namespace qwalk {

using Complex = std::complex<double>;

/// One time step's coin parameters (radians).
struct CoinParams {
    double alpha = 0.0;
    double beta = 0.0;
    double theta = 0.0;
};

/// Maps all three angles into [0, 2*pi). The induced coin matrix is
/// unchanged: the phases enter through e^{i*alpha}, e^{i*beta} and theta only
/// through cos/sin.
CoinParams canonical(const CoinParams& p);

/// 2x2 unitary coin matrix. Rows are the outgoing coin state (+, -), columns
/// the incoming one, so u_pm is the + amplitude fed by the - component.
/// det(U) = -1 by construction.
struct CoinMatrix {
    Complex u_pp, u_pm, u_mp, u_mm;
};

/// Builds the coin matrix
///   [ e^{i alpha} cos theta    e^{-i beta} sin theta ]
///   [ e^{i beta}  sin theta   -e^{-i alpha} cos theta ]
/// Throws std::invalid_argument if any parameter is non-finite.
CoinMatrix coin_matrix(const CoinParams& p);

/// Initial coin superposition at the origin: cos(eta)|+> + e^{i gamma} sin(eta)|->.
struct InitialState {
    double eta = 0.0;
    double gamma = 0.0;
};

/// Returns the (plus, minus) spinor components; unit norm by construction.
/// Throws std::invalid_argument on non-finite input.
std::pair<Complex, Complex> initial_spinor(const InitialState& init);

/// phi = alpha_1 + beta_1 - gamma, the only combination through which gamma
/// enters the t=1 amplitudes.
double phi_angle(const InitialState& init, const CoinParams& first);

/// One-step amplitudes
///   a = cos(eta) cos(theta_1) + e^{-i phi} sin(eta) sin(theta_1)
///   b = cos(eta) sin(theta_1) - e^{-i phi} sin(eta) cos(theta_1)
/// with |a|^2 + |b|^2 = 1.
std::pair<Complex, Complex> ab_amplitudes(const InitialState& init, const CoinParams& first);

/// Interference term governing the t=3 asymmetry:
///   c = Re[ e^{i(alpha1-alpha3)} e^{-i(beta1-2*beta2+beta3)} conj(b) a ].
double interference_c(double alpha1, double alpha3, double beta1, double beta2, double beta3,
                      Complex a, Complex b);

/// Unit vector with polar angle theta and azimuth beta.
struct BlochVector {
    double x = 0.0, y = 0.0, z = 1.0;
};

BlochVector bloch_vector(double theta, double beta);

/// Pauli projection u.sigma, equal to coin_matrix({0, beta, theta}) when u is
/// bloch_vector(theta, beta).
CoinMatrix pauli_projection(const BlochVector& u);

}  // namespace qwalk

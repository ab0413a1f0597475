#pragma once

// Nonlinear oscillator network on a ring: the coupled phase dynamics, the
// exact solution through the coordinate change x = exp(i*psi), a fixed-step
// RK4 integrator used as a correctness oracle, and the discrete one-step
// propagator exp(K*tau).
//
// The rotating frame (omega = 0) is the default everywhere; omega enters
// only as a multiplicative exp(i*omega*t) at report time.

#include <Eigen/Dense>

#include "wavessm/dft.hpp"

namespace wavessm {

struct OscillatorParams {
  double omega = 0.0;       // intrinsic frequency, rad per unit time
  double kappa = 1.0;       // global coupling scale
  MatR adjacency;           // a_ij, connection from node j to i
  MatR phase_lags;          // phi_ij, radians

  Eigen::Index size() const { return adjacency.rows(); }
};

// k_ij = kappa * exp(-i*phi_ij) * a_ij
struct CouplingMatrix {
  MatC entries;
  Eigen::Index size() const { return entries.rows(); }
};

// Complex-valued phase coordinates psi_i.
struct PhaseState {
  VecC psi;
};

// x = exp(i*psi); the coordinates in which the dynamics are linear.
struct OscState {
  VecC x;
};

CouplingMatrix coupling_matrix(const OscillatorParams& params);

// Scaling-and-squaring matrix exponential (Pade rational approximant).
MatC matrix_exponential(const MatC& m);

// x(t) = exp(K*t) x(0), rotating frame.
OscState exact_propagate(const OscState& x0, const CouplingMatrix& k, double t);

// psi(t) = Arg(exp(K*t) exp(i*psi0)) - i*log|exp(K*t) exp(i*psi0)|,
// Arg taken in (-pi, pi]. Throws SingularModulus if any |x_i(t)| = 0.
PhaseState phase_solution(const PhaseState& psi0, const CouplingMatrix& k, double t);

// psi_dot per the coupled phase equation:
//   psi_dot_i = omega + kappa * sum_j a_ij (sin(d_ij) - i*cos(d_ij)),
//   d_ij = psi_j - psi_i - phi_ij.
VecC rhs_eval(const PhaseState& psi, const OscillatorParams& params);

// Classical fixed-step RK4 on the rotating-frame phase dynamics (omega = 0).
// The RHS is evaluated as -i * exp(-i*psi) .* (K exp(i*psi)), which is the
// same equation after the standard trig identity; rhs_eval keeps the literal
// trig form and the two are cross-checked in tests. Throws DivergenceError
// if the state stops being finite.
PhaseState numeric_integrate(const PhaseState& psi0, const OscillatorParams& params,
                             double t_end, double dt);

// Dynamics operator D_tau = exp(K*tau); cache it when stepping repeatedly.
MatC dynamics_operator(const CouplingMatrix& k, double tau);

OscState discrete_step(const OscState& x_prev, const CouplingMatrix& k, double tau);
OscState discrete_step(const OscState& x_prev, const MatC& d_tau);

// exp(i*psi) elementwise; for complex psi this is exp(-Im psi) * exp(i*Re psi).
VecC phase_to_state(const VecC& psi);
// Arg(x) - i*log|x| elementwise, Arg in (-pi, pi].
VecC state_to_phase(const VecC& x);

// Ring adjacency: a_ij = weight for 0 < ring_distance(i,j) <= neighborhood.
// normalized = true divides by the number of neighbors (2*neighborhood).
MatR ring_adjacency(Eigen::Index n, Eigen::Index neighborhood, bool normalized);
// Directed ring: single connection from node (i+1) mod N into node i.
MatR directed_ring_adjacency(Eigen::Index n);

// Share of time-averaged spatial spectral power carried by the strongest
// nonzero spatial frequency of exp(i*theta) rows; a traveling wave shows up
// as a value close to 1. raster is time x nodes, entries Arg(x_j(t)).
struct SpatialPowerSummary {
  Eigen::Index dominant_mode = 0;  // 0-based spatial frequency
  double dominant_share = 0.0;     // power at dominant nonzero mode / total
};
SpatialPowerSummary dominant_spatial_mode(const MatR& raster);

}  // namespace wavessm

#pragma once

// Diagonal state-space recurrence: S4D eigenvalue placements, zero-order-hold
// discretization, per-step and unrolled state updates, and the per-mode
// update in the shared DFT eigenbasis.
//
// The state is stored in the diagonal (modal) coordinates; the oscillator
// picture is the derived view x_osc = F * state.

#include <Eigen/Dense>
#include <vector>

#include "wavessm/dft.hpp"

#include "json.hpp"

namespace wavessm {

enum class SpectrumVariant { Lin, Inv, FouT, Custom };

enum class IndexOrigin { One, Zero };

const char* to_string(SpectrumVariant v);
SpectrumVariant spectrum_variant_from_string(const std::string& s);

// Continuous-time eigenvalues d_jj, 1/time units. All named variants have
// Re(d_jj) = -1/2 exactly.
struct DiagonalSpectrum {
  VecC eigenvalues;
  SpectrumVariant variant = SpectrumVariant::Custom;

  Eigen::Index size() const { return eigenvalues.size(); }
  // Temporal frequency of mode j in cycles per unit time: Im(d_jj)/(2*pi).
  // With tau seconds per sample this is directly in Hz.
  VecR mode_frequencies() const;
};

// Lin:  d_j = -1/2 + i*pi*j,            j = 1..N
// Inv:  d_n = -1/2 + i*(N/pi)*(N/(2n+1) - 1)
// FouT: d_n = -1/2 + i*2*pi*n/N
// inv_origin selects n = 1..N (default) or n = 0..N-1 for the Inv variant.
DiagonalSpectrum s4d_spectrum(SpectrumVariant variant, Eigen::Index n,
                              IndexOrigin inv_origin = IndexOrigin::One);

// Discrete-time system: eigenvalues exp(d*tau) and input projection
// B_bar with row j scaled by (exp(d_j*tau) - 1)/d_j.
struct Discretization {
  double tau = 0.0;
  VecC discrete_eigenvalues;        // exp(d_jj * tau)
  MatC input_projection;            // B_bar, N x d_model
  VecC continuous_eigenvalues;      // kept for closed-form powers and reports
  SpectrumVariant variant = SpectrumVariant::Custom;

  Eigen::Index state_dim() const { return discrete_eigenvalues.size(); }
  Eigen::Index input_dim() const { return input_projection.cols(); }
};

// (exp(d*tau) - 1)/d with the series branch tau*(1 + d*tau/2 + (d*tau)^2/6)
// when |d*tau| < 1e-8; the direct quotient cancels catastrophically there.
Complex zoh_input_scale(Complex d, double tau);

Discretization discretize_zoh(const DiagonalSpectrum& spectrum, const MatC& b, double tau);

// x_k = exp(D*tau) x_{k-1} + B_bar u_k, elementwise in the diagonal frame.
VecC step(const VecC& x_prev, const Discretization& disc, const VecR& u);

// States after each of the T inputs: x_1..x_T.
std::vector<VecC> run_sequence(const VecC& x0, const Discretization& disc,
                               const std::vector<VecR>& inputs);

// Same recurrence with the state series packed as an N x T matrix; column k
// is x_{k+1}. inputs is d_model x T.
MatC run_sequence_matrix(const VecC& x0, const Discretization& disc, const MatR& inputs);

// x_T = D^T x_0 + sum_j D^(T-j) B_bar u_j via closed-form elementwise powers
// exp(d*tau*m); an independent route from the step recurrence.
VecC unrolled_state(const VecC& x0, const Discretization& disc,
                    const std::vector<VecR>& inputs, Eigen::Index t);

// mu_i(k) = lambda_{D,i} mu_i(k-1) + b_tilde_i^T u_k, with b_tilde = F^dagger B_bar
// precomputed by the caller (B_bar in the oscillator frame).
VecC modal_step(const VecC& mu_prev, const Discretization& disc, const VecR& u,
                const MatC& b_tilde);

nlohmann::ordered_json spectrum_to_json(const DiagonalSpectrum& spectrum, double tau, const MatC& b);
struct SpectrumBundle {
  DiagonalSpectrum spectrum;
  double tau;
  MatC b;
};
SpectrumBundle spectrum_from_json(const nlohmann::json& j);

}  // namespace wavessm

#include "wavessm/oscillator.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace wavessm {

namespace {
const Complex kI(0.0, 1.0);

void check_square_match(const MatR& a, const MatR& b, const char* who) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw InvalidDimension(std::string(who) + ": adjacency/phase_lags must be square and match");
}

bool all_finite(const VecC& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  return true;
}

// Rotating-frame RHS in the form psi_dot = -i * exp(-i*psi) .* (K x), x = exp(i*psi).
VecC rotating_rhs(const VecC& psi, const MatC& k) {
  VecC x = psi;
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = std::exp(kI * psi[i]);
  VecC kx = k * x;
  VecC out(psi.size());
  for (Eigen::Index i = 0; i < out.size(); ++i)
    out[i] = -kI * std::exp(-kI * psi[i]) * kx[i];
  return out;
}
}  // namespace

CouplingMatrix coupling_matrix(const OscillatorParams& params) {
  check_square_match(params.adjacency, params.phase_lags, "coupling_matrix");
  const Eigen::Index n = params.size();
  CouplingMatrix k;
  k.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      k.entries(i, j) = params.kappa * std::polar(1.0, -params.phase_lags(i, j)) * params.adjacency(i, j);
  return k;
}

MatC matrix_exponential(const MatC& m) { return m.exp(); }

OscState exact_propagate(const OscState& x0, const CouplingMatrix& k, double t) {
  if (x0.x.size() != k.size()) throw InvalidDimension("exact_propagate: dimension mismatch");
  return OscState{matrix_exponential(k.entries * t) * x0.x};
}

VecC phase_to_state(const VecC& psi) {
  VecC x(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) x[i] = std::exp(kI * psi[i]);
  return x;
}

VecC state_to_phase(const VecC& x) {
  VecC psi(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double mod = std::abs(x[i]);
    if (mod == 0.0) throw SingularModulus("state_to_phase: |x_i| = 0, log-modulus undefined");
    psi[i] = Complex(principal_arg(x[i]), -std::log(mod));
  }
  return psi;
}

PhaseState phase_solution(const PhaseState& psi0, const CouplingMatrix& k, double t) {
  if (psi0.psi.size() != k.size()) throw InvalidDimension("phase_solution: dimension mismatch");
  OscState xt = exact_propagate(OscState{phase_to_state(psi0.psi)}, k, t);
  return PhaseState{state_to_phase(xt.x)};
}

VecC rhs_eval(const PhaseState& psi, const OscillatorParams& params) {
  check_square_match(params.adjacency, params.phase_lags, "rhs_eval");
  const Eigen::Index n = params.size();
  if (psi.psi.size() != n) throw InvalidDimension("rhs_eval: state/params dimension mismatch");
  VecC out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (params.adjacency(i, j) == 0.0) continue;
      const Complex d = psi.psi[j] - psi.psi[i] - params.phase_lags(i, j);
      acc += params.adjacency(i, j) * (std::sin(d) - kI * std::cos(d));
    }
    out[i] = params.omega + params.kappa * acc;
  }
  return out;
}

PhaseState numeric_integrate(const PhaseState& psi0, const OscillatorParams& params,
                             double t_end, double dt) {
  if (dt <= 0.0) throw InvalidDimension("numeric_integrate: dt must be > 0");
  if (t_end < 0.0) throw InvalidDimension("numeric_integrate: t_end must be >= 0");
  const MatC k = coupling_matrix(params).entries;

  VecC psi = psi0.psi;
  double t = 0.0;
  while (t < t_end - 1e-15 * std::max(1.0, t_end)) {
    const double h = std::min(dt, t_end - t);
    VecC k1 = rotating_rhs(psi, k);
    VecC k2 = rotating_rhs(psi + 0.5 * h * k1, k);
    VecC k3 = rotating_rhs(psi + 0.5 * h * k2, k);
    VecC k4 = rotating_rhs(psi + h * k3, k);
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    if (!all_finite(psi)) throw DivergenceError("numeric_integrate: non-finite state at t=" + std::to_string(t));
  }
  return PhaseState{psi};
}

MatC dynamics_operator(const CouplingMatrix& k, double tau) {
  if (tau <= 0.0) throw InvalidDimension("dynamics_operator: tau must be > 0");
  return matrix_exponential(k.entries * tau);
}

OscState discrete_step(const OscState& x_prev, const MatC& d_tau) {
  if (x_prev.x.size() != d_tau.rows()) throw InvalidDimension("discrete_step: dimension mismatch");
  return OscState{d_tau * x_prev.x};
}

OscState discrete_step(const OscState& x_prev, const CouplingMatrix& k, double tau) {
  return discrete_step(x_prev, dynamics_operator(k, tau));
}

MatR ring_adjacency(Eigen::Index n, Eigen::Index neighborhood, bool normalized) {
  if (n < 1) throw InvalidDimension("ring_adjacency: N must be >= 1");
  if (neighborhood < 0 || 2 * neighborhood >= n)
    throw InvalidDimension("ring_adjacency: neighborhood out of range");
  MatR a = MatR::Zero(n, n);
  const double w = normalized ? 1.0 / static_cast<double>(2 * neighborhood) : 1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index d = 1; d <= neighborhood; ++d) {
      a(i, (i + d) % n) = w;
      a(i, ((i - d) % n + n) % n) = w;
    }
  return a;
}

MatR directed_ring_adjacency(Eigen::Index n) {
  if (n < 2) throw InvalidDimension("directed_ring_adjacency: N must be >= 2");
  MatR a = MatR::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, (i + 1) % n) = 1.0;
  return a;
}

SpatialPowerSummary dominant_spatial_mode(const MatR& raster) {
  const Eigen::Index t_steps = raster.rows();
  const Eigen::Index n = raster.cols();
  if (t_steps < 1 || n < 2) throw InvalidDimension("dominant_spatial_mode: raster too small");
  // Average the spatial power spectrum of exp(i*theta) rows; the unit-modulus
  // embedding avoids branch-cut artifacts in wrapped phases.
  VecR power = VecR::Zero(n);
  for (Eigen::Index k = 0; k < t_steps; ++k) {
    for (Eigen::Index q = 0; q < n; ++q) {
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        acc += std::exp(kI * (raster(k, j) - 2.0 * M_PI * static_cast<double>(q * j) / static_cast<double>(n)));
      power[q] += std::norm(acc);
    }
  }
  const double total = power.sum();
  SpatialPowerSummary s;
  s.dominant_mode = 1;
  for (Eigen::Index q = 2; q < n; ++q)
    if (power[q] > power[s.dominant_mode]) s.dominant_mode = q;
  s.dominant_share = total > 0.0 ? power[s.dominant_mode] / total : 0.0;
  return s;
}

}  // namespace wavessm

#include "wavessm/dft.hpp"

#include <cmath>
#include <numbers>

namespace wavessm {

namespace {
constexpr double kPi = std::numbers::pi;

// exp(-2*pi*i*(j*s mod N)/N); reducing the index first keeps the angle in
// [0, 2*pi) so large j*s products do not lose precision.
Complex twiddle(Eigen::Index j, Eigen::Index s, Eigen::Index n) {
  const Eigen::Index k = (j * s) % n;
  return std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
}
}  // namespace

double principal_arg(const Complex& z) {
  double a = std::arg(z);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

DftBasis dft_basis(Eigen::Index n) {
  if (n < 1) throw InvalidDimension("dft_basis: N must be >= 1");
  DftBasis basis;
  basis.size = n;
  basis.entries.resize(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index s = 0; s < n; ++s)
      basis.entries(j, s) = scale * twiddle(j, s, n);
  return basis;
}

CirculantMatrix circulant_from_generator(const VecC& generator) {
  const Eigen::Index n = generator.size();
  if (n < 1) throw InvalidDimension("circulant_from_generator: empty generator");
  CirculantMatrix c;
  c.generator = generator;
  c.dense.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      c.dense(i, j) = generator[((j - i) % n + n) % n];
  return c;
}

Spectrum circulant_eigenvalues(const VecC& generator) {
  const Eigen::Index n = generator.size();
  if (n < 1) throw InvalidDimension("circulant_eigenvalues: empty generator");
  Spectrum s;
  s.eigenvalues.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) acc += generator[j] * twiddle(k, j, n);
    s.eigenvalues[k] = acc;
  }
  return s;
}

MatC reconstruct_coupling(const VecC& diagonal_spectrum, const DftBasis& basis) {
  if (diagonal_spectrum.size() != basis.size)
    throw InvalidDimension("reconstruct_coupling: spectrum length != basis size");
  return basis.entries * diagonal_spectrum.asDiagonal() * basis.entries.adjoint();
}

double circulant_residual(const MatC& m) {
  if (m.rows() != m.cols()) throw InvalidDimension("circulant_residual: matrix not square");
  const Eigen::Index n = m.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index shift = ((j - i) % n + n) % n;
      worst = std::max(worst, std::abs(m(i, j) - m(0, shift)));
    }
  return worst;
}

CouplingTopology coupling_topology(const MatC& k) {
  CouplingTopology t;
  t.magnitude.resize(k.rows(), k.cols());
  t.phase.resize(k.rows(), k.cols());
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      t.magnitude(i, j) = std::abs(k(i, j));
      t.phase(i, j) = principal_arg(k(i, j));
    }
  return t;
}

}  // namespace wavessm

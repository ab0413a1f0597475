#pragma once

// Closed-form DFT eigenbasis shared by all circulant matrices, circulant
// construction/diagonalization, and reconstruction of a coupling matrix
// from a diagonal spectrum (K = F D F^dagger).
//
// Index convention: storage is 0-based; reports and CSV headers use 1-based
// mode/node labels.

#include <Eigen/Dense>
#include <complex>

#include "wavessm/errors.hpp"

namespace wavessm {

using Complex = std::complex<double>;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;
using VecR = Eigen::VectorXd;
using MatR = Eigen::MatrixXd;

// Unitary DFT matrix with entries (1/sqrt(N)) exp(-2*pi*i*j*s/N), 0-based j,s.
// Row 0 and column 0 are constant 1/sqrt(N); F F^dagger = I.
struct DftBasis {
  Eigen::Index size = 0;
  MatC entries;

  const MatC& matrix() const { return entries; }
  // Eigenmode j (0-based): a sampled complex exponential with spatial
  // frequency j cycles per ring.
  VecC mode(Eigen::Index j) const { return entries.col(j); }
};

// Dense circulant plus the generating vector it was built from.
// Entry (i,j) depends only on (j-i) mod N.
struct CirculantMatrix {
  VecC generator;
  MatC dense;

  Eigen::Index size() const { return generator.size(); }
};

struct Spectrum {
  VecC eigenvalues;
};

DftBasis dft_basis(Eigen::Index n);

// Row r of the result is the generator rotated right by r positions.
CirculantMatrix circulant_from_generator(const VecC& generator);

// lambda_s = sum_j c_j exp(-2*pi*i*s*j/N): the DFT of the generator.
Spectrum circulant_eigenvalues(const VecC& generator);

// K = F diag(d) F^dagger. Circulant by construction up to roundoff.
MatC reconstruct_coupling(const VecC& diagonal_spectrum, const DftBasis& basis);

// Max absolute deviation of M from the circulant generated by its first row.
double circulant_residual(const MatC& m);

// Magnitude/phase split of a coupling matrix for topology reports.
struct CouplingTopology {
  MatR magnitude;
  MatR phase;  // principal argument, in (-pi, pi]
};
CouplingTopology coupling_topology(const MatC& k);

// Principal argument in (-pi, pi]. std::arg can return -pi for negative-zero
// imaginary parts; this wraps that endpoint.
double principal_arg(const Complex& z);

}  // namespace wavessm

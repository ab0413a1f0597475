#include "wavessm/ssm.hpp"

#include <cmath>
#include <numbers>

namespace wavessm {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(SpectrumVariant v) {
  switch (v) {
    case SpectrumVariant::Lin: return "lin";
    case SpectrumVariant::Inv: return "inv";
    case SpectrumVariant::FouT: return "fout";
    case SpectrumVariant::Custom: return "custom";
  }
  return "custom";
}

SpectrumVariant spectrum_variant_from_string(const std::string& s) {
  if (s == "lin") return SpectrumVariant::Lin;
  if (s == "inv") return SpectrumVariant::Inv;
  if (s == "fout") return SpectrumVariant::FouT;
  if (s == "custom") return SpectrumVariant::Custom;
  throw ParseError("unknown spectrum variant: " + s);
}

VecR DiagonalSpectrum::mode_frequencies() const {
  VecR f(eigenvalues.size());
  for (Eigen::Index j = 0; j < eigenvalues.size(); ++j)
    f[j] = eigenvalues[j].imag() / (2.0 * kPi);
  return f;
}

DiagonalSpectrum s4d_spectrum(SpectrumVariant variant, Eigen::Index n, IndexOrigin inv_origin) {
  if (n < 1) throw InvalidDimension("s4d_spectrum: N must be >= 1");
  DiagonalSpectrum s;
  s.variant = variant;
  s.eigenvalues.resize(n);
  const double nd = static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double j = static_cast<double>(i + 1);  // 1-based mode index
    double imag = 0.0;
    switch (variant) {
      case SpectrumVariant::Lin:
        imag = kPi * j;
        break;
      case SpectrumVariant::Inv: {
        const double m = inv_origin == IndexOrigin::One ? j : j - 1.0;
        imag = (nd / kPi) * (nd / (2.0 * m + 1.0) - 1.0);
        break;
      }
      case SpectrumVariant::FouT:
        imag = 2.0 * kPi * j / nd;
        break;
      case SpectrumVariant::Custom:
        throw InvalidDimension("s4d_spectrum: Custom has no formula; construct directly");
    }
    s.eigenvalues[i] = Complex(-0.5, imag);
  }
  return s;
}

Complex zoh_input_scale(Complex d, double tau) {
  const Complex z = d * tau;
  if (std::abs(z) < 1e-8) return tau * (1.0 + z / 2.0 + z * z / 6.0);
  return (std::exp(z) - 1.0) / d;
}

Discretization discretize_zoh(const DiagonalSpectrum& spectrum, const MatC& b, double tau) {
  if (tau <= 0.0) throw InvalidDimension("discretize_zoh: tau must be > 0");
  if (b.rows() != spectrum.size())
    throw InvalidDimension("discretize_zoh: B rows must match spectrum length");
  Discretization disc;
  disc.tau = tau;
  disc.variant = spectrum.variant;
  disc.continuous_eigenvalues = spectrum.eigenvalues;
  disc.discrete_eigenvalues.resize(spectrum.size());
  disc.input_projection.resize(b.rows(), b.cols());
  for (Eigen::Index j = 0; j < spectrum.size(); ++j) {
    const Complex d = spectrum.eigenvalues[j];
    disc.discrete_eigenvalues[j] = std::exp(d * tau);
    disc.input_projection.row(j) = zoh_input_scale(d, tau) * b.row(j);
  }
  return disc;
}

VecC step(const VecC& x_prev, const Discretization& disc, const VecR& u) {
  if (x_prev.size() != disc.state_dim() || u.size() != disc.input_dim())
    throw InvalidDimension("step: dimension mismatch");
  return disc.discrete_eigenvalues.cwiseProduct(x_prev) + disc.input_projection * u;
}

std::vector<VecC> run_sequence(const VecC& x0, const Discretization& disc,
                               const std::vector<VecR>& inputs) {
  std::vector<VecC> states;
  states.reserve(inputs.size());
  VecC x = x0;
  for (const VecR& u : inputs) {
    x = step(x, disc, u);
    states.push_back(x);
  }
  return states;
}

MatC run_sequence_matrix(const VecC& x0, const Discretization& disc, const MatR& inputs) {
  if (x0.size() != disc.state_dim() || inputs.rows() != disc.input_dim())
    throw InvalidDimension("run_sequence_matrix: dimension mismatch");
  const Eigen::Index t_len = inputs.cols();
  // B_bar * U once as a dense product; the recurrence then touches O(N) per step.
  MatC driven = disc.input_projection * inputs;
  MatC states(x0.size(), t_len);
  VecC x = x0;
  for (Eigen::Index k = 0; k < t_len; ++k) {
    x = disc.discrete_eigenvalues.cwiseProduct(x) + driven.col(k);
    states.col(k) = x;
  }
  return states;
}

VecC unrolled_state(const VecC& x0, const Discretization& disc,
                    const std::vector<VecR>& inputs, Eigen::Index t) {
  if (t < 0 || static_cast<size_t>(t) > inputs.size())
    throw InvalidDimension("unrolled_state: T exceeds input length");
  const Eigen::Index n = disc.state_dim();
  auto power = [&](Eigen::Index m) {
    VecC p(n);
    for (Eigen::Index j = 0; j < n; ++j)
      p[j] = std::exp(disc.continuous_eigenvalues[j] * disc.tau * static_cast<double>(m));
    return p;
  };
  VecC x = power(t).cwiseProduct(x0);
  for (Eigen::Index j = 1; j <= t; ++j)
    x += power(t - j).cwiseProduct(disc.input_projection * inputs[static_cast<size_t>(j - 1)]);
  return x;
}

VecC modal_step(const VecC& mu_prev, const Discretization& disc, const VecR& u,
                const MatC& b_tilde) {
  if (mu_prev.size() != disc.state_dim() || b_tilde.rows() != disc.state_dim() ||
      b_tilde.cols() != u.size())
    throw InvalidDimension("modal_step: dimension mismatch");
  return disc.discrete_eigenvalues.cwiseProduct(mu_prev) + b_tilde * u;
}

nlohmann::ordered_json spectrum_to_json(const DiagonalSpectrum& spectrum, double tau, const MatC& b) {
  nlohmann::ordered_json j;
  j["variant"] = to_string(spectrum.variant);
  j["N"] = spectrum.size();
  j["tau"] = tau;
  auto& eig = j["eigenvalues"] = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    eig.push_back({{"re", spectrum.eigenvalues[i].real()}, {"im", spectrum.eigenvalues[i].imag()}});
  auto& bj = j["B"] = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < b.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < b.cols(); ++c)
      row.push_back({{"re", b(r, c).real()}, {"im", b(r, c).imag()}});
    bj.push_back(row);
  }
  return j;
}

SpectrumBundle spectrum_from_json(const nlohmann::json& j) {
  SpectrumBundle out;
  out.spectrum.variant = spectrum_variant_from_string(j.at("variant").get<std::string>());
  const Eigen::Index n = j.at("N").get<Eigen::Index>();
  out.tau = j.at("tau").get<double>();
  const auto& eig = j.at("eigenvalues");
  if (static_cast<Eigen::Index>(eig.size()) != n) throw SchemaError("eigenvalue count != N");
  out.spectrum.eigenvalues.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    out.spectrum.eigenvalues[i] =
        Complex(eig[static_cast<size_t>(i)].at("re").get<double>(), eig[static_cast<size_t>(i)].at("im").get<double>());
  const auto& bj = j.at("B");
  const Eigen::Index rows = static_cast<Eigen::Index>(bj.size());
  const Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(bj[0].size()) : 0;
  out.b.resize(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      out.b(r, c) = Complex(bj[static_cast<size_t>(r)][static_cast<size_t>(c)].at("re").get<double>(),
                            bj[static_cast<size_t>(r)][static_cast<size_t>(c)].at("im").get<double>());
  return out;
}

}  // namespace wavessm

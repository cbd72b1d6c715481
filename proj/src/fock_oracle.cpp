#include "horizon/fock_oracle.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace horizon::fock {

namespace {

// Operator on one of the two modes, with an overall phase 1 or i.
struct Quadrature {
  std::size_t mode;
  std::complex<double> phase;
  Matrix op;
};

Matrix apply(const Quadrature& q, const Matrix& coefficients) {
  return q.mode == 0 ? Matrix(q.op * coefficients) : Matrix(coefficients * q.op.transpose());
}

}  // namespace

double TruncatedTwoModeState::norm_squared() const {
  double total = 0.0;
  for (double a : amplitudes) total += a * a;
  return total;
}

TruncatedTwoModeState truncated_tms(double r, std::size_t d) {
  if (d == 0) throw std::invalid_argument("truncated_tms: truncation must be positive");
  if (!(r >= 0.0)) throw std::invalid_argument("truncated_tms: r must be non-negative");
  TruncatedTwoModeState state{d, std::vector<double>(d)};
  const double ratio = std::tanh(r);
  double amplitude = 1.0 / std::cosh(r);
  for (std::size_t k = 0; k < d; ++k) {
    state.amplitudes[k] = amplitude;
    amplitude *= ratio;
  }
  return state;
}

std::vector<double> reduced_spectrum(const TruncatedTwoModeState& s) {
  const double norm = s.norm_squared();
  std::vector<double> p(s.amplitudes.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = s.amplitudes[k] * s.amplitudes[k] / norm;
  return p;
}

double reduced_entropy(const TruncatedTwoModeState& s) {
  double entropy = 0.0;
  for (double p : reduced_spectrum(s)) {
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

double mean_occupation(const TruncatedTwoModeState& s) {
  const std::vector<double> p = reduced_spectrum(s);
  double mean = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) mean += static_cast<double>(k) * p[k];
  return mean;
}

Matrix second_moments(const TruncatedTwoModeState& s) {
  const auto d = static_cast<Eigen::Index>(s.truncation);
  Matrix lower = Matrix::Zero(d, d);  // annihilation operator a
  for (Eigen::Index k = 1; k < d; ++k) lower(k - 1, k) = std::sqrt(static_cast<double>(k));
  const Matrix x = lower + lower.transpose();
  const Matrix p_real = lower.transpose() - lower;  // p = i · p_real

  Matrix coefficients = Matrix::Zero(d, d);
  const double norm = std::sqrt(s.norm_squared());
  for (Eigen::Index k = 0; k < d; ++k) coefficients(k, k) = s.amplitudes[static_cast<std::size_t>(k)] / norm;

  const std::complex<double> i_unit(0.0, 1.0);
  const std::array<Quadrature, 4> quadratures = {
      Quadrature{0, 1.0, x}, Quadrature{0, i_unit, p_real},
      Quadrature{1, 1.0, x}, Quadrature{1, i_unit, p_real}};

  Matrix sigma(4, 4);
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col <= row; ++col) {
      const auto& qi = quadratures[row];
      const auto& qj = quadratures[col];
      const double ij = coefficients.cwiseProduct(apply(qi, apply(qj, coefficients))).sum();
      const double ji = coefficients.cwiseProduct(apply(qj, apply(qi, coefficients))).sum();
      const double value = (qi.phase * qj.phase * (0.5 * (ij + ji))).real();
      sigma(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
      sigma(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row)) = value;
    }
  }
  return sigma;
}

}  // namespace horizon::fock

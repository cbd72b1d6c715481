#include "horizon/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

void check_mode_index(std::size_t index, std::size_t n_modes) {
  if (index >= n_modes) {
    throw std::invalid_argument("mode index " + std::to_string(index) + " out of range for " +
                                std::to_string(n_modes) + " modes");
  }
}

// Eigenvalues of Ωᵀσ are ±iν_k. Returns an empty vector when they do not
// resolve into clean conjugate pairs, which happens near ν = 1 where the
// nonsymmetric solver can split degenerate pairs.
std::vector<double> spectrum_from_generator(const Matrix& sigma) {
  const auto n_modes = static_cast<std::size_t>(sigma.rows() / 2);
  const Matrix generator = symplectic_form(n_modes).transpose() * sigma;
  Eigen::EigenSolver<Matrix> solver(generator, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) return {};

  const auto& eig = solver.eigenvalues();
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  std::vector<double> positive;
  std::vector<double> negative;
  for (Eigen::Index k = 0; k < eig.size(); ++k) {
    if (std::abs(eig[k].real()) > 1e-9 * scale) return {};
    (eig[k].imag() >= 0.0 ? positive : negative).push_back(std::abs(eig[k].imag()));
  }
  if (positive.size() != n_modes || negative.size() != n_modes) return {};
  std::sort(positive.begin(), positive.end(), std::greater<>());
  std::sort(negative.begin(), negative.end(), std::greater<>());
  for (std::size_t k = 0; k < n_modes; ++k) {
    if (std::abs(positive[k] - negative[k]) > 1e-9 * scale) return {};
  }
  return positive;
}

// Symmetrized route: with σ = L Lᵀ, K = Lᵀ Ω L is antisymmetric and
// −K² = KᵀK has eigenvalues ν_k², each twice.
std::vector<double> spectrum_from_cholesky(const Eigen::LLT<Matrix>& llt) {
  const auto n_modes = static_cast<std::size_t>(llt.matrixLLT().rows() / 2);
  const Matrix lower = llt.matrixL();
  const Matrix k = lower.transpose() * symplectic_form(n_modes) * lower;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(k.transpose() * k, Eigen::EigenvaluesOnly);
  std::vector<double> squares(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(squares.begin(), squares.end(), std::greater<>());
  std::vector<double> values(n_modes);
  for (std::size_t k2 = 0; k2 < n_modes; ++k2) {
    values[k2] = std::sqrt(std::max(0.0, 0.5 * (squares[2 * k2] + squares[2 * k2 + 1])));
  }
  return values;
}

}  // namespace

Matrix symplectic_form(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("symplectic_form: n_modes must be positive");
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  Matrix omega = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  return omega;
}

double symplectic_defect(const Matrix& s) {
  const Matrix omega = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
  return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff();
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("SymplecticMatrix: n_modes must be positive");
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  return SymplecticMatrix(n_modes, Matrix::Identity(dim, dim));
}

SymplecticMatrix SymplecticMatrix::from_matrix(Matrix entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0 || entries.rows() % 2 != 0) {
    throw std::invalid_argument("SymplecticMatrix: expected a non-empty 2N x 2N matrix");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const double defect = symplectic_defect(entries);
  if (defect > kSymplecticTolerance * scale * scale) {
    throw std::invalid_argument("SymplecticMatrix: S Omega S^T != Omega (defect " +
                                std::to_string(defect) + ")");
  }
  const auto n_modes = static_cast<std::size_t>(entries.rows() / 2);
  return SymplecticMatrix(n_modes, std::move(entries));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const Matrix omega = symplectic_form(n_modes_);
  return SymplecticMatrix(n_modes_, omega * entries_.transpose() * omega.transpose());
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (rhs.n_modes_ != n_modes_) {
    throw std::invalid_argument("SymplecticMatrix: mode-count mismatch in product");
  }
  return SymplecticMatrix(n_modes_, entries_ * rhs.entries_);
}

double SymplecticSpectrum::product_of_squares() const {
  double product = 1.0;
  for (double v : values) product *= v * v;
  return product;
}

CovarianceMatrix::CovarianceMatrix(Matrix entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0 || entries.rows() % 2 != 0) {
    throw std::invalid_argument("CovarianceMatrix: expected a non-empty 2N x 2N matrix");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const double asymmetry = (entries - entries.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > kSymmetryTolerance * scale) {
    throw InvalidState("CovarianceMatrix: matrix is not symmetric");
  }
  entries_ = 0.5 * (entries + entries.transpose());
  const SymplecticSpectrum spectrum = symplectic_eigenvalues(entries_);
  if (spectrum.smallest() < 1.0 - kPhysicalityTolerance) {
    throw InvalidState("CovarianceMatrix: symplectic eigenvalue " +
                       std::to_string(spectrum.smallest()) + " below 1 (uncertainty violated)");
  }
}

CovarianceMatrix CovarianceMatrix::vacuum(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("CovarianceMatrix: n_modes must be positive");
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  return CovarianceMatrix(Matrix::Identity(dim, dim), Trusted{});
}

CovarianceMatrix CovarianceMatrix::thermal(double variance) {
  return CovarianceMatrix(variance * Matrix::Identity(2, 2));
}

Block2 CovarianceMatrix::block(std::size_t i, std::size_t j) const {
  check_mode_index(i, n_modes());
  check_mode_index(j, n_modes());
  return entries_.block<2, 2>(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j));
}

SymplecticMatrix two_mode_squeezer(double r, std::size_t i, std::size_t j, std::size_t n_modes) {
  if (i == j) throw std::invalid_argument("two_mode_squeezer: modes must differ");
  check_mode_index(i, n_modes);
  check_mode_index(j, n_modes);

  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  Matrix s = Matrix::Identity(dim, dim);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const auto a = static_cast<Eigen::Index>(2 * i);
  const auto b = static_cast<Eigen::Index>(2 * j);
  s(a, a) = s(a + 1, a + 1) = ch;
  s(b, b) = s(b + 1, b + 1) = ch;
  s(a, b) = s(b, a) = sh;
  s(a + 1, b + 1) = s(b + 1, a + 1) = -sh;
  return SymplecticMatrix::from_matrix(std::move(s));
}

CovarianceMatrix apply_symplectic(const SymplecticMatrix& s, const CovarianceMatrix& sigma) {
  if (s.n_modes() != sigma.n_modes()) {
    throw std::invalid_argument("apply_symplectic: mode-count mismatch");
  }
  Matrix out = s.matrix() * sigma.matrix() * s.matrix().transpose();
  out = 0.5 * (out + out.transpose());
  return CovarianceMatrix(std::move(out), CovarianceMatrix::Trusted{});
}

CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep-set is empty");
  for (std::size_t a = 0; a < keep.size(); ++a) {
    check_mode_index(keep[a], sigma.n_modes());
    for (std::size_t b = 0; b < a; ++b) {
      if (keep[a] == keep[b]) throw std::invalid_argument("partial_trace: duplicate mode index");
    }
  }
  const auto dim = static_cast<Eigen::Index>(2 * keep.size());
  Matrix reduced(dim, dim);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      reduced.block<2, 2>(static_cast<Eigen::Index>(2 * a), static_cast<Eigen::Index>(2 * b)) =
          sigma.block(keep[a], keep[b]);
    }
  }
  return CovarianceMatrix(std::move(reduced));
}

CovarianceMatrix partial_trace(const CovarianceMatrix& sigma,
                               std::initializer_list<std::size_t> keep) {
  return partial_trace(sigma, std::span<const std::size_t>(keep.begin(), keep.size()));
}

SymplecticSpectrum symplectic_eigenvalues(const Matrix& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0 || sigma.rows() % 2 != 0) {
    throw std::invalid_argument("symplectic_eigenvalues: expected a non-empty 2N x 2N matrix");
  }
  Eigen::LLT<Matrix> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw InvalidState("symplectic_eigenvalues: matrix is not positive definite");
  }
  std::vector<double> values = spectrum_from_generator(sigma);
  if (values.empty()) values = spectrum_from_cholesky(llt);
  return SymplecticSpectrum{std::move(values)};
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma) {
  return symplectic_eigenvalues(sigma.matrix());
}

bool is_pure(const CovarianceMatrix& sigma) {
  const SymplecticSpectrum spectrum = symplectic_eigenvalues(sigma);
  return std::all_of(spectrum.values.begin(), spectrum.values.end(),
                     [](double v) { return std::abs(v - 1.0) <= kPurityTolerance; });
}

}  // namespace horizon

#pragma once

// Symplectic algebra on covariance matrices of zero-mean Gaussian states.
//
// Conventions used throughout the project:
//   * quadratures are interleaved, (x_1, p_1, ..., x_N, p_N);
//   * the vacuum has unit variance, so the N-mode vacuum CM is the identity;
//   * first moments are always zero and are not represented.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace horizon {

using Matrix = Eigen::MatrixXd;
using Block2 = Eigen::Matrix2d;

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPhysicalityTolerance = 1e-9;
inline constexpr double kPurityTolerance = 1e-8;
inline constexpr double kSymplecticTolerance = 1e-12;

/// Block-diagonal direct sum of n_modes copies of [[0, 1], [-1, 0]].
/// Throws std::invalid_argument for n_modes == 0.
Matrix symplectic_form(std::size_t n_modes);

/// Largest absolute entry of S Ω Sᵀ − Ω.
double symplectic_defect(const Matrix& s);

class SymplecticMatrix {
 public:
  static SymplecticMatrix identity(std::size_t n_modes);

  /// Wraps an arbitrary matrix after checking S Ω Sᵀ = Ω. The tolerance is
  /// kSymplecticTolerance scaled by max(1, |S|²_max) so that strongly
  /// squeezing transformations are not rejected for rounding alone.
  static SymplecticMatrix from_matrix(Matrix entries);

  std::size_t n_modes() const { return n_modes_; }
  const Matrix& matrix() const { return entries_; }

  /// S⁻¹ = Ω Sᵀ Ωᵀ, exact for symplectic S.
  SymplecticMatrix inverse() const;

  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

 private:
  SymplecticMatrix(std::size_t n_modes, Matrix entries)
      : n_modes_(n_modes), entries_(std::move(entries)) {}

  std::size_t n_modes_;
  Matrix entries_;
};

/// Descending symplectic eigenvalues ν_1 ≥ … ≥ ν_N.
struct SymplecticSpectrum {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }
  double smallest() const { return values.back(); }
  /// ∏ ν_k², equal to det σ.
  double product_of_squares() const;
};

class CovarianceMatrix {
 public:
  /// Validates shape (square, even), symmetry to kSymmetryTolerance relative,
  /// and physicality (every ν_k ≥ 1 − kPhysicalityTolerance). The stored
  /// matrix is exactly symmetrized.
  /// Throws std::invalid_argument on shape errors, InvalidState otherwise.
  explicit CovarianceMatrix(Matrix entries);

  static CovarianceMatrix vacuum(std::size_t n_modes);
  /// Single-mode thermal state a·I₂ (a ≥ 1).
  static CovarianceMatrix thermal(double variance);

  std::size_t n_modes() const { return static_cast<std::size_t>(entries_.rows() / 2); }
  const Matrix& matrix() const { return entries_; }
  double operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  /// 2×2 block coupling modes i and j.
  Block2 block(std::size_t i, std::size_t j) const;

 private:
  struct Trusted {};
  CovarianceMatrix(Matrix entries, Trusted) : entries_(std::move(entries)) {}

  Matrix entries_;

  friend CovarianceMatrix apply_symplectic(const SymplecticMatrix&, const CovarianceMatrix&);
};

/// Identity except on modes i, j, where it is
///   [ cosh r · I₂   sinh r · Z₂ ]
///   [ sinh r · Z₂   cosh r · I₂ ],   Z₂ = diag(1, −1).
SymplecticMatrix two_mode_squeezer(double r, std::size_t i, std::size_t j, std::size_t n_modes);

/// S σ Sᵀ. Throws std::invalid_argument on a mode-count mismatch.
CovarianceMatrix apply_symplectic(const SymplecticMatrix& s, const CovarianceMatrix& sigma);

/// Reduced CM on the listed modes, in the listed order.
CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, std::span<const std::size_t> keep);
CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, std::initializer_list<std::size_t> keep);

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma);

/// Same as above for a raw symmetric matrix that need not be physical
/// (e.g. a partially transposed CM). Requires positive definiteness and
/// throws InvalidState otherwise.
SymplecticSpectrum symplectic_eigenvalues(const Matrix& sigma);

bool is_pure(const CovarianceMatrix& sigma);

}  // namespace horizon

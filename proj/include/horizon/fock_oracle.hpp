#pragma once

// Brute-force check of the two-mode squeezer in a truncated number basis,
// independent of the covariance-matrix machinery.

#include <cstddef>
#include <vector>

#include "horizon/gaussian.hpp"

namespace horizon::fock {

inline constexpr std::size_t kDefaultTruncation = 60;

/// Σ_k a_k |k⟩|k⟩ truncated to k < d. Amplitudes are not renormalized.
struct TruncatedTwoModeState {
  std::size_t truncation;
  std::vector<double> amplitudes;

  double norm_squared() const;
};

/// a_k = tanhᵏ(r) / cosh(r), k = 0 … d−1. Throws for d = 0 or r < 0.
TruncatedTwoModeState truncated_tms(double r, std::size_t d);

/// Reduced single-mode populations p_k = a_k² / Σ a_j².
std::vector<double> reduced_spectrum(const TruncatedTwoModeState& s);

/// −Σ p_k ln p_k.
double reduced_entropy(const TruncatedTwoModeState& s);

/// Σ k p_k.
double mean_occupation(const TruncatedTwoModeState& s);

/// Symmetrized second moments ½⟨{R_i, R_j}⟩ with R = (x₁, p₁, x₂, p₂),
/// x = a + a†, p = i(a† − a), evaluated with explicit truncated ladder
/// matrices on the normalized state. Not validated as physical: truncation
/// can push it marginally off the uncertainty boundary.
Matrix second_moments(const TruncatedTwoModeState& s);

}  // namespace horizon::fock

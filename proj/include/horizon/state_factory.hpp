#pragma once

#include <array>
#include <cstddef>

#include "horizon/gaussian.hpp"
#include "horizon/horizon_map.hpp"

namespace horizon {

/// Mode slots of the four-mode Schwarzschild state, in the row order of the
/// block matrix: (λ_in, λ_out, ν_out, ν_in).
namespace layout {
inline constexpr std::size_t kLambdaIn = 0;
inline constexpr std::size_t kLambdaOut = 1;
inline constexpr std::size_t kNuOut = 2;
inline constexpr std::size_t kNuIn = 3;
inline constexpr std::size_t kModes = 4;
inline constexpr std::array<std::size_t, 2> kOuterModes = {kLambdaOut, kNuOut};
}  // namespace layout

/// Two-mode squeezed CM Γ(ξ)Γ(ξ)ᵀ: cosh 2ξ · I₂ on the diagonal,
/// sinh 2ξ · Z₂ off it.
CovarianceMatrix kruskal_state(double xi);

/// O Oᵀ with O = Γ_{ν_in ν_out}(n) Γ_{λ_in λ_out}(l) Γ_{λ_out ν_out}(ξ).
/// The Kruskal squeezer acts on the slots that become the outer modes; the
/// inner modes start in vacuum. Throws std::invalid_argument for the
/// infinite-ξ flag.
CovarianceMatrix schwarzschild_state_product(const SqueezingTriple& t);

/// The same state assembled block by block from closed-form entries.
CovarianceMatrix schwarzschild_state_blocks(const SqueezingTriple& t);

}  // namespace horizon

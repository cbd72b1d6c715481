#pragma once

// Scalar correlation measures of the Kruskal and Schwarzschild states.
//
// Entropies and mutual informations are in natural-log units (nats).
// Contangles are squared-arcsinh quantities and carry no log base.

#include "horizon/horizon_map.hpp"

namespace horizon {

/// Von Neumann entropy of a single-mode Gaussian state with symplectic
/// eigenvalue x:
///   f(x) = ((x+1)/2) ln((x+1)/2) − ((x−1)/2) ln((x−1)/2),  f(1) = 0.
/// Throws std::invalid_argument for x < 1.
double entropy_f(double x);

/// S_ξ = f(cosh 2ξ), the entanglement entropy of the Kruskal pair.
double kruskal_entanglement(double xi);
/// I_ξ = 2 S_ξ.
double kruskal_mutual_information(double xi);

/// g[m²] = arcsinh²(√(m² − 1)). Throws std::invalid_argument for m² < 1.
double contangle_g(double m_sq);

/// m_{λ|ν} of the outer-mode Gaussian contangle. Only meaningful when
/// tanh ξ > sinh l sinh n; on the other side it is not an entanglement
/// quantity and callers must not use it.
double out_out_m(double xi, double l, double n);

/// Whether the outer modes are entangled: tanh ξ > sinh l · sinh n.
/// The boundary itself counts as separable.
bool outer_modes_entangled(double xi, double l, double n);

/// Contangle between λ_out and ν_out. Delegates to the limit formula when
/// the infinite-ξ flag is set.
double out_out_contangle(const SqueezingTriple& t);

/// ξ → ∞ limit of out_out_contangle. Returns +∞ for l = n = 0 (EPR limit).
/// Throws DegenerateInput when |sinh l sinh n − 1| ≤ 1e-12.
double out_out_contangle_inf_squeezing(double l, double n);

/// Closed-form determinant and seralian Δ of the reduced outer-mode CM.
double out_out_determinant(double xi, double l, double n);
double out_out_seralian(double xi, double l, double n);

/// Mutual information between λ_out and ν_out from the closed forms.
double out_out_mutual_information(const SqueezingTriple& t);

/// Same quantity through the generic pipeline: build the four-mode state by
/// symplectic products, trace out the inner modes, diagonalize.
double out_out_mutual_information_generic(const SqueezingTriple& t);

/// τ_{X_in|X_out} = 4x².
double in_out_contangle(double x);

/// Contangle between the inner mode with squeezing l_min and the other
/// three modes (pure-state 1|3 split).
double one_vs_three_contangle(double xi, double l_min);

/// Same via contangle_g(det σ_{λ_in}) read off a constructed four-mode CM.
double one_vs_three_contangle_generic(double xi, double l_min);

/// τ_res = τ_{λ_in|rest} − τ_{λ_in|λ_out}, with modes labelled so l ≤ n.
double residual_contangle(double xi, double l, double n);

/// Upper bound on the tripartite entanglement among λ_in, λ_out, ν_out
/// (l ≤ n labelling), clamped at 0.
double tripartite_upper_bound(double xi, double l, double n);

struct CorrelationReport {
  double s_kruskal = 0.0;
  double i_kruskal = 0.0;
  double tau_out = 0.0;
  double i_out = 0.0;
  double tau_in_out_lambda = 0.0;
  double tau_in_out_nu = 0.0;
  double tau_1v3 = 0.0;
  double tau_residual = 0.0;
  double tau_tri_upper = 0.0;
  bool entangled_out = false;
};

/// Fills every field for one parameter point. In the infinite-ξ regime only
/// tau_out, entangled_out and the ξ-independent in/out contangles are
/// finite; divergent quantities are +∞ and tau_tri_upper is NaN.
CorrelationReport evaluate_report(const SqueezingTriple& t);

}  // namespace horizon

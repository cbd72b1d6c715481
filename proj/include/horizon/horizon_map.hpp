#pragma once

// Physical black-hole parameters -> effective squeezing of Schwarzschild
// modes, in natural units (G = c = ħ = k_B = 1).

namespace horizon {

/// Black-hole mass and a mode frequency. Both must be strictly positive;
/// the zero-mass limit is never represented directly.
struct HorizonParams {
  double mass;
  double frequency;
};

/// Kruskal squeezing ξ plus the horizon-induced squeezings l (frequency λ)
/// and n (frequency ν). When xi_infinite is set the value of xi is ignored
/// and only the dedicated ξ → ∞ limit formulas apply.
struct SqueezingTriple {
  double xi = 0.0;
  double l = 0.0;
  double n = 0.0;
  bool xi_infinite = false;

  static SqueezingTriple finite(double xi, double l, double n);
  static SqueezingTriple infinite(double l, double n);
};

/// r with cosh r = (1 − e^{−2πMα})^{−1/2}. Throws std::invalid_argument
/// for non-positive mass or frequency.
double squeezing_parameter(const HorizonParams& p);

/// e^{2πλM} + e^{2πνM} − e^{2πM(λ+ν)}. Entanglement of the outer modes at
/// infinite Kruskal squeezing survives iff this is negative.
double survival_expression(double mass, double lambda, double nu);

/// Exponential-sign form of the survival test.
bool survives_at_infinite_squeezing(double mass, double lambda, double nu);

/// Same predicate through the effective squeezings: sinh l · sinh n < 1.
bool survives_via_squeezing(double mass, double lambda, double nu);

/// Unique M* > 0 on the survival boundary, located by geometric bracketing
/// from M = 1e-6 followed by bisection to |ΔM| ≤ 1e-12.
double critical_mass(double lambda, double nu);

}  // namespace horizon

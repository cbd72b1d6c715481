#include "horizon/horizon_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace horizon {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

void require_squeezing(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite and non-negative");
  }
}

}  // namespace

SqueezingTriple SqueezingTriple::finite(double xi, double l, double n) {
  require_squeezing(xi, "xi");
  require_squeezing(l, "l");
  require_squeezing(n, "n");
  return SqueezingTriple{xi, l, n, false};
}

SqueezingTriple SqueezingTriple::infinite(double l, double n) {
  require_squeezing(l, "l");
  require_squeezing(n, "n");
  return SqueezingTriple{0.0, l, n, true};
}

double squeezing_parameter(const HorizonParams& p) {
  require_positive(p.mass, "mass");
  require_positive(p.frequency, "frequency");
  // cosh r = (1 − e^{−a})^{−1/2}  ⇔  sinh² r = e^{−a} / (1 − e^{−a}) = 1 / expm1(a),
  // which stays accurate both for a → 0 and a → ∞.
  const double a = 2.0 * std::numbers::pi * p.mass * p.frequency;
  const double sinh_sq = 1.0 / std::expm1(a);
  return std::asinh(std::sqrt(sinh_sq));
}

double survival_expression(double mass, double lambda, double nu) {
  require_positive(mass, "mass");
  require_positive(lambda, "lambda");
  require_positive(nu, "nu");
  const double two_pi_m = 2.0 * std::numbers::pi * mass;
  return std::exp(two_pi_m * lambda) + std::exp(two_pi_m * nu) -
         std::exp(two_pi_m * (lambda + nu));
}

bool survives_at_infinite_squeezing(double mass, double lambda, double nu) {
  return survival_expression(mass, lambda, nu) < 0.0;
}

bool survives_via_squeezing(double mass, double lambda, double nu) {
  const double l = squeezing_parameter({mass, lambda});
  const double n = squeezing_parameter({mass, nu});
  return std::sinh(l) * std::sinh(n) < 1.0;
}

double critical_mass(double lambda, double nu) {
  require_positive(lambda, "lambda");
  require_positive(nu, "nu");

  // The expression is positive for small M and negative beyond the root.
  double lo = 1e-6;
  while (survival_expression(lo, lambda, nu) < 0.0) lo *= 0.5;
  double hi = lo;
  while (survival_expression(hi, lambda, nu) >= 0.0) hi *= 2.0;
  if (hi > lo) lo = hi / 2.0;

  // Bisect to machine resolution; this is well inside |ΔM| ≤ 1e-12 and keeps
  // the inverse-scaling property exact to rounding for very small M*.
  for (int iteration = 0; iteration < 200; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (survival_expression(mid, lambda, nu) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace horizon

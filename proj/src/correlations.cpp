#include "horizon/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "horizon/errors.hpp"
#include "horizon/gaussian.hpp"
#include "horizon/state_factory.hpp"

namespace horizon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq(double x) { return x * x; }

// Arguments that are 1 up to accumulated rounding are snapped to 1.
double clamp_to_unit(double x) { return x < 1.0 && x >= 1.0 - kPhysicalityTolerance ? 1.0 : x; }

}  // namespace

double entropy_f(double x) {
  if (!(x >= 1.0)) throw std::invalid_argument("entropy_f: argument must be >= 1");
  if (x == 1.0) return 0.0;
  if (std::isinf(x)) return kInf;
  const double plus = 0.5 * (x + 1.0);
  const double minus = 0.5 * (x - 1.0);
  if (x < 3.0) return plus * std::log(plus) - minus * std::log(minus);
  // Same expression regrouped to avoid cancelling two large terms.
  return plus * std::log1p(1.0 / minus) + std::log(minus);
}

double kruskal_entanglement(double xi) { return entropy_f(std::cosh(2.0 * xi)); }

double kruskal_mutual_information(double xi) { return 2.0 * kruskal_entanglement(xi); }

double contangle_g(double m_sq) {
  if (!(m_sq >= 1.0)) throw std::invalid_argument("contangle_g: argument must be >= 1");
  return sq(std::asinh(std::sqrt(m_sq - 1.0)));
}

double out_out_m(double xi, double l, double n) {
  const double c2l = std::cosh(2.0 * l);
  const double c2n = std::cosh(2.0 * n);
  const double cxi_sq = sq(std::cosh(xi));
  const double sxi_sq = sq(std::sinh(xi));
  const double cross = std::sinh(l) * std::sinh(n) * std::sinh(2.0 * xi);
  const double numerator = 2.0 * c2l * c2n * cxi_sq + 3.0 * std::cosh(2.0 * xi) - 4.0 * cross - 1.0;
  const double denominator = 2.0 * ((c2l + c2n) * cxi_sq - 2.0 * sxi_sq + 2.0 * cross);
  return numerator / denominator;
}

bool outer_modes_entangled(double xi, double l, double n) {
  return std::tanh(xi) > std::sinh(l) * std::sinh(n);
}

double out_out_contangle(const SqueezingTriple& t) {
  if (t.xi_infinite) return out_out_contangle_inf_squeezing(t.l, t.n);
  if (!outer_modes_entangled(t.xi, t.l, t.n)) return 0.0;
  const double m = out_out_m(t.xi, t.l, t.n);
  return contangle_g(std::max(1.0, m * m));
}

double out_out_contangle_inf_squeezing(double l, double n) {
  if (l < 0.0 || n < 0.0) throw std::invalid_argument("squeezings must be non-negative");
  const double product = std::sinh(l) * std::sinh(n);
  if (std::abs(product - 1.0) <= 1e-12) {
    throw DegenerateInput("sinh(l) sinh(n) = 1: on the infinite-squeezing survival boundary");
  }
  if (product > 1.0) return 0.0;
  if (l == 0.0 && n == 0.0) return kInf;
  const double c2l = std::cosh(2.0 * l);
  const double c2n = std::cosh(2.0 * n);
  const double m = (c2l * c2n + 3.0 - 4.0 * product) / (c2l + c2n - 2.0 + 4.0 * product);
  return contangle_g(std::max(1.0, m * m));
}

double out_out_determinant(double xi, double l, double n) {
  const double c2xi = std::cosh(2.0 * xi);
  const double cl_sq = sq(std::cosh(l));
  const double sl_sq = sq(std::sinh(l));
  const double cn_sq = sq(std::cosh(n));
  const double sn_sq = sq(std::sinh(n));
  return sq((cn_sq + c2xi * sn_sq) * cl_sq + sl_sq * (c2xi * cn_sq + sn_sq));
}

double out_out_seralian(double xi, double l, double n) {
  const double c2xi = std::cosh(2.0 * xi);
  const double cl_sq = sq(std::cosh(l));
  const double sl_sq = sq(std::sinh(l));
  const double cn_sq = sq(std::cosh(n));
  const double sn_sq = sq(std::sinh(n));
  return sq(c2xi) * sq(cl_sq) + 2.0 * (c2xi * sl_sq - cn_sq * sq(std::sinh(2.0 * xi))) * cl_sq +
         sq(sl_sq) + sq(c2xi * cn_sq + sn_sq);
}

double out_out_mutual_information(const SqueezingTriple& t) {
  if (t.xi_infinite) return kInf;
  const double c2xi = std::cosh(2.0 * t.xi);
  const double local_lambda = sq(std::cosh(t.l)) * c2xi + sq(std::sinh(t.l));
  const double local_nu = sq(std::cosh(t.n)) * c2xi + sq(std::sinh(t.n));

  // The global state is pure, so the outer pair shares its symplectic
  // spectrum with the inner pair, whose blocks are a·I, b·I and c·Z. That
  // standard form avoids the cancellation in Δ² − 4 det near purity.
  const double c_xi_sq = sq(std::cosh(t.xi));
  const double a = 1.0 + 2.0 * sq(std::sinh(t.l)) * c_xi_sq;
  const double b = 1.0 + 2.0 * sq(std::sinh(t.n)) * c_xi_sq;
  const double c = std::sinh(t.l) * std::sinh(t.n) * std::sinh(2.0 * t.xi);
  const double root = std::sqrt(std::max(0.0, (a + b - 2.0 * c) * (a + b + 2.0 * c)));
  const double eta_plus = std::max(1.0, 0.5 * (root + std::abs(b - a)));
  const double eta_minus = std::max(1.0, 0.5 * (root - std::abs(b - a)));
  return entropy_f(local_lambda) + entropy_f(local_nu) - entropy_f(eta_plus) -
         entropy_f(eta_minus);
}

double out_out_mutual_information_generic(const SqueezingTriple& t) {
  const CovarianceMatrix full = schwarzschild_state_product(t);
  const CovarianceMatrix outer = partial_trace(full, layout::kOuterModes);
  const SymplecticSpectrum spectrum = symplectic_eigenvalues(outer);
  const double local_lambda = std::sqrt(outer.block(0, 0).determinant());
  const double local_nu = std::sqrt(outer.block(1, 1).determinant());
  return entropy_f(clamp_to_unit(local_lambda)) + entropy_f(clamp_to_unit(local_nu)) -
         entropy_f(clamp_to_unit(spectrum[0])) - entropy_f(clamp_to_unit(spectrum[1]));
}

double in_out_contangle(double x) { return 4.0 * x * x; }

double one_vs_three_contangle(double xi, double l_min) {
  // a = cosh² l + cosh 2ξ sinh² l, so a − 1 = 2 sinh² l cosh² ξ exactly.
  const double a_minus_one = 2.0 * sq(std::sinh(l_min)) * sq(std::cosh(xi));
  const double a = 1.0 + a_minus_one;
  return sq(std::asinh(std::sqrt(a_minus_one * (a + 1.0))));
}

double one_vs_three_contangle_generic(double xi, double l_min) {
  const CovarianceMatrix state = schwarzschild_state_blocks(SqueezingTriple::finite(xi, l_min, l_min));
  const double det = state.block(layout::kLambdaIn, layout::kLambdaIn).determinant();
  return contangle_g(std::max(1.0, det));
}

double residual_contangle(double xi, double l, double n) {
  const double l_min = std::min(l, n);
  return one_vs_three_contangle(xi, l_min) - in_out_contangle(l_min);
}

double tripartite_upper_bound(double xi, double l, double n) {
  const double l_lo = std::min(l, n);
  const double n_hi = std::max(l, n);
  const double q = sq(std::tanh(xi) / std::cosh(n_hi));
  const auto g_or_zero = [](double arg) { return arg < 1.0 ? 0.0 : contangle_g(arg); };

  const double first = g_or_zero(sq((q + 1.0) / (q - 1.0))) -
                       out_out_contangle(SqueezingTriple::finite(xi, l_lo, n_hi));
  const double second =
      g_or_zero(sq((q - std::cosh(2.0 * l_lo)) / (q - 1.0))) - in_out_contangle(l_lo);
  return std::max(0.0, std::min(first, second));
}

CorrelationReport evaluate_report(const SqueezingTriple& t) {
  CorrelationReport report;
  report.tau_in_out_lambda = in_out_contangle(t.l);
  report.tau_in_out_nu = in_out_contangle(t.n);
  report.tau_out = out_out_contangle(t);
  report.entangled_out = report.tau_out > 0.0;

  if (t.xi_infinite) {
    const bool inner_squeezed = std::min(t.l, t.n) > 0.0;
    report.s_kruskal = kInf;
    report.i_kruskal = kInf;
    report.i_out = kInf;
    report.tau_1v3 = inner_squeezed ? kInf : 0.0;
    report.tau_residual = inner_squeezed ? kInf : 0.0;
    report.tau_tri_upper = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  report.s_kruskal = kruskal_entanglement(t.xi);
  report.i_kruskal = 2.0 * report.s_kruskal;
  report.i_out = out_out_mutual_information(t);
  report.tau_1v3 = one_vs_three_contangle(t.xi, std::min(t.l, t.n));
  report.tau_residual = residual_contangle(t.xi, t.l, t.n);
  report.tau_tri_upper = tripartite_upper_bound(t.xi, t.l, t.n);
  return report;
}

}  // namespace horizon

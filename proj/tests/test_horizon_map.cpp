#include <stdexcept>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "horizon/horizon_map.hpp"

using namespace horizon;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST_CASE("squeezing parameter reference points") {
  // 2πMα = ln 2 gives cosh r = √2.
  CHECK(squeezing_parameter({std::numbers::ln2 / kTwoPi, 1.0}) ==
        doctest::Approx(0.88137358701954302523).epsilon(1e-14));
  // 2πMα = ln(4/3) gives cosh r = 2.
  CHECK(squeezing_parameter({std::log(4.0 / 3.0) / kTwoPi, 1.0}) ==
        doctest::Approx(1.31695789692481670863).epsilon(1e-14));
  CHECK(squeezing_parameter({1.0, 31.0 / kTwoPi}) < 1e-6);
  CHECK(squeezing_parameter({1.0, 100.0}) >= 0.0);
}

TEST_CASE("squeezing parameter is strictly decreasing in mass and frequency") {
  double previous = squeezing_parameter({1e-3, 1.0});
  for (double m = 2e-3; m < 2.0; m *= 1.3) {
    const double r = squeezing_parameter({m, 1.0});
    CHECK(r < previous);
    previous = r;
  }
  previous = squeezing_parameter({0.2, 0.01});
  for (double a = 0.02; a < 5.0; a *= 1.3) {
    const double r = squeezing_parameter({0.2, a});
    CHECK(r < previous);
    previous = r;
  }
}

TEST_CASE("squeezing parameter rejects non-positive input") {
  CHECK_THROWS_AS(squeezing_parameter({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(squeezing_parameter({1.0, -2.0}), std::invalid_argument);
  CHECK_THROWS_AS(squeezing_parameter({-1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("survival predicate") {
  CHECK(survives_at_infinite_squeezing(1.0, 1.0, 1.0));
  // λ = ν = 1 at M = ln2/2π: 2e^a = e^{2a}, the boundary, which counts as vanishing.
  CHECK(survival_expression(std::numbers::ln2 / kTwoPi, 1.0, 1.0) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK_FALSE(survives_at_infinite_squeezing(0.05, 1.0, 2.0));
  CHECK(survives_at_infinite_squeezing(0.08, 1.0, 2.0));
  CHECK_THROWS_AS(survives_at_infinite_squeezing(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(survives_at_infinite_squeezing(1.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("exponential and squeezing forms of the survival predicate agree") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_mass(std::log(0.005), std::log(2.0));
  std::uniform_real_distribution<double> log_freq(std::log(0.02), std::log(10.0));
  int compared = 0;
  while (compared < 2000) {
    const double m = std::exp(log_mass(rng));
    const double a = std::exp(log_freq(rng));
    const double b = std::exp(log_freq(rng));
    if (std::abs(survival_expression(m, a, b)) <= 1e-9) continue;
    CHECK(survives_at_infinite_squeezing(m, a, b) == survives_via_squeezing(m, a, b));
    ++compared;
  }
}

TEST_CASE("critical mass") {
  CHECK(critical_mass(1.0, 1.0) == doctest::Approx(0.110317800076325796698).epsilon(1e-13));
  CHECK(critical_mass(1.0, 2.0) == doctest::Approx(0.0765872406325082805289).epsilon(1e-13));
  CHECK(std::abs(critical_mass(1.0, 2.0) - std::log(std::numbers::phi) / kTwoPi) <= 1e-12);

  const double m_star = critical_mass(0.7, 3.1);
  CHECK_FALSE(survives_at_infinite_squeezing(m_star * (1 - 1e-6), 0.7, 3.1));
  CHECK(survives_at_infinite_squeezing(m_star * (1 + 1e-6), 0.7, 3.1));

  CHECK_THROWS_AS(critical_mass(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("critical mass scales inversely with frequency") {
  const double base = critical_mass(1.0, 2.0);
  for (double c : {0.01, 0.5, 2.0, 37.0, 1e4}) {
    const double scaled = critical_mass(c, 2.0 * c);
    CHECK(std::abs(scaled * c - base) / base <= 1e-10);
  }
  const double other = critical_mass(0.3, 5.0);
  CHECK(std::abs(critical_mass(3.0, 50.0) * 10.0 - other) / other <= 1e-10);
}

TEST_CASE("squeezing triple construction") {
  CHECK_THROWS_AS(SqueezingTriple::finite(-1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SqueezingTriple::finite(INFINITY, 0.0, 0.0), std::invalid_argument);
  CHECK(SqueezingTriple::infinite(0.1, 0.2).xi_infinite);
}

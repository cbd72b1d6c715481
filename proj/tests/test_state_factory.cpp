#include <stdexcept>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "horizon/state_factory.hpp"

using namespace horizon;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

const std::vector<double> kGrid = {0.0, 0.3, 0.7, 1.2, 2.0};

Block2 z2() {
  Block2 z;
  z << 1, 0, 0, -1;
  return z;
}

}  // namespace

TEST_CASE("kruskal state") {
  CHECK(max_abs(kruskal_state(0.0).matrix() - Matrix::Identity(4, 4)) == 0.0);
  const CovarianceMatrix s = kruskal_state(1.0);
  CHECK(s(0, 0) == doctest::Approx(3.7621956910836314).epsilon(1e-15));
  CHECK(s(3, 3) == doctest::Approx(3.7621956910836314).epsilon(1e-15));
  CHECK(max_abs(s.block(0, 1) - std::sinh(2.0) * z2()) < 1e-14);
  for (double xi : {0.0, 0.4, 1.0, 2.5}) CHECK(is_pure(kruskal_state(xi)));
}

TEST_CASE("product route special cases") {
  using namespace layout;
  SUBCASE("l = n = 0: Kruskal pair on the outer slots, vacua inside") {
    const CovarianceMatrix s = schwarzschild_state_product(SqueezingTriple::finite(0.8, 0.0, 0.0));
    const CovarianceMatrix outer = partial_trace(s, kOuterModes);
    CHECK(max_abs(outer.matrix() - kruskal_state(0.8).matrix()) < 1e-14);
    CHECK(max_abs(s.block(kLambdaIn, kLambdaIn) - Block2::Identity()) < 1e-14);
    CHECK(max_abs(s.block(kNuIn, kNuIn) - Block2::Identity()) < 1e-14);
    CHECK(max_abs(s.block(kLambdaIn, kNuOut)) < 1e-14);
  }
  SUBCASE("xi = 0: two independent in/out squeezed pairs") {
    const CovarianceMatrix s = schwarzschild_state_product(SqueezingTriple::finite(0.0, 0.5, 0.9));
    CHECK(max_abs(partial_trace(s, {kLambdaIn, kLambdaOut}).matrix() -
                  kruskal_state(0.5).matrix()) < 1e-14);
    CHECK(max_abs(partial_trace(s, {kNuIn, kNuOut}).matrix() - kruskal_state(0.9).matrix()) <
          1e-14);
    CHECK(max_abs(s.block(kLambdaOut, kNuOut)) < 1e-14);
  }
  SUBCASE("infinite flag rejected") {
    CHECK_THROWS_AS(schwarzschild_state_product(SqueezingTriple::infinite(0.1, 0.1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(schwarzschild_state_blocks(SqueezingTriple::infinite(0.1, 0.1)),
                    std::invalid_argument);
  }
}

TEST_CASE("block route golden blocks") {
  using namespace layout;
  const double xi = 1.0, l = 0.5, n = 0.8;
  const CovarianceMatrix s = schwarzschild_state_blocks(SqueezingTriple::finite(xi, l, n));
  const double c = std::cosh(l), sh = std::sinh(l);
  CHECK(max_abs(s.block(kLambdaIn, kLambdaIn) -
                (c * c + std::cosh(2 * xi) * sh * sh) * Block2::Identity()) < 1e-14);
  CHECK(max_abs(s.block(kLambdaIn, kLambdaOut) -
                std::cosh(xi) * std::cosh(xi) * std::sinh(2 * l) * z2()) < 1e-14);
  CHECK(max_abs(schwarzschild_state_blocks(SqueezingTriple::finite(0, 0, 0)).matrix() -
                Matrix::Identity(8, 8)) == 0.0);
}

TEST_CASE("dual construction agrees on the 125-point grid and is pure") {
  using namespace layout;
  for (double xi : kGrid) {
    for (double l : kGrid) {
      for (double n : kGrid) {
        const SqueezingTriple t = SqueezingTriple::finite(xi, l, n);
        const CovarianceMatrix product = schwarzschild_state_product(t);
        const CovarianceMatrix blocks = schwarzschild_state_blocks(t);
        CAPTURE(xi);
        CAPTURE(l);
        CAPTURE(n);
        CHECK(max_abs(product.matrix() - blocks.matrix()) <= 1e-12);
        CHECK(is_pure(product));
        CHECK(is_pure(blocks));
        // The only inner-inner correlation across frequencies.
        CHECK(max_abs(product.block(kLambdaIn, kNuIn) -
                      std::sinh(2 * xi) * std::sinh(l) * std::sinh(n) * z2()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("swapping the two frequencies permutes the modes") {
  using namespace layout;
  // (λ_in, λ_out, ν_out, ν_in) -> (ν_in, ν_out, λ_out, λ_in) reverses the slots.
  const std::array<std::size_t, 4> reversed = {kNuIn, kNuOut, kLambdaOut, kLambdaIn};
  for (double xi : {0.3, 1.2}) {
    const CovarianceMatrix a = schwarzschild_state_product(SqueezingTriple::finite(xi, 0.4, 1.1));
    const CovarianceMatrix b = schwarzschild_state_product(SqueezingTriple::finite(xi, 1.1, 0.4));
    CHECK(max_abs(partial_trace(a, reversed).matrix() - b.matrix()) < 1e-12);
  }
}

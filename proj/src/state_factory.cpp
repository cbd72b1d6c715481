#include "horizon/state_factory.hpp"

#include <cmath>
#include <stdexcept>

namespace horizon {

namespace {

void require_finite(const SqueezingTriple& t) {
  if (t.xi_infinite) {
    throw std::invalid_argument("four-mode state is undefined at infinite Kruskal squeezing");
  }
}

const Block2 kIdentity2 = Block2::Identity();
const Block2 kZ2 = (Block2() << 1.0, 0.0, 0.0, -1.0).finished();

}  // namespace

CovarianceMatrix kruskal_state(double xi) {
  const SymplecticMatrix squeezer = two_mode_squeezer(xi, 0, 1, 2);
  return apply_symplectic(squeezer, CovarianceMatrix::vacuum(2));
}

CovarianceMatrix schwarzschild_state_product(const SqueezingTriple& t) {
  require_finite(t);
  using namespace layout;
  const SymplecticMatrix o = two_mode_squeezer(t.n, kNuIn, kNuOut, kModes) *
                             two_mode_squeezer(t.l, kLambdaIn, kLambdaOut, kModes) *
                             two_mode_squeezer(t.xi, kLambdaOut, kNuOut, kModes);
  return apply_symplectic(o, CovarianceMatrix::vacuum(kModes));
}

CovarianceMatrix schwarzschild_state_blocks(const SqueezingTriple& t) {
  require_finite(t);
  using namespace layout;
  const double xi = t.xi;
  const double c2xi = std::cosh(2.0 * xi);
  const double s2xi = std::sinh(2.0 * xi);
  const double cxi_sq = std::cosh(xi) * std::cosh(xi);

  Matrix sigma = Matrix::Zero(8, 8);
  const auto put = [&sigma](std::size_t a, std::size_t b, const Block2& value) {
    const auto ra = static_cast<Eigen::Index>(2 * a);
    const auto rb = static_cast<Eigen::Index>(2 * b);
    sigma.block<2, 2>(ra, rb) = value;
    sigma.block<2, 2>(rb, ra) = value.transpose();
  };

  struct Frequency {
    std::size_t in;
    std::size_t out;
    double x;
  };
  const Frequency lambda{kLambdaIn, kLambdaOut, t.l};
  const Frequency nu{kNuIn, kNuOut, t.n};

  for (const auto& [self, other] : {std::pair{lambda, nu}, std::pair{nu, lambda}}) {
    const double cx = std::cosh(self.x);
    const double sx = std::sinh(self.x);
    put(self.in, self.in, (cx * cx + c2xi * sx * sx) * kIdentity2);
    put(self.out, self.out, (cx * cx * c2xi + sx * sx) * kIdentity2);
    put(self.in, self.out, (cxi_sq * std::sinh(2.0 * self.x)) * kZ2);
    put(self.in, other.out, (std::cosh(other.x) * s2xi * sx) * kIdentity2);
  }
  put(kLambdaIn, kNuIn, (s2xi * std::sinh(t.l) * std::sinh(t.n)) * kZ2);
  put(kLambdaOut, kNuOut, (std::cosh(t.l) * std::cosh(t.n) * s2xi) * kZ2);

  return CovarianceMatrix(std::move(sigma));
}

}  // namespace horizon

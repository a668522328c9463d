#include "bcalc/bnumber.hpp"

#include <cmath>

namespace bcalc {

BNumber make_bnum(double r, double theta) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw DomainError("b-number modulus must be positive and finite");
  }
  if (!std::isfinite(theta)) {
    throw DomainError("b-number angle must be finite");
  }
  return BNumber{r, theta};
}

BNumber embed_complex(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    throw DomainError("zero has no representation on the log surface");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("cannot embed a non-finite complex number");
  }
  double arg = std::arg(z);
  // std::arg uses (-pi, pi]; the principal sheet here is [-pi, pi).
  if (arg == std::acos(-1.0)) arg = -arg;
  return BNumber{std::abs(z), arg};
}

BNumber embed_real(double x) {
  if (x == 0.0) {
    throw DomainError("zero has no representation on the log surface");
  }
  if (!std::isfinite(x)) {
    throw DomainError("cannot embed a non-finite real number");
  }
  const double pi = std::acos(-1.0);
  return x > 0.0 ? BNumber{x, 0.0} : BNumber{-x, -pi};
}

Complex project(const BNumber& z) {
  return Complex{z.r * std::cos(z.theta), z.r * std::sin(z.theta)};
}

BNumber mul(const BNumber& z1, const BNumber& z2) {
  return BNumber{z1.r * z2.r, z1.theta + z2.theta};
}

BNumber div(const BNumber& z1, const BNumber& z2) {
  return BNumber{z1.r / z2.r, z1.theta - z2.theta};
}

BNumber inverse(const BNumber& z) { return BNumber{1.0 / z.r, -z.theta}; }

BNumber pow_complex(const BNumber& z, Complex w) {
  const double u = w.real();
  const double v = w.imag();
  const double ln_r = std::log(z.r);
  return BNumber{std::exp(u * ln_r - v * z.theta), u * z.theta + v * ln_r};
}

BNumber root_n(const BNumber& z, int n) {
  if (n < 1) {
    throw DomainError("root order must be a positive integer");
  }
  return BNumber{std::pow(z.r, 1.0 / n), z.theta / n};
}

BranchIndex branch_index(const BNumber& z) {
  const double pi = std::acos(-1.0);
  return static_cast<BranchIndex>(std::floor((z.theta + pi) / (2.0 * pi)));
}

bool in_branch(const BNumber& z, double alpha) {
  const double pi = std::acos(-1.0);
  return alpha - pi <= z.theta && z.theta < alpha + pi;
}

bool approx_eq(const BNumber& z1, const BNumber& z2, double tol_r,
               double tol_theta) {
  if (!(tol_r > 0.0) || !(tol_theta > 0.0)) {
    throw DomainError("comparison tolerances must be positive");
  }
  return std::abs(z1.r - z2.r) <= tol_r * std::max(1.0, z1.r) &&
         std::abs(z1.theta - z2.theta) <= tol_theta;
}

}  // namespace bcalc

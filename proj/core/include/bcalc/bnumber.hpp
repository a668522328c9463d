#pragma once

#include <complex>

#include "bcalc/errors.hpp"

namespace bcalc {

using Complex = std::complex<double>;

/// A point (r, theta) on the surface of the complex logarithm: r > 0 is the
/// modulus, theta the total winding angle in radians. theta is a free real
/// number; it is never reduced to a 2*pi window, so (1, 0) and (1, 2*pi) are
/// distinct values even though both project to the complex number 1.
///
/// Operations involving 1/r factors are ill-conditioned for r < 1e-8.
struct BNumber {
  double r = 1.0;
  double theta = 0.0;
};

/// Sheet index: a b-number lies on sheet n iff 2*pi*n - pi <= theta < 2*pi*n + pi.
using BranchIndex = long;

/// Validating constructor. Stores both values verbatim (no angle reduction).
/// Throws DomainError unless r > 0 and both arguments are finite.
BNumber make_bnum(double r, double theta);

/// Unique preimage of a nonzero complex number on sheet 0; the principal
/// angle lies in [-pi, pi), so -1 maps to (1, -pi). Throws DomainError for 0.
BNumber embed_complex(Complex z);

/// (x, 0) for x > 0 and (-x, -pi) for x < 0. Throws DomainError for 0.
BNumber embed_real(double x);

/// Projection onto the punctured complex plane: r*(cos theta + i sin theta).
/// Many-to-one (period 2*pi in theta).
Complex project(const BNumber& z);

/// (r1*r2, theta1+theta2). The surface is a group under this product.
BNumber mul(const BNumber& z1, const BNumber& z2);

/// (r1/r2, theta1-theta2).
BNumber div(const BNumber& z1, const BNumber& z2);

/// (1/r, -theta), the group inverse.
BNumber inverse(const BNumber& z);

/// Single-valued complex power: z^w = (e^{u ln r - v theta}, u theta + v ln r)
/// for w = u + iv. Agrees with repeated multiplication for integer w and with
/// (r^p, p theta) for rational p.
BNumber pow_complex(const BNumber& z, Complex w);

/// The unique n-th root (r^{1/n}, theta/n); w^n recovers z. The n classical
/// de Moivre roots of project(z) are the projections of the roots of the n
/// distinct b-numbers (r, theta + 2*pi*k), k = 0..n-1.
BNumber root_n(const BNumber& z, int n);

/// Sheet index n = floor((theta + pi) / (2*pi)).
BranchIndex branch_index(const BNumber& z);

/// True iff alpha - pi <= theta < alpha + pi.
bool in_branch(const BNumber& z, double alpha);

/// Componentwise comparison: relative on r (scaled by max(1, r1)), absolute
/// on theta. Deliberately non-modular, so (1,0) and (1,2*pi) never compare
/// equal. Tolerances must be positive.
bool approx_eq(const BNumber& z1, const BNumber& z2, double tol_r,
               double tol_theta);

}  // namespace bcalc

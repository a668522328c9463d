#pragma once

#include <functional>
#include <optional>

#include "bcalc/bnumber.hpp"

namespace bcalc {

/// Real-valued field over the surface coordinates (r, theta).
using Field = std::function<double(double, double)>;

/// Predicate selecting the subset of the surface where a function is defined.
using DomainPredicate = std::function<bool(double, double)>;

/// Analytic partial derivatives of the component fields R and Theta.
struct SurfacePartials {
  Field R_r;
  Field R_theta;
  Field Theta_r;
  Field Theta_theta;
};

/// Partial derivatives at a point, in the combination the multiplicative
/// derivative and the polar Cauchy-Riemann conditions consume.
struct PartialsAt {
  double lnR_r;
  double lnR_theta;
  double Theta_r;
  double Theta_theta;
  bool analytic;  // true when derived from supplied analytic partials
};

/// A map from the log surface to itself, represented by the two real fields
/// R(r, theta) > 0 and Theta(r, theta). Theta must be a continuous
/// representative on the domain -- a field defined through a two-argument
/// arctangent must exclude its discontinuity locus via the domain predicate.
/// Values are immutable bundles of pure evaluators; concurrent evaluation is
/// safe whenever the wrapped evaluators are.
struct SurfaceFunction {
  Field R;
  Field Theta;
  std::optional<SurfacePartials> partials;
  DomainPredicate domain;  // empty means: defined on the whole surface

  SurfaceFunction() = default;
  SurfaceFunction(Field R_, Field Theta_,
                  std::optional<SurfacePartials> partials_ = {},
                  DomainPredicate domain_ = {})
      : R(std::move(R_)),
        Theta(std::move(Theta_)),
        partials(std::move(partials_)),
        domain(std::move(domain_)) {}
};

inline constexpr double kDefaultFdStep = 1e-6;

bool in_domain(const SurfaceFunction& F, double r, double theta);

/// Evaluates F at z. Throws DomainError outside the domain or if the modulus
/// field fails to be positive and finite.
BNumber eval(const SurfaceFunction& F, const BNumber& z);

/// Partial derivatives at z. Analytic partials win when present; otherwise
/// central finite differences with step h_r = step*max(1, r) in r (relative)
/// and h_theta = step in theta (absolute). The point must be interior to the
/// domain with margin >= step.
PartialsAt partials_at(const SurfaceFunction& F, const BNumber& z,
                       double step = kDefaultFdStep);

/// F(z) = z0 for all z.
SurfaceFunction constant_surface(const BNumber& z0);

/// F(z) = z.
SurfaceFunction identity_surface();

/// F(z) = z^w, the single-valued power map (R = e^{u ln r - v theta},
/// Theta = u theta + v ln r).
SurfaceFunction power_surface(Complex w);

/// Pointwise product (R_F R_G, Theta_F + Theta_G); analytic partials are
/// combined when both factors carry them.
SurfaceFunction sf_mul(const SurfaceFunction& F, const SurfaceFunction& G);

/// Pointwise quotient (R_F / R_G, Theta_F - Theta_G).
SurfaceFunction sf_div(const SurfaceFunction& F, const SurfaceFunction& G);

/// Constant multiple z0 * F.
SurfaceFunction sf_scale(const BNumber& z0, const SurfaceFunction& F);

}  // namespace bcalc

#include "bcalc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bcalc {
namespace detail {

namespace {

// Abscissae of the 15-point Kronrod rule: xgk[1], xgk[3], ... are the
// abscissae of the embedded 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace

Qk15Result qk15(const std::function<double(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  const double fc = f(centr);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::abs(resk);
  double fv1[7];
  double fv2[7];

  for (int j = 0; j < 3; ++j) {
    const int jtw = j * 2 + 1;
    const double absc = hlgth * xgk[jtw];
    fv1[jtw] = f(centr - absc);
    fv2[jtw] = f(centr + absc);
    const double fsum = fv1[jtw] + fv2[jtw];
    resg += wg[j] * fsum;
    resk += wgk[jtw] * fsum;
    resabs += wgk[jtw] * (std::abs(fv1[jtw]) + std::abs(fv2[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = j * 2;
    const double absc = hlgth * xgk[jtwm1];
    fv1[jtwm1] = f(centr - absc);
    fv2[jtwm1] = f(centr + absc);
    const double fsum = fv1[jtwm1] + fv2[jtwm1];
    resk += wgk[jtwm1] * fsum;
    resabs += wgk[jtwm1] * (std::abs(fv1[jtwm1]) + std::abs(fv2[jtwm1]));
  }

  // resasc: integral of |f - mean| used to scale the error estimate.
  const double reskh = resk * 0.5;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  const double result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;

  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  const double epmach = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * epmach)) {
    abserr = std::max(epmach * 50.0 * resabs, abserr);
  }
  return Qk15Result{result, abserr, resabs};
}

namespace {

double integrate_rec(const std::function<double(double)>& f, double a,
                     double b, double tol, int& budget) {
  if (budget-- <= 0) {
    throw QuadratureError("adaptive quadrature: interval budget exhausted");
  }
  const Qk15Result est = qk15(f, a, b);
  if (!std::isfinite(est.value)) {
    throw QuadratureError("adaptive quadrature: non-finite integrand");
  }
  const double epmach = std::numeric_limits<double>::epsilon();
  const double roundoff_floor = 100.0 * epmach * est.resabs;
  if (est.abs_error <= tol || est.abs_error <= roundoff_floor) {
    return est.value;
  }
  const double mid = 0.5 * (a + b);
  if (mid == a || mid == b) {
    // Interval no longer splittable in double precision.
    return est.value;
  }
  const double half_tol = 0.5 * tol;
  return integrate_rec(f, a, mid, half_tol, budget) +
         integrate_rec(f, mid, b, half_tol, budget);
}

}  // namespace
}  // namespace detail

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_intervals) {
  if (a == b) return 0.0;
  if (!(abs_tol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
  int budget = max_intervals;
  return detail::integrate_rec(f, a, b, abs_tol, budget);
}

}  // namespace bcalc

#include "cq/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cq::params {

namespace {

void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

}  // namespace

RootPair validate_and_roots(const CubicQuinticParams& p) {
  require(p.alpha1 > 0 && p.alpha3 > 0 && p.alpha5 > 0, Errc::validation_error,
          "coefficients alpha1, alpha3, alpha5 must be positive");
  const double disc = p.alpha3 * p.alpha3 - 4.0 * p.alpha1 * p.alpha5;
  require(disc >= 0, Errc::discriminant_negative,
          "alpha3^2 - 4 alpha1 alpha5 is negative: no real modulus roots");
  require(disc > 0, Errc::degenerate_roots,
          "alpha3^2 - 4 alpha1 alpha5 vanishes: modulus roots coincide");
  // product form for the small root avoids cancellation
  const double q = p.alpha3 + std::sqrt(disc);
  return RootPair{q / (2.0 * p.alpha5), 2.0 * p.alpha1 / q};
}

ReducedParams reduce(const CubicQuinticParams& p) {
  require(p.c >= 0, Errc::validation_error, "wave speed c must be nonnegative");
  const RootPair roots = validate_and_roots(p);
  const double rho = 4.0 * p.alpha1 * p.alpha5 / (p.alpha3 * p.alpha3);  // in (0,1)
  // -2 + (3/rho)(1 - sqrt(1-rho)) rewritten without cancellation
  const double A = 3.0 / (1.0 + std::sqrt(1.0 - rho)) - 2.0;
  require(A > 0 && A < 1, Errc::a_out_of_range,
          "reduced parameter A = " + std::to_string(A) +
              " outside (0,1); requires r1^2/r0^2 > 1/3");
  const double gamma =
      std::sqrt(3.0 * p.alpha3 / (2.0 * p.alpha5 * (A + 2.0 * roots.r0sq)));
  const double vs = sound_speed(A);
  return ReducedParams{A, gamma, vs, p.c, p.c > 0 && p.c < vs};
}

double kopv_reduce(const CubicQuinticParams& p) {
  const RootPair roots = validate_and_roots(p);
  require(std::abs(p.alpha5 - 1.0) <= 1e-12 && std::abs(roots.r0sq - 1.0) <= 1e-12,
          Errc::not_normalized,
          "input is not in the r0^2 = 1, alpha5 = 1 gauge");
  const double gamma = 1.0 - roots.r1sq;
  require(gamma > 0, Errc::degenerate_roots, "r1^2 = 1 leaves no well");
  return gamma;
}

double sound_speed(double A) { return 2.0 * std::sqrt(1.0 - A); }

LinfConstants linf_constants(double A, double c) {
  require(A > 0 && A < 1, Errc::validation_error, "A must lie in (0,1)");
  require(c >= 0, Errc::validation_error, "wave speed c must be nonnegative");
  const double rad = 4.0 * (1.0 - A) * (1.0 - A) + 3.0 * c * c;
  require(rad > 0, Errc::validation_error, "speed radicand not positive");
  const double s = std::sqrt(rad);
  const double r1sq = (4.0 + 2.0 * A - s) / 6.0;
  const double r1 = r1sq >= 0 ? std::sqrt(r1sq)
                              : std::numeric_limits<double>::quiet_NaN();
  const double r2 = std::sqrt((4.0 + 2.0 * A + s) / 6.0);
  const double r3 = std::sqrt(A + 2.0) * std::sqrt(3.0 + 2.0 * std::sqrt(3.0)) / 3.0;
  double rbar = std::max(r2, r3);
  if (!std::isnan(r1)) rbar = std::max(rbar, r1);
  return LinfConstants{r1, r2, r3, rbar};
}

double r2_r3_crossover_speed(double A) {
  require(A > 0 && A < 1, Errc::validation_error, "A must lie in (0,1)");
  const double r3sq = (A + 2.0) * (3.0 + 2.0 * std::sqrt(3.0)) / 9.0;
  const double t = 6.0 * r3sq - 4.0 - 2.0 * A;  // sqrt side of r2 = r3
  const double csq = (t * t - 4.0 * (1.0 - A) * (1.0 - A)) / 3.0;
  require(csq >= 0, Errc::validation_error, "no real crossover speed");
  return std::sqrt(csq);
}

double keylem_margin(double A, double c, double s_max, int n) {
  const LinfConstants lc = linf_constants(A, c);
  const double rbar = lc.rbar;
  if (s_max == rbar) {
    const double s2 = rbar * rbar;
    return (s2 - 1.0) * (3.0 * s2 - 2.0 * A - 1.0) - c * c / 4.0;
  }
  require(s_max > rbar, Errc::validation_error, "s_max must be >= rbar");
  require(n >= 2, Errc::validation_error, "need at least two samples");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double s = rbar + (s_max - rbar) * i / (n - 1);
    const double s2 = s * s;
    const double d = s - rbar;
    const double f = (s2 - 1.0) * (3.0 * s2 - 2.0 * A - 1.0) - c * c / 4.0 -
                     3.0 * d * d * d * d;
    best = std::min(best, f);
  }
  return best;
}

double potential_value(double u, double A) {
  const double m = u * u;
  return 0.5 * (m - 1.0) * (m - 1.0) * (m - A);
}

PotentialProfile potential_profile(double A, const std::vector<double>& u_grid) {
  require(A > 0 && A < 1, Errc::validation_error, "A must lie in (0,1)");
  PotentialProfile out;
  out.u = u_grid;
  out.W.reserve(u_grid.size());
  for (double u : u_grid) out.W.push_back(potential_value(u, A));
  const double uc = std::sqrt((2.0 * A + 1.0) / 3.0);
  out.critical = {CriticalPoint{-1.0, true}, CriticalPoint{-uc, false},
                  CriticalPoint{0.0, true}, CriticalPoint{uc, false},
                  CriticalPoint{1.0, true}};
  return out;
}

}  // namespace cq::params

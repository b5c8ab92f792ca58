#pragma once
#include <array>
#include <vector>

#include "cq/errors.hpp"

// Parameter handling for the cubic-quintic nonlinear Schrodinger equation
//
//   i dPsi/dt - Lap(Psi) = (-a1 + a3 |Psi|^2 - a5 |Psi|^4) Psi
//
// and its reduction to the normalized traveling-wave model
//
//   ic d(psi)/dx1 + Lap(psi) + psi (|psi|^2 - 1)(2A + 1 - 3 |psi|^2) = 0
//
// with |psi| -> 1 at infinity and a single shape parameter A in (0,1).

namespace cq::params {

struct CubicQuinticParams {
  double alpha1;  // linear coefficient, > 0
  double alpha3;  // cubic coefficient, > 0
  double alpha5;  // quintic coefficient, > 0
  double c;       // wave speed, >= 0
};

// Roots of F(s) = -a1 + a3 s - a5 s^2, ordered r0sq > r1sq > 0.
struct RootPair {
  double r0sq;
  double r1sq;
};

struct ReducedParams {
  double A;       // inner-well depth of the normalized model, in (0,1)
  double gamma;   // amplitude scale of the reducing substitution
  double vs;      // sound speed 2 sqrt(1-A)
  double c;       // wave speed carried through from the input
  bool subsonic;  // 0 < c < vs
};

// Explicit modulus-bound constants.  r1 <= r2 are the inner/outer roots of
// the quadratic 3 s^2 - (4+2A) s + ... closed by the speed term; r3 depends
// on A only.  r1 is NaN when its radicand is negative (large speeds); rbar
// maximizes over the real values.
struct LinfConstants {
  double r1;
  double r2;
  double r3;
  double rbar;
};

struct CriticalPoint {
  double u;
  bool is_minimum;
};

struct PotentialProfile {
  std::vector<double> u;
  std::vector<double> W;
  std::array<CriticalPoint, 5> critical;  // ascending in u
};

// Checks positivity and the discriminant condition a3^2 - 4 a1 a5 > 0 and
// returns both roots.  Throws Errc::discriminant_negative or
// Errc::degenerate_roots.
[[nodiscard]] RootPair validate_and_roots(const CubicQuinticParams& p);

// Maps physical coefficients to the normalized model.  A is computed from
//   A / r0^2 = -2 + (3 a3^2)/(4 a1 a5) (1 - sqrt(1 - 4 a1 a5 / a3^2))
// and gamma from gamma^2 = 3 a3 / (2 a5 (A + 2 r0^2)).  Throws
// Errc::a_out_of_range unless 0 < A < 1.
[[nodiscard]] ReducedParams reduce(const CubicQuinticParams& p);

// Alternative normalization for inputs already in the r0^2 = 1, a5 = 1
// gauge: returns gamma = 1 - r1^2 > 0.  Throws Errc::not_normalized when
// the input is not in that gauge.
[[nodiscard]] double kopv_reduce(const CubicQuinticParams& p);

[[nodiscard]] double sound_speed(double A);  // 2 sqrt(1-A)

[[nodiscard]] LinfConstants linf_constants(double A, double c);

// Speed at which r2 crosses r3 (closed-form solve of r2(A,c) = r3(A)).
[[nodiscard]] double r2_r3_crossover_speed(double A);

// Minimum over n uniform samples s in [rbar, s_max] of
//   f(s) = (s^2-1)(3 s^2 - 2A - 1) - c^2/4 - 3 (s - rbar)^4.
// s_max == rbar degenerates to the single-point evaluation f(rbar).
[[nodiscard]] double keylem_margin(double A, double c, double s_max, int n);

// W(u) = (u^2-1)^2 (u^2-A) / 2.
[[nodiscard]] double potential_value(double u, double A);

// Samples W on u_grid and lists its five critical points with min/max
// classification: minima at 0 and +-1, maxima at +-sqrt((2A+1)/3).
[[nodiscard]] PotentialProfile potential_profile(double A,
                                                 const std::vector<double>& u_grid);

}  // namespace cq::params

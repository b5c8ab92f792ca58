#pragma once
// Variational quantities for traveling-wave profiles of the normalized model
//   i c d/dx1 psi + Lap psi + psi (|psi|^2 - 1)(2A + 1 - 3|psi|^2) = 0
// on the slab grid: energy, x1-momentum, Lagrangian I^c = E - c P, first and
// second variations, the stationary-equation residual and its linearization,
// the dilation split (Apoho, Bpoho) behind the scaling identity
// (d-3) Apoho + (d-1) Bpoho = 0, and an algebraic identity sampler.
//
// Discrete forms are chosen as exact companions: the x1 kinetic energy lives
// on cell midpoints so its variation is the 3-point second difference, the
// transverse terms share one spectral symbol, and the speed term pairs by
// summation by parts.  Consequently -first_variation(psi, phi) equals the
// weighted pairing of el_residual(psi) with phi to machine precision, and
// second_variation equals the pairing of -linearized_residual with phi.
// All quadratures: trapezoid along x1, rectangle transversally; end planes
// carry Dirichlet data and are excluded from residuals and pairings.

#include <cstdint>

#include "cq/grid.hpp"

namespace cq::functionals {

using grid::ComplexField;
using grid::PerturbationField;

struct Diagnostics {
  double E;
  double P;
  double Ic;
  double Apoho;
  double Bpoho;
  double residual_norm;
  double sup_mod;
  double pohozaev_residual;
};

struct ResidualReport {
  ComplexField field;  // end planes zero
  double norm;         // weighted L2 over interior nodes
};

struct PohozaevSplit {
  double Apoho;  // half the transverse kinetic energy, >= 0
  double Bpoho;  // half x1 kinetic + potential - c P
};

// E = 1/2 int |grad psi|^2 + 1/2 int (|psi|^2-1)^2 (|psi|^2-A)
[[nodiscard]] double energy(const ComplexField& psi, double A);

// P = -int d/dx1(Im psi) (Re psi - 1)
[[nodiscard]] double momentum(const ComplexField& psi);

// I^c = E - c P, same quadrature as the two pieces
[[nodiscard]] double lagrangian(const ComplexField& psi, double c, double A);

// d/dt I^c(psi + t phi) at t = 0
[[nodiscard]] double first_variation(const ComplexField& psi,
                                     const PerturbationField& phi, double c,
                                     double A);

// Pointwise residual R(psi) = i c d1 psi + Lap psi
//                             + psi (|psi|^2-1)(2A+1-3|psi|^2)
[[nodiscard]] ResidualReport el_residual(const ComplexField& psi, double c,
                                         double A);

// Derivative of R at psi applied to phi (real-linear in phi)
[[nodiscard]] PerturbationField linearized_residual(const ComplexField& psi,
                                                    const PerturbationField& phi,
                                                    double c, double A);

// d^2/dt^2 I^c(psi + t phi) at t = 0
[[nodiscard]] double second_variation(const ComplexField& psi,
                                      const PerturbationField& phi, double c,
                                      double A);

[[nodiscard]] PohozaevSplit ab_split(const ComplexField& psi, double c,
                                     double A);

// (d-3) Apoho + (d-1) Bpoho, d from the grid; near zero only at solutions
[[nodiscard]] double pohozaev_residual(const ComplexField& psi, double c,
                                       double A);

// Max deviation between the expanded and factored sides of the three
// algebraic identities underlying the concentration splitting, sampled at
// seeded random (u, v, A) in [-3,3]^2 x (0,1).
[[nodiscard]] double identity_suite(int n_samples, std::uint64_t seed = 1);

[[nodiscard]] Diagnostics diagnose(const ComplexField& psi, double c, double A);

// Weighted real inner product over interior nodes (trapezoid x rectangle)
[[nodiscard]] double weighted_inner(const PerturbationField& a,
                                    const PerturbationField& b);
[[nodiscard]] double weighted_norm(const PerturbationField& a);

}  // namespace cq::functionals

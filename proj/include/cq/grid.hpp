#pragma once
// Slab discretization: a Dirichlet interval along x1 (both endpoints stored,
// boundary value pinned to 1) crossed with one or two periodic transverse
// directions (right endpoint excluded).  Provides complex profile fields,
// finite-difference/spectral derivatives, the phase gauge map, and the
// embedding between full fields psi and deviations phi = psi - 1.
//
// Derivative conventions, chosen so that quadratic-form evaluations and
// operator applications built on them agree to machine precision:
//   - x1 first derivative: centered 2nd order, one-sided 2nd order at the two
//     end planes (end-plane values are for diagnostics only);
//   - transverse derivatives: discrete Fourier spectral, with the unpaired
//     highest mode (even nt) dropped from odd-order derivatives;
//   - Laplacian: 3-point second difference along x1 plus the transverse
//     spectral symbol composed from the first-derivative symbol, so the
//     Laplacian is exactly the formal adjoint square of the first derivatives.

#include <complex>
#include <cstddef>
#include <vector>

#include "cq/errors.hpp"

namespace cq::grid {

using cplx = std::complex<double>;

struct Grid {
  int d;      // spatial dimension, 2 or 3
  double N;   // x1 half-length: x1 in [-N, N]
  double L;   // transverse period: xt in [-L/2, L/2)
  int n1;     // x1 point count, endpoints included
  int nt;     // points per transverse direction
  double h1;  // 2N/(n1-1)
  double ht;  // L/nt

  [[nodiscard]] int n_transverse() const;          // nt^(d-1)
  [[nodiscard]] std::size_t size() const;          // n1 * nt^(d-1)
  [[nodiscard]] double x1(int i) const;            // -N + i h1
  [[nodiscard]] double xt(int j) const;            // -L/2 + j ht
  [[nodiscard]] double x1_weight(int i) const;     // trapezoid: h1, halved at ends
  [[nodiscard]] double transverse_weight() const;  // ht^(d-1), exact for trig polynomials
  // row-major flat index, x1 slowest; k ignored for d = 2
  [[nodiscard]] std::size_t index(int i, int j, int k = 0) const;
};

// Validates ranges: d in {2,3}, N, L > 0, n1, nt >= 8.
[[nodiscard]] Grid make_grid(int d, double N, double L, int n1, int nt);

// Complex profile on a Grid; layout matches Grid::index.  Admissible fields
// hold the value 1 on the two x1 end planes.
struct ComplexField {
  Grid g;
  std::vector<cplx> v;

  explicit ComplexField(const Grid& grid, cplx fill = {0.0, 0.0});
  [[nodiscard]] cplx& at(int i, int j, int k = 0);
  [[nodiscard]] const cplx& at(int i, int j, int k = 0) const;
};

// Deviation from the far-field value: psi = 1 + phi, phi = 0 on the end planes.
struct PerturbationField {
  Grid g;
  std::vector<cplx> v;

  explicit PerturbationField(const Grid& grid, cplx fill = {0.0, 0.0});
  [[nodiscard]] cplx& at(int i, int j, int k = 0);
  [[nodiscard]] const cplx& at(int i, int j, int k = 0) const;
};

struct Derivatives {
  ComplexField d1;                // x1 derivative
  std::vector<ComplexField> dt;   // transverse derivatives, one per direction
  ComplexField lap;               // full Laplacian
};

[[nodiscard]] Derivatives differentiate(const ComplexField& f);

// w(x) = exp(i c x1 / 2) psi(x); preserves pointwise modulus.
[[nodiscard]] ComplexField gauge_transform(const ComplexField& psi, double c);

// psi = 1 + phi with the end planes set to exactly 1.
[[nodiscard]] ComplexField embed(const PerturbationField& phi);
// phi = psi - 1 with end planes zeroed; rejects psi deviating from 1 there
// by more than 1e-12 (BoundaryViolation).
[[nodiscard]] PerturbationField extract(const ComplexField& psi);

void pin_boundary(ComplexField& psi);        // end planes := 1 exactly
void zero_boundary(PerturbationField& phi);  // end planes := 0 exactly

// Raw value copies between the two container types (no +-1 shift):
// as_perturbation zeroes the end planes, as_complex copies verbatim.
[[nodiscard]] PerturbationField as_perturbation(const ComplexField& f);
[[nodiscard]] ComplexField as_complex(const PerturbationField& f);

// In-place unnormalized forward DFT along every transverse direction of each
// x1 plane, and its 1/M-normalized inverse.  No-ops never occur: d = 2 maps
// each row, d = 3 maps each nt x nt slice.
void forward_transverse(ComplexField& f);
void inverse_transverse(ComplexField& f);

// Angular wavenumbers per transverse mode slot, 2*pi/L * {0, 1, ..., -1};
// zero_nyquist replaces the unpaired +-nt/2 slot (even nt) by 0.
[[nodiscard]] std::vector<double> transverse_wavenumbers(const Grid& g, bool zero_nyquist);

}  // namespace cq::grid

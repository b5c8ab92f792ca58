#include "cq/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace cq::functionals {

namespace {

using grid::cplx;
using grid::Grid;

void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

// nonlinear kernel N(psi) = psi * H(|psi|^2) and its m-derivative
double Hker(double m, double A) { return (m - 1.0) * (2.0 * A + 1.0 - 3.0 * m); }
double Hker_d(double m, double A) { return 2.0 * A + 4.0 - 6.0 * m; }

double Wpot(double m, double A) {
  return 0.5 * (m - 1.0) * (m - 1.0) * (m - A);
}

// real pairing <z, w> = Re(conj(z) w)
double dot(cplx z, cplx w) {
  return z.real() * w.real() + z.imag() * w.imag();
}

// 1/2 int |d1 f|^2 on cell midpoints; its variation is the 3-point stencil
double kinetic_x1(const std::vector<cplx>& v, const Grid& g) {
  const int M = g.n_transverse();
  double s = 0;
  for (int i = 0; i + 1 < g.n1; ++i) {
    const std::size_t a = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) s += std::norm(v[a + M + m] - v[a + m]);
  }
  return 0.5 * s * g.transverse_weight() / g.h1;
}

// int Re(conj(d1 a) d1 b) on the same cells
double kinetic_x1_cross(const std::vector<cplx>& a, const std::vector<cplx>& b,
                        const Grid& g) {
  const int M = g.n_transverse();
  double s = 0;
  for (int i = 0; i + 1 < g.n1; ++i) {
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m)
      s += dot(a[o + M + m] - a[o + m], b[o + M + m] - b[o + m]);
  }
  return s * g.transverse_weight() / g.h1;
}

void check_same_grid(const Grid& a, const Grid& b) {
  require(a.d == b.d && a.n1 == b.n1 && a.nt == b.nt && a.N == b.N && a.L == b.L,
          Errc::validation_error, "fields live on different grids");
}

}  // namespace

double energy(const ComplexField& psi, double A) {
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  const double wt = g.transverse_weight();
  const auto d = grid::differentiate(psi);
  double et = 0, ep = 0;
  for (int i = 0; i < g.n1; ++i) {
    const double w = g.x1_weight(i);
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) {
      for (const auto& dt : d.dt) et += w * std::norm(dt.v[o + m]);
      ep += w * Wpot(std::norm(psi.v[o + m]), A);
    }
  }
  return kinetic_x1(psi.v, g) + (0.5 * et + ep) * wt;
}

double momentum(const ComplexField& psi) {
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  const double inv2h = 1.0 / (2.0 * g.h1);
  const auto& v = psi.v;
  double p = 0;
  for (int i = 0; i < g.n1; ++i) {
    const double w = g.x1_weight(i);
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) {
      double db;
      if (i == 0)
        db = (-3.0 * v[m].imag() + 4.0 * v[M + m].imag() - v[2 * M + m].imag()) *
             inv2h;
      else if (i == g.n1 - 1)
        db = (3.0 * v[o + m].imag() - 4.0 * v[o - M + m].imag() +
              v[o - 2 * M + m].imag()) *
             inv2h;
      else
        db = (v[o + M + m].imag() - v[o - M + m].imag()) * inv2h;
      p -= w * db * (v[o + m].real() - 1.0);
    }
  }
  return p * g.transverse_weight();
}

double lagrangian(const ComplexField& psi, double c, double A) {
  return energy(psi, A) - c * momentum(psi);
}

double first_variation(const ComplexField& psi, const PerturbationField& phi,
                       double c, double A) {
  check_same_grid(psi.g, phi.g);
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  const ComplexField phic = grid::as_complex(phi);
  const auto dpsi = grid::differentiate(psi);
  const auto dphi = grid::differentiate(phic);
  double s = kinetic_x1_cross(psi.v, phic.v, g);
  double interior = 0;
  for (int i = 1; i + 1 < g.n1; ++i) {
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) {
      const std::size_t id = o + m;
      for (std::size_t a = 0; a < dpsi.dt.size(); ++a)
        interior += dot(dpsi.dt[a].v[id], dphi.dt[a].v[id]);
      interior -= c * dot(cplx{0.0, 1.0} * dpsi.d1.v[id], phic.v[id]);
      const double m2 = std::norm(psi.v[id]);
      interior +=
          (1.0 - m2) * (1.0 + 2.0 * A - 3.0 * m2) * dot(psi.v[id], phic.v[id]);
    }
  }
  return s + interior * g.h1 * g.transverse_weight();
}

ResidualReport el_residual(const ComplexField& psi, double c, double A) {
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  const auto d = grid::differentiate(psi);
  ComplexField R(g);
  double nrm2 = 0;
  for (int i = 1; i + 1 < g.n1; ++i) {
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) {
      const std::size_t id = o + m;
      const cplx r = cplx{0.0, c} * d.d1.v[id] + d.lap.v[id] +
                     psi.v[id] * Hker(std::norm(psi.v[id]), A);
      R.v[id] = r;
      nrm2 += std::norm(r);
    }
  }
  nrm2 *= g.h1 * g.transverse_weight();
  return ResidualReport{std::move(R), std::sqrt(nrm2)};
}

PerturbationField linearized_residual(const ComplexField& psi,
                                      const PerturbationField& phi, double c,
                                      double A) {
  check_same_grid(psi.g, phi.g);
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  const ComplexField phic = grid::as_complex(phi);
  const auto d = grid::differentiate(phic);
  PerturbationField out(g);
  for (int i = 1; i + 1 < g.n1; ++i) {
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) {
      const std::size_t id = o + m;
      const double m2 = std::norm(psi.v[id]);
      out.v[id] = cplx{0.0, c} * d.d1.v[id] + d.lap.v[id] +
                  Hker(m2, A) * phic.v[id] +
                  2.0 * Hker_d(m2, A) * dot(psi.v[id], phic.v[id]) * psi.v[id];
    }
  }
  return out;
}

double second_variation(const ComplexField& psi, const PerturbationField& phi,
                        double c, double A) {
  check_same_grid(psi.g, phi.g);
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  const ComplexField phic = grid::as_complex(phi);
  const auto dphi = grid::differentiate(phic);
  double q = 2.0 * kinetic_x1(phic.v, g);
  double interior = 0;
  for (int i = 1; i + 1 < g.n1; ++i) {
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) {
      const std::size_t id = o + m;
      for (const auto& dt : dphi.dt) interior += std::norm(dt.v[id]);
      interior -= c * dot(phic.v[id], cplx{0.0, 1.0} * dphi.d1.v[id]);
      const double m2 = std::norm(psi.v[id]);
      const double pr = dot(psi.v[id], phic.v[id]);
      interior -= Hker(m2, A) * std::norm(phic.v[id]);
      interior -= 2.0 * Hker_d(m2, A) * pr * pr;
    }
  }
  return q + interior * g.h1 * g.transverse_weight();
}

PohozaevSplit ab_split(const ComplexField& psi, double c, double A) {
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  const double wt = g.transverse_weight();
  const auto d = grid::differentiate(psi);
  double at = 0, ep = 0;
  for (int i = 0; i < g.n1; ++i) {
    const double w = g.x1_weight(i);
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) {
      for (const auto& dt : d.dt) at += w * std::norm(dt.v[o + m]);
      ep += w * Wpot(std::norm(psi.v[o + m]), A);
    }
  }
  const double Apoho = 0.5 * at * wt;
  const double Bpoho = kinetic_x1(psi.v, g) + ep * wt - c * momentum(psi);
  return PohozaevSplit{Apoho, Bpoho};
}

double pohozaev_residual(const ComplexField& psi, double c, double A) {
  const auto s = ab_split(psi, c, A);
  return (psi.g.d - 3) * s.Apoho + (psi.g.d - 1) * s.Bpoho;
}

double identity_suite(int n_samples, std::uint64_t seed) {
  require(n_samples >= 1, Errc::validation_error, "need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uv(-3.0, 3.0);
  std::uniform_real_distribution<double> uA(0.0, 1.0);
  double worst = 0;
  for (int k = 0; k < n_samples; ++k) {
    const double u = uv(rng), v = uv(rng), A = uA(rng);
    const double a = u - 1.0, v2 = v * v, s = u * u + v2;
    const double a2 = a * a;

    const double lhs1 = (1.0 - s) * (1.0 - s);
    const double rhs1 = 4.0 * a2 + a2 * a2 + v2 * v2 + 4.0 * a2 * a +
                        4.0 * a * v2 + 2.0 * a2 * v2;
    const double lhs2 = 1.0 + 2.0 * A - 3.0 * s;
    const double rhs2 = -3.0 * a2 - 6.0 * a - 3.0 * v2 + 2.0 * (A - 1.0);
    const double lhs3 = (1.0 - s) * a;
    const double rhs3 = -2.0 * a2 - a2 * a - a * v2;

    worst = std::max({worst, std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2),
                      std::abs(lhs3 - rhs3)});
  }
  return worst;
}

Diagnostics diagnose(const ComplexField& psi, double c, double A) {
  const double E = energy(psi, A);
  const double P = momentum(psi);
  const auto s = ab_split(psi, c, A);
  const auto rr = el_residual(psi, c, A);
  double sup = 0;
  for (const auto& z : psi.v) sup = std::max(sup, std::abs(z));
  return Diagnostics{E,       P,        E - c * P, s.Apoho, s.Bpoho,
                     rr.norm, sup,      (psi.g.d - 3) * s.Apoho +
                                            (psi.g.d - 1) * s.Bpoho};
}

double weighted_inner(const PerturbationField& a, const PerturbationField& b) {
  check_same_grid(a.g, b.g);
  const Grid& g = a.g;
  const int M = g.n_transverse();
  double s = 0;
  for (int i = 1; i + 1 < g.n1; ++i) {
    const std::size_t o = static_cast<std::size_t>(i) * M;
    for (int m = 0; m < M; ++m) s += dot(a.v[o + m], b.v[o + m]);
  }
  return s * g.h1 * g.transverse_weight();
}

double weighted_norm(const PerturbationField& a) {
  return std::sqrt(weighted_inner(a, a));
}

}  // namespace cq::functionals

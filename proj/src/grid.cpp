#include "cq/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <string>

namespace cq::grid {

namespace {

constexpr double pi = 3.14159265358979323846;

void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

// One DFT over all transverse directions of every x1 plane; FFTW_ESTIMATE
// keeps plan selection deterministic across runs.
void transverse_dft(ComplexField& f, int sign) {
  Grid& g = f.g;
  auto* data = reinterpret_cast<fftw_complex*>(f.v.data());
  fftw_plan plan = nullptr;
  if (g.d == 2) {
    int n[1] = {g.nt};
    plan = fftw_plan_many_dft(1, n, g.n1, data, nullptr, 1, g.nt, data, nullptr,
                              1, g.nt, sign, FFTW_ESTIMATE);
  } else {
    int n[2] = {g.nt, g.nt};
    plan = fftw_plan_many_dft(2, n, g.n1, data, nullptr, 1, g.nt * g.nt, data,
                              nullptr, 1, g.nt * g.nt, sign, FFTW_ESTIMATE);
  }
  require(plan != nullptr, Errc::bad_resolution, "transform planning failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  if (sign == FFTW_BACKWARD) {
    const double scale = 1.0 / g.n_transverse();
    for (auto& z : f.v) z *= scale;
  }
}

}  // namespace

int Grid::n_transverse() const { return d == 2 ? nt : nt * nt; }

std::size_t Grid::size() const {
  return static_cast<std::size_t>(n1) * static_cast<std::size_t>(n_transverse());
}

double Grid::x1(int i) const { return -N + i * h1; }

double Grid::xt(int j) const { return -0.5 * L + j * ht; }

double Grid::x1_weight(int i) const {
  return (i == 0 || i == n1 - 1) ? 0.5 * h1 : h1;
}

double Grid::transverse_weight() const { return d == 2 ? ht : ht * ht; }

std::size_t Grid::index(int i, int j, int k) const {
  const std::size_t row = static_cast<std::size_t>(i) * nt + j;
  return d == 3 ? row * nt + k : row;
}

Grid make_grid(int d, double N, double L, int n1, int nt) {
  require(d == 2 || d == 3, Errc::unsupported_dimension,
          "dimension must be 2 or 3");
  require(N > 0 && L > 0, Errc::validation_error,
          "domain lengths must be positive");
  require(n1 >= 8 && nt >= 8, Errc::bad_resolution,
          "need at least 8 points per direction");
  Grid g;
  g.d = d;
  g.N = N;
  g.L = L;
  g.n1 = n1;
  g.nt = nt;
  g.h1 = 2.0 * N / (n1 - 1);
  g.ht = L / nt;
  return g;
}

ComplexField::ComplexField(const Grid& grid, cplx fill)
    : g(grid), v(grid.size(), fill) {}

cplx& ComplexField::at(int i, int j, int k) { return v[g.index(i, j, k)]; }

const cplx& ComplexField::at(int i, int j, int k) const {
  return v[g.index(i, j, k)];
}

PerturbationField::PerturbationField(const Grid& grid, cplx fill)
    : g(grid), v(grid.size(), fill) {}

cplx& PerturbationField::at(int i, int j, int k) { return v[g.index(i, j, k)]; }

const cplx& PerturbationField::at(int i, int j, int k) const {
  return v[g.index(i, j, k)];
}

Derivatives differentiate(const ComplexField& f) {
  const Grid& g = f.g;
  const int M = g.n_transverse();
  Derivatives out{ComplexField(g), {}, ComplexField(g)};

  const double inv2h = 1.0 / (2.0 * g.h1);
  const double invh2 = 1.0 / (g.h1 * g.h1);
  const auto& v = f.v;
  for (int m = 0; m < M; ++m) {
    auto row = [&](int i) { return v[static_cast<std::size_t>(i) * M + m]; };
    for (int i = 1; i + 1 < g.n1; ++i) {
      const std::size_t id = static_cast<std::size_t>(i) * M + m;
      out.d1.v[id] = (row(i + 1) - row(i - 1)) * inv2h;
      out.lap.v[id] = (row(i + 1) - 2.0 * row(i) + row(i - 1)) * invh2;
    }
    const int e = g.n1 - 1;
    out.d1.v[m] = (-3.0 * row(0) + 4.0 * row(1) - row(2)) * inv2h;
    out.d1.v[static_cast<std::size_t>(e) * M + m] =
        (3.0 * row(e) - 4.0 * row(e - 1) + row(e - 2)) * inv2h;
    out.lap.v[m] = (2.0 * row(0) - 5.0 * row(1) + 4.0 * row(2) - row(3)) * invh2;
    out.lap.v[static_cast<std::size_t>(e) * M + m] =
        (2.0 * row(e) - 5.0 * row(e - 1) + 4.0 * row(e - 2) - row(e - 3)) * invh2;
  }

  const std::vector<double> kk = transverse_wavenumbers(g, true);
  ComplexField spec = f;
  forward_transverse(spec);
  for (int axis = 0; axis < g.d - 1; ++axis) {
    ComplexField da = spec;
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.nt; ++j) {
        if (g.d == 2) {
          da.at(i, j) *= cplx{0.0, kk[j]};
        } else {
          for (int k = 0; k < g.nt; ++k)
            da.at(i, j, k) *= cplx{0.0, axis == 0 ? kk[j] : kk[k]};
        }
      }
    inverse_transverse(da);
    out.dt.push_back(std::move(da));
  }
  ComplexField lt = spec;
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.nt; ++j) {
      if (g.d == 2) {
        lt.at(i, j) *= -kk[j] * kk[j];
      } else {
        for (int k = 0; k < g.nt; ++k)
          lt.at(i, j, k) *= -(kk[j] * kk[j] + kk[k] * kk[k]);
      }
    }
  inverse_transverse(lt);
  for (std::size_t n = 0; n < out.lap.v.size(); ++n) out.lap.v[n] += lt.v[n];
  return out;
}

ComplexField gauge_transform(const ComplexField& psi, double c) {
  const Grid& g = psi.g;
  ComplexField w = psi;
  const int M = g.n_transverse();
  for (int i = 0; i < g.n1; ++i) {
    const cplx phase = std::polar(1.0, 0.5 * c * g.x1(i));
    for (int m = 0; m < M; ++m) w.v[static_cast<std::size_t>(i) * M + m] *= phase;
  }
  return w;
}

ComplexField embed(const PerturbationField& phi) {
  ComplexField psi(phi.g);
  for (std::size_t n = 0; n < phi.v.size(); ++n) psi.v[n] = 1.0 + phi.v[n];
  pin_boundary(psi);
  return psi;
}

PerturbationField extract(const ComplexField& psi) {
  const Grid& g = psi.g;
  const int M = g.n_transverse();
  for (int m = 0; m < M; ++m) {
    const cplx lo = psi.v[m] - 1.0;
    const cplx hi = psi.v[static_cast<std::size_t>(g.n1 - 1) * M + m] - 1.0;
    require(std::abs(lo) <= 1e-12 && std::abs(hi) <= 1e-12,
            Errc::boundary_violation,
            "field deviates from 1 on an x1 end plane");
  }
  PerturbationField phi(g);
  for (std::size_t n = 0; n < psi.v.size(); ++n) phi.v[n] = psi.v[n] - 1.0;
  zero_boundary(phi);
  return phi;
}

void pin_boundary(ComplexField& psi) {
  const int M = psi.g.n_transverse();
  for (int m = 0; m < M; ++m) {
    psi.v[m] = 1.0;
    psi.v[static_cast<std::size_t>(psi.g.n1 - 1) * M + m] = 1.0;
  }
}

void zero_boundary(PerturbationField& phi) {
  const int M = phi.g.n_transverse();
  for (int m = 0; m < M; ++m) {
    phi.v[m] = 0.0;
    phi.v[static_cast<std::size_t>(phi.g.n1 - 1) * M + m] = 0.0;
  }
}

PerturbationField as_perturbation(const ComplexField& f) {
  PerturbationField phi(f.g);
  phi.v = f.v;
  zero_boundary(phi);
  return phi;
}

ComplexField as_complex(const PerturbationField& f) {
  ComplexField out(f.g);
  out.v = f.v;
  return out;
}

void forward_transverse(ComplexField& f) { transverse_dft(f, FFTW_FORWARD); }

void inverse_transverse(ComplexField& f) { transverse_dft(f, FFTW_BACKWARD); }

std::vector<double> transverse_wavenumbers(const Grid& g, bool zero_nyquist) {
  std::vector<double> k(g.nt);
  const double base = 2.0 * pi / g.L;
  for (int j = 0; j < g.nt; ++j)
    k[j] = base * (j <= g.nt / 2 ? j : j - g.nt);
  if (zero_nyquist && g.nt % 2 == 0) k[g.nt / 2] = 0.0;
  return k;
}

}  // namespace cq::grid

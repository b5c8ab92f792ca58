#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "cq/grid.hpp"
#include "cq/snapshot.hpp"

using namespace cq;
using namespace cq::grid;

namespace {

constexpr double pi = 3.14159265358979323846;

std::string tmp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

ComplexField random_admissible(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  PerturbationField phi(g);
  for (auto& z : phi.v) z = {u(rng), u(rng)};
  zero_boundary(phi);
  return embed(phi);
}

}  // namespace

TEST_CASE("make_grid: spacings and validation") {
  Grid g = make_grid(2, 10, 20, 201, 128);
  CHECK(g.h1 == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(g.ht == 0.15625);
  CHECK(g.n_transverse() == 128);
  CHECK(g.size() == 201u * 128u);
  CHECK(g.x1(0) == -10.0);
  CHECK(g.x1(200) == doctest::Approx(10.0));
  CHECK(g.xt(0) == -10.0);
  CHECK(g.x1_weight(0) == doctest::Approx(0.05));
  CHECK(g.x1_weight(1) == doctest::Approx(0.1));

  Grid g3 = make_grid(3, 5, 10, 101, 64);
  CHECK(g3.n_transverse() == 64 * 64);
  CHECK(g3.transverse_weight() == doctest::Approx(g3.ht * g3.ht));
  CHECK(g3.index(1, 0, 0) == 64u * 64u);
  CHECK(g3.index(0, 1, 0) == 64u);
  CHECK(g3.index(0, 0, 1) == 1u);

  try {
    (void)make_grid(4, 1, 1, 32, 32);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_dimension);
  }
  try {
    (void)make_grid(2, 1, 1, 7, 32);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_resolution);
  }
  try {
    (void)make_grid(2, 0.0, 1, 32, 32);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation_error);
  }
}

TEST_CASE("differentiate: constant field has zero derivatives") {
  Grid g = make_grid(2, 3, 7, 33, 16);
  ComplexField f(g, {1.0, 0.0});
  auto d = differentiate(f);
  for (auto z : d.d1.v) CHECK(std::abs(z) < 1e-13);
  for (auto z : d.dt[0].v) CHECK(std::abs(z) < 1e-13);
  for (auto z : d.lap.v) CHECK(std::abs(z) < 1e-12);
}

TEST_CASE("differentiate: resolved transverse mode is spectrally exact") {
  Grid g = make_grid(2, 3, 5, 17, 32);
  ComplexField f(g);
  const double k = 2.0 * pi / g.L;
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.nt; ++j)
      f.at(i, j) = std::polar(1.0, k * g.xt(j));
  auto d = differentiate(f);
  for (std::size_t n = 0; n < f.v.size(); ++n) {
    CHECK(std::abs(d.dt[0].v[n] - cplx{0.0, k} * f.v[n]) < 1e-12);
    CHECK(std::abs(d.lap.v[n] - (-k * k) * f.v[n]) < 1e-11);
  }
}

TEST_CASE("differentiate: 3d transverse axes are independent") {
  Grid g = make_grid(3, 2, 4, 9, 8);
  ComplexField f(g);
  const double k2 = 2.0 * (2.0 * pi / g.L);
  const double k3 = -1.0 * (2.0 * pi / g.L);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.nt; ++j)
      for (int k = 0; k < g.nt; ++k)
        f.at(i, j, k) = std::polar(1.0, k2 * g.xt(j) + k3 * g.xt(k));
  auto d = differentiate(f);
  REQUIRE(d.dt.size() == 2);
  for (std::size_t n = 0; n < f.v.size(); ++n) {
    CHECK(std::abs(d.dt[0].v[n] - cplx{0.0, k2} * f.v[n]) < 1e-12);
    CHECK(std::abs(d.dt[1].v[n] - cplx{0.0, k3} * f.v[n]) < 1e-12);
    CHECK(std::abs(d.lap.v[n] - (-(k2 * k2 + k3 * k3)) * f.v[n]) < 1e-10);
  }
}

TEST_CASE("differentiate: x1 stencils converge at order two") {
  auto max_err = [](int n1) {
    Grid g = make_grid(2, 4, 4, n1, 8);
    ComplexField f(g);
    const double w = pi / (2.0 * g.N);
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.nt; ++j)
        f.at(i, j) = std::sin(w * (g.x1(i) + g.N));
    auto d = differentiate(f);
    double e1 = 0, e2 = 0;
    for (int i = 1; i + 1 < g.n1; ++i) {
      const double x = g.x1(i);
      e1 = std::max(e1, std::abs(d.d1.at(i, 0) - w * std::cos(w * (x + g.N))));
      e2 = std::max(e2,
                    std::abs(d.lap.at(i, 0) + w * w * std::sin(w * (x + g.N))));
    }
    return std::pair{e1, e2};
  };
  auto [c1, c2] = max_err(65);
  auto [f1, f2] = max_err(129);
  CHECK(c1 / f1 == doctest::Approx(4.0).epsilon(0.15));
  CHECK(c2 / f2 == doctest::Approx(4.0).epsilon(0.15));

  // one-sided end-plane values stay second-order accurate
  Grid g = make_grid(2, 4, 4, 129, 8);
  ComplexField f(g);
  const double w = pi / (2.0 * g.N);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.nt; ++j) f.at(i, j) = std::sin(w * (g.x1(i) + g.N));
  auto d = differentiate(f);
  CHECK(std::abs(d.d1.at(0, 0) - w) < 1e-4);
}

TEST_CASE("gauge_transform: identity at c=0, modulus exact, invertible") {
  Grid g = make_grid(2, 6, 8, 33, 16);
  ComplexField psi = random_admissible(g, 11);

  ComplexField w0 = gauge_transform(psi, 0.0);
  CHECK(std::memcmp(w0.v.data(), psi.v.data(), psi.v.size() * sizeof(cplx)) == 0);

  ComplexField w = gauge_transform(psi, 2.0);
  for (std::size_t n = 0; n < psi.v.size(); ++n)
    CHECK(std::abs(std::abs(w.v[n]) - std::abs(psi.v[n])) < 1e-15);

  ComplexField back = gauge_transform(w, -2.0);
  for (std::size_t n = 0; n < psi.v.size(); ++n)
    CHECK(std::abs(back.v[n] - psi.v[n]) < 1e-14);

  // constant 1 maps to the pure phase ramp
  ComplexField one(g, {1.0, 0.0});
  ComplexField ramp = gauge_transform(one, 2.0);
  for (int i = 0; i < g.n1; ++i)
    CHECK(std::abs(ramp.at(i, 3) - std::polar(1.0, g.x1(i))) < 1e-14);
}

TEST_CASE("embed/extract: round trip and boundary policing") {
  Grid g = make_grid(2, 5, 5, 21, 8);
  PerturbationField phi(g);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  for (auto& z : phi.v) z = {u(rng), u(rng)};
  zero_boundary(phi);

  ComplexField psi = embed(phi);
  for (int m = 0; m < g.n_transverse(); ++m) {
    CHECK(psi.at(0, m) == cplx{1.0, 0.0});
    CHECK(psi.at(g.n1 - 1, m) == cplx{1.0, 0.0});
  }
  PerturbationField back = extract(psi);
  for (std::size_t n = 0; n < phi.v.size(); ++n)
    CHECK(std::abs(back.v[n] - phi.v[n]) < 1e-15);

  PerturbationField zero(g);
  ComplexField one = embed(zero);
  for (auto z : one.v) CHECK(z == cplx{1.0, 0.0});

  ComplexField bad(g, {1.0, 0.0});
  bad.at(0, 3) = 0.9;
  try {
    (void)extract(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::boundary_violation);
  }
}

TEST_CASE("transverse spectra: wavenumber table and round trip") {
  Grid g = make_grid(2, 1, 2 * pi, 9, 8);
  auto k = transverse_wavenumbers(g, false);
  CHECK(k[0] == 0.0);
  CHECK(k[1] == doctest::Approx(1.0));
  CHECK(k[4] == doctest::Approx(4.0));
  CHECK(k[5] == doctest::Approx(-3.0));
  CHECK(k[7] == doctest::Approx(-1.0));
  auto kz = transverse_wavenumbers(g, true);
  CHECK(kz[4] == 0.0);
  CHECK(kz[3] == doctest::Approx(3.0));

  ComplexField f = random_admissible(g, 5);
  ComplexField f2 = f;
  forward_transverse(f2);
  inverse_transverse(f2);
  for (std::size_t n = 0; n < f.v.size(); ++n)
    CHECK(std::abs(f2.v[n] - f.v[n]) < 1e-14);
}

TEST_CASE("snapshot: bit-exact round trip in 2d and 3d") {
  for (int d : {2, 3}) {
    Grid g = d == 2 ? make_grid(2, 7, 9, 25, 16) : make_grid(3, 2, 3, 9, 8);
    ComplexField f = random_admissible(g, 40 + d);
    const std::string path = tmp_path("cq_snap_rt.bin");
    snapshot::save_snapshot(path, f, 0.25, 1.5);
    auto snap = snapshot::load_snapshot(path);
    CHECK(snap.A == 0.25);
    CHECK(snap.c == 1.5);
    CHECK(snap.field.g.d == d);
    CHECK(snap.field.g.n1 == g.n1);
    CHECK(snap.field.g.nt == g.nt);
    CHECK(snap.field.g.N == g.N);
    CHECK(snap.field.g.L == g.L);
    REQUIRE(snap.field.v.size() == f.v.size());
    CHECK(std::memcmp(snap.field.v.data(), f.v.data(),
                      f.v.size() * sizeof(cplx)) == 0);
    std::remove(path.c_str());
  }
}

TEST_CASE("snapshot: malformed inputs rejected") {
  Grid g = make_grid(2, 1, 1, 8, 8);
  ComplexField f(g, {1.0, 0.0});
  const std::string path = tmp_path("cq_snap_bad.bin");
  snapshot::save_snapshot(path, f, 0.5, 0.0);

  auto corrupt_byte = [&](std::streamoff off, char val) {
    std::fstream s(path, std::ios::in | std::ios::out | std::ios::binary);
    s.seekp(off);
    s.put(val);
  };

  corrupt_byte(0, 'X');
  try {
    (void)snapshot::load_snapshot(path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::snapshot_format);
  }
  corrupt_byte(0, 'C');
  corrupt_byte(4, 0x02);  // unknown version
  try {
    (void)snapshot::load_snapshot(path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::snapshot_format);
  }
  corrupt_byte(4, 0x01);
  std::filesystem::resize_file(path, std::filesystem::file_size(path) - 8);
  try {
    (void)snapshot::load_snapshot(path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::snapshot_format);
  }
  std::remove(path.c_str());

  try {
    (void)snapshot::load_snapshot(tmp_path("cq_no_such_file.bin"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io_error);
  }
}

#include "cq/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <limits>

namespace cq::snapshot {

namespace {

constexpr char kMagic[4] = {'C', 'Q', 'W', 'F'};
constexpr std::uint8_t kVersion = 0x01;

void put_u64(std::ostream& os, std::uint64_t x) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  os.write(b, 8);
}

void put_f64(std::ostream& os, double x) {
  put_u64(os, std::bit_cast<std::uint64_t>(x));
}

std::uint64_t get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw Error(Errc::snapshot_format, "snapshot truncated");
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return x;
}

double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

}  // namespace

void save_snapshot(const std::string& path, const grid::ComplexField& f,
                   double A, double c) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  const grid::Grid& g = f.g;
  os.write(kMagic, 4);
  os.put(static_cast<char>(kVersion));
  os.put(static_cast<char>(g.d));
  put_u64(os, static_cast<std::uint64_t>(g.n1));
  for (int a = 0; a < g.d - 1; ++a)
    put_u64(os, static_cast<std::uint64_t>(g.nt));
  put_f64(os, g.N);
  put_f64(os, g.L);
  put_f64(os, A);
  put_f64(os, c);
  for (const auto& z : f.v) {
    put_f64(os, z.real());
    put_f64(os, z.imag());
  }
  if (!os) throw Error(Errc::io_error, "write failed for " + path);
}

Snapshot load_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(Errc::io_error, "cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || magic[0] != kMagic[0] || magic[1] != kMagic[1] ||
      magic[2] != kMagic[2] || magic[3] != kMagic[3])
    throw Error(Errc::snapshot_format, "bad snapshot magic");
  const int version = is.get();
  if (version != kVersion)
    throw Error(Errc::snapshot_format, "unsupported snapshot version");
  const int d = is.get();
  if (d != 2 && d != 3)
    throw Error(Errc::snapshot_format, "snapshot dimension must be 2 or 3");
  const std::uint64_t n1u = get_u64(is);
  std::uint64_t ntu = 0;
  for (int a = 0; a < d - 1; ++a) {
    const std::uint64_t t = get_u64(is);
    if (a > 0 && t != ntu)
      throw Error(Errc::snapshot_format,
                  "anisotropic transverse counts unsupported");
    ntu = t;
  }
  if (n1u > 1u << 24 || ntu > 1u << 24)
    throw Error(Errc::snapshot_format, "implausible snapshot extents");
  const double N = get_f64(is);
  const double L = get_f64(is);
  const double A = get_f64(is);
  const double c = get_f64(is);
  const grid::Grid g = grid::make_grid(d, N, L, static_cast<int>(n1u),
                                       static_cast<int>(ntu));
  // header parsed; payload size must match exactly
  const auto here = is.tellg();
  is.seekg(0, std::ios::end);
  const auto end = is.tellg();
  is.seekg(here);
  const std::uint64_t want = static_cast<std::uint64_t>(g.size()) * 16;
  if (static_cast<std::uint64_t>(end - here) != want)
    throw Error(Errc::snapshot_format, "snapshot payload size mismatch");
  Snapshot snap{grid::ComplexField(g), A, c};
  for (auto& z : snap.field.v) {
    const double re = get_f64(is);
    const double im = get_f64(is);
    z = {re, im};
  }
  return snap;
}

}  // namespace cq::snapshot

#pragma once
// Binary persistence for complex profiles.  Layout, all little-endian:
//   magic "CQWF", version byte 0x01, u8 d, u64 n1, u64 nt (d-1 times),
//   f64 N, f64 L, f64 A, f64 c, then n1 * nt^(d-1) values as (re, im)
//   f64 pairs, row-major with x1 slowest.
// Round-trips are bit-exact; readers reject wrong magic, version, or size.

#include <string>

#include "cq/grid.hpp"

namespace cq::snapshot {

struct Snapshot {
  grid::ComplexField field;
  double A;
  double c;
};

void save_snapshot(const std::string& path, const grid::ComplexField& f,
                   double A, double c);

[[nodiscard]] Snapshot load_snapshot(const std::string& path);

}  // namespace cq::snapshot

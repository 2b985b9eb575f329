#pragma once

#include <compare>
#include <vector>

#include "veld/rational.hpp"

namespace veld::geom {

enum class GridShift { Grid1, Grid2, Plain };

// Interval [2^k (n + s*(-1)^k/3), 2^k (n+1 + s*(-1)^k/3)) with s = +1, -1, 0
// for Grid1, Grid2, Plain. Both shifted grids are nested across scales: the
// scale-k interval of index n splits into the scale-(k-1) intervals of
// indices 2n + (-1)^k s and 2n + (-1)^k s + 1.
struct DyadicInterval {
  long scale = 0;
  long index = 0;
  GridShift shift = GridShift::Plain;

  Rat offset() const {
    if (shift == GridShift::Plain) return Rat(0);
    long sgn = (scale % 2 == 0) ? 1 : -1;
    if (shift == GridShift::Grid2) sgn = -sgn;
    return rat(sgn, 3);
  }
  Rat lo() const { return pow2(scale) * (Rat(index) + offset()); }
  Rat hi() const { return pow2(scale) * (Rat(index + 1) + offset()); }
  Rat length() const { return pow2(scale); }

  bool contains(const Rat& x) const { return lo() <= x && x < hi(); }
  bool contains(const DyadicInterval& other) const { return lo() <= other.lo() && other.hi() <= hi(); }
  bool disjoint(const DyadicInterval& other) const { return hi() <= other.lo() || other.hi() <= lo(); }

  // The two children one scale down (same shift).
  std::pair<DyadicInterval, DyadicInterval> children() const {
    long s = (shift == GridShift::Plain) ? 0 : (shift == GridShift::Grid1 ? 1 : -1);
    long sgn = (scale % 2 == 0) ? 1 : -1;
    long base = 2 * index + sgn * s;
    return {DyadicInterval{scale - 1, base, shift}, DyadicInterval{scale - 1, base + 1, shift}};
  }

  bool operator==(const DyadicInterval&) const = default;
};

// Member of Grid1 or Grid2 containing x at the given scale.
inline DyadicInterval grid_interval_at(const Rat& x, long scale, GridShift shift) {
  DyadicInterval probe{scale, 0, shift};
  // index = floor(x / 2^k - offset)
  Rat t = x / pow2(scale) - probe.offset();
  mpz_class idx;
  mpz_fdiv_q(idx.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  probe.index = static_cast<long>(idx.get_si());
  return probe;
}

// Dyadic (Plain-grid) intervals are what the covering proofs recurse on.
inline std::vector<DyadicInterval> plain_children(const DyadicInterval& i) {
  auto [a, b] = i.children();
  return {a, b};
}

}  // namespace veld::geom

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "veld/geom/parallelogram.hpp"
#include "veld/geom/slope_field.hpp"
#include "veld/rational.hpp"

namespace veld::geom {

struct Affine {
  Rat a, b;  // a + b*x
  Rat at(const Rat& x) const { return a + b * x; }
  bool operator==(const Affine&) const = default;
};

// Vertical band y in [lo(x), hi(x)).
struct Band {
  Affine lo, hi;
  bool operator==(const Band&) const = default;
};

// x-slab [x0, x1) carrying disjoint bands sorted from bottom to top.
struct Piece {
  Rat x0, x1;
  std::vector<Band> bands;
};

// Finite union of column-decomposable regions with affine band edges.
// Closed on left/bottom edges, open on right/top, matching the
// parallelogram convention. Exact area; closed under boolean ops.
class PlaneSet {
 public:
  PlaneSet() = default;
  explicit PlaneSet(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

  static PlaneSet box(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1);
  static PlaneSet from_parallelogram(const Parallelogram& r);
  static PlaneSet union_of(const std::vector<Parallelogram>& rs);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty_area() const { return area() == 0; }

  Rat area() const;

  // y-intervals of the set on the vertical line at x.
  std::vector<std::pair<Rat, Rat>> column_at(const Rat& x) const;

  bool contains_point(const Rat& x, const Rat& y) const;

  // Compact canonical form: drops empty bands/pieces, merges x-adjacent
  // pieces with identical band lists.
  void normalize();

  // Appends a piece, merging with the previous one when possible.
  void push_piece(Piece p);

 private:
  std::vector<Piece> pieces_;  // x-disjoint, sorted by x0
};

PlaneSet intersect(const PlaneSet& a, const PlaneSet& b);
PlaneSet unite(const PlaneSet& a, const PlaneSet& b);
PlaneSet subtract(const PlaneSet& a, const PlaneSet& b);

Rat intersection_area(const Parallelogram& r, const Parallelogram& rp);
Rat union_area(const std::vector<Parallelogram>& rs);

// E(R) = {(x,y) in R : u(x) in U(R)}: full vertical slices of R over the
// columns whose slope lies in U(R).
PlaneSet e_set(const Parallelogram& r, const SlopeField& u);

// Measure of {x in [xlo,xhi) : u(x) in U}.
Rat slope_hit_length(const SlopeField& u, const Rat& xlo, const Rat& xhi, const SlopeInterval& U);

}  // namespace veld::geom

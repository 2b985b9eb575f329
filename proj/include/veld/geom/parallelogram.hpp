#pragma once

#include <array>
#include <compare>
#include <vector>

#include "veld/error.hpp"
#include "veld/rational.hpp"

namespace veld::geom {

// Closed interval of slopes.
struct SlopeInterval {
  Rat lo, hi;
  Rat length() const { return hi - lo; }
  Rat center() const { return (lo + hi) / 2; }
  bool contains(const Rat& s) const { return lo <= s && s <= hi; }
  bool intersects(const SlopeInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool contains(const SlopeInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  // Interval with the same center and C times the length.
  SlopeInterval dilate(const Rat& c) const {
    Rat mid = center(), half = c * length() / 2;
    return {mid - half, mid + half};
  }
};

// Parallelogram with two vertical edges: shadow [xlo, xhi) on the x axis,
// central line through (xlo, cl) and (xhi, cr), vertical edges of common
// length h. Closed on left/bottom, open on right/top.
class Parallelogram {
 public:
  Parallelogram() = default;
  Parallelogram(Rat xlo, Rat xhi, Rat cl, Rat cr, Rat h)
      : xlo_(std::move(xlo)), xhi_(std::move(xhi)), cl_(std::move(cl)), cr_(std::move(cr)), h_(std::move(h)) {
    if (xhi_ < xlo_) raise(Errc::BadInput, "parallelogram shadow reversed");
    if (h_ < 0) raise(Errc::BadInput, "parallelogram height negative");
  }

  const Rat& shadow_lo() const { return xlo_; }
  const Rat& shadow_hi() const { return xhi_; }
  const Rat& center_left() const { return cl_; }
  const Rat& center_right() const { return cr_; }
  const Rat& height() const { return h_; }

  Rat shadow_length() const { return xhi_ - xlo_; }
  Rat area() const { return h_ * shadow_length(); }

  Rat central_slope() const {
    require_shadow();
    return (cr_ - cl_) / shadow_length();
  }
  Rat center_at(const Rat& x) const {
    require_shadow();
    return cl_ + (cr_ - cl_) * (x - xlo_) / shadow_length();
  }
  // y-range of the vertical slice at x (caller guarantees x in shadow).
  std::pair<Rat, Rat> slice(const Rat& x) const {
    Rat c = center_at(x);
    return {c - h_ / 2, c + h_ / 2};
  }

  std::array<std::pair<Rat, Rat>, 4> vertices() const {
    return {{{xlo_, cl_ - h_ / 2}, {xlo_, cl_ + h_ / 2}, {xhi_, cr_ - h_ / 2}, {xhi_, cr_ + h_ / 2}}};
  }

  bool contains_point(const Rat& x, const Rat& y) const {
    if (!(xlo_ <= x && x < xhi_)) return false;
    auto [lo, hi] = slice(x);
    return lo <= y && y < hi;
  }
  // Closed containment of other in *this (the covering lemmas compare closures).
  bool contains_closed(const Parallelogram& o) const {
    if (!(xlo_ <= o.xlo_ && o.xhi_ <= xhi_)) return false;
    for (const Rat& x : {o.xlo_, o.xhi_}) {
      auto [lo, hi] = slice(x);
      auto [olo, ohi] = o.slice(x);
      if (olo < lo || hi < ohi) return false;
    }
    return true;
  }
  // Closed intersection test; the half-open convention only trims boundaries.
  bool meets_closed(const Parallelogram& o) const {
    Rat a = rat_max(xlo_, o.xlo_), b = rat_min(xhi_, o.xhi_);
    if (b < a) return false;
    // Vertical gap between central lines is affine in x; overlap iff it dips
    // below (h + oh)/2 somewhere on [a, b]. An affine function attains its
    // min over an interval at an endpoint, but |affine| can dip at a root.
    Rat bound = (h_ + o.h_) / 2;
    Rat da = center_at(a) - o.center_at(a);
    Rat db = center_at(b) - o.center_at(b);
    if (rat_abs(da) <= bound || rat_abs(db) <= bound) return true;
    return (da > 0) != (db > 0);  // sign change: gap passes through zero
  }

  bool operator==(const Parallelogram&) const = default;

 private:
  void require_shadow() const {
    if (xlo_ == xhi_) raise(Errc::DegenerateShadow, "parallelogram has empty shadow");
  }
  Rat xlo_, xhi_, cl_, cr_, h_;
};

// Slopes of lines meeting both vertical edges: length 2H/|I| centered at the
// central slope; the extremes are the diagonals' slopes.
inline SlopeInterval slope_interval(const Parallelogram& r) {
  if (r.shadow_lo() == r.shadow_hi()) raise(Errc::DegenerateShadow, "slope_interval: |I(R)| = 0");
  if (r.height() == 0) raise(Errc::DegenerateHeight, "slope_interval: H(R) = 0");
  Rat half = r.height() / r.shadow_length();
  Rat mid = r.central_slope();
  return {mid - half, mid + half};
}

// Same central line, height scaled by C.
inline Parallelogram scale_height(const Parallelogram& r, const Rat& c) {
  if (c <= 0) raise(Errc::BadInput, "scale_height: C must be positive");
  return {r.shadow_lo(), r.shadow_hi(), r.center_left(), r.center_right(), c * r.height()};
}

// Same center and slope, height and shadow both scaled by C.
inline Parallelogram scale_iso(const Parallelogram& r, const Rat& c) {
  if (c <= 0) raise(Errc::BadInput, "scale_iso: C must be positive");
  Rat xmid = (r.shadow_lo() + r.shadow_hi()) / 2;
  Rat ymid = (r.center_left() + r.center_right()) / 2;
  Rat halfspan = c * r.shadow_length() / 2;
  Rat rise = r.shadow_length() == 0 ? Rat(0) : r.central_slope() * halfspan;
  return {xmid - halfspan, xmid + halfspan, ymid - rise, ymid + rise, c * r.height()};
}

// R restricted to a sub-shadow I.
inline Parallelogram restrict(const Parallelogram& r, const Rat& ilo, const Rat& ihi) {
  if (!(r.shadow_lo() <= ilo && ihi <= r.shadow_hi()) || ihi < ilo)
    raise(Errc::ShadowMismatch, "restrict: I not contained in I(R)");
  return {ilo, ihi, r.center_at(ilo), r.center_at(ihi), r.height()};
}

struct SevenLemmaResult {
  bool contained = false;         // R subseteq 7R'
  bool nested_dilates = false;    // 7R subseteq 7R' (only claimed when 7H(R) <= H(R'))
  bool moreover_applies = false;  // hypothesis 7H(R) <= H(R') held
};

// Hypotheses: equal shadows, U(R) and U(R') meet, closures of R and R' meet,
// H(R) <= H(R'). Conclusion under test: R inside the 7-fold height dilate of
// R'; when additionally 7H(R) <= H(R'), the 7-dilates nest.
inline SevenLemmaResult seven_lemma_check(const Parallelogram& r, const Parallelogram& rp,
                                          const Rat& dilation = Rat(7)) {
  if (r.shadow_lo() != rp.shadow_lo() || r.shadow_hi() != rp.shadow_hi())
    raise(Errc::HypothesisViolated, "seven_lemma_check: shadows differ");
  if (r.height() > rp.height()) raise(Errc::HypothesisViolated, "seven_lemma_check: H(R) > H(R')");
  if (!slope_interval(r).intersects(slope_interval(rp)))
    raise(Errc::HypothesisViolated, "seven_lemma_check: slope intervals disjoint");
  if (!r.meets_closed(rp)) raise(Errc::HypothesisViolated, "seven_lemma_check: parallelograms disjoint");
  SevenLemmaResult out;
  out.contained = scale_height(rp, dilation).contains_closed(r);
  out.moreover_applies = dilation * r.height() <= rp.height();
  if (out.moreover_applies)
    out.nested_dilates = scale_height(rp, dilation).contains_closed(scale_height(r, dilation));
  return out;
}

}  // namespace veld::geom

#pragma once

#include <algorithm>
#include <vector>

#include "veld/error.hpp"
#include "veld/rational.hpp"

namespace veld::geom {

// Piecewise constant slope function u(x): value vals[i] on [xs[i], xs[i+1]),
// vals.back() from xs.back() on, vals.front() before xs.front().
class SlopeField {
 public:
  SlopeField() : xs_{Rat(0)}, vals_{Rat(0)} {}
  SlopeField(std::vector<Rat> breakpoints, std::vector<Rat> values)
      : xs_(std::move(breakpoints)), vals_(std::move(values)) {
    if (xs_.empty() || xs_.size() != vals_.size())
      raise(Errc::BadInput, "SlopeField: need equally many breakpoints and values");
    if (!std::is_sorted(xs_.begin(), xs_.end())) raise(Errc::BadInput, "SlopeField: breakpoints not sorted");
  }

  static SlopeField constant(const Rat& v) { return SlopeField({Rat(0)}, {v}); }

  const std::vector<Rat>& breakpoints() const { return xs_; }
  const std::vector<Rat>& values() const { return vals_; }

  const Rat& at(const Rat& x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    size_t i = it == xs_.begin() ? 0 : static_cast<size_t>(it - xs_.begin() - 1);
    return vals_[i];
  }

  Rat sup_norm() const {
    Rat m(0);
    for (const auto& v : vals_) m = rat_max(m, rat_abs(v));
    return m;
  }

  // Constant pieces of u covering [xlo, xhi), clipped.
  struct Piece {
    Rat xlo, xhi, value;
  };
  std::vector<Piece> pieces_on(const Rat& xlo, const Rat& xhi) const {
    std::vector<Piece> out;
    if (xhi <= xlo) return out;
    Rat cur = xlo;
    while (cur < xhi) {
      auto it = std::upper_bound(xs_.begin(), xs_.end(), cur);
      size_t i = it == xs_.begin() ? 0 : static_cast<size_t>(it - xs_.begin() - 1);
      Rat end = (i + 1 < xs_.size()) ? xs_[i + 1] : xhi;
      if (it == xs_.begin()) end = xs_.front();  // before the first breakpoint
      end = rat_min(end, xhi);
      if (end <= cur) end = xhi;  // guard: degenerate clip
      if (!out.empty() && out.back().value == vals_[i] && out.back().xhi == cur) {
        out.back().xhi = end;
      } else {
        out.push_back({cur, end, vals_[i]});
      }
      cur = end;
    }
    return out;
  }

 private:
  std::vector<Rat> xs_;
  std::vector<Rat> vals_;
};

}  // namespace veld::geom

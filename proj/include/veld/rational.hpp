#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veld/error.hpp"

namespace veld {

// All geometry runs on exact rationals. mpq_class keeps values canonical
// (normalized sign, reduced fraction) after every arithmetic op.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// 2^k for possibly negative k.
inline Rat pow2(long k) {
  Rat q;
  if (k >= 0) {
    mpz_ui_pow_ui(q.get_num_mpz_t(), 2u, static_cast<unsigned long>(k));
  } else {
    mpz_ui_pow_ui(q.get_den_mpz_t(), 2u, static_cast<unsigned long>(-k));
  }
  q.canonicalize();
  return q;
}

// x^n for integer n (x != 0 when n < 0).
inline Rat rat_pow(const Rat& x, long n) {
  if (n == 0) return Rat(1);
  Rat base = n > 0 ? x : Rat(1 / x);
  unsigned long e = static_cast<unsigned long>(n > 0 ? n : -n);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& x) { return x.get_d(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

// Canonical "p/q" (or "p" when q == 1). Round-trips exactly.
inline std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

inline Rat rat_parse_or_throw(const std::string& s) {
  auto q = rat_parse(s);
  if (!q) raise(Errc::BadInput, "not a rational: '" + s + "'");
  return *q;
}

// floor(log2(x)) for x > 0.
inline long floor_log2(const Rat& x) {
  if (x <= 0) raise(Errc::BadInput, "floor_log2 needs a positive argument");
  long lo = -4096, hi = 4096;  // generous for anything this artifact produces
  while (lo < hi) {
    long mid = lo + (hi - lo + 1) / 2;
    if (pow2(mid) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// A product  coeff * prod_i base_i^exp_i  with rational exponents, compared
// exactly by clearing exponent denominators. Positive bases only; this is how
// thresholds like C (|G|/|H|)^{1-alpha} enter exact selection rules.
class PowProduct {
 public:
  PowProduct() : coeff_(1) {}
  explicit PowProduct(const Rat& coeff) : coeff_(coeff) {
    if (coeff <= 0) raise(Errc::BadInput, "PowProduct coefficient must be positive");
  }

  PowProduct& mul_pow(const Rat& base, const Rat& exp) {
    if (base <= 0) raise(Errc::BadInput, "PowProduct base must be positive");
    if (base != 1 && exp != 0) factors_.push_back({base, exp});
    return *this;
  }
  PowProduct& mul(const Rat& c) {
    if (c <= 0) raise(Errc::BadInput, "PowProduct factor must be positive");
    coeff_ *= c;
    return *this;
  }

  double value() const;

  // this <cmp> other, exactly.
  int compare(const PowProduct& other) const;
  bool operator<=(const PowProduct& o) const { return compare(o) <= 0; }
  bool operator<(const PowProduct& o) const { return compare(o) < 0; }
  bool operator>=(const PowProduct& o) const { return compare(o) >= 0; }

  static PowProduct from_rat(const Rat& x) { return PowProduct(x); }

 private:
  Rat coeff_;
  std::vector<std::pair<Rat, Rat>> factors_;  // (base, exponent)
};

}  // namespace veld

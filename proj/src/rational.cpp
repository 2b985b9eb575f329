#include "veld/rational.hpp"

#include <cmath>

namespace veld {

double PowProduct::value() const {
  double v = to_double(coeff_);
  for (const auto& [base, exp] : factors_) v *= std::pow(to_double(base), to_double(exp));
  return v;
}

int PowProduct::compare(const PowProduct& other) const {
  // Collect a common denominator D over all exponents, then compare
  //   (this/other)^D = prod base_i^(D*exp_i) * (coeff ratio)^D   against 1.
  mpz_class den(1);
  for (const auto& [b, e] : factors_) {
    (void)b;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
  }
  for (const auto& [b, e] : other.factors_) {
    (void)b;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
  }
  if (!den.fits_slong_p()) raise(Errc::BadInput, "PowProduct exponent denominator overflow");
  long d = den.get_si();

  auto expand = [d](const PowProduct& p) {
    Rat v = rat_pow(p.coeff_, d);
    for (const auto& [base, exp] : p.factors_) {
      Rat n = exp * d;  // integral by construction
      v *= rat_pow(base, static_cast<long>(mpz_class(n.get_num()).get_si()));
    }
    return v;
  };
  Rat lhs = expand(*this), rhs = expand(other);
  return mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
}

}  // namespace veld

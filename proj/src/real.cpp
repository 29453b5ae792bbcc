#include "gbessel/real.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace gbessel {

namespace {
thread_local mpfr_prec_t g_prec_bits = 192;
}

mpfr_prec_t current_prec_bits() { return g_prec_bits; }
void set_current_prec_bits(mpfr_prec_t bits) { g_prec_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits; }

mpfr_prec_t digits_to_bits(long decimal_digits) {
  // log2(10) = 3.3219...; a few spare bits for rounding slack
  return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873626 + 16);
}

long bits_to_digits(mpfr_prec_t bits) {
  return static_cast<long>(bits / 3.3219280948873626);
}

PrecGuard::PrecGuard(long decimal_digits) : old_bits_(g_prec_bits) {
  set_current_prec_bits(digits_to_bits(decimal_digits));
}
PrecGuard::~PrecGuard() { g_prec_bits = old_bits_; }

Real::Real(const std::string& s) {
  mpfr_init2(v_, current_prec_bits());
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("invalid numeric literal: " + s);
  }
}

Real real_pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
Real real_euler() {
  Real r;
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
Real real_log2const() {
  Real r;
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

std::string to_string(const Real& x, long sig_digits) {
  if (x.is_nan()) return "nan";
  if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
  if (sig_digits < 2) sig_digits = 2;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), x.raw(), MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  bool neg = !digits.empty() && digits[0] == '-';
  std::string mant = neg ? digits.substr(1) : digits;
  if (mant.empty()) mant = "0";
  // strip trailing zeros but keep at least one digit after the point
  size_t last = mant.find_last_not_of('0');
  if (last == std::string::npos) {
    mant = "0";
    e = 1;
  } else if (last + 1 < mant.size()) {
    mant.erase(last + 1);
  }
  std::string out = neg ? "-" : "";
  out += mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long dec_exp = static_cast<long>(e) - 1;
  if (dec_exp != 0) out += "e" + std::to_string(dec_exp);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << to_string(x, bits_to_digits(x.precision()));
}

}  // namespace gbessel

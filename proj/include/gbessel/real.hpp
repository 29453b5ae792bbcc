#pragma once

#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gbessel {

// Working precision is a thread-local setting: every freshly constructed
// Real and every arithmetic result is rounded to the current precision.
// Copies keep the precision of their source, so values can safely cross
// between scopes running at different precisions.
mpfr_prec_t current_prec_bits();
void set_current_prec_bits(mpfr_prec_t bits);
mpfr_prec_t digits_to_bits(long decimal_digits);
long bits_to_digits(mpfr_prec_t bits);

// RAII guard that switches the thread's working precision.
class PrecGuard {
 public:
  explicit PrecGuard(long decimal_digits);
  ~PrecGuard();
  PrecGuard(const PrecGuard&) = delete;
  PrecGuard& operator=(const PrecGuard&) = delete;

 private:
  mpfr_prec_t old_bits_;
};

class Real {
 public:
  Real() { mpfr_init2(v_, current_prec_bits()); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  Real(int x) { mpfr_init2(v_, current_prec_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long x) { mpfr_init2(v_, current_prec_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(unsigned long x) { mpfr_init2(v_, current_prec_bits()); mpfr_set_ui(v_, x, MPFR_RNDN); }
  Real(double x) { mpfr_init2(v_, current_prec_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
  // Parses a decimal literal at current working precision.
  explicit Real(const std::string& s);
  ~Real() { mpfr_clear(v_); }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

#define GB_DECL_BINOP(op, fn)                                              \
  inline Real operator op(const Real& a, const Real& b) {                  \
    Real r;                                                                \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                              \
    return r;                                                              \
  }                                                                        \
  inline Real operator op(const Real& a, long b) {                         \
    Real r;                                                                \
    fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                               \
    return r;                                                              \
  }                                                                        \
  inline Real operator op(const Real& a, int b) { return a op (long)b; }   \
  inline Real operator op(const Real& a, double b) { return a op Real(b); }

GB_DECL_BINOP(+, mpfr_add)
GB_DECL_BINOP(-, mpfr_sub)
GB_DECL_BINOP(*, mpfr_mul)
GB_DECL_BINOP(/, mpfr_div)
#undef GB_DECL_BINOP

inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator+(int a, const Real& b) { return b + (long)a; }
inline Real operator+(double a, const Real& b) { return Real(a) + b; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator*(int a, const Real& b) { return b * (long)a; }
inline Real operator*(double a, const Real& b) { return Real(a) * b; }
inline Real operator-(long a, const Real& b) { Real r; mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
inline Real operator-(int a, const Real& b) { return (long)a - b; }
inline Real operator-(double a, const Real& b) { return Real(a) - b; }
inline Real operator/(long a, const Real& b) { Real r; mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
inline Real operator/(int a, const Real& b) { return (long)a / b; }
inline Real operator/(double a, const Real& b) { return Real(a) / b; }

inline int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }
inline bool operator<(const Real& a, int b) { return a < (long)b; }
inline bool operator>(const Real& a, int b) { return a > (long)b; }
inline bool operator<=(const Real& a, int b) { return a <= (long)b; }
inline bool operator>=(const Real& a, int b) { return a >= (long)b; }
inline bool operator==(const Real& a, int b) { return a == (long)b; }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }

#define GB_DECL_FN1(name, fn)                       \
  inline Real name(const Real& a) {                 \
    Real r;                                         \
    fn(r.raw(), a.raw(), MPFR_RNDN);                \
    return r;                                       \
  }
GB_DECL_FN1(abs, mpfr_abs)
GB_DECL_FN1(sqrt, mpfr_sqrt)
GB_DECL_FN1(exp, mpfr_exp)
GB_DECL_FN1(log, mpfr_log)
GB_DECL_FN1(log2, mpfr_log2)
GB_DECL_FN1(log10, mpfr_log10)
GB_DECL_FN1(sin, mpfr_sin)
GB_DECL_FN1(cos, mpfr_cos)
GB_DECL_FN1(tan, mpfr_tan)
GB_DECL_FN1(sinh, mpfr_sinh)
GB_DECL_FN1(cosh, mpfr_cosh)
GB_DECL_FN1(tanh, mpfr_tanh)
GB_DECL_FN1(atan, mpfr_atan)
GB_DECL_FN1(floor, mpfr_floor)
GB_DECL_FN1(ceil, mpfr_ceil)
GB_DECL_FN1(round_nearest, mpfr_round)
#undef GB_DECL_FN1

inline Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& b, const Real& e) {
  Real r;
  mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& b, long e) {
  Real r;
  mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
  return r;
}
inline Real pow2(long e) {  // 2^e exactly
  Real r;
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}
inline Real pow10(long e) { return pow(Real(10), e); }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

// mpfr-backed classics for real arguments
inline Real r_gamma(const Real& x) { Real r; mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real r_lngamma(const Real& x) { Real r; mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real r_digamma(const Real& x) { Real r; mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real r_zeta(const Real& x) { Real r; mpfr_zeta(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real r_expint_ei(const Real& x) { Real r; mpfr_eint(r.raw(), x.raw(), MPFR_RNDN); return r; }

Real real_pi();
Real real_euler();   // Euler-Mascheroni constant
Real real_log2const();

// Decimal string with the given number of significant digits.
std::string to_string(const Real& x, long sig_digits);
std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace gbessel

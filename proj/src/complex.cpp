#include "gbessel/complex.hpp"

#include <ostream>

namespace gbessel {

Cplx operator/(const Cplx& a, const Cplx& b) {
  // Smith's algorithm, avoids overflow of |b|^2
  if (abs(b.re) >= abs(b.im)) {
    if (b.re.is_zero() && b.im.is_zero()) {
      return Cplx(a.re / b.re, a.im / b.re);  // inf/nan semantics
    }
    Real r = b.im / b.re;
    Real d = b.re + b.im * r;
    return Cplx((a.re + a.im * r) / d, (a.im - a.re * r) / d);
  }
  Real r = b.re / b.im;
  Real d = b.re * r + b.im;
  return Cplx((a.re * r + a.im) / d, (a.im * r - a.re) / d);
}

Cplx exp(const Cplx& z) {
  Real e = exp(z.re);
  if (z.im.is_zero()) return Cplx(e);
  Real s, c;
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return Cplx(e * c, e * s);
}

Cplx log(const Cplx& z) {
  if (z.im.is_zero() && z.re > 0) return Cplx(log(z.re));
  return Cplx(log(abs(z)), arg(z));
}

Cplx sqrt(const Cplx& z) {
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return Cplx(sqrt(z.re));
    return Cplx(Real(0L), sqrt(-z.re));
  }
  // sqrt(|z|) * (cos(arg/2) + i sin(arg/2))
  Real m = sqrt(abs(z));
  Real a = arg(z) / 2;
  Real s, c;
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
  return Cplx(m * c, m * s);
}

Cplx sin(const Cplx& z) {
  if (z.im.is_zero()) return Cplx(sin(z.re));
  return Cplx(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}
Cplx cos(const Cplx& z) {
  if (z.im.is_zero()) return Cplx(cos(z.re));
  return Cplx(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}
Cplx sinh(const Cplx& z) {
  if (z.im.is_zero()) return Cplx(sinh(z.re));
  return Cplx(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}
Cplx cosh(const Cplx& z) {
  if (z.im.is_zero()) return Cplx(cosh(z.re));
  return Cplx(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im));
}

Cplx pow(const Cplx& b, const Cplx& e) {
  if (b.im.is_zero() && b.re > 0) {
    if (e.im.is_zero()) return Cplx(pow(b.re, e.re));
    Cplx le(log(b.re), Real(0L));
    return exp(e * le);
  }
  if (b.re.is_zero() && b.im.is_zero()) {
    if (e.re.is_zero() && e.im.is_zero()) return Cplx(1L);
    return Cplx(0L);
  }
  return exp(e * log(b));
}

Cplx pow(const Cplx& b, long e) {
  if (e == 0) return Cplx(1L);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Cplx acc(1L), base = b;
  while (n) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (inv) return Cplx(1L) / acc;
  return acc;
}

bool near_integer(const Cplx& z, const Real& tol, long* which) {
  if (abs(z.im) > tol) return false;
  Real r = round_nearest(z.re);
  if (abs(z.re - r) > tol) return false;
  if (which) *which = r.to_long();
  return true;
}

bool near_nonpositive_integer(const Cplx& z, const Real& tol, long* which) {
  long n;
  if (!near_integer(z, tol, &n)) return false;
  if (n > 0) return false;
  if (which) *which = n;
  return true;
}

std::string to_string(const Cplx& z, long sig_digits) {
  if (z.im.is_zero()) return to_string(z.re, sig_digits);
  std::string s = to_string(z.re, sig_digits);
  if (z.im.sign() >= 0)
    s += "+" + to_string(z.im, sig_digits) + "i";
  else
    s += "-" + to_string(-z.im, sig_digits) + "i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Cplx& z) {
  return os << to_string(z, bits_to_digits(z.re.precision()));
}

}  // namespace gbessel

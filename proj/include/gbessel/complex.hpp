#pragma once

#include "gbessel/real.hpp"

#include <iosfwd>
#include <string>

namespace gbessel {

// Complex number over Real. Principal branches throughout: log and powers
// cut along the negative real axis, arg in (-pi, pi].
struct Cplx {
  Real re, im;

  Cplx() = default;
  Cplx(const Real& r) : re(r), im(0L) {}
  Cplx(Real&& r) : re(std::move(r)), im(0L) {}
  Cplx(const Real& r, const Real& i) : re(r), im(i) {}
  Cplx(int r) : re(r), im(0L) {}
  Cplx(long r) : re(r), im(0L) {}
  Cplx(double r) : re(r), im(0L) {}

  bool is_real() const { return im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o);
  Cplx operator-() const { return Cplx(-re, -im); }
};

inline Cplx operator+(const Cplx& a, const Cplx& b) { return Cplx(a.re + b.re, a.im + b.im); }
inline Cplx operator-(const Cplx& a, const Cplx& b) { return Cplx(a.re - b.re, a.im - b.im); }
inline Cplx operator*(const Cplx& a, const Cplx& b) {
  return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline Cplx& Cplx::operator*=(const Cplx& o) { *this = *this * o; return *this; }
inline Cplx operator*(const Cplx& a, const Real& s) { return Cplx(a.re * s, a.im * s); }
inline Cplx operator*(const Real& s, const Cplx& a) { return a * s; }
inline Cplx operator*(const Cplx& a, long s) { return Cplx(a.re * s, a.im * s); }
inline Cplx operator*(long s, const Cplx& a) { return a * s; }
inline Cplx operator/(const Cplx& a, const Real& s) { return Cplx(a.re / s, a.im / s); }
inline Cplx operator/(const Cplx& a, long s) { return Cplx(a.re / s, a.im / s); }

Cplx operator/(const Cplx& a, const Cplx& b);
inline Cplx operator/(const Real& a, const Cplx& b) { return Cplx(a) / b; }
inline Cplx operator/(long a, const Cplx& b) { return Cplx(Real(a)) / b; }

inline Cplx operator+(const Cplx& a, const Real& b) { return Cplx(a.re + b, a.im); }
inline Cplx operator+(const Real& a, const Cplx& b) { return b + a; }
inline Cplx operator+(const Cplx& a, long b) { return Cplx(a.re + b, a.im); }
inline Cplx operator+(long a, const Cplx& b) { return b + a; }
inline Cplx operator-(const Cplx& a, const Real& b) { return Cplx(a.re - b, a.im); }
inline Cplx operator-(const Real& a, const Cplx& b) { return Cplx(a - b.re, -b.im); }
inline Cplx operator-(const Cplx& a, long b) { return Cplx(a.re - b, a.im); }
inline Cplx operator-(long a, const Cplx& b) { return Cplx(a - b.re, -b.im); }

inline bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

inline Cplx conj(const Cplx& z) { return Cplx(z.re, -z.im); }
inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }
inline Real norm(const Cplx& z) { return z.re * z.re + z.im * z.im; }

Cplx exp(const Cplx& z);
Cplx log(const Cplx& z);   // principal
Cplx sqrt(const Cplx& z);  // principal
Cplx sin(const Cplx& z);
Cplx cos(const Cplx& z);
Cplx sinh(const Cplx& z);
Cplx cosh(const Cplx& z);
Cplx pow(const Cplx& b, const Cplx& e);  // exp(e log b), principal
Cplx pow(const Cplx& b, long e);         // by squaring (b != 0 for e < 0)

// true if z is within tol of a nonpositive integer; *which gets the integer
bool near_nonpositive_integer(const Cplx& z, const Real& tol, long* which = nullptr);
bool near_integer(const Cplx& z, const Real& tol, long* which = nullptr);

std::string to_string(const Cplx& z, long sig_digits);
std::ostream& operator<<(std::ostream& os, const Cplx& z);

}  // namespace gbessel

#pragma once

#include "gbessel/precision.hpp"

#include <utility>
#include <vector>

namespace gbessel {

// ---- gamma family -----------------------------------------------------

// Euler gamma for complex z; pole at nonpositive integers.
ValueWithError gamma(const Cplx& z, const PrecisionContext& ctx);
// psi(z) = Gamma'(z)/Gamma(z)
ValueWithError digamma(const Cplx& z, const PrecisionContext& ctx);

// Internal-precision kernels working at the current thread precision.
// cgamma_raw/cdigamma_raw assume z is not at a pole.
Cplx cgamma_raw(const Cplx& z);
Cplx clngamma_raw(const Cplx& z);  // principal, Re z > 0 only
Cplx cdigamma_raw(const Cplx& z);
// 1/Gamma(z); returns exact 0 when z is (numerically) a nonpositive integer.
Cplx crgamma_safe(const Cplx& z);

// ---- zeta family ------------------------------------------------------

// Riemann zeta; globally convergent alternating series for Re s >= 1/2 and
// the asymmetric functional equation zeta(1-s) = 2^{1-s} pi^{-s} Gamma(s)
// zeta(s) cos(pi s/2) for the left half-plane. Pole at s=1.
ValueWithError zeta(const Cplx& s, const PrecisionContext& ctx);
Cplx czeta_raw(const Cplx& s);

// zeta'(s). Closed forms at s=0 and negative even integers
// (zeta'(-2m) = (-1)^m (2m)!/(2 (2pi)^{2m}) zeta(2m+1)); elsewhere a central
// difference at doubled working precision, flagged heuristic.
ValueWithError zeta_prime(const Cplx& s, const PrecisionContext& ctx);

// Bernoulli number B_n as an exact rational rendered at context precision.
// n must be even (or 0); odd n rejected.
ValueWithError bernoulli(long n, const PrecisionContext& ctx);
Real bernoulli_real(unsigned long n);  // at current thread precision

// ---- generalized hypergeometric ---------------------------------------

struct HypergeometricParams {
  std::vector<Cplx> upper;
  std::vector<Cplx> lower;
  Cplx argument;
};

// pFq series. Rigorous ratio-test tail bound when p <= q; heuristic buffer
// when p == q+1 (|z|<1). Errors: "divergent" when p > q+1 and z != 0,
// "lower-parameter pole" when some b_j is a nonpositive integer.
ValueWithError pfq(const HypergeometricParams& p, const PrecisionContext& ctx);

// Series kernel at current thread precision with cancellation accounting:
// sums until |term| < eps_rel * |sum| holds for three consecutive terms,
// re-running at raised precision when intermediate terms exceeded the final
// sum by enough to eat the target accuracy.
struct PfqRaw {
  Cplx value;
  long terms = 0;
  long lost_digits = 0;  // log10(max|term| / |value|)
};
PfqRaw pfq_raw(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower, const Cplx& z,
               long target_digits, long max_terms = 2000000);

// ---- confluent / exponential integrals ---------------------------------

// Tricomi U(a;c;z). Integer c handled by averaging c +- eps (heuristic).
// For real z < 0 the principal-value (real) interpretation is returned.
ValueWithError tricomi_u(const Cplx& a, const Cplx& c, const Cplx& z, const PrecisionContext& ctx);

// Exponential integral Ei(x) for real x != 0.
ValueWithError ei(const Real& x, const PrecisionContext& ctx);

// (Shi(z), Chi(z)); Chi has the principal logarithm, cut along (-inf, 0].
std::pair<ValueWithError, ValueWithError> shi_chi(const Cplx& z, const PrecisionContext& ctx);

// Cancellation-safe evaluation of sinh(x)Shi(x) - cosh(x)Chi(x), Re x > 0.
// The two products separately grow like e^{2x}; this routine never forms
// them. Also the value of the integral of t cos t/(t^2+x^2) over (0,inf).
Cplx shi_chi_combo_raw(const Cplx& x, long target_digits);
ValueWithError shi_chi_combo(const Cplx& x, const PrecisionContext& ctx);

// e^{x} E_1(x) by continued fraction (Re x > 0, |x| not small).
Cplx expx_e1_raw(const Cplx& x, long target_digits);
// e^{-x} Ei(x) by the defining series (entirely positive terms for x > 0).
Cplx expmx_ei_raw(const Cplx& x, long target_digits);

// Sum_{j>=0} psi(2j+2m+1) z^{2j} / ((m+1)_j (m+1/2)_j), by the closed form
// through Shi/Chi and a finite psi sum; Re z > 0.
ValueWithError psi_series_closed(long m, const Cplx& z, const PrecisionContext& ctx);

// psi(ix) + psi(-ix) = 2 Re psi(ix) for real x > 0.
Real psi_pair_raw(const Real& x);

}  // namespace gbessel

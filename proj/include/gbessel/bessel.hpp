#pragma once

#include "gbessel/classic.hpp"

#include <utility>

namespace gbessel {

// Parameter bundle for the two-variable kernels.
struct KernelParams {
  Cplx mu, nu, w;
  Cplx arg;  // x or z depending on the operation
};

// ---- classical Bessel functions ----------------------------------------

// kind 'J' or 'I': power series of the first kind (principal branch of z^nu).
ValueWithError bessel_first(char kind, const Cplx& nu, const Cplx& z, const PrecisionContext& ctx);
// kind 'Y' or 'K': second kind; integer order by averaged nu +- eps.
ValueWithError bessel_second(char kind, const Cplx& nu, const Cplx& z, const PrecisionContext& ctx);

Cplx cbessel_j_raw(const Cplx& nu, const Cplx& z, long target);
Cplx cbessel_i_raw(const Cplx& nu, const Cplx& z, long target);
Cplx cbessel_y_raw(const Cplx& nu, const Cplx& z, long target);
// Hybrid: defining series at moderate |z| (with cancellation headroom),
// large-|z| asymptotic expansion otherwise.
Cplx cbessel_k_raw(const Cplx& nu, const Cplx& z, long target);

// M_nu = (2/pi) K_nu - Y_nu and L_nu = -(2/pi) K_nu - Y_nu.
std::pair<ValueWithError, ValueWithError> ml_kernels(const Cplx& nu, const Real& x,
                                                     const PrecisionContext& ctx);

// ---- Watson kernel ------------------------------------------------------

// G_nu(x, w): 0F3-based kernel; x > 0, nu not a nonzero integer.
// nu = 0 uses the differentiated-series formula as the primary path.
ValueWithError watson_kernel(const Cplx& nu, const Real& x, const Cplx& w,
                             const PrecisionContext& ctx);
Cplx watson_g_raw(const Cplx& nu, const Real& x, const Cplx& w, long target);

// ---- two-variable modified Bessel function ------------------------------

// muK_nu(z, w): pair of (regularized) 1F2 blocks at moderate |z|, the
// large-z expansion beyond. nu = 0 by averaged nu +- eps.
ValueWithError mu_k_nu(const Cplx& mu, const Cplx& nu, const Cplx& z, const Cplx& w,
                       const PrecisionContext& ctx);
Cplx mu_k_raw(const Cplx& mu, const Cplx& nu, const Cplx& z, const Cplx& w, long target);
// force the series route (used by tests and the asymptotic-order check)
Cplx mu_k_series_raw(const Cplx& mu, const Cplx& nu, const Cplx& z, const Cplx& w, long target);

// Coefficient of (z/2)^{-2k} in the A (resp. B) expansion polynomial;
// the (-1)^p factors are taken as exp(i pi p), principal values.
Cplx a_coef_raw(long k, const Cplx& mu, const Cplx& nu, const Cplx& w);
Cplx b_coef_raw(long k, const Cplx& mu, const Cplx& nu, const Cplx& w);

// A_m / B_m truncation polynomials.
ValueWithError a_poly(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z,
                      const PrecisionContext& ctx);
ValueWithError b_poly(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z,
                      const PrecisionContext& ctx);
Cplx a_poly_raw(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z);
Cplx b_poly_raw(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z);

// pi 2^{3mu+2nu+2w} / (sin(pi nu) z^{w+2mu+nu+1})
Cplx mu_k_pref_raw(const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z);
// the exponentially small completion of the large-z expansion on z > 0
Cplx mu_k_exp_term_raw(const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z);

// Order-m truncation of the large-z expansion: pref * (A_m - B_m).
ValueWithError mu_k_asymptotic(long m, const Cplx& mu, const Cplx& nu, const Cplx& w,
                               const Cplx& z, const PrecisionContext& ctx);

// pref * sum_{k >= from_k} (A_k - B_k) (z/2)^{-2k} + exp term, summed to its
// optimal truncation; |z| must be in the asymptotic regime for `target`.
Cplx mu_k_tail_raw(const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z, long from_k,
                   long target);

// muK_{1/2}K_{-(2m+1)/2}(z, 0) in elementary closed form.
ValueWithError mu_k_half_closed(long m, const Cplx& z, const PrecisionContext& ctx);

// (1/Gamma(2m+1)) 1F2(1; m+1, m+1/2; x^2) via the cosh-plus-polynomial form.
ValueWithError onef2_integer_reduction(long m, const Cplx& x, const PrecisionContext& ctx);
Cplx onef2_integer_reduction_raw(long m, const Cplx& x, long target);

// d/da of the regularized 1F2 block at a = 2m (plus sign) or a = -2m
// (minus sign); n >= 1, Re y > 0.
ValueWithError der_onef2_at_2m(long m, bool at_negative, long n, const Cplx& y,
                               const PrecisionContext& ctx);

}  // namespace gbessel

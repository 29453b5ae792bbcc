#include "gbessel/bessel.hpp"

#include <cmath>
#include <cstdlib>

namespace gbessel {

namespace {

long wd_now() { return bits_to_digits(current_prec_bits()); }

Real int_tol() { return pow10(-(wd_now() - 6)); }

// sum_{n>=n0} (a)_n x^n / (Gamma(b1+n) (b2)_n n!), regularized in b1.
// Reports the largest term magnitude for cancellation accounting.
struct RegBlock {
  Cplx value;
  Real max_term;
  long terms;
};

RegBlock reg_1f2_block(const Cplx& a, const Cplx& b1, const Cplx& b2, const Cplx& x, long wd) {
  long n0 = 0;
  long L;
  if (near_nonpositive_integer(b1, int_tol(), &L)) n0 = -L + 1;
  // first term at n0
  Cplx t(1L);
  for (long j = 0; j < n0; ++j) t *= (a + j) * x / ((b2 + j) * Real(j + 1));
  t *= crgamma_safe(b1 + n0);
  if (n0 > 0 && t.re.is_zero() && t.im.is_zero()) return {Cplx(0L), Real(0L), 0};
  Cplx sum = t;
  Real maxt = abs(t);
  Real eps = pow10(-(wd + 4));
  int tiny = 0;
  long n = n0;
  for (; n < n0 + 2000000; ++n) {
    t = t * (a + n) * x / ((b1 + n) * (b2 + n) * Real(n + 1));
    sum += t;
    Real at = abs(t);
    if (at > maxt) maxt = at;
    if (at < eps * max(abs(sum), maxt * pow10(-(wd + 2)))) {
      if (++tiny >= 3) break;
    } else {
      tiny = 0;
    }
  }
  return {sum, maxt, n + 1};
}

const Cplx kHalf{Real(0.5)};

}  // namespace

// ---- J / I / Y / K -------------------------------------------------------

Cplx cbessel_j_raw(const Cplx& nu, const Cplx& z, long target) {
  if (z.re.is_zero() && z.im.is_zero()) {
    long n;
    if (near_integer(nu, int_tol(), &n) && n == 0) return Cplx(1L);
    if (nu.re > 0) return Cplx(0L);
    throw DomainError("bessel_j: z = 0 with Re(nu) <= 0");
  }
  long n;
  if (near_integer(nu, int_tol(), &n) && n < 0) {
    Cplx v = cbessel_j_raw(Cplx(Real(-n)), z, target);
    return (-n) % 2 ? -v : v;
  }
  return run_guarded(target, [&](long wd) {
    Cplx q = z * z / Real(-4);
    RegBlock b = reg_1f2_block(Cplx(1L), 1 + nu, Cplx(1L), q, wd);
    // that block sums (1)_n q^n /(Gamma(1+nu+n) (1)_n n!) = sum q^n/(Gamma(1+nu+n) n!)
    Cplx v = pow(z / 2, nu) * b.value;
    return GuardedValue{v, b.max_term * abs(pow(z / 2, nu)) + abs(v), b.terms};
  });
}

Cplx cbessel_i_raw(const Cplx& nu, const Cplx& z, long target) {
  if (z.re.is_zero() && z.im.is_zero()) {
    long n;
    if (near_integer(nu, int_tol(), &n) && n == 0) return Cplx(1L);
    if (nu.re > 0) return Cplx(0L);
    throw DomainError("bessel_i: z = 0 with Re(nu) <= 0");
  }
  long n;
  if (near_integer(nu, int_tol(), &n) && n < 0) return cbessel_i_raw(Cplx(Real(-n)), z, target);
  return run_guarded(target, [&](long wd) {
    Cplx q = z * z / Real(4);
    RegBlock b = reg_1f2_block(Cplx(1L), 1 + nu, Cplx(1L), q, wd);
    Cplx v = pow(z / 2, nu) * b.value;
    return GuardedValue{v, b.max_term * abs(pow(z / 2, nu)) + abs(v), b.terms};
  });
}

namespace {

Cplx bessel_y_noninteger(const Cplx& nu, const Cplx& z, long wd) {
  Cplx jp = cbessel_j_raw(nu, z, wd);
  Cplx jm = cbessel_j_raw(-nu, z, wd);
  Cplx s = sin(real_pi() * nu);
  return (jp * cos(real_pi() * nu) - jm) / s;
}

Cplx bessel_k_series(const Cplx& nu, const Cplx& z, long wd) {
  Cplx ip = cbessel_i_raw(nu, z, wd);
  Cplx im = cbessel_i_raw(-nu, z, wd);
  Cplx s = sin(real_pi() * nu);
  return real_pi() / 2 * (im - ip) / s;
}

Cplx bessel_k_asym(const Cplx& nu, const Cplx& z, long wd) {
  // K_nu(z) ~ sqrt(pi/2z) e^-z sum_k a_k(nu) z^-k, a_k = prod (4nu^2-(2j-1)^2)/(8k k!)
  Cplx nu4 = 4 * nu * nu;
  Cplx term(1L), sum(1L);
  Real eps = pow10(-(wd + 4));
  Real prev;
  mpfr_set_inf(prev.raw(), 1);
  for (long k = 1; k < 100000; ++k) {
    term = term * (nu4 - Real((2 * k - 1) * (2 * k - 1))) / (Real(8L * k) * z);
    Real at = abs(term);
    if (at > prev) break;
    sum += term;
    prev = at;
    if (at < eps * abs(sum)) break;
  }
  return sqrt(real_pi() / (2 * z)) * exp(-z) * sum;
}

}  // namespace

Cplx cbessel_k_raw(const Cplx& nu, const Cplx& z, long target) {
  long n;
  if (near_integer(nu, int_tol(), &n)) {
    long wd_in = target + target / 3 + 10;
    PrecGuard pg(wd_in);
    Real e = pow10(-(target / 3));
    Cplx zz(Real(0L) + z.re, Real(0L) + z.im);
    long an = std::labs(n);
    Cplx v;
    if (an == 0) {
      v = cbessel_k_raw(Cplx(e), zz, wd_in - 4);  // K is even in nu
    } else {
      Cplx vp = cbessel_k_raw(Cplx(Real(an) + e), zz, wd_in - 4);
      Cplx vm = cbessel_k_raw(Cplx(Real(an) - e), zz, wd_in - 4);
      v = (vp + vm) / 2;
    }
    PrecGuard pgo(target);
    return Cplx(Real(0L) + v.re, Real(0L) + v.im);
  }
  double za = abs(z).to_double();
  if (za >= 1.16 * static_cast<double>(target + 10) + 5.0) {
    return bessel_k_asym(nu, z, target);
  }
  return run_guarded(target, [&](long wd) {
    Cplx v = bessel_k_series(nu, z, wd);
    Real rez = max(z.re, Real(0L));
    Real big = exp(rez) * (1 + 1 / abs(sin(real_pi() * nu)));
    return GuardedValue{v, big + abs(v)};
  });
}

Cplx cbessel_y_raw(const Cplx& nu, const Cplx& z, long target) {
  long n;
  if (near_integer(nu, int_tol(), &n)) {
    long wd_in = target + target / 3 + 10;
    PrecGuard pg(wd_in);
    Real e = pow10(-(target / 3));
    Cplx zz(Real(0L) + z.re, Real(0L) + z.im);
    Cplx vp = cbessel_y_raw(Cplx(Real(n) + e), zz, wd_in - 4);
    Cplx vm = cbessel_y_raw(Cplx(Real(n) - e), zz, wd_in - 4);
    Cplx v = (vp + vm) / 2;
    PrecGuard pgo(target);
    return Cplx(Real(0L) + v.re, Real(0L) + v.im);
  }
  return run_guarded(target, [&](long wd) {
    Cplx v = bessel_y_noninteger(nu, z, wd);
    Real big = (exp(abs(z.im)) + abs(v)) * (1 + 1 / abs(sin(real_pi() * nu)));
    return GuardedValue{v, big};
  });
}

ValueWithError bessel_first(char kind, const Cplx& nu, const Cplx& z, const PrecisionContext& ctx) {
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx v;
  if (kind == 'J' || kind == 'j') v = cbessel_j_raw(nu, z, wd);
  else if (kind == 'I' || kind == 'i') v = cbessel_i_raw(nu, z, wd);
  else throw DomainError("bessel_first: kind must be J or I");
  return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
}

ValueWithError bessel_second(char kind, const Cplx& nu, const Cplx& z, const PrecisionContext& ctx) {
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("bessel_second: z = 0");
  bool integer_order = near_integer(nu, int_tol(), nullptr);
  Cplx v;
  if (kind == 'Y' || kind == 'y') v = cbessel_y_raw(nu, z, wd);
  else if (kind == 'K' || kind == 'k') v = cbessel_k_raw(nu, z, wd);
  else throw DomainError("bessel_second: kind must be Y or K");
  if (!integer_order) return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
  // estimate the eps-limit error by re-running at eps/2 (one extra digit of eps)
  long wd2 = wd + 4;
  PrecGuard pg2(wd2);
  Cplx v2 = (kind == 'Y' || kind == 'y') ? cbessel_y_raw(nu, z, wd2) : cbessel_k_raw(nu, z, wd2);
  Real err = abs(v - v2) * 2 + (abs(v) + pow10(-wd)) * pow10(-(wd - 3));
  PrecGuard pgo(wd);
  return {v, err, Rigor::heuristic};
}

std::pair<ValueWithError, ValueWithError> ml_kernels(const Cplx& nu, const Real& x,
                                                     const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("ml_kernels: x must be positive");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx k = cbessel_k_raw(nu, Cplx(x), wd);
  Cplx y = cbessel_y_raw(nu, Cplx(x), wd);
  Cplx twoopi = Cplx(2 / real_pi());
  Cplx m = twoopi * k - y, l = -(twoopi * k) - y;
  Real e = (abs(k) + abs(y) + 1) * pow10(-(wd - 4));
  bool into = near_integer(nu, int_tol(), nullptr);
  Rigor r = into ? Rigor::heuristic : Rigor::rigorous;
  return {ValueWithError{m, e, r}, ValueWithError{l, e, r}};
}

// ---- Watson kernel -------------------------------------------------------

namespace {

// G_0(x, w) by the explicit derivative of the 0F3 block at nu = 0.
Cplx watson_g0_raw(const Real& x, const Cplx& w, long target) {
  return run_guarded(target, [&](long wd) {
    Real q = x * x / 16;
    Cplx wh = w + kHalf;
    // term_k = q^k / (k!^2 Gamma(w+1/2+k)^2); psi terms accumulate alongside
    Cplx g = cgamma_raw(wh);
    Cplx t = 1 / (g * g);
    Cplx psi_w = cdigamma_raw(wh);
    Real psi_1 = -real_euler();
    Cplx s_plain = t;               // sum of term_k
    Cplx s_psi = t * (psi_w + psi_1);  // sum of term_k (psi(w+1/2+k)+psi(1+k))
    Real maxt = abs(t);
    Real eps = pow10(-(wd + 4));
    for (long k = 1; k < 200000; ++k) {
      t = t * q / ((wh + (k - 1)) * (wh + (k - 1)) * Real(k) * Real(k));
      psi_w += 1 / (wh + (k - 1));
      psi_1 += Real(1L) / Real(k);
      Cplx tp = t * (psi_w + psi_1);
      s_plain += t;
      s_psi += tp;
      Real at = abs(t) * (1 + abs(psi_w + psi_1));
      if (at > maxt) maxt = at;
      if (abs(t) < eps * max(abs(s_plain), Real(1L)) && Real(2 * k) > sqrt(x)) break;
    }
    Cplx v = 2 * pow(Cplx(x / 4), w) * (Cplx(-log(x / 4)) * s_plain + s_psi);
    return GuardedValue{v, maxt * 2 * abs(pow(Cplx(x / 4), w)) + abs(v)};
  });
}

}  // namespace

Cplx watson_g_raw(const Cplx& nu, const Real& x, const Cplx& w, long target) {
  long n;
  if (near_integer(nu, int_tol(), &n)) {
    if (n != 0) throw DomainError("watson_kernel: kernel pole at nonzero integer nu");
    return watson_g0_raw(x, w, target);
  }
  return run_guarded(target, [&](long wd) {
    Real q = x * x / 16;
    Cplx wh = w + kHalf;
    // 0F3(-; 1-nu, w+1/2, w+1/2-nu; q) / (Gamma(1-nu) Gamma(w+1/2) Gamma(w+1/2-nu)),
    // summed directly in fully regularized form: term_k = q^k /
    // (k! Gamma(1-nu+k) Gamma(w+1/2+k) Gamma(w+1/2-nu+k)).
    auto block = [&](int sign) {
      Cplx a1 = 1 - sign * nu, a2 = wh, a3 = wh - sign * nu;
      Cplx t = crgamma_safe(a1) * crgamma_safe(a2) * crgamma_safe(a3);
      Cplx sum = t;
      Real maxt = abs(t);
      Real eps = pow10(-(wd + 4));
      for (long k = 1; k < 200000; ++k) {
        t = t * q / ((a1 + (k - 1)) * (a2 + (k - 1)) * (a3 + (k - 1)) * Real(k));
        sum += t;
        Real at = abs(t);
        if (at > maxt) maxt = at;
        if (at < eps * max(abs(sum), Real(1L)) && Real(2 * k) > sqrt(x)) break;
      }
      return std::make_pair(sum * pow(Cplx(x / 4), Cplx(-sign) * nu), maxt);
    };
    auto [p1, m1] = block(+1);
    auto [p2, m2] = block(-1);
    Cplx pref = real_pi() / sin(real_pi() * nu) * pow(Cplx(x / 4), w);
    Cplx v = pref * (p1 - p2);
    Real big = (m1 + m2 + abs(p1) + abs(p2)) * abs(pref);
    return GuardedValue{v, big + abs(v)};
  });
}

ValueWithError watson_kernel(const Cplx& nu, const Real& x, const Cplx& w,
                             const PrecisionContext& ctx) {
  if (!(x > 0)) throw DomainError("watson_kernel: x must be positive");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx v = watson_g_raw(nu, x, w, wd);
  return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
}

// ---- two-variable modified Bessel ---------------------------------------

Cplx mu_k_series_raw(const Cplx& mu, const Cplx& nu, const Cplx& z, const Cplx& w, long target) {
  return run_guarded(target, [&](long wd) {
    Cplx q = z * z / Real(4);
    Cplx zh = z / 2;
    RegBlock f1 = reg_1f2_block(mu + w + kHalf, w + kHalf - nu, 1 - nu, q, wd);
    RegBlock f2 = reg_1f2_block(mu + nu + w + kHalf, w + kHalf, 1 + nu, q, wd);
    Cplx t1 = pow(zh, -nu) * cgamma_raw(mu + w + kHalf) * crgamma_safe(1 - nu) * f1.value;
    Cplx t2 = pow(zh, nu) * cgamma_raw(mu + nu + w + kHalf) * crgamma_safe(1 + nu) * f2.value;
    Cplx pref = real_pi() * pow(Cplx(z), w) * pow(Cplx(Real(2L)), mu + nu - 1) / sin(real_pi() * nu);
    Cplx v = pref * (t1 - t2);
    Real big = abs(pref) * (abs(t1) + abs(t2) +
                            f1.max_term * abs(pow(zh, -nu) * cgamma_raw(mu + w + kHalf)) +
                            f2.max_term * abs(pow(zh, nu) * cgamma_raw(mu + nu + w + kHalf)));
    return GuardedValue{v, big + abs(v), f1.terms + f2.terms};
  });
}

Cplx a_coef_raw(long k, const Cplx& mu, const Cplx& nu, const Cplx& w) {
  Cplx ph = exp(Cplx(Real(0L), real_pi()) * (-(mu + w + kHalf)));
  Cplx v = ph * cgamma_raw(mu + w + kHalf + k) * crgamma_safe(-nu - mu - k) *
           crgamma_safe(kHalf - nu - mu - w - k);
  Real kf(1L);
  for (long j = 2; j <= k; ++j) kf *= j;
  return v / kf;
}

Cplx b_coef_raw(long k, const Cplx& mu, const Cplx& nu, const Cplx& w) {
  Cplx ph = exp(Cplx(Real(0L), real_pi()) * (-(mu + nu + w + kHalf)));
  Cplx v = ph * cgamma_raw(mu + nu + w + kHalf + k) * crgamma_safe(-mu - nu - k) *
           crgamma_safe(kHalf - mu - w - k);
  Real kf(1L);
  for (long j = 2; j <= k; ++j) kf *= j;
  return v / kf;
}

Cplx a_poly_raw(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z) {
  Cplx iz2 = 1 / (z * z / 4);
  Cplx p(1L), s(0L);
  for (long k = 0; k <= m; ++k) {
    s += a_coef_raw(k, mu, nu, w) * p;
    p *= iz2;
  }
  return s;
}

Cplx b_poly_raw(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z) {
  Cplx iz2 = 1 / (z * z / 4);
  Cplx p(1L), s(0L);
  for (long k = 0; k <= m; ++k) {
    s += b_coef_raw(k, mu, nu, w) * p;
    p *= iz2;
  }
  return s;
}

Cplx mu_k_pref_raw(const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z) {
  Cplx e = pow(Cplx(Real(2L)), 3 * mu + 2 * nu + 2 * w);
  return real_pi() * e / (sin(real_pi() * nu) * pow(z, w + 2 * mu + nu + 1));
}

Cplx mu_k_exp_term_raw(const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z) {
  // exponentially small completion on the positive real direction; the two
  // branch readings of the expansion average to the cosine difference below.
  Cplx pref = real_pi() * pow(Cplx(z), w) * pow(Cplx(Real(2L)), mu + nu - 1) / sin(real_pi() * nu);
  Cplx osc = cos(real_pi() * (mu + 2 * nu - kHalf)) - cos(real_pi() * (mu - kHalf));
  return pref * pow(Cplx(Real(2L)), -(mu + nu)) / sqrt(2 * real_pi()) * exp(-z) *
         pow(z, mu + nu - kHalf) * osc;
}

Cplx mu_k_tail_raw(const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z, long from_k,
                   long target) {
  Cplx pref = mu_k_pref_raw(mu, nu, w, z);
  // coefficient recurrences; factors are reported separately so persistent
  // zeros (1/Gamma at a pole) stay exactly zero.
  Cplx ph_a = exp(Cplx(Real(0L), real_pi()) * (-(mu + w + kHalf)));
  Cplx ph_b = exp(Cplx(Real(0L), real_pi()) * (-(mu + nu + w + kHalf)));
  Real kf(1L);
  for (long j = 2; j <= from_k; ++j) kf *= j;
  Cplx ga = cgamma_raw(mu + w + kHalf + from_k);
  Cplx gb = cgamma_raw(mu + nu + w + kHalf + from_k);
  Cplx ra1 = crgamma_safe(-nu - mu - from_k), ra2 = crgamma_safe(kHalf - nu - mu - w - from_k);
  Cplx rb1 = crgamma_safe(-mu - nu - from_k), rb2 = crgamma_safe(kHalf - mu - w - from_k);
  Cplx iz2 = 1 / (z * z / 4);
  Cplx zp = pow(iz2, from_k);
  Cplx sum(0L);
  Real eps = pow10(-(target + 8));
  Real prev;
  mpfr_set_inf(prev.raw(), 1);
  Real pa = abs(pref);
  for (long k = from_k; k < from_k + 4000; ++k) {
    Cplx term = (ph_a * ga * ra1 * ra2 - ph_b * gb * rb1 * rb2) / kf * zp;
    Real at = abs(term);
    if (at > prev) break;  // past the optimal truncation point
    sum += term;
    prev = at;
    if (at * pa < eps * (abs(sum) * pa + pow10(-target))) break;
    // advance recurrences to k+1
    ga *= (mu + w + kHalf + k);
    gb *= (mu + nu + w + kHalf + k);
    ra1 *= (-nu - mu - (k + 1));
    ra2 *= (kHalf - nu - mu - w - (k + 1));
    rb1 *= (-mu - nu - (k + 1));
    rb2 *= (kHalf - mu - w - (k + 1));
    kf *= (k + 1);
    zp *= iz2;
  }
  return pref * sum + mu_k_exp_term_raw(mu, nu, w, z);
}

namespace {

double mu_k_switch(long target) { return 2.5 * static_cast<double>(target + 12); }

}  // namespace

Cplx mu_k_raw(const Cplx& mu, const Cplx& nu, const Cplx& z, const Cplx& w, long target) {
  long n;
  if (near_integer(nu, int_tol(), &n)) {
    if (n != 0) throw DomainError("mu_k_nu: parameter pole at nonzero integer nu");
    long wd_in = target + target / 3 + 10;
    PrecGuard pg(wd_in);
    Real e = pow10(-(target / 3));
    Cplx zz(Real(0L) + z.re, Real(0L) + z.im);
    Cplx ww(Real(0L) + w.re, Real(0L) + w.im);
    Cplx mm(Real(0L) + mu.re, Real(0L) + mu.im);
    Cplx vp = mu_k_raw(mm, Cplx(e), zz, ww, wd_in - 4);
    Cplx vm = mu_k_raw(mm, Cplx(-e), zz, ww, wd_in - 4);
    Cplx v = (vp + vm) / 2;
    PrecGuard pgo(target);
    return Cplx(Real(0L) + v.re, Real(0L) + v.im);
  }
  if (near_nonpositive_integer(2 * (mu + w) + 1, int_tol()))
    throw DomainError("mu_k_nu: parameter pole, mu+w in {-1/2,-3/2,...}");
  if (abs(z).to_double() < mu_k_switch(target)) return mu_k_series_raw(mu, nu, z, w, target);
  return mu_k_tail_raw(mu, nu, w, z, 0, target);
}

ValueWithError mu_k_nu(const Cplx& mu, const Cplx& nu, const Cplx& z, const Cplx& w,
                       const PrecisionContext& ctx) {
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  bool nu_zero = near_integer(nu, int_tol(), nullptr);
  Cplx v = mu_k_raw(mu, nu, z, w, wd);
  bool asym = abs(z).to_double() >= mu_k_switch(wd);
  Real err = (abs(v) + pow10(-wd)) * pow10(-(wd - 3));
  if (asym) err += abs(mu_k_exp_term_raw(mu, nu, w, z)) * Real(0.5);
  return {v, err, (nu_zero || asym) ? Rigor::heuristic : Rigor::rigorous};
}

ValueWithError a_poly(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z,
                      const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("a_poly: m must be nonnegative");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx v = a_poly_raw(m, mu, nu, w, z);
  return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
}

ValueWithError b_poly(long m, const Cplx& mu, const Cplx& nu, const Cplx& w, const Cplx& z,
                      const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("b_poly: m must be nonnegative");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx v = b_poly_raw(m, mu, nu, w, z);
  return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
}

ValueWithError mu_k_asymptotic(long m, const Cplx& mu, const Cplx& nu, const Cplx& w,
                               const Cplx& z, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("mu_k_asymptotic: m must be nonnegative");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx pref = mu_k_pref_raw(mu, nu, w, z);
  Cplx v = pref * (a_poly_raw(m, mu, nu, w, z) - b_poly_raw(m, mu, nu, w, z));
  // the next omitted term estimates the O(z^{-2m-2}) remainder
  Cplx next = pref * (a_coef_raw(m + 1, mu, nu, w) - b_coef_raw(m + 1, mu, nu, w)) *
              pow(1 / (z * z / 4), m + 1);
  return {v, abs(next) * 2 + (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::heuristic};
}

ValueWithError mu_k_half_closed(long m, const Cplx& z, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("mu_k_half_closed: m must be nonnegative");
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("mu_k_half_closed: z = 0");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx s(0L);
  for (long k = 0; k <= m; ++k) {
    Cplx rg = crgamma_safe(Cplx(Real(2 * m - 2 * k)));
    if (!(rg.re.is_zero() && rg.im.is_zero())) s += pow(z, -2 * k) * rg;
  }
  Cplx v = sqrt(real_pi() / 2) *
           (pow(z, Cplx(Real(-(2 * m + 1)) / 2)) * exp(-z) + pow(z, Cplx(Real(2 * m - 3) / 2)) * s);
  if (m % 2 == 1) v = -v;
  return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
}

Cplx onef2_integer_reduction_raw(long m, const Cplx& x, long target) {
  PrecGuard pg(target + 6);
  Cplx tx = 2 * x;
  Cplx s(0L);
  for (long k = 0; k <= m - 1; ++k) {
    Real g = r_gamma(Real(2 * m - 2 * k - 1));
    s += pow(tx, -2 * k - 2) / g;
  }
  Cplx v = pow(tx, -2 * m) * cosh(tx) - s;
  PrecGuard pgo(target);
  return Cplx(Real(0L) + v.re, Real(0L) + v.im);
}

ValueWithError onef2_integer_reduction(long m, const Cplx& x, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("onef2_integer_reduction: m must be nonnegative");
  if (x.re.is_zero() && x.im.is_zero()) throw DomainError("onef2_integer_reduction: x = 0");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx v = onef2_integer_reduction_raw(m, x, wd);
  return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
}

ValueWithError der_onef2_at_2m(long m, bool at_negative, long n, const Cplx& y,
                               const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("der_onef2_at_2m: m must be nonnegative");
  if (n < 1) throw DomainError("der_onef2_at_2m: n must be positive");
  if (!(y.re > 0)) throw DomainError("der_onef2_at_2m: requires Re y > 0");
  long wd = ctx.working_digits();
  PrecGuard pg(wd + 8);
  Cplx X = 4 * real_pi() * real_pi() * Real(n) / y;  // common argument
  Cplx v;
  if (!at_negative) {
    // derivative of (1/Gamma(1-a)) 1F2(1; 1-a/2, (1-a)/2; (X/2)^2) at a = 2m
    Cplx combo = shi_chi_combo_raw(X, wd + 8);
    Cplx corr(0L);
    Real fact(1L);
    for (long j = 1; j <= m; ++j) {
      fact *= (2 * j - 1);
      if (j > 1) fact *= (2 * j - 2);
      corr += fact * pow(X, -2 * j);
    }
    v = pow(X, 2 * m) * (combo + log(X) * cosh(X) + corr);
  } else {
    // derivative of 1F2(1; (1-a)/2, 1-a/2; zz^2) at a = -2m, zz = X/2
    Cplx zz = X / 2;
    Cplx tz = X;
    Real g2m1 = r_gamma(Real(2 * m + 1));
    Cplx combo = shi_chi_combo_raw(tz, wd + 8);
    Cplx head = g2m1 * pow(tz, -2 * m) * (combo + log(tz) * cosh(tz));
    Cplx psisum(0L);
    for (long j = 0; j <= m - 1; ++j) {
      long arg = 2 * m - 2 * j - 1;
      psisum += r_digamma(Real(arg)) / r_gamma(Real(arg)) * pow(tz, -2 * j);
    }
    Cplx f12 = g2m1 * onef2_integer_reduction_raw(m, zz, wd + 8);
    v = head - g2m1 / (tz * tz) * psisum - r_digamma(Real(2 * m + 1)) * f12;
  }
  PrecGuard pgo(wd);
  Cplx out(Real(0L) + v.re, Real(0L) + v.im);
  return {out, (abs(out) + pow10(-wd)) * pow10(-(wd - 4)), Rigor::rigorous};
}

}  // namespace gbessel

#include "gbessel/classic.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <vector>

namespace gbessel {

namespace {

Real from_mpq(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real from_mpz(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

// ---- Bernoulli numbers (exact rationals, tangent-number recurrence) ----

std::mutex g_bern_mutex;
std::vector<mpq_class> g_bern;  // g_bern[m] = B_{2m}

void extend_bernoulli(size_t upto_m) {
  // tangent numbers T_1..T_n by the in-place triangle recurrence, then
  // B_{2m} = (-1)^{m-1} 2m T_m / (4^m (4^m - 1))
  size_t n = upto_m;
  std::vector<mpz_class> T(n + 1);
  if (n >= 1) {
    T[1] = 1;
    for (size_t k = 2; k <= n; ++k) T[k] = T[k - 1] * static_cast<unsigned long>(k - 1);
    for (size_t k = 2; k <= n; ++k)
      for (size_t j = k; j <= n; ++j)
        T[j] = T[j - 1] * static_cast<unsigned long>(j - k) +
               T[j] * static_cast<unsigned long>(j - k + 2);
  }
  g_bern.assign(upto_m + 1, mpq_class(0));
  g_bern[0] = 1;
  mpz_class four_m = 1;
  for (size_t m = 1; m <= upto_m; ++m) {
    four_m *= 4;
    mpq_class b(2 * static_cast<unsigned long>(m) * T[m], four_m * (four_m - 1));
    b.canonicalize();
    if (m % 2 == 0) b = -b;
    g_bern[m] = b;
  }
}

mpq_class bernoulli_q(unsigned long n2) {  // B_{n2}, n2 even
  size_t m = n2 / 2;
  std::lock_guard<std::mutex> lk(g_bern_mutex);
  if (g_bern.size() <= m) extend_bernoulli(m + m / 2 + 16);
  return g_bern[m];
}

long guard_digits_for(const Cplx& z) {
  double az = abs(z).to_double();
  return az > 1 ? static_cast<long>(std::log10(az)) + 1 : 0;
}

}  // namespace

Real bernoulli_real(unsigned long n) {
  if (n == 1) return Real(-1) / 2;
  if (n % 2 == 1) return Real(0L);
  return from_mpq(bernoulli_q(n));
}

ValueWithError bernoulli(long n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("bernoulli: n must be nonnegative");
  if (n % 2 == 1) throw DomainError("bernoulli: odd n rejected");
  PrecGuard pg(ctx.working_digits());
  return vwe_exact(Cplx(bernoulli_real(static_cast<unsigned long>(n))), ctx);
}

// ---- complex gamma / digamma ------------------------------------------

Cplx clngamma_raw(const Cplx& z) {
  // Stirling with argument shift; requires Re z > 0.
  long wd = bits_to_digits(current_prec_bits());
  double want = 0.39 * static_cast<double>(wd) + 12.0;
  double rez = z.re.to_double();
  long shift = rez < want ? static_cast<long>(want - rez) + 1 : 0;
  Cplx w = z + shift;
  Cplx iw2 = 1 / (w * w);
  Cplx lg = (w - Real(0.5)) * log(w) - w + Real(0.5) * log(2 * real_pi());
  Cplx zk = 1 / w;  // z^{-(2k-1)}
  Real eps = pow10(-(wd + 4));
  Real prev_mag(0L);
  for (long k = 1; k < 400; ++k) {
    Cplx term = bernoulli_real(2 * static_cast<unsigned long>(k)) /
                    Real(2 * k * (2 * k - 1)) * zk;
    Real m = abs(term);
    if (k > 2 && m > prev_mag) break;  // asymptotic tail starts growing
    lg += term;
    if (m < eps * abs(lg)) break;
    prev_mag = m;
    zk *= iw2;
  }
  // divide out the shift: lnGamma(z) = lnGamma(z+shift) - sum log(z+j)
  for (long j = 0; j < shift; ++j) lg -= log(z + j);
  return lg;
}

Cplx cgamma_raw(const Cplx& z) {
  if (z.is_real()) {
    return Cplx(r_gamma(z.re));
  }
  if (z.re < Real(0.5)) {
    // reflection
    Cplx s = sin(real_pi() * z);
    return real_pi() / (s * cgamma_raw(1 - z));
  }
  return exp(clngamma_raw(z));
}

Cplx crgamma_safe(const Cplx& z) {
  long wd = bits_to_digits(current_prec_bits());
  if (near_nonpositive_integer(z, pow10(-(wd - 6)))) return Cplx(0L);
  return 1 / cgamma_raw(z);
}

Cplx cdigamma_raw(const Cplx& z) {
  if (z.is_real()) return Cplx(r_digamma(z.re));
  if (z.re < Real(0.5)) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    Cplx piz = real_pi() * z;
    return cdigamma_raw(1 - z) - real_pi() * (cos(piz) / sin(piz));
  }
  long wd = bits_to_digits(current_prec_bits());
  double want = 0.39 * static_cast<double>(wd) + 12.0;
  double rez = z.re.to_double();
  long shift = rez < want ? static_cast<long>(want - rez) + 1 : 0;
  Cplx w = z + shift;
  Cplx iw2 = 1 / (w * w);
  Cplx ps = log(w) - Real(0.5) / w;
  Cplx zk = iw2;
  Real eps = pow10(-(wd + 4));
  Real prev_mag(0L);
  for (long k = 1; k < 400; ++k) {
    Cplx term = bernoulli_real(2 * static_cast<unsigned long>(k)) / Real(2 * k) * zk;
    Real m = abs(term);
    if (k > 2 && m > prev_mag) break;
    ps -= term;
    if (m < eps * abs(ps)) break;
    prev_mag = m;
    zk *= iw2;
  }
  for (long j = 0; j < shift; ++j) ps -= 1 / (z + j);
  return ps;
}

ValueWithError gamma(const Cplx& z, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.working_digits() + guard_digits_for(z));
  if (near_nonpositive_integer(z, ctx.eps_working())) throw DomainError("gamma: pole at nonpositive integer");
  Cplx g = cgamma_raw(z);
  return {g, abs(g) * pow10(-(ctx.working_digits() - 3)), Rigor::rigorous};
}

ValueWithError digamma(const Cplx& z, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.working_digits() + guard_digits_for(z));
  if (near_nonpositive_integer(z, ctx.eps_working())) throw DomainError("digamma: pole at nonpositive integer");
  Cplx g = cdigamma_raw(z);
  return {g, (abs(g) + 1) * pow10(-(ctx.working_digits() - 3)), Rigor::rigorous};
}

Real psi_pair_raw(const Real& x) {
  Cplx p = cdigamma_raw(Cplx(Real(0L), x));
  return 2 * p.re;
}

// ---- zeta ---------------------------------------------------------------

namespace {

// Borwein's algorithm 2 coefficients d_0..d_n for a given n (exact integers).
const std::vector<mpz_class>& borwein_d(long n) {
  thread_local std::map<long, std::vector<mpz_class>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<mpz_class> d(static_cast<size_t>(n) + 1);
  // d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  mpz_class term;  // (n+i-1)! 4^i / ((n-i)! (2i)!) scaled stepwise
  mpz_class acc = 0;
  // i = 0 term: (n-1)!/n! = 1/n -> times n = 1; track t_i exactly:
  // t_0 = n * (n-1)!/(n)! = 1
  mpz_class t = 1;
  acc = t;
  d[0] = acc;
  for (long i = 1; i <= n; ++i) {
    // t_i = t_{i-1} * 4 (n+i-1)(n-i+1) / ((2i)(2i-1))
    t *= 4 * mpz_class(n + i - 1) * mpz_class(n - i + 1);
    mpz_class den = mpz_class(2 * i) * mpz_class(2 * i - 1);
    t /= den;  // exact at every step
    acc += t;
    d[static_cast<size_t>(i)] = acc;
  }
  auto res = cache.emplace(n, std::move(d));
  return res.first->second;
}

Cplx czeta_borwein(const Cplx& s) {
  long wd = bits_to_digits(current_prec_bits());
  double ims = abs(s.im).to_double();
  long n = static_cast<long>(1.32 * wd + 0.9 * ims) + 12;
  const auto& d = borwein_d(n);
  Real dn = from_mpz(d[static_cast<size_t>(n)]);
  Cplx sum(0L);
  for (long k = 0; k < n; ++k) {
    Real c = from_mpz(d[static_cast<size_t>(k)]) - dn;
    Cplx t = c * exp(-s * log(Real(k + 1)));
    if (k % 2) sum -= t; else sum += t;
  }
  Cplx denom = dn * (Cplx(1L) - exp((1 - s) * real_log2const()));
  return -sum / denom;
}

}  // namespace

Cplx czeta_raw(const Cplx& s) {
  thread_local std::map<std::string, Cplx> cache;
  long wd = bits_to_digits(current_prec_bits());
  std::string key = to_string(s, wd) + "@" + std::to_string(wd);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Cplx r(0L);
  if (s.is_real()) {
    r = Cplx(r_zeta(s.re));
  } else if (s.re >= Real(0.5)) {
    r = czeta_borwein(s);
  } else {
    // zeta(1-s') = 2^{1-s'} pi^{-s'} Gamma(s') zeta(s') cos(pi s'/2), s' = 1-s
    Cplx sp = 1 - s;
    Cplx val = pow(Cplx(Real(2L)), 1 - sp) * pow(Cplx(real_pi()), -sp) * cgamma_raw(sp) *
               czeta_borwein(sp) * cos(real_pi() * sp / 2);
    r = val;
  }
  if (cache.size() > 20000) cache.clear();
  cache.emplace(std::move(key), r);
  return r;
}

ValueWithError zeta(const Cplx& s, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.working_digits() + guard_digits_for(s));
  if (near_integer(s - 1, ctx.eps_working())) throw DomainError("zeta: pole at s=1");
  Cplx z = czeta_raw(s);
  return {z, (abs(z) + 1) * pow10(-(ctx.working_digits() - 3)), Rigor::rigorous};
}

ValueWithError zeta_prime(const Cplx& s, const PrecisionContext& ctx) {
  long wd = ctx.working_digits();
  PrecGuard pg(wd + guard_digits_for(s));
  if (near_integer(s - 1, ctx.eps_working())) throw DomainError("zeta': pole at s=1");
  long n = 0;
  if (near_integer(s, ctx.eps_working(), &n)) {
    if (n == 0) {
      // zeta'(0) = -log(2 pi)/2
      Cplx v = Cplx(-log(2 * real_pi()) / 2);
      return {v, abs(v) * pow10(-(wd - 3)), Rigor::rigorous};
    }
    if (n < 0 && (-n) % 2 == 0) {
      // zeta'(-2m) = (-1)^m (2m)! / (2 (2pi)^{2m}) zeta(2m+1)
      long m = (-n) / 2;
      Real f(1L);
      for (long j = 2; j <= 2 * m; ++j) f *= j;
      Real v = f / (2 * pow(2 * real_pi(), 2 * m)) * r_zeta(Real(2 * m + 1));
      if (m % 2 == 1) v = -v;
      return {Cplx(v), abs(v) * pow10(-(wd - 3)), Rigor::rigorous};
    }
  }
  // central difference at doubled working precision
  long wd2 = 2 * wd + 12;
  PrecGuard pg2(wd2);
  Real h = pow10(-(2 * wd) / 3);
  Cplx s2(Real(0L) + s.re, Real(0L) + s.im);  // re-rounded at wd2
  Cplx d = (czeta_raw(s2 + Cplx(h)) - czeta_raw(s2 - Cplx(h))) / Cplx(2 * h);
  PrecGuard pg3(wd);
  Cplx v(Real(0L) + d.re, Real(0L) + d.im);
  return {v, (abs(v) + 1) * pow10(-(wd - 2)), Rigor::heuristic};
}

// ---- pFq ----------------------------------------------------------------

PfqRaw pfq_raw(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower, const Cplx& z,
               long target_digits, long max_terms) {
  PfqRaw out;
  Cplx term(1L), sum(1L);
  Real maxt(1L);
  Real eps = pow10(-(target_digits + 6));
  int tiny = 0;
  long n = 0;
  for (; n < max_terms; ++n) {
    Cplx ratio(1L);
    for (const auto& a : upper) ratio *= (a + n);
    for (const auto& b : lower) ratio = ratio / (b + n);
    ratio = ratio * z / Cplx(Real(n + 1));
    term *= ratio;
    sum += term;
    Real at = abs(term);
    if (at > maxt) maxt = at;
    if (at < eps * max(abs(sum), Real(1L))) {
      if (++tiny >= 3) break;
    } else {
      tiny = 0;
    }
  }
  if (n >= max_terms) throw ConvergenceError("pfq: series did not converge within term cap");
  out.value = sum;
  out.terms = n + 1;
  Real av = abs(sum);
  if (!av.is_zero() && maxt > av) out.lost_digits = log10(maxt / av).to_long() + 1;
  else if (av.is_zero()) out.lost_digits = target_digits;
  return out;
}

ValueWithError pfq(const HypergeometricParams& p, const PrecisionContext& ctx) {
  const size_t np = p.upper.size(), nq = p.lower.size();
  PrecGuard pg0(ctx.working_digits());
  for (const auto& b : p.lower)
    if (near_nonpositive_integer(b, ctx.eps_working()))
      throw DomainError("pfq: lower-parameter pole");
  bool zzero = p.argument.re.is_zero() && p.argument.im.is_zero();
  if (zzero) return vwe_exact(Cplx(1L), ctx);
  // a terminating numerator makes the series a polynomial regardless of p,q
  bool terminating = false;
  for (const auto& a : p.upper)
    if (near_nonpositive_integer(a, ctx.eps_working())) terminating = true;
  if (!terminating) {
    if (np > nq + 1) throw DomainError("pfq: divergent for p > q+1 and z != 0");
    if (np == nq + 1 && !(abs(p.argument) < Real(1L)))
      throw DomainError("pfq: divergent for p = q+1 and |z| >= 1");
  }
  long terms = 0;
  Cplx v = run_guarded(ctx.working_digits(), [&](long wd) {
    PfqRaw r = pfq_raw(p.upper, p.lower, p.argument, wd, ctx.max_terms * 20);
    return GuardedValue{r.value, pow10(r.lost_digits) * abs(r.value), r.terms};
  }, &terms);
  Rigor rig = (np <= nq || terminating) ? Rigor::rigorous : Rigor::heuristic;
  return {v, (abs(v) + pow10(-ctx.decimal_digits)) * pow10(-(ctx.working_digits() - 2)), rig};
}

// ---- Tricomi U ----------------------------------------------------------

namespace {

// the definition through two 1F1's; c away from integers
Cplx tricomi_u_noninteger_c(const Cplx& a, const Cplx& c, const Cplx& z, long wd,
                            int neg_branch /* -1, +1, or 0 = principal */) {
  std::vector<Cplx> u1 = {a}, l1 = {c};
  std::vector<Cplx> u2 = {a - c + 1}, l2 = {2 - c};
  PfqRaw f1 = pfq_raw(u1, l1, z, wd);
  PfqRaw f2 = pfq_raw(u2, l2, z, wd);
  Cplx t1 = cgamma_raw(1 - c) * crgamma_safe(a - c + 1) * f1.value;
  Cplx zp;
  if (z.is_real() && z.re.sign() < 0 && neg_branch != 0) {
    // z^{1-c} on the cut with an explicit branch choice
    Cplx lg = Cplx(log(-z.re), neg_branch > 0 ? real_pi() : -real_pi());
    zp = exp((1 - c) * lg);
  } else {
    zp = pow(z, 1 - c);
  }
  Cplx t2 = cgamma_raw(c - 1) * crgamma_safe(a) * zp * f2.value;
  return t1 + t2;
}

}  // namespace

ValueWithError tricomi_u(const Cplx& a, const Cplx& c, const Cplx& z, const PrecisionContext& ctx) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("tricomi_u: z = 0");
  long wd = ctx.working_digits();
  bool pv_cut = z.is_real() && z.re.sign() < 0;  // principal-value on the cut
  long cint = 0;
  bool c_integer = near_integer(c, ctx.eps_working(), &cint);

  auto eval_at_c = [&](const Cplx& cc, long wtarget) -> Cplx {
    return run_guarded(wtarget, [&](long w) {
      Cplx v;
      if (pv_cut) {
        Cplx vp = tricomi_u_noninteger_c(a, cc, z, w, +1);
        Cplx vm = tricomi_u_noninteger_c(a, cc, z, w, -1);
        v = (vp + vm) / 2;
      } else {
        v = tricomi_u_noninteger_c(a, cc, z, w, 0);
      }
      // cancellation scale: the two 1F1 pieces grow like e^{Re z}
      Real big = exp(max(z.re, Real(0L))) * (abs(v) + 1);
      return GuardedValue{v, big};
    });
  };

  if (!c_integer) {
    Cplx v = eval_at_c(c, wd);
    return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
  }

  // integer c: average c +- eps, check stability against eps/2
  Real eps = pow10(-(ctx.guard_digits / 2));
  long extra = ctx.guard_digits / 2 + 6;
  PrecGuard pg(wd + extra);
  auto avg_for = [&](const Real& e) {
    Cplx vp = eval_at_c(c + Cplx(e), wd + extra);
    Cplx vm = eval_at_c(c - Cplx(e), wd + extra);
    return (vp + vm) / 2;
  };
  Cplx v1 = avg_for(eps);
  Cplx v2 = avg_for(eps / 2);
  Real dist = abs(v1 - v2);
  Real scale = max(abs(v2), pow10(-wd));
  if (dist > Real(1e-3) * scale)
    throw ConvergenceError("tricomi_u: unresolvable degeneracy at integer c");
  PrecGuard pgout(wd);
  Cplx out(Real(0L) + v2.re, Real(0L) + v2.im);
  return {out, dist * 2 + abs(out) * pow10(-(wd - 3)), Rigor::heuristic};
}

// ---- exponential integrals ---------------------------------------------

namespace {

// Ei(x) = gamma + log|x| + sum x^k/(k k!)  (both signs of real x)
Cplx ei_series_raw(const Cplx& x, long wd) {
  Cplx sum(0L), term(1L);
  Real eps = pow10(-(wd + 4));
  for (long k = 1; k < 1000000; ++k) {
    term = term * x / Cplx(Real(k));
    Cplx t = term / Cplx(Real(k));
    sum += t;
    if (abs(t) < eps * max(abs(sum), Real(1L)) && Real(k) > 2 * abs(x)) break;
  }
  Cplx lg = x.is_real() ? Cplx(log(abs(x.re))) : log(x);
  return real_euler() + lg + sum;
}

}  // namespace

Cplx expx_e1_raw(const Cplx& x, long target_digits) {
  // e^x E1(x): continued fraction for |x| >= 8, series otherwise
  if (abs(x) < Real(8L)) {
    return run_guarded(target_digits, [&](long wd) {
      // E1(x) = -gamma - log x + sum (-1)^{k+1} x^k/(k k!)
      Cplx s = ei_series_raw(-x, wd);  // Ei(-x) = -E1(x) for x>0; analytic elsewhere
      Cplx v = -exp(x) * s;
      return GuardedValue{v, exp(abs(x)) * (abs(v) + 1)};
    });
  }
  // modified Lentz on E1(x) e^x = 1/(x+1- 1/(x+3- 4/(x+5- 9/(x+7-...))))
  Real eps = pow10(-(target_digits + 6));
  Real tiny = pow10(-(2 * target_digits + 40));
  Cplx b = x + 1;
  Cplx f = b, C = b, D(0L);
  if (abs(f) < tiny) f = Cplx(tiny);
  for (long k = 1; k < 2000000; ++k) {
    Cplx a = Cplx(Real(-k * k));
    b = x + Real(2 * k + 1);
    D = b + a * D;
    if (abs(D) < tiny) D = Cplx(tiny);
    C = b + a / C;
    if (abs(C) < tiny) C = Cplx(tiny);
    D = 1 / D;
    Cplx delta = C * D;
    f *= delta;
    if (abs(delta - Cplx(1L)) < eps) return 1 / f;
  }
  throw ConvergenceError("expx_e1: continued fraction did not converge");
}

Cplx expmx_ei_raw(const Cplx& x, long target_digits) {
  PrecGuard pg(target_digits + 8);
  Cplx x2(Real(0L) + x.re, Real(0L) + x.im);
  return exp(-x2) * ei_series_raw(x2, target_digits + 8);
}

ValueWithError ei(const Real& x, const PrecisionContext& ctx) {
  if (x.is_zero()) throw DomainError("ei: logarithmic singularity at x = 0");
  long wd = ctx.working_digits();
  Cplx v = run_guarded(wd, [&](long w) {
    Cplx s = ei_series_raw(Cplx(x), w);
    Real big = x.sign() < 0 ? exp(abs(x)) : abs(s) + 1;  // alternating loss for x<0
    return GuardedValue{s, big * (abs(s) + 1)};
  });
  return {v, (abs(v) + 1) * pow10(-(wd - 3)), Rigor::rigorous};
}

std::pair<ValueWithError, ValueWithError> shi_chi(const Cplx& z, const PrecisionContext& ctx) {
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  if (z.re.is_zero() && z.im.is_zero()) {
    // Shi(0)=0; Chi has a logarithmic singularity
    ValueWithError shi = vwe_exact(Cplx(0L), ctx);
    Real inf;
    mpfr_set_inf(inf.raw(), -1);
    return {shi, ValueWithError{Cplx(inf), inf, Rigor::heuristic}};
  }
  if (z.is_real() && z.re.sign() < 0)
    throw DomainError("shi_chi: branch cut of Chi along the negative real axis");
  long terms_shi = 0, terms_chi = 0;
  Cplx z2 = z * z;
  Cplx shi_v = run_guarded(wd, [&](long w) {
    Cplx term = z, sum = z;  // k=1 term z^1/(1*1!)
    Real eps = pow10(-(w + 4)), big = abs(z);
    for (long k = 2; k < 200000; ++k) {
      term = term * z2 / Cplx(Real((2 * k - 1) * (2 * k - 2)));
      Cplx t = term / Cplx(Real(2 * k - 1));
      sum += t;
      Real at = abs(t);
      if (at > big) big = at;
      if (at < eps * max(abs(sum), Real(1L)) && Real(2 * k) > abs(z)) {
        return GuardedValue{sum, big, k};
      }
    }
    throw ConvergenceError("shi: no convergence");
  }, &terms_shi);
  Cplx chi_v = run_guarded(wd, [&](long w) {
    Cplx term(1L), sum(0L);
    Real eps = pow10(-(w + 4)), big(1L);
    for (long k = 1; k < 200000; ++k) {
      term = term * z2 / Cplx(Real((2 * k) * (2 * k - 1)));
      Cplx t = term / Cplx(Real(2 * k));
      sum += t;
      Real at = abs(t);
      if (at > big) big = at;
      if (at < eps * max(abs(sum), Real(1L)) && Real(2 * k) > abs(z)) {
        Cplx v = real_euler() + log(z) + sum;
        return GuardedValue{v, big, k};
      }
    }
    throw ConvergenceError("chi: no convergence");
  }, &terms_chi);
  Real e = pow10(-(wd - 3));
  return {ValueWithError{shi_v, (abs(shi_v) + 1) * e, Rigor::rigorous},
          ValueWithError{chi_v, (abs(chi_v) + 1) * e, Rigor::rigorous}};
}

Cplx shi_chi_combo_raw(const Cplx& x, long target_digits) {
  // sinh Shi - cosh Chi without forming the e^{2x}-sized products.
  double rex = x.re.to_double();
  if (abs(x) < Real(40L)) {
    return run_guarded(target_digits, [&](long wd) {
      PrecisionContext c2;
      c2.decimal_digits = wd;
      c2.guard_digits = 5;
      auto sc = shi_chi(x, c2);
      Cplx v = sinh(x) * sc.first.value - cosh(x) * sc.second.value;
      Real big = exp(Real(2.0 * std::abs(rex))) / max(abs(x), Real(1L));
      return GuardedValue{v, big};
    });
  }
  // f = -(g+h)/2 with g = e^{-x} Ei(x), h = -e^{x} E1(x); mild O(|x|) loss
  long extra = static_cast<long>(std::log10(std::abs(rex))) + 6;
  PrecGuard pg(target_digits + extra);
  Cplx xx(Real(0L) + x.re, Real(0L) + x.im);
  Cplx g = expmx_ei_raw(xx, target_digits + extra);
  Cplx h = -expx_e1_raw(xx, target_digits + extra);
  return -(g + h) / 2;
}

ValueWithError shi_chi_combo(const Cplx& x, const PrecisionContext& ctx) {
  if (!(x.re > 0)) throw DomainError("shi_chi_combo: requires Re x > 0");
  long wd = ctx.working_digits();
  PrecGuard pg(wd);
  Cplx v = shi_chi_combo_raw(x, wd);
  return {v, (abs(v) + pow10(-wd)) * pow10(-(wd - 3)), Rigor::rigorous};
}

ValueWithError psi_series_closed(long m, const Cplx& z, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("psi_series_closed: m must be nonnegative");
  if (!(z.re > 0)) throw DomainError("psi_series_closed: requires Re z > 0");
  long wd = ctx.working_digits();
  PrecGuard pg(wd + 10);
  Cplx tz = 2 * z;
  Real g2m1 = r_gamma(Real(2 * m + 1));
  Cplx combo = shi_chi_combo_raw(tz, wd + 10);
  Cplx main = g2m1 * pow(tz, -2 * m) * (combo + log(tz) * cosh(tz));
  Cplx corr(0L);
  for (long j = 0; j <= m - 1; ++j) {
    long arg = 2 * m - 2 * j - 1;
    corr += r_digamma(Real(arg)) / r_gamma(Real(arg)) * pow(tz, -2 * j);
  }
  Cplx v = main - g2m1 / (tz * tz) * corr;
  PrecGuard pgo(wd);
  Cplx out(Real(0L) + v.re, Real(0L) + v.im);
  return {out, (abs(out) + 1) * pow10(-(wd - 4)), Rigor::rigorous};
}

}  // namespace gbessel

#include "gbessel/precision.hpp"

namespace gbessel {

PrecisionContext ctx_new(long decimal_digits) {
  if (decimal_digits < 10) throw DomainError("precision too small: need at least 10 digits");
  PrecisionContext ctx;
  ctx.decimal_digits = decimal_digits;
  return ctx;
}

ValueWithError vwe_add(const ValueWithError& a, const ValueWithError& b) {
  return {a.value + b.value, a.abs_error + b.abs_error, meet(a.rigor, b.rigor)};
}
ValueWithError vwe_sub(const ValueWithError& a, const ValueWithError& b) {
  return {a.value - b.value, a.abs_error + b.abs_error, meet(a.rigor, b.rigor)};
}
ValueWithError vwe_mul(const ValueWithError& a, const ValueWithError& b) {
  Real err = abs(a.value) * b.abs_error + abs(b.value) * a.abs_error + a.abs_error * b.abs_error;
  return {a.value * b.value, err, meet(a.rigor, b.rigor)};
}
ValueWithError vwe_div(const ValueWithError& a, const ValueWithError& b) {
  Cplx q = a.value / b.value;
  Real bb = abs(b.value);
  Real err = (a.abs_error + abs(q) * b.abs_error) / bb;
  return {q, err, meet(a.rigor, b.rigor)};
}
ValueWithError vwe_scale(const ValueWithError& a, const Cplx& c) {
  return {a.value * c, a.abs_error * abs(c), a.rigor};
}
ValueWithError vwe_exact(const Cplx& v, const PrecisionContext& ctx) {
  return {v, abs(v) * pow10(-(ctx.working_digits() - 2)), Rigor::rigorous};
}

Cplx run_guarded(long target_digits, const std::function<GuardedValue(long)>& eval,
                 long* terms_out) {
  long wd = target_digits + 8;
  GuardedValue g;
  for (int pass = 0; pass < 5; ++pass) {
    PrecGuard pg(wd);
    g = eval(wd);
    Real av = abs(g.value);
    long lost = 0;
    if (!g.biggest.is_zero() && !av.is_zero()) {
      Real ratio = g.biggest / av;
      if (ratio > 1) lost = log10(ratio).to_long() + 1;
    } else if (av.is_zero() && !g.biggest.is_zero()) {
      // fully cancelled at this precision: treat as losing everything we had
      lost = wd;
    }
    if (wd >= target_digits + lost + 6) break;
    wd = target_digits + lost + 12;
    if (wd > 100000) throw ConvergenceError("cancellation guard: precision demand exploded");
  }
  if (terms_out) *terms_out = g.terms;
  // round back to the caller's working precision
  return Cplx(Real(0L) + g.value.re, Real(0L) + g.value.im);
}

SeriesResult sum_series(const std::function<Cplx(long)>& term,
                        const std::function<Real(long)>& tail_bound,
                        const PrecisionContext& ctx) {
  SeriesResult out;
  Cplx s(0L);
  Real maxt(0L);
  Real heps = pow10(-ctx.working_digits());
  int tiny_run = 0;
  for (long n = 0; n < ctx.max_terms; ++n) {
    Cplx t = term(n);
    if (!t.is_finite()) throw DomainError("series term not finite at index " + std::to_string(n));
    s += t;
    Real at = abs(t);
    if (at > maxt) maxt = at;
    out.terms = n + 1;
    Real scale = max(Real(1L), abs(s));
    if (tail_bound) {
      Real tb = tail_bound(n);
      if (tb <= ctx.eps_target() * scale) {
        out.v = {s, tb + maxt * pow10(-(ctx.working_digits() + 5)) * Real(out.terms), Rigor::rigorous};
        return out;
      }
    } else {
      if (at < heps * max(abs(s), Real(1L))) {
        if (++tiny_run >= 3) {
          out.v = {s, Real(3L) * at + maxt * pow10(-(ctx.working_digits() + 5)) * Real(out.terms),
                   Rigor::heuristic};
          return out;
        }
      } else {
        tiny_run = 0;
      }
    }
  }
  throw ConvergenceError("no convergence: series did not meet target within max_terms");
}

}  // namespace gbessel

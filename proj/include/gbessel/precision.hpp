#pragma once

#include "gbessel/complex.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace gbessel {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};
// Precondition or parameter-range violations ("pole", "branch cut", ...).
struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(m) {}
};
// A series or quadrature failed to reach its target.
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& m) : Error(m) {}
};
struct UnknownNameError : Error {
  explicit UnknownNameError(const std::string& m) : Error(m) {}
};

// Shared precision budget. Internal work runs at decimal_digits + guard_digits.
struct PrecisionContext {
  long decimal_digits = 30;
  long guard_digits = 15;
  long max_terms = 100000;

  long working_digits() const { return decimal_digits + guard_digits; }
  // generic "down in the noise" thresholds
  Real eps_working() const { return pow10(-working_digits()); }
  Real eps_target() const { return pow10(-(decimal_digits + guard_digits / 2)); }
};

PrecisionContext ctx_new(long decimal_digits);

enum class Rigor { rigorous, heuristic };

// A computed value together with an a-posteriori bound on |true - value|.
// rigor==rigorous only when every truncation used a proven tail bound.
struct ValueWithError {
  Cplx value;
  Real abs_error;
  Rigor rigor = Rigor::heuristic;

  ValueWithError() : value(0L), abs_error(0L) {}
  ValueWithError(Cplx v, Real e, Rigor r) : value(std::move(v)), abs_error(std::move(e)), rigor(r) {}
};

inline Rigor meet(Rigor a, Rigor b) {
  return (a == Rigor::rigorous && b == Rigor::rigorous) ? Rigor::rigorous : Rigor::heuristic;
}

// Error model: additive through +/-, first order through * and /.
ValueWithError vwe_add(const ValueWithError& a, const ValueWithError& b);
ValueWithError vwe_sub(const ValueWithError& a, const ValueWithError& b);
ValueWithError vwe_mul(const ValueWithError& a, const ValueWithError& b);
ValueWithError vwe_div(const ValueWithError& a, const ValueWithError& b);
ValueWithError vwe_scale(const ValueWithError& a, const Cplx& c);
// exact value with rounding-level error at the context's working precision
ValueWithError vwe_exact(const Cplx& v, const PrecisionContext& ctx);

struct SeriesResult {
  ValueWithError v;
  long terms = 0;        // number of terms actually summed
  Real max_term{0L};     // largest |term| seen (cancellation diagnostics)
};

// Sums term(0) + term(1) + ... .
//
// With a tail_bound (monotone nonincreasing bound on |sum_{k>n} term(k)|) the
// result is rigorous and summation stops once the bound is below
// 10^-(digits+guard/2) * max(1,|S_n|). Without one, the heuristic rule stops
// after three consecutive terms below 10^-(digits+guard) * |S_n|.
// Throws ConvergenceError("no convergence") when ctx.max_terms is exhausted.
SeriesResult sum_series(const std::function<Cplx(long)>& term,
                        const std::function<Real(long)>& tail_bound,
                        const PrecisionContext& ctx);

// Evaluation result for run_guarded: value plus the largest intermediate
// magnitude that cancels into it.
struct GuardedValue {
  Cplx value;
  Real biggest;
  long terms = 0;
};

// Re-runs eval at raised working precision until the cancellation observed
// (log10 of biggest/|value|) still leaves target_digits of accuracy.
Cplx run_guarded(long target_digits, const std::function<GuardedValue(long)>& eval,
                 long* terms_out = nullptr);

}  // namespace gbessel

#include "sconvex/kernel_identity.hpp"

#include <cmath>
#include <sstream>

#include "sconvex/detail/powers.hpp"
#include "sconvex/toolkit.hpp"

namespace sconvex {

using detail::pow0;

KernelBreakpoint kernel_breakpoint(const Interval& iv, double x) {
  validate_eval_point(iv, x);
  return KernelBreakpoint{(iv.b() - x) / iv.length()};
}

double montgomery_kernel(double t, const Interval& iv, double x) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("kernel argument t must lie in [0, 1]");
  const double lambda = kernel_breakpoint(iv, x).lambda;
  return t <= lambda ? t : t - 1.0;
}

MontgomeryCheck verify_montgomery_identity(const Function1D& fn,
                                           const Interval& iv, double x,
                                           double tol,
                                           const Integrator& integrate) {
  if (!fn.has_derivative()) {
    throw DomainError("identity check needs a derivative evaluator for '" +
                      fn.label + "'");
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double lambda = kernel_breakpoint(iv, x).lambda;
  const double a = iv.a();
  const double b = iv.b();
  const double len = iv.length();
  const double inner_tol = 0.05 * tol;

  const double mean = integrate(fn.f, a, b, inner_tol * len) / len;
  const double lhs = fn(x) - mean;

  const auto& df = fn.df;
  auto arg = [a, b](double t) { return t * a + (1.0 - t) * b; };
  double kernel_integral = 0.0;
  if (lambda > 0.0) {
    kernel_integral += integrate(
        [&](double t) { return t * df(arg(t)); }, 0.0, lambda, inner_tol / len);
  }
  if (lambda < 1.0) {
    kernel_integral += integrate(
        [&](double t) { return (t - 1.0) * df(arg(t)); }, lambda, 1.0,
        inner_tol / len);
  }
  const double rhs = (a - b) * kernel_integral;

  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "montgomery identity f=" << fn.label << " [" << a << ',' << b
      << "] x=" << x << " lhs=" << lhs << " rhs=" << rhs;
  return MontgomeryCheck{lhs, rhs, make_record(std::abs(lhs - rhs), 0.0, tol, ctx.str())};
}

MontgomeryCheck verify_montgomery_identity(const Function1D& fn,
                                           const Interval& iv, double x,
                                           double tol) {
  return verify_montgomery_identity(fn, iv, x, tol, reference_integrator());
}

BoundResult classic_ostrowski_bound(const Interval& iv, double x, double M) {
  validate_eval_point(iv, x);
  if (!(M >= 0.0)) throw DomainError("M must be nonnegative");
  const double len = iv.length();
  const double off = x - iv.midpoint();
  const double value = M * len * (0.25 + off * off / (len * len));
  BoundInputs in{.a = iv.a(), .b = iv.b(), .x = x, .M = M};
  return make_bound(value, TheoremId::kClassicOstrowski, in);
}

HadamardBracket hadamard_sconvex_bounds(const Function1D& fn, const Interval& iv,
                                        SParam s, double tol,
                                        const Integrator& integrate) {
  require_sconvex_domain(iv);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double sv = s.value();
  HadamardBracket out;
  out.lower = std::pow(2.0, sv - 1.0) * fn(iv.midpoint());
  out.mean = integrate(fn.f, iv.a(), iv.b(), 0.05 * tol * iv.length()) / iv.length();
  out.upper = (fn(iv.a()) + fn(iv.b())) / (sv + 1.0);

  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "hermite-hadamard f=" << fn.label << " [" << iv.a() << ',' << iv.b()
      << "] s=" << sv;
  out.left = make_record(out.lower, out.mean, tol, ctx.str() + " lower<=mean");
  out.right = make_record(out.mean, out.upper, tol, ctx.str() + " mean<=upper");
  return out;
}

HadamardBracket hadamard_sconvex_bounds(const Function1D& fn, const Interval& iv,
                                        SParam s, double tol) {
  return hadamard_sconvex_bounds(fn, iv, s, tol, reference_integrator());
}

BoundResult alomari_bound(const Interval& iv, double x, SParam s,
                          const ConjugatePair& cp, double M) {
  validate_eval_point(iv, x);
  if (!(M >= 0.0)) throw DomainError("M must be nonnegative");
  const double p = cp.p();
  const double q = cp.q();
  const double sv = s.value();
  const double left = x - iv.a();
  const double right = iv.b() - x;
  const double value = M / std::pow(1.0 + p, 1.0 / p) *
                       std::pow(2.0 / (sv + 1.0), 1.0 / q) *
                       ((left * left + right * right) / iv.length());
  BoundInputs in{.a = iv.a(), .b = iv.b(), .x = x, .s = sv, .p = p, .q = q, .M = M};
  return make_bound(value, TheoremId::kAlomari, in);
}

BoundResult baseline_midpoint_bound(MidpointBaseline variant, const Interval& iv,
                                    const std::optional<ConjugatePair>& cp,
                                    double da, double db) {
  const EndpointData ep(da, db);
  const double len = iv.length();
  BoundInputs in{.a = iv.a(), .b = iv.b(), .da = da, .db = db};
  if (variant == MidpointBaseline::kEq14) {
    return make_bound(len / 4.0 * ((da + db) / 2.0), TheoremId::kMidpointEq14, in);
  }
  if (!cp) throw DomainError("eq15/eq16 need the exponent p");
  const double p = cp->p();
  const double q = cp->q();
  in.p = p;
  in.q = q;
  const double factor = std::pow(4.0 / (p + 1.0), 1.0 / p);
  if (variant == MidpointBaseline::kEq15) {
    const double daq = pow0(da, q);
    const double dbq = pow0(db, q);
    const double bracket =
        std::pow(daq + 3.0 * dbq, 1.0 / q) + std::pow(3.0 * daq + dbq, 1.0 / q);
    return make_bound(len / 16.0 * factor * bracket, TheoremId::kMidpointEq15, in);
  }
  return make_bound(len / 4.0 * factor * (da + db), TheoremId::kMidpointEq16, in);
}

}  // namespace sconvex

#pragma once

#include <optional>

#include "sconvex/core_types.hpp"

namespace sconvex {

/// lambda = (b - x)/(b - a), where the Montgomery kernel switches branch.
struct KernelBreakpoint {
  double lambda;
};

/// The single place lambda is computed; every caller shares this expression.
KernelBreakpoint kernel_breakpoint(const Interval& iv, double x);

/// p(t) = t for t <= lambda, t - 1 for t > lambda.
double montgomery_kernel(double t, const Interval& iv, double x);

/// Both sides of f(x) - mean(f) = (a - b) * int_0^1 p(t) f'(ta + (1-t)b) dt
/// and the record of |LHS - RHS| <= tol (record.lhs = |LHS - RHS|,
/// record.rhs = 0).
struct MontgomeryCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  VerificationRecord record;
};

/// Both integrals go through `integrate`; the kernel integral is split at
/// lambda. Throws DomainError without a derivative evaluator.
MontgomeryCheck verify_montgomery_identity(const Function1D& fn,
                                           const Interval& iv, double x,
                                           double tol,
                                           const Integrator& integrate);
MontgomeryCheck verify_montgomery_identity(const Function1D& fn,
                                           const Interval& iv, double x,
                                           double tol);

/// M (b-a) [1/4 + (x - (a+b)/2)^2 / (b-a)^2].
BoundResult classic_ostrowski_bound(const Interval& iv, double x, double M);

/// Hermite-Hadamard bracket 2^{s-1} f(mid) <= mean(f) <= (f(a)+f(b))/(s+1).
struct HadamardBracket {
  double lower = 0.0;
  double mean = 0.0;
  double upper = 0.0;
  VerificationRecord left;   // lower <= mean
  VerificationRecord right;  // mean <= upper
};

HadamardBracket hadamard_sconvex_bounds(const Function1D& fn, const Interval& iv,
                                        SParam s, double tol,
                                        const Integrator& integrate);
HadamardBracket hadamard_sconvex_bounds(const Function1D& fn, const Interval& iv,
                                        SParam s, double tol);

/// Alomari et al.:
/// M/(1+p)^{1/p} (2/(s+1))^{1/q} ((x-a)^2 + (b-x)^2)/(b-a).
BoundResult alomari_bound(const Interval& iv, double x, SParam s,
                          const ConjugatePair& cp, double M);

enum class MidpointBaseline { kEq14, kEq15, kEq16 };

/// The three classical midpoint bounds. eq15 and eq16 need a conjugate pair.
BoundResult baseline_midpoint_bound(MidpointBaseline variant, const Interval& iv,
                                    const std::optional<ConjugatePair>& cp,
                                    double da, double db);

}  // namespace sconvex

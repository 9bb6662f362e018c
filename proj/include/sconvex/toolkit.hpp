#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sconvex/core_types.hpp"

namespace sconvex {

// ---------------------------------------------------------------------------
// Reference integrator (the brute-force oracle)
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultPanelBudget = 200000;

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Global adaptive Gauss-Kronrod (G7/K15). The panel with the largest
/// |K15 - G7| is bisected at its exact midpoint until the summed estimate
/// falls below tol (or the roundoff floor of the integral). Deterministic.
/// Throws OracleError when the panel budget is exhausted.
IntegrationResult adaptive_integrate(const Evaluator& f, double lo, double hi,
                                     double tol,
                                     std::size_t panel_budget = kDefaultPanelBudget);

/// Integral of fn over iv to absolute accuracy tol.
double reference_integrate(const Function1D& fn, const Interval& iv, double tol);

/// The reference integrator packaged for injection into other modules.
Integrator reference_integrator();

/// |f(x) - (1/(b-a)) * integral of f over [a, b]|.
double true_deviation(const Function1D& fn, const Interval& iv, double x,
                      double tol);

// ---------------------------------------------------------------------------
// Breckner test family: f(0) = u, f(t) = v t^s + w for t > 0
// ---------------------------------------------------------------------------

struct BrecknerFunction {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  SParam s{1.0};

  /// v >= 0 and 0 <= w <= u, the sufficient condition for K_s^2.
  bool satisfies_membership_condition() const {
    return v >= 0.0 && 0.0 <= w && w <= u;
  }
};

/// The derivative evaluator returns NaN at t <= 0, where it is undefined.
Function1D make_breckner(double u, double v, double w, SParam s);
Function1D make_breckner(const BrecknerFunction& params);

/// t -> |f'(t)|^q, built from fn's derivative evaluator.
Function1D abs_derivative_power(const Function1D& fn, double q);

// ---------------------------------------------------------------------------
// Grid falsification of s-convexity
// ---------------------------------------------------------------------------

struct SConvexWitness {
  double x = 0.0;
  double y = 0.0;
  double alpha = 0.0;
};

struct SConvexityReport {
  bool is_consistent = false;  // worst_violation <= tol
  double worst_violation = 0.0;
  SConvexWitness witness;
  double tol = kDefaultTol;
  std::string context;
};

inline constexpr std::size_t kDefaultSConvexGrid = 21;

/// Evaluates f(ax + (1-a)y) - a^s f(x) - (1-a)^s f(y) on every triple of a
/// grid_n-point grid over domain x domain x [0, 1] and reports the maximum.
/// A consistent report falsifies nothing; it does not certify membership.
SConvexityReport check_sconvex(const Function1D& fn, SParam s,
                               const Interval& domain,
                               std::size_t grid_n = kDefaultSConvexGrid,
                               double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Function registry
// ---------------------------------------------------------------------------

/// Parses `breckner:u,v,w,s`, `poly:c0,c1,...` or `powabs:k` (|t|^k).
/// Whitespace anywhere in the function spec is ignored. Throws DomainError.
Function1D parse_function_spec(std::string_view spec);

Function1D make_polynomial(std::vector<double> coeffs);
Function1D make_powabs(double k);

}  // namespace sconvex

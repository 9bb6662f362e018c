#pragma once

#include <optional>

#include "sconvex/core_types.hpp"

namespace sconvex {

/// A(a, b) = (a + b)/2 for a, b > 0.
double arithmetic_mean(double a, double b);

/// L(a, b) = (b - a)/(ln b - ln a), and a when a = b.
double logarithmic_mean(double a, double b);

/// L_r(a, b) = [(b^{r+1} - a^{r+1})/((r+1)(b-a))]^{1/r}, and a when a = b.
/// r in {-1, 0} is rejected: those means are defined by convention, not by
/// this formula.
double p_logarithmic_mean(double a, double b, double r);

/// |A^s(a, b) - L_s^s(a, b)| for 0 < a < b and s in (0, 1). This is the
/// Ostrowski deviation of t^s at the midpoint of [a, b].
double means_gap(double a, double b, SParam s);

/// Compares means_gap against the oracle deviation of t^s at (a+b)/2:
/// record.lhs = |closed form - oracle|, record.rhs = 10 * oracle_tol.
VerificationRecord cross_check_means_gap(double a, double b, SParam s,
                                         double oracle_tol);

enum class MeansBoundKind { kP1, kP2, kP3 };

/// p1 needs nothing, p2 needs the Hoelder exponent p > 1, p3 needs q >= 1.
struct MeansBoundVariant {
  MeansBoundKind kind = MeansBoundKind::kP1;
  std::optional<double> param;
};

BoundResult means_gap_bound(double a, double b, SParam s,
                            const MeansBoundVariant& variant);

}  // namespace sconvex

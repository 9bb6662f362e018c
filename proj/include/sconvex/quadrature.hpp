#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sconvex/core_types.hpp"

namespace sconvex {

/// Division a = x_0 < x_1 < ... < x_n = b with n >= 1.
class Partition {
 public:
  explicit Partition(std::vector<double> nodes);
  static Partition uniform(const Interval& iv, std::size_t panels);

  std::span<const double> nodes() const { return nodes_; }
  std::size_t panels() const { return nodes_.size() - 1; }
  double a() const { return nodes_.front(); }
  double b() const { return nodes_.back(); }

 private:
  std::vector<double> nodes_;
};

/// T(f, d) = sum f((x_i + x_{i+1})/2) (x_{i+1} - x_i).
double composite_midpoint(const Function1D& fn, const Partition& d);

enum class MidpointRule { kP4, kP5, kP6 };

std::string_view to_string(MidpointRule rule);
std::optional<MidpointRule> midpoint_rule_from_string(std::string_view tag);

/// Which error bound certifies a run. p4 takes the exponent p > 1, p6 takes
/// q >= 1, p5 takes nothing.
struct QuadVariant {
  MidpointRule rule = MidpointRule::kP4;
  std::optional<double> param;
};

/// Per-panel error-bound sum using |f'| at the two ends of each panel.
double midpoint_error_bound(const Partition& d, std::span<const double> dvals,
                            const QuadVariant& variant);

/// |f'(x_i)| at every node from the exact derivative evaluator.
std::vector<double> node_derivative_magnitudes(const Function1D& fn,
                                               const Partition& d);

struct QuadReport {
  double approx = 0.0;
  double error_bound = 0.0;
  QuadVariant variant;
  std::size_t panels = 0;
  std::optional<double> true_error;  // filled in verification mode
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultQuadBudget = std::size_t{1} << 20;

/// Doubles a uniform partition, starting at one panel, until the chosen
/// error bound is at most target. Throws BudgetExhausted once the panel
/// count would pass the budget.
QuadReport certified_integrate(const Function1D& fn, const Interval& iv,
                               double target, const QuadVariant& variant,
                               std::size_t panel_budget = kDefaultQuadBudget);

/// Fills report.true_error = oracle integral - approx and returns the record
/// |true_error| <= error_bound + tol.
VerificationRecord verify_quadrature(QuadReport& report, const Function1D& fn,
                                     const Interval& iv, double oracle_tol,
                                     double tol = 1e-9);

}  // namespace sconvex

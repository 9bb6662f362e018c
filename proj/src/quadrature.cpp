#include "sconvex/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "sconvex/detail/powers.hpp"
#include "sconvex/kernels.hpp"
#include "sconvex/toolkit.hpp"

namespace sconvex {

using detail::pow0;

Partition::Partition(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw DomainError("partition needs at least one panel");
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i]) || !(nodes_[i] < nodes_[i + 1])) {
      throw DomainError("partition nodes must be finite and strictly increasing");
    }
  }
  if (!std::isfinite(nodes_.back())) {
    throw DomainError("partition nodes must be finite and strictly increasing");
  }
}

Partition Partition::uniform(const Interval& iv, std::size_t panels) {
  if (panels == 0) throw DomainError("partition needs at least one panel");
  std::vector<double> nodes(panels + 1);
  const double n = static_cast<double>(panels);
  for (std::size_t i = 0; i <= panels; ++i) {
    nodes[i] = iv.a() + iv.length() * (static_cast<double>(i) / n);
  }
  nodes.back() = iv.b();
  return Partition(std::move(nodes));
}

double composite_midpoint(const Function1D& fn, const Partition& d) {
  return kernels::omp::midpoint_sum(fn.f, d.nodes());
}

std::string_view to_string(MidpointRule rule) {
  switch (rule) {
    case MidpointRule::kP4: return "p4";
    case MidpointRule::kP5: return "p5";
    case MidpointRule::kP6: return "p6";
  }
  return "unknown";
}

std::optional<MidpointRule> midpoint_rule_from_string(std::string_view tag) {
  if (tag == "p4") return MidpointRule::kP4;
  if (tag == "p5") return MidpointRule::kP5;
  if (tag == "p6") return MidpointRule::kP6;
  return std::nullopt;
}

double midpoint_error_bound(const Partition& d, std::span<const double> dvals,
                            const QuadVariant& variant) {
  const auto nodes = d.nodes();
  if (dvals.size() != nodes.size()) {
    throw DomainError("derivative magnitudes must align with partition nodes");
  }
  for (double v : dvals) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("derivative magnitudes must be finite and nonnegative");
    }
  }
  switch (variant.rule) {
    case MidpointRule::kP4: {
      if (!variant.param) throw DomainError("p4 needs the exponent p");
      const double p = make_conjugate(*variant.param).p();
      const double sum = kernels::omp::bound_sum(
          nodes, dvals, [](double dl, double dr) { return dr + dl; });
      return sum / (4.0 * std::pow(p + 1.0, 1.0 / p));
    }
    case MidpointRule::kP5: {
      const double sum = kernels::omp::bound_sum(
          nodes, dvals,
          [](double dl, double dr) { return std::sqrt(dr * dr + dl * dl); });
      return sum / (2.0 * std::sqrt(6.0));
    }
    case MidpointRule::kP6: {
      if (!variant.param) throw DomainError("p6 needs the exponent q");
      const double q = *variant.param;
      if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("p6 requires q >= 1");
      const double sum = kernels::omp::bound_sum(nodes, dvals, [q](double dl, double dr) {
        const double lq = pow0(dl, q);
        const double rq = pow0(dr, q);
        return pow0(lq + 3.0 * rq, 1.0 / q) + pow0(3.0 * lq + rq, 1.0 / q);
      });
      return sum / 8.0 * std::pow(1.0 / 3.0, 1.0 / q);
    }
  }
  throw DomainError("unknown midpoint rule");
}

std::vector<double> node_derivative_magnitudes(const Function1D& fn,
                                               const Partition& d) {
  if (!fn.has_derivative()) {
    throw DomainError("certified quadrature needs a derivative evaluator for '" +
                      fn.label + "'");
  }
  const auto nodes = d.nodes();
  std::vector<double> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double v = std::abs(fn.df(nodes[i]));
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "derivative of '" << fn.label << "' is not finite at t=" << nodes[i];
      throw DomainError(os.str());
    }
    out[i] = v;
  }
  return out;
}

QuadReport certified_integrate(const Function1D& fn, const Interval& iv,
                               double target, const QuadVariant& variant,
                               std::size_t panel_budget) {
  if (!(target > 0.0)) throw DomainError("target error must be positive");
  for (std::size_t n = 1; n <= panel_budget; n *= 2) {
    const auto d = Partition::uniform(iv, n);
    const auto dvals = node_derivative_magnitudes(fn, d);
    const double bound = midpoint_error_bound(d, dvals, variant);
    if (bound <= target) {
      return QuadReport{composite_midpoint(fn, d), bound, variant, n, std::nullopt};
    }
  }
  std::ostringstream os;
  os << "error bound " << to_string(variant.rule) << " did not reach target "
     << target << " within " << panel_budget << " panels";
  throw BudgetExhausted(os.str());
}

VerificationRecord verify_quadrature(QuadReport& report, const Function1D& fn,
                                     const Interval& iv, double oracle_tol,
                                     double tol) {
  const double exact = reference_integrate(fn, iv, oracle_tol);
  report.true_error = exact - report.approx;
  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "midpoint certification f=" << fn.label << " variant="
      << to_string(report.variant.rule) << " panels=" << report.panels;
  return make_record(std::abs(*report.true_error), report.error_bound, tol, ctx.str());
}

}  // namespace sconvex

#include "sconvex/core_types.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

namespace sconvex {

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

constexpr std::array<std::pair<TheoremId, std::string_view>, 16> kTags{{
    {TheoremId::kClassicOstrowski, "eq11"},
    {TheoremId::kAlomari, "ee"},
    {TheoremId::kMidpointEq14, "eq14"},
    {TheoremId::kMidpointEq15, "eq15"},
    {TheoremId::kMidpointEq16, "eq16"},
    {TheoremId::kSConvexAbs, "t20"},
    {TheoremId::kMidpointSConvexAbs, "cor1"},
    {TheoremId::kHolderSplit, "teo1"},
    {TheoremId::kHolderHadamard, "t21"},
    {TheoremId::kMidpointE5, "e5"},
    {TheoremId::kHolderGlobal, "z"},
    {TheoremId::kPowerMean, "t22"},
    {TheoremId::kMidpointPowerMean, "c23"},
    {TheoremId::kMeansP1, "p1"},
    {TheoremId::kMeansP2, "p2"},
    {TheoremId::kMeansP3, "p3"},
}};

}  // namespace

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("interval endpoints must be finite");
  }
  if (!(a < b)) {
    throw DomainError("interval requires a < b");
  }
}

Interval make_sconvex_interval(double a, double b) {
  Interval iv(a, b);
  require_sconvex_domain(iv);
  return iv;
}

void require_sconvex_domain(const Interval& iv) {
  if (iv.a() < 0.0) {
    throw DomainError("s-convex domain requires a >= 0");
  }
}

SParam::SParam(double s) : s_(s) {
  if (!(s > 0.0 && s <= 1.0)) {
    throw DomainError("s must lie in (0, 1]");
  }
}

ConjugatePair make_conjugate(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("conjugate exponent requires p > 1");
  }
  return ConjugatePair(p, p / (p - 1.0));
}

EndpointData::EndpointData(double da_in, double db_in, std::optional<double> dx_in)
    : da(da_in), db(db_in), dx(dx_in) {
  auto bad = [](double v) { return !(v >= 0.0) || !std::isfinite(v); };
  if (bad(da) || bad(db) || (dx && bad(*dx))) {
    throw DomainError("derivative magnitudes must be finite and nonnegative");
  }
}

std::string_view to_string(TheoremId id) {
  for (const auto& [tid, tag] : kTags) {
    if (tid == id) return tag;
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view tag) {
  for (const auto& [tid, name] : kTags) {
    if (name == tag) return tid;
  }
  return std::nullopt;
}

BoundResult make_bound(double value, TheoremId id, BoundInputs inputs) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError("bound " + std::string(to_string(id)) +
                      " evaluated to a non-finite or negative value");
  }
  return BoundResult{value, id, inputs};
}

VerificationRecord make_record(double lhs, double rhs, double tol,
                               std::string context) {
  VerificationRecord rec;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.tol = tol;
  rec.margin = rhs - lhs;
  rec.holds = lhs <= rhs + tol;
  if (!context.empty()) context += ' ';
  context += "tol=" + fmt_num(tol);
  rec.context = std::move(context);
  return rec;
}

double validate_eval_point(const Interval& iv, double x) {
  if (!std::isfinite(x) || !iv.contains(x)) {
    throw DomainError("evaluation point x must lie in [a, b]");
  }
  return x;
}

}  // namespace sconvex

#include "sconvex/ostrowski_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sconvex/detail/powers.hpp"
#include "sconvex/kernel_identity.hpp"

namespace sconvex {

using detail::pow0;

namespace {

struct Ratios {
  double lambda;
  double mu;
};

Ratios ratios(const Interval& iv, double x) {
  require_sconvex_domain(iv);
  const double lambda = kernel_breakpoint(iv, x).lambda;
  return Ratios{lambda, (x - iv.a()) / iv.length()};
}

BoundInputs echo(const Interval& iv, double x, double s, const EndpointData& ep) {
  return BoundInputs{.a = iv.a(), .b = iv.b(), .x = x, .s = s, .da = ep.da,
                     .db = ep.db, .dx = ep.dx};
}

void require_q(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("q must satisfy q >= 1");
}

}  // namespace

double sconvex_abs_bracket(double r, SParam s) {
  const double sv = s.value();
  return 2.0 * (sv + 1.0) * pow0(r, sv + 2.0) - (sv + 2.0) * pow0(r, sv + 1.0) + 1.0;
}

BoundResult bound_sconvex_abs(const Interval& iv, double x, SParam s,
                              const EndpointData& ep) {
  const auto [lambda, mu] = ratios(iv, x);
  const double sv = s.value();
  const double value = iv.length() / ((sv + 1.0) * (sv + 2.0)) *
                       (sconvex_abs_bracket(lambda, s) * ep.da +
                        sconvex_abs_bracket(mu, s) * ep.db);
  return make_bound(value, TheoremId::kSConvexAbs, echo(iv, x, sv, ep));
}

BoundResult midpoint_sconvex_abs(const Interval& iv, SParam s,
                                 const EndpointData& ep) {
  require_sconvex_domain(iv);
  const double sv = s.value();
  const double value = iv.length() / ((sv + 1.0) * (sv + 2.0)) *
                       (1.0 - 1.0 / std::pow(2.0, sv + 1.0)) * (ep.da + ep.db);
  return make_bound(value, TheoremId::kMidpointSConvexAbs,
                    echo(iv, iv.midpoint(), sv, ep));
}

BoundResult bound_holder_split(const Interval& iv, double x, SParam s,
                               const ConjugatePair& cp, const EndpointData& ep) {
  const auto [lambda, mu] = ratios(iv, x);
  const double sv = s.value();
  const double p = cp.p();
  const double q = cp.q();
  const double daq = pow0(ep.da, q);
  const double dbq = pow0(ep.db, q);
  const double lam_s1 = pow0(lambda, sv + 1.0);
  const double mu_s1 = pow0(mu, sv + 1.0);

  const double first = pow0(lambda, 1.0 + 1.0 / p) *
                       pow0(lam_s1 * daq + (1.0 - mu_s1) * dbq, 1.0 / q);
  const double second = pow0(mu, 1.0 + 1.0 / p) *
                        pow0((1.0 - lam_s1) * daq + mu_s1 * dbq, 1.0 / q);
  const double value = iv.length() / std::pow(p + 1.0, 1.0 / p) /
                       std::pow(sv + 1.0, 1.0 / q) * (first + second);
  auto in = echo(iv, x, sv, ep);
  in.p = p;
  in.q = q;
  return make_bound(value, TheoremId::kHolderSplit, in);
}

BoundResult bound_holder_hadamard(const Interval& iv, double x, SParam s,
                                  const ConjugatePair& cp, const EndpointData& ep) {
  ratios(iv, x);
  if (!ep.dx) throw DomainError("t21 needs |f'(x)| (dx)");
  const double sv = s.value();
  const double p = cp.p();
  const double q = cp.q();
  const double daq = pow0(ep.da, q);
  const double dbq = pow0(ep.db, q);
  const double dxq = pow0(*ep.dx, q);
  const double right = iv.b() - x;
  const double left = x - iv.a();
  const double value =
      1.0 / (iv.length() * std::pow(p + 1.0, 1.0 / p)) *
      (right * right * pow0((dxq + dbq) / (sv + 1.0), 1.0 / q) +
       left * left * pow0((daq + dxq) / (sv + 1.0), 1.0 / q));
  auto in = echo(iv, x, sv, ep);
  in.p = p;
  in.q = q;
  return make_bound(value, TheoremId::kHolderHadamard, in);
}

BoundResult midpoint_e5(const Interval& iv, const ConjugatePair& cp,
                        const EndpointData& ep) {
  require_sconvex_domain(iv);
  const double p = cp.p();
  const double value =
      iv.length() / std::pow(p + 1.0, 1.0 / p) * ((ep.db + ep.da) / 4.0);
  BoundInputs in{.a = iv.a(), .b = iv.b(), .x = iv.midpoint(), .p = p,
                 .q = cp.q(), .da = ep.da, .db = ep.db};
  return make_bound(value, TheoremId::kMidpointE5, in);
}

BoundResult bound_holder_global(const Interval& iv, double x, SParam s,
                                const ConjugatePair& cp, const EndpointData& ep) {
  const auto [lambda, mu] = ratios(iv, x);
  const double sv = s.value();
  const double p = cp.p();
  const double q = cp.q();
  const double kernel_norm = std::pow(pow0(lambda, p + 1.0) + pow0(mu, p + 1.0), 1.0 / p);
  const double deriv =
      pow0((pow0(ep.da, q) + pow0(ep.db, q)) / (sv + 1.0), 1.0 / q);
  const double value = iv.length() / std::pow(p + 1.0, 1.0 / p) * kernel_norm * deriv;
  auto in = echo(iv, x, sv, ep);
  in.p = p;
  in.q = q;
  return make_bound(value, TheoremId::kHolderGlobal, in);
}

BoundResult bound_power_mean(const Interval& iv, double x, SParam s, double q,
                             const EndpointData& ep) {
  require_q(q);
  const auto [lambda, mu] = ratios(iv, x);
  const double sv = s.value();
  const double daq = pow0(ep.da, q);
  const double dbq = pow0(ep.db, q);
  // int_0^r t^{s+1} dt and int_0^{1-r} t (1-t)^s dt, as functions of r.
  auto c1 = [sv](double r) { return pow0(r, sv + 2.0) / (sv + 2.0); };
  auto c2 = [sv](double r) {
    return pow0(r, sv + 2.0) / (sv + 2.0) - pow0(r, sv + 1.0) / (sv + 1.0) +
           1.0 / ((sv + 1.0) * (sv + 2.0));
  };
  // r^0 is 1 even at r = 0 (q = 1); the inner brackets are integrals of
  // nonnegative weights, so rounding below zero is clamped.
  const double outer = 2.0 * (1.0 - 1.0 / q);
  auto weight = [outer](double r) { return outer == 0.0 ? 1.0 : pow0(r, outer); };
  auto root = [q](double v) { return pow0(std::max(v, 0.0), 1.0 / q); };
  const double first = weight(lambda) * root(c1(lambda) * daq + c2(mu) * dbq);
  const double second = weight(mu) * root(c1(mu) * dbq + c2(lambda) * daq);
  const double value = iv.length() * std::pow(0.5, 1.0 - 1.0 / q) * (first + second);
  auto in = echo(iv, x, sv, ep);
  in.q = q;
  return make_bound(value, TheoremId::kPowerMean, in);
}

BoundResult midpoint_power_mean(const Interval& iv, double q,
                                const EndpointData& ep) {
  require_q(q);
  require_sconvex_domain(iv);
  const double daq = pow0(ep.da, q);
  const double dbq = pow0(ep.db, q);
  const double bracket =
      pow0(daq + 3.0 * dbq, 1.0 / q) + pow0(3.0 * daq + dbq, 1.0 / q);
  const double value = iv.length() / 8.0 * std::pow(1.0 / 3.0, 1.0 / q) * bracket;
  BoundInputs in{.a = iv.a(), .b = iv.b(), .x = iv.midpoint(), .s = 1.0, .q = q,
                 .da = ep.da, .db = ep.db};
  return make_bound(value, TheoremId::kMidpointPowerMean, in);
}

}  // namespace sconvex

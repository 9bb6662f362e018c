#include "sconvex/special_means.hpp"

#include <cmath>
#include <sstream>

#include "sconvex/toolkit.hpp"

namespace sconvex {

namespace {

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("means need finite positive arguments");
  }
}

void require_gap_domain(double a, double b, SParam s) {
  require_positive(a, b);
  if (!(a < b)) throw DomainError("means gap requires 0 < a < b");
  if (!(s.value() < 1.0)) throw DomainError("means gap requires s in (0, 1)");
}

}  // namespace

double arithmetic_mean(double a, double b) {
  require_positive(a, b);
  return 0.5 * (a + b);
}

double logarithmic_mean(double a, double b) {
  require_positive(a, b);
  if (a == b) return a;
  return (b - a) / (std::log(b) - std::log(a));
}

double p_logarithmic_mean(double a, double b, double r) {
  require_positive(a, b);
  if (r == -1.0 || r == 0.0 || !std::isfinite(r)) {
    throw DomainError("p-logarithmic mean is not evaluated for r in {-1, 0}");
  }
  if (a == b) return a;
  const double ratio =
      (std::pow(b, r + 1.0) - std::pow(a, r + 1.0)) / ((r + 1.0) * (b - a));
  return std::pow(ratio, 1.0 / r);
}

double means_gap(double a, double b, SParam s) {
  require_gap_domain(a, b, s);
  const double sv = s.value();
  // L_s^s written without the outer 1/s root.
  const double ls_s =
      (std::pow(b, sv + 1.0) - std::pow(a, sv + 1.0)) / ((sv + 1.0) * (b - a));
  return std::abs(std::pow(arithmetic_mean(a, b), sv) - ls_s);
}

VerificationRecord cross_check_means_gap(double a, double b, SParam s,
                                         double oracle_tol) {
  const double closed = means_gap(a, b, s);
  const Interval iv(a, b);
  const double oracle =
      true_deviation(make_breckner(0.0, 1.0, 0.0, s), iv, iv.midpoint(), oracle_tol);
  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "means gap a=" << a << " b=" << b << " s=" << s.value()
      << " closed=" << closed << " oracle=" << oracle;
  return make_record(std::abs(closed - oracle), 10.0 * oracle_tol, 0.0, ctx.str());
}

BoundResult means_gap_bound(double a, double b, SParam s,
                            const MeansBoundVariant& variant) {
  require_gap_domain(a, b, s);
  const double sv = s.value();
  const double len = b - a;
  BoundInputs in{.a = a, .b = b, .s = sv};

  switch (variant.kind) {
    case MeansBoundKind::kP1: {
      const double value = len * sv / ((sv + 1.0) * (sv + 2.0)) *
                           (1.0 - 1.0 / std::pow(2.0, sv + 1.0)) *
                           (std::pow(a, sv - 1.0) + std::pow(b, sv - 1.0));
      return make_bound(value, TheoremId::kMeansP1, in);
    }
    case MeansBoundKind::kP2: {
      if (!variant.param) throw DomainError("p2 needs the exponent p");
      const auto cp = make_conjugate(*variant.param);
      const double p = cp.p();
      const double q = cp.q();
      const double e = q * (sv - 1.0);
      const double A = arithmetic_mean(a, b);
      const double bracket =
          std::pow((std::pow(A, e) + std::pow(b, e)) / (sv + 1.0), 1.0 / q) +
          std::pow((std::pow(a, e) + std::pow(A, e)) / (sv + 1.0), 1.0 / q);
      in.p = p;
      in.q = q;
      return make_bound(sv * len / 4.0 / std::pow(p + 1.0, 1.0 / p) * bracket,
                        TheoremId::kMeansP2, in);
    }
    case MeansBoundKind::kP3: {
      if (!variant.param) throw DomainError("p3 needs the exponent q");
      const double q = *variant.param;
      if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("p3 requires q >= 1");
      const double e = q * (sv - 1.0);
      const double ae = std::pow(a, e);
      const double be = std::pow(b, e);
      const double bracket = std::pow(arithmetic_mean(ae, 3.0 * be), 1.0 / q) +
                             std::pow(arithmetic_mean(3.0 * ae, be), 1.0 / q);
      in.q = q;
      return make_bound(sv * len / 8.0 * std::pow(2.0 / 3.0, 1.0 / q) * bracket,
                        TheoremId::kMeansP3, in);
    }
  }
  throw DomainError("unknown means bound variant");
}

}  // namespace sconvex

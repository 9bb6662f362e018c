#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sconvex {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the reference integrator cannot reach its tolerance.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval [a, b] with a < b.
class Interval {
 public:
  Interval(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  double midpoint() const { return 0.5 * (a_ + b_); }
  bool contains(double x) const { return a_ <= x && x <= b_; }

 private:
  double a_;
  double b_;
};

/// Interval that additionally satisfies a >= 0, the domain of K_s^2.
Interval make_sconvex_interval(double a, double b);
void require_sconvex_domain(const Interval& iv);

/// s in (0, 1].
class SParam {
 public:
  explicit SParam(double s);
  double value() const { return s_; }

 private:
  double s_;
};

/// Hoelder conjugate exponents, 1/p + 1/q = 1.
class ConjugatePair {
 public:
  double p() const { return p_; }
  double q() const { return q_; }

 private:
  friend ConjugatePair make_conjugate(double p);
  ConjugatePair(double p, double q) : p_(p), q_(q) {}
  double p_;
  double q_;
};

ConjugatePair make_conjugate(double p);

/// Derivative magnitudes |f'(a)|, |f'(b)| and optionally |f'(x)|.
struct EndpointData {
  double da = 0.0;
  double db = 0.0;
  std::optional<double> dx;

  EndpointData(double da, double db, std::optional<double> dx = std::nullopt);
};

using Evaluator = std::function<double(double)>;

/// A real function with an optional first-derivative evaluator.
struct Function1D {
  Evaluator f;
  Evaluator df;  // empty when no derivative is known
  std::string label;

  double operator()(double t) const { return f(t); }
  bool has_derivative() const { return static_cast<bool>(df); }
};

/// Integrates an evaluator over [lo, hi] to absolute accuracy tol.
using Integrator =
    std::function<double(const Evaluator&, double lo, double hi, double tol)>;

enum class TheoremId {
  kClassicOstrowski,    // eq11
  kAlomari,             // ee
  kMidpointEq14,        // eq14
  kMidpointEq15,        // eq15
  kMidpointEq16,        // eq16
  kSConvexAbs,          // t20
  kMidpointSConvexAbs,  // cor1
  kHolderSplit,         // teo1
  kHolderHadamard,      // t21
  kMidpointE5,          // e5
  kHolderGlobal,        // z
  kPowerMean,           // t22
  kMidpointPowerMean,   // c23
  kMeansP1,
  kMeansP2,
  kMeansP3,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view tag);

/// Echo of every input a bound was evaluated with.
struct BoundInputs {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> x;
  std::optional<double> s;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> da;
  std::optional<double> db;
  std::optional<double> dx;
  std::optional<double> M;
};

struct BoundResult {
  double value = 0.0;
  TheoremId theorem = TheoremId::kClassicOstrowski;
  BoundInputs inputs;
};

/// Builds a BoundResult, rejecting negative or non-finite values.
BoundResult make_bound(double value, TheoremId id, BoundInputs inputs);

inline constexpr double kDefaultTol = 1e-12;

/// One checked inequality lhs <= rhs (+ tol).
struct VerificationRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin = 0.0;  // rhs - lhs
  double tol = kDefaultTol;
  std::string context;
};

/// `tol=<tol>` is appended to context.
VerificationRecord make_record(double lhs, double rhs, double tol,
                               std::string context);

/// Passes iff a <= x <= b; returns x.
double validate_eval_point(const Interval& iv, double x);

}  // namespace sconvex

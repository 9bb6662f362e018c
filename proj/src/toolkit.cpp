#include "sconvex/toolkit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "sconvex/kernels.hpp"

namespace sconvex {

namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss points.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;
};

double eval_checked(const Evaluator& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand returned a non-finite value at t=" << t;
    throw OracleError(os.str());
  }
  return v;
}

Panel gauss_kronrod(const Evaluator& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = eval_checked(f, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = eval_checked(f, center - dx);
    const double f2 = eval_checked(f, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  return Panel{lo, hi, kronrod, std::abs(kronrod - gauss), abs_sum * half};
}

// Larger error first; ties broken by position for determinism.
bool heap_less(const Panel& l, const Panel& r) {
  if (l.error != r.error) return l.error < r.error;
  return l.lo > r.lo;
}

std::string strip_whitespace(std::string_view in) {
  std::string out;
  for (char c : in) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<double> parse_numbers(std::string_view list, std::string_view spec) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string token(list.substr(pos, comma - pos));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size() || !std::isfinite(v)) {
      throw DomainError("bad number '" + token + "' in function spec '" +
                        std::string(spec) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

IntegrationResult adaptive_integrate(const Evaluator& f, double lo, double hi,
                                     double tol, std::size_t panel_budget) {
  if (!(tol > 0.0)) throw DomainError("integration tolerance must be positive");
  if (!(lo < hi)) throw DomainError("integration requires lo < hi");

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<Panel> heap{gauss_kronrod(f, lo, hi)};
  double err_total = heap.front().error;
  double abs_total = heap.front().abs_value;

  while (err_total > std::max(tol, 50.0 * kEps * abs_total)) {
    if (heap.size() >= panel_budget) {
      std::ostringstream os;
      os << "reference integrator did not converge within " << panel_budget
         << " panels (error estimate " << err_total << ", tol " << tol << ")";
      throw OracleError(os.str());
    }
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      throw OracleError("reference integrator panel width underflow");
    }
    const Panel left = gauss_kronrod(f, worst.lo, mid);
    const Panel right = gauss_kronrod(f, mid, worst.hi);
    err_total += left.error + right.error - worst.error;
    abs_total += left.abs_value + right.abs_value - worst.abs_value;
    err_total = std::max(err_total, 0.0);
    for (const Panel& p : {left, right}) {
      heap.push_back(p);
      std::push_heap(heap.begin(), heap.end(), heap_less);
    }
  }

  // Sum in position order so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(),
            [](const Panel& l, const Panel& r) { return l.lo < r.lo; });
  kernels::CompensatedSum value;
  kernels::CompensatedSum error;
  for (const Panel& p : heap) {
    value.add(p.value);
    error.add(p.error);
  }
  return IntegrationResult{value.value(), error.value(), heap.size()};
}

double reference_integrate(const Function1D& fn, const Interval& iv, double tol) {
  return adaptive_integrate(fn.f, iv.a(), iv.b(), tol).value;
}

Integrator reference_integrator() {
  return [](const Evaluator& f, double lo, double hi, double tol) {
    return adaptive_integrate(f, lo, hi, tol).value;
  };
}

double true_deviation(const Function1D& fn, const Interval& iv, double x,
                      double tol) {
  validate_eval_point(iv, x);
  const double mean =
      reference_integrate(fn, iv, tol * iv.length()) / iv.length();
  return std::abs(fn(x) - mean);
}

Function1D make_breckner(double u, double v, double w, SParam s) {
  const double sv = s.value();
  std::ostringstream label;
  label.precision(17);
  label << "breckner:" << u << ',' << v << ',' << w << ',' << sv;
  Function1D fn;
  fn.f = [u, v, w, sv](double t) { return t == 0.0 ? u : v * std::pow(t, sv) + w; };
  fn.df = [v, sv](double t) {
    if (!(t > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return v * sv * std::pow(t, sv - 1.0);
  };
  fn.label = label.str();
  return fn;
}

Function1D make_breckner(const BrecknerFunction& params) {
  return make_breckner(params.u, params.v, params.w, params.s);
}

Function1D abs_derivative_power(const Function1D& fn, double q) {
  if (!fn.has_derivative()) {
    throw DomainError("function '" + fn.label + "' has no derivative evaluator");
  }
  Function1D out;
  out.f = [df = fn.df, q](double t) { return std::pow(std::abs(df(t)), q); };
  std::ostringstream label;
  label << "|d/dt " << fn.label << "|^" << q;
  out.label = label.str();
  return out;
}

SConvexityReport check_sconvex(const Function1D& fn, SParam s,
                               const Interval& domain, std::size_t grid_n,
                               double tol) {
  require_sconvex_domain(domain);
  if (grid_n < 2) throw DomainError("s-convexity grid needs at least 2 points");

  std::vector<double> pts(grid_n);
  std::vector<double> alphas(grid_n);
  const double last = static_cast<double>(grid_n - 1);
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double frac = static_cast<double>(i) / last;
    pts[i] = domain.a() + domain.length() * frac;
    alphas[i] = frac;
  }
  pts.back() = domain.b();
  alphas.back() = 1.0;

  const auto scan = kernels::omp::sconvex_scan(fn.f, s.value(), pts, alphas);

  SConvexityReport rep;
  rep.worst_violation = scan.worst;
  rep.witness = SConvexWitness{pts[scan.ix], pts[scan.iy], alphas[scan.ialpha]};
  rep.tol = tol;
  rep.is_consistent = scan.worst <= tol;
  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "grid falsification of s-convexity (s=" << s.value() << ", grid_n="
      << grid_n << ", tol=" << tol << ") for " << fn.label
      << "; a consistent grid does not certify membership";
  rep.context = ctx.str();
  return rep;
}

Function1D make_polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw DomainError("polynomial needs at least one coefficient");
  std::ostringstream label;
  label.precision(17);
  label << "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    label << (i ? "," : "") << coeffs[i];
  }
  Function1D fn;
  fn.f = [c = coeffs](double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  fn.df = [c = std::move(coeffs)](double t) {
    double acc = 0.0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
      acc = acc * t + static_cast<double>(k) * c[k];
    }
    return acc;
  };
  fn.label = label.str();
  return fn;
}

Function1D make_powabs(double k) {
  if (!(k > 0.0)) throw DomainError("powabs exponent must be positive");
  std::ostringstream label;
  label.precision(17);
  label << "powabs:" << k;
  Function1D fn;
  fn.f = [k](double t) { return std::pow(std::abs(t), k); };
  fn.df = [k](double t) {
    if (t == 0.0) {
      return k > 1.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    }
    const double mag = k * std::pow(std::abs(t), k - 1.0);
    return t > 0.0 ? mag : -mag;
  };
  fn.label = label.str();
  return fn;
}

Function1D parse_function_spec(std::string_view raw) {
  const std::string spec = strip_whitespace(raw);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw DomainError("function spec '" + spec + "' must look like kind:args");
  }
  const std::string kind = spec.substr(0, colon);
  const auto args = parse_numbers(std::string_view(spec).substr(colon + 1), spec);
  if (kind == "breckner") {
    if (args.size() != 4) {
      throw DomainError("breckner spec needs u,v,w,s: '" + spec + "'");
    }
    return make_breckner(args[0], args[1], args[2], SParam(args[3]));
  }
  if (kind == "poly") return make_polynomial(args);
  if (kind == "powabs") {
    if (args.size() != 1) throw DomainError("powabs spec needs k: '" + spec + "'");
    return make_powabs(args[0]);
  }
  throw DomainError("unknown function kind '" + kind + "'");
}

}  // namespace sconvex

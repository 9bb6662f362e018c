#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "sconvex/kernel_identity.hpp"
#include "sconvex/ostrowski_bounds.hpp"
#include "sconvex/quadrature.hpp"
#include "sconvex/special_means.hpp"

namespace sconvex::cli {

namespace {

// A usage problem detected after CLI11 accepted the flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = 1e-9;
  std::string format = "json";
  std::string out_path;
};

OutputFormat format_of(const Globals& g) {
  if (g.format == "csv") return OutputFormat::kCsv;
  if (g.format == "human") return OutputFormat::kHuman;
  return OutputFormat::kJson;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Numeric flags that may or may not be given.
class NumericFlags {
 public:
  void add(CLI::App* app, const std::string& name, const std::string& help) {
    opts_[name] = app->add_option("--" + name, values_[name], help);
  }
  bool given(const std::string& name) const { return opts_.at(name)->count() > 0; }
  std::optional<double> maybe(const std::string& name) const {
    if (!given(name)) return std::nullopt;
    return values_.at(name);
  }
  double need(const std::string& name, const std::string& who) const {
    if (!given(name)) {
      throw UsageError("missing required parameter --" + name + " for " + who);
    }
    return values_.at(name);
  }

 private:
  std::map<std::string, double> values_;
  std::map<std::string, CLI::Option*> opts_;
};

// ---------------------------------------------------------------------------
// bound

struct BoundArgs {
  std::string theorem;
  NumericFlags num;
};

BoundResult compute_bound(const BoundArgs& args) {
  const auto id = theorem_from_string(args.theorem);
  const std::string who = "theorem " + args.theorem;
  const auto& n = args.num;
  const Interval iv(n.need("a", who), n.need("b", who));
  auto x = [&] { return n.need("x", who); };
  auto s = [&] { return SParam(n.need("s", who)); };
  auto cp = [&] { return make_conjugate(n.need("p", who)); };
  auto ep = [&](bool with_dx) {
    return EndpointData(n.need("da", who), n.need("db", who),
                        with_dx ? std::optional<double>(n.need("dx", who))
                                : std::nullopt);
  };
  switch (*id) {
    case TheoremId::kClassicOstrowski:
      return classic_ostrowski_bound(iv, x(), n.need("M", who));
    case TheoremId::kAlomari:
      return alomari_bound(iv, x(), s(), cp(), n.need("M", who));
    case TheoremId::kMidpointEq14:
      return baseline_midpoint_bound(MidpointBaseline::kEq14, iv, std::nullopt,
                                     n.need("da", who), n.need("db", who));
    case TheoremId::kMidpointEq15:
      return baseline_midpoint_bound(MidpointBaseline::kEq15, iv, cp(),
                                     n.need("da", who), n.need("db", who));
    case TheoremId::kMidpointEq16:
      return baseline_midpoint_bound(MidpointBaseline::kEq16, iv, cp(),
                                     n.need("da", who), n.need("db", who));
    case TheoremId::kSConvexAbs:
      return bound_sconvex_abs(iv, x(), s(), ep(false));
    case TheoremId::kMidpointSConvexAbs:
      return midpoint_sconvex_abs(iv, s(), ep(false));
    case TheoremId::kHolderSplit:
      return bound_holder_split(iv, x(), s(), cp(), ep(false));
    case TheoremId::kHolderHadamard:
      return bound_holder_hadamard(iv, x(), s(), cp(), ep(true));
    case TheoremId::kMidpointE5:
      return midpoint_e5(iv, cp(), ep(false));
    case TheoremId::kHolderGlobal:
      return bound_holder_global(iv, x(), s(), cp(), ep(false));
    case TheoremId::kPowerMean:
      return bound_power_mean(iv, x(), s(), n.need("q", who), ep(false));
    case TheoremId::kMidpointPowerMean:
      return midpoint_power_mean(iv, n.need("q", who), ep(false));
    default:
      throw UsageError("theorem " + args.theorem + " is not a bound");
  }
}

std::string render_bound(const BoundResult& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson:
      return dump(to_json(r));
    case OutputFormat::kCsv:
      return csv_header_bound() + "\n" + csv_row(r) + "\n";
    case OutputFormat::kHuman: {
      std::ostringstream os;
      os << to_string(r.theorem) << " bound = " << human(r.value) << "\n  inputs:";
      const Json inputs = to_json(r.inputs);
      for (const auto& [key, value] : inputs.items()) {
        os << ' ' << key << '=' << human(value.get<double>());
      }
      os << '\n';
      return os.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// verify

std::string render_sweep(const SweepReport& rep, const SweepConfig& cfg) {
  switch (cfg.output_format) {
    case OutputFormat::kJson: {
      Json j;
      j["summary"] = Json{{"records", rep.records.size()},
                          {"failures", rep.failures},
                          {"all_hold", rep.all_hold()},
                          {"tol", cfg.tol}};
      Json records = Json::array();
      for (const auto& r : rep.records) records.push_back(to_json(r));
      j["records"] = std::move(records);
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::string s = csv_header_sweep() + "\n";
      for (const auto& r : rep.records) s += csv_row(r) + "\n";
      return s;
    }
    case OutputFormat::kHuman: {
      std::ostringstream os;
      std::map<std::string, std::pair<std::size_t, double>> per_theorem;
      for (const auto& r : rep.records) {
        auto [it, fresh] = per_theorem.try_emplace(std::string(to_string(r.theorem)),
                                                   0, r.record.margin);
        it->second.first += 1;
        if (!fresh) it->second.second = std::min(it->second.second, r.record.margin);
      }
      os << "verify: " << rep.records.size() << " records, " << rep.failures
         << " failures (tol " << human(cfg.tol) << ")\n";
      for (const auto& [tag, stats] : per_theorem) {
        os << "  " << tag << ": " << stats.first << " records, min slack "
           << human(stats.second) << '\n';
      }
      return os.str();
    }
  }
  return {};
}

void report_failures(const SweepReport& rep, std::ostream& err) {
  err << "verify: " << rep.failures << " of " << rep.records.size()
      << " records fail\n";
  for (const auto& r : rep.records) {
    if (r.record.holds) continue;
    err << "  FAIL " << r.record.context << " deviation=" << num(r.record.lhs)
        << " bound=" << num(r.record.rhs);
    if (!r.hypothesis_consistent) {
      err << " witness(x=" << num(r.hypothesis_witness.x)
          << ", y=" << num(r.hypothesis_witness.y)
          << ", alpha=" << num(r.hypothesis_witness.alpha) << ')';
    }
    err << '\n';
  }
}

// ---------------------------------------------------------------------------
// means

struct MeansRow {
  double a, b, s, as, ls, gap;
  BoundResult p1, p2, p3;
  bool holds;
};

std::string render_means(const std::vector<MeansRow>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back(Json{{"a", r.a},
                           {"b", r.b},
                           {"s", r.s},
                           {"A_s", r.as},
                           {"L_s_s", r.ls},
                           {"gap", r.gap},
                           {"p1", r.p1.value},
                           {"p2", r.p2.value},
                           {"p3", r.p3.value},
                           {"holds", r.holds}});
      }
      return dump(Json{{"rows", std::move(arr)}});
    }
    case OutputFormat::kCsv: {
      std::string out = "a,b,s,A_s,L_s_s,gap,p1,p2,p3,holds\n";
      for (const auto& r : rows) {
        out += num(r.a) + ',' + num(r.b) + ',' + num(r.s) + ',' + num(r.as) + ',' +
               num(r.ls) + ',' + num(r.gap) + ',' + num(r.p1.value) + ',' +
               num(r.p2.value) + ',' + num(r.p3.value) + ',' +
               (r.holds ? "true" : "false") + '\n';
      }
      return out;
    }
    case OutputFormat::kHuman: {
      std::ostringstream os;
      for (const auto& r : rows) {
        os << "a=" << human(r.a) << " b=" << human(r.b) << " s=" << human(r.s)
           << "  A^s=" << human(r.as) << " L_s^s=" << human(r.ls)
           << " gap=" << human(r.gap) << "  p1=" << human(r.p1.value)
           << " p2=" << human(r.p2.value) << " p3=" << human(r.p3.value)
           << (r.holds ? "  ok" : "  FAIL") << '\n';
      }
      return os.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// quad

struct QuadArgs {
  std::string fn;
  std::string variant;
  std::size_t budget = kDefaultQuadBudget;
  bool check = false;
  NumericFlags num;
};

QuadVariant quad_variant(const QuadArgs& args) {
  const auto rule = midpoint_rule_from_string(args.variant);
  const std::string who = "variant " + args.variant;
  QuadVariant v{*rule, std::nullopt};
  switch (*rule) {
    case MidpointRule::kP4:
      if (args.num.given("q")) throw UsageError(who + " takes --p, not --q");
      v.param = args.num.need("p", who);
      break;
    case MidpointRule::kP5:
      if (args.num.given("p") || args.num.given("q")) {
        throw UsageError(who + " takes neither --p nor --q");
      }
      break;
    case MidpointRule::kP6:
      if (args.num.given("p")) throw UsageError(who + " takes --q, not --p");
      v.param = args.num.need("q", who);
      break;
  }
  return v;
}

std::string render_quad(const QuadReport& rep,
                        const std::optional<VerificationRecord>& check,
                        OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson: {
      Json j = to_json(rep);
      if (check) j["verification"] = to_json(*check);
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::string out = "approx,error_bound,variant,panels,true_error,holds\n";
      out += num(rep.approx) + ',' + num(rep.error_bound) + ',' +
             std::string(to_string(rep.variant.rule)) + ',' +
             std::to_string(rep.panels) + ',' +
             (rep.true_error ? num(*rep.true_error) : "") + ',' +
             (check ? (check->holds ? "true" : "false") : "") + '\n';
      return out;
    }
    case OutputFormat::kHuman: {
      std::ostringstream os;
      os << "approx = " << human(rep.approx) << "  error bound ("
         << to_string(rep.variant.rule) << ") = " << human(rep.error_bound)
         << "  panels = " << rep.panels << '\n';
      if (rep.true_error) {
        os << "true error = " << human(*rep.true_error)
           << (check && check->holds ? "  within bound\n" : "  EXCEEDS bound\n");
      }
      return os.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// identity

struct IdentityRow {
  std::string function;
  double a, b, x;
  MontgomeryCheck check;
};

std::vector<IdentityRow> run_identity_suite(double tol) {
  const std::vector<std::vector<double>> polys{
      {1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0, 1}, {1, -2, 0.5, 3, -1}};
  const std::vector<std::pair<double, double>> intervals{{0, 1}, {1, 3}, {0.5, 2.5}};
  constexpr int kPoints = 9;
  std::vector<IdentityRow> rows;
  for (const auto& coeffs : polys) {
    const auto fn = make_polynomial(coeffs);
    for (const auto& [a, b] : intervals) {
      const Interval iv(a, b);
      for (int k = 0; k < kPoints; ++k) {
        const double x = k + 1 == kPoints ? b : a + (b - a) * k / (kPoints - 1);
        rows.push_back(IdentityRow{fn.label, a, b, x,
                                   verify_montgomery_identity(fn, iv, x, tol)});
      }
    }
  }
  return rows;
}

std::string render_identity(const std::vector<IdentityRow>& rows,
                            std::size_t failures, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back(Json{{"function", r.function},
                           {"a", r.a},
                           {"b", r.b},
                           {"x", r.x},
                           {"lhs", r.check.lhs},
                           {"rhs", r.check.rhs},
                           {"abs_diff", r.check.record.lhs},
                           {"holds", r.check.record.holds}});
      }
      Json j;
      j["summary"] = Json{{"records", rows.size()}, {"failures", failures}};
      j["records"] = std::move(arr);
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::string out = "function,a,b,x,lhs,rhs,abs_diff,holds\n";
      for (const auto& r : rows) {
        out += csv_escape(r.function) + ',' + num(r.a) + ',' + num(r.b) + ',' +
               num(r.x) + ',' + num(r.check.lhs) + ',' + num(r.check.rhs) + ',' +
               num(r.check.record.lhs) + ',' +
               (r.check.record.holds ? "true" : "false") + '\n';
      }
      return out;
    }
    case OutputFormat::kHuman: {
      double worst = 0.0;
      for (const auto& r : rows) worst = std::max(worst, r.check.record.lhs);
      std::ostringstream os;
      os << "identity: " << rows.size() << " cases, " << failures
         << " failures, worst |lhs - rhs| = " << human(worst) << '\n';
      return os.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

void emit(const std::string& text, const Globals& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file '" + g.out_path + "'");
  file << text;
  if (!file) throw UsageError("failed writing output file '" + g.out_path + "'");
}

std::vector<std::string> non_blank(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& s : in) {
    if (s.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(s);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ostrowski-type bounds for s-convex functions, checked against a "
               "quadrature oracle"};
  app.name("sconvex");
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tol", g.tol, "Verification tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.set_config("--config", "", "key=value file; flags given on the command line win");

  std::vector<std::string> theorems;
  for (auto id : {TheoremId::kSConvexAbs, TheoremId::kHolderSplit,
                  TheoremId::kHolderHadamard, TheoremId::kHolderGlobal,
                  TheoremId::kPowerMean, TheoremId::kClassicOstrowski,
                  TheoremId::kAlomari, TheoremId::kMidpointEq14,
                  TheoremId::kMidpointEq15, TheoremId::kMidpointEq16,
                  TheoremId::kMidpointSConvexAbs, TheoremId::kMidpointE5,
                  TheoremId::kMidpointPowerMean}) {
    theorems.emplace_back(to_string(id));
  }

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Evaluate one bound");
  bound->add_option("--theorem", bound_args.theorem, "Bound to evaluate")
      ->required()
      ->check(CLI::IsMember(theorems));
  for (const char* name : {"a", "b", "x", "s", "p", "q", "da", "db", "dx", "M"}) {
    bound_args.num.add(bound, name, "");
  }

  SweepConfig sweep;
  std::vector<std::string> sweep_fns = sweep.function_specs;
  auto* verify = app.add_subcommand("verify", "Check every bound against the oracle");
  verify->add_option("--s-grid", sweep.s_grid, "s values")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--x-points", sweep.x_grid_points, "x grid points per interval")
      ->capture_default_str();
  verify->add_option("--p-grid", sweep.p_grid, "Hoelder exponents p > 1")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--fn", sweep_fns, "Function spec with optional @a,b suffix");

  double ma = 1.0, mb = 2.0, mp = 2.0, mq = 2.0;
  std::vector<double> ms{0.5};
  auto* means = app.add_subcommand("means", "Special-means gap and its bounds");
  means->add_option("--a", ma)->capture_default_str();
  means->add_option("--b", mb)->capture_default_str();
  means->add_option("--s", ms, "One or more s in (0, 1)")
      ->delimiter(',')
      ->capture_default_str();
  means->add_option("--p", mp, "Hoelder exponent")->capture_default_str();
  means->add_option("--q", mq, "Power-mean exponent")->capture_default_str();

  QuadArgs quad_args;
  auto* quad = app.add_subcommand("quad", "Certified composite midpoint quadrature");
  quad->add_option("--fn", quad_args.fn, "Function spec")->required();
  quad->add_option("--variant", quad_args.variant, "Error bound")
      ->required()
      ->check(CLI::IsMember({"p4", "p5", "p6"}));
  quad->add_option("--budget", quad_args.budget, "Panel budget")->capture_default_str();
  quad->add_flag("--check", quad_args.check, "Compare against the oracle integral");
  for (const char* name : {"a", "b", "target", "p", "q"}) quad_args.num.add(quad, name, "");

  auto* identity = app.add_subcommand("identity", "Montgomery identity on polynomials");

  for (auto* sub : {bound, verify, means, quad, identity}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto fmt = format_of(g);
  try {
    if (bound->parsed()) {
      emit(render_bound(compute_bound(bound_args), fmt), g, out);
      return kOk;
    }
    if (verify->parsed()) {
      sweep.function_specs = non_blank(sweep_fns);
      sweep.tol = g.tol;
      sweep.output_format = fmt;
      const auto rep = run_sweep(sweep);
      emit(render_sweep(rep, sweep), g, out);
      if (!rep.all_hold()) {
        report_failures(rep, err);
        return kInequalityFailure;
      }
      return kOk;
    }
    if (means->parsed()) {
      std::vector<MeansRow> rows;
      bool all = true;
      for (double sv : ms) {
        const SParam s(sv);
        MeansRow r{ma, mb, sv, std::pow(arithmetic_mean(ma, mb), sv),
                   std::pow(p_logarithmic_mean(ma, mb, sv), sv), means_gap(ma, mb, s),
                   means_gap_bound(ma, mb, s, {MeansBoundKind::kP1, std::nullopt}),
                   means_gap_bound(ma, mb, s, {MeansBoundKind::kP2, mp}),
                   means_gap_bound(ma, mb, s, {MeansBoundKind::kP3, mq}), true};
        r.holds = r.gap <= r.p1.value + g.tol && r.gap <= r.p2.value + g.tol &&
                  r.gap <= r.p3.value + g.tol;
        all = all && r.holds;
        rows.push_back(std::move(r));
      }
      emit(render_means(rows, fmt), g, out);
      return all ? kOk : kInequalityFailure;
    }
    if (quad->parsed()) {
      const auto fn = parse_function_spec(quad_args.fn);
      const auto& n = quad_args.num;
      const Interval iv(n.need("a", "quad"), n.need("b", "quad"));
      const double target = n.need("target", "quad");
      auto rep = certified_integrate(fn, iv, target, quad_variant(quad_args),
                                     quad_args.budget);
      std::optional<VerificationRecord> check;
      if (quad_args.check) {
        const double oracle_tol = std::min(1e-12, 1e-3 * g.tol) * iv.length();
        check = verify_quadrature(rep, fn, iv, oracle_tol, g.tol);
      }
      emit(render_quad(rep, check, fmt), g, out);
      return check && !check->holds ? kInequalityFailure : kOk;
    }
    if (identity->parsed()) {
      const auto rows = run_identity_suite(g.tol);
      const auto failures = static_cast<std::size_t>(std::count_if(
          rows.begin(), rows.end(), [](const auto& r) { return !r.check.record.holds; }));
      emit(render_identity(rows, failures, fmt), g, out);
      if (failures > 0) {
        for (const auto& r : rows) {
          if (!r.check.record.holds) err << "  FAIL " << r.check.record.context << '\n';
        }
        return kInequalityFailure;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExhausted& e) {
    err << "oracle error: " << e.what() << '\n';
    return kOracle;
  } catch (const OracleError& e) {
    err << "oracle error: " << e.what() << '\n';
    return kOracle;
  }
  return kUsage;
}

}  // namespace sconvex::cli

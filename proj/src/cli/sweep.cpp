#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "sconvex/cli.hpp"
#include "sconvex/kernels.hpp"
#include "sconvex/ostrowski_bounds.hpp"

namespace sconvex::cli {

namespace {

struct Task {
  std::size_t fn_index;
  double s;
  double x;
  TheoremId theorem;
  std::optional<double> p;
};

struct FunctionData {
  SweepFunction sf;
  double mean;
};

double parse_endpoint(const std::string& text, const std::string& entry) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || !std::isfinite(v)) {
    throw DomainError("bad interval in sweep function '" + entry + "'");
  }
  return v;
}

double derivative_magnitude(const Function1D& fn, double t) {
  const double v = std::abs(fn.df(t));
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "derivative of '" << fn.label << "' is not finite at t=" << t;
    throw DomainError(os.str());
  }
  return v;
}

BoundResult evaluate(const Task& task, const SweepFunction& sf) {
  const Interval& iv = sf.interval;
  const SParam s(task.s);
  const EndpointData ep(derivative_magnitude(sf.fn, iv.a()),
                        derivative_magnitude(sf.fn, iv.b()),
                        derivative_magnitude(sf.fn, task.x));
  switch (task.theorem) {
    case TheoremId::kSConvexAbs:
      return bound_sconvex_abs(iv, task.x, s, ep);
    case TheoremId::kHolderSplit:
      return bound_holder_split(iv, task.x, s, make_conjugate(*task.p), ep);
    case TheoremId::kHolderHadamard:
      return bound_holder_hadamard(iv, task.x, s, make_conjugate(*task.p), ep);
    case TheoremId::kHolderGlobal:
      return bound_holder_global(iv, task.x, s, make_conjugate(*task.p), ep);
    case TheoremId::kPowerMean:
      return bound_power_mean(iv, task.x, s, make_conjugate(*task.p).q(), ep);
    default:
      throw DomainError("theorem not part of the sweep");
  }
}

}  // namespace

std::vector<std::string> SweepConfig::default_function_specs() {
  return {
      "breckner:0,1,0,0.25@0.5,2", "breckner:0,1,0,0.5@0.5,2",
      "breckner:0,1,0,0.75@0.5,2", "breckner:0,1,0,1@0.5,2",
      "poly:0,1@0,1",              "poly:0,0,1@0,1",
      "poly:0,1,1@0,1",
  };
}

void validate(const SweepConfig& config) {
  if (config.function_specs.empty()) throw DomainError("sweep function list is empty");
  if (config.s_grid.empty()) throw DomainError("sweep s grid is empty");
  if (config.p_grid.empty()) throw DomainError("sweep p grid is empty");
  if (config.x_grid_points == 0) throw DomainError("sweep x grid is empty");
  if (!(config.tol > 0.0)) throw DomainError("sweep tol must be positive");
  for (double s : config.s_grid) SParam{s};
  for (double p : config.p_grid) make_conjugate(p);
}

SweepFunction parse_sweep_function(const std::string& entry) {
  const auto at = entry.find('@');
  if (at == std::string::npos) {
    return SweepFunction{parse_function_spec(entry), make_sconvex_interval(0.5, 2.0)};
  }
  std::string range;
  for (char c : entry.substr(at + 1)) {
    if (!std::isspace(static_cast<unsigned char>(c))) range.push_back(c);
  }
  const auto comma = range.find(',');
  if (comma == std::string::npos) {
    throw DomainError("sweep interval must be written @a,b in '" + entry + "'");
  }
  const double a = parse_endpoint(range.substr(0, comma), entry);
  const double b = parse_endpoint(range.substr(comma + 1), entry);
  return SweepFunction{parse_function_spec(entry.substr(0, at)),
                       make_sconvex_interval(a, b)};
}

SweepReport run_sweep(const SweepConfig& config) {
  validate(config);

  std::vector<FunctionData> functions;
  for (const auto& entry : config.function_specs) {
    auto sf = parse_sweep_function(entry);
    if (!sf.fn.has_derivative()) {
      throw DomainError("sweep function '" + entry + "' has no derivative");
    }
    const double len = sf.interval.length();
    const double oracle_tol = std::min(1e-12, 1e-3 * config.tol) * len;
    const double mean = reference_integrate(sf.fn, sf.interval, oracle_tol) / len;
    functions.push_back(FunctionData{std::move(sf), mean});
  }

  // Hypothesis falsification per (function, s, q); q = 1 covers |f'| itself.
  std::map<std::tuple<std::size_t, double, double>, SConvexityReport> hypotheses;
  auto hypothesis_key = [](const Task& t) {
    const double q = t.p ? make_conjugate(*t.p).q() : 1.0;
    return std::make_tuple(t.fn_index, t.s, q);
  };

  std::vector<Task> tasks;
  for (std::size_t fi = 0; fi < functions.size(); ++fi) {
    const Interval& iv = functions[fi].sf.interval;
    for (double s : config.s_grid) {
      for (std::size_t k = 0; k < config.x_grid_points; ++k) {
        const double x =
            config.x_grid_points == 1
                ? iv.midpoint()
                : (k + 1 == config.x_grid_points
                       ? iv.b()
                       : iv.a() + iv.length() * (static_cast<double>(k) /
                                                 (config.x_grid_points - 1)));
        tasks.push_back(Task{fi, s, x, TheoremId::kSConvexAbs, std::nullopt});
        for (auto id : {TheoremId::kHolderSplit, TheoremId::kHolderHadamard,
                        TheoremId::kHolderGlobal, TheoremId::kPowerMean}) {
          for (double p : config.p_grid) tasks.push_back(Task{fi, s, x, id, p});
        }
      }
    }
  }
  for (const auto& t : tasks) {
    const auto key = hypothesis_key(t);
    if (hypotheses.count(key)) continue;
    const auto& sf = functions[t.fn_index].sf;
    hypotheses.emplace(key, check_sconvex(abs_derivative_power(sf.fn, std::get<2>(key)),
                                          SParam(t.s), sf.interval, kDefaultSConvexGrid));
  }

  std::vector<SweepRecord> records(tasks.size());
  kernels::detail::ExceptionSlot slot;
  const auto ntasks = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < ntasks; ++i) {
    slot.run([&] {
      const Task& t = tasks[static_cast<std::size_t>(i)];
      const auto& data = functions[t.fn_index];
      const auto bound = evaluate(t, data.sf);
      const double deviation = std::abs(data.sf.fn(t.x) - data.mean);
      const auto& hyp = hypotheses.at(hypothesis_key(t));

      std::ostringstream ctx;
      ctx.precision(17);
      ctx << to_string(t.theorem) << " f=" << data.sf.fn.label << " s=" << t.s
          << " x=" << t.x;
      if (t.p) ctx << " p=" << *t.p;
      ctx << (hyp.is_consistent ? " hypothesis grid-consistent"
                                : " hypothesis violated");
      SweepRecord rec;
      rec.theorem = t.theorem;
      rec.function = data.sf.fn.label;
      rec.a = data.sf.interval.a();
      rec.b = data.sf.interval.b();
      rec.s = t.s;
      rec.x = t.x;
      rec.p = t.p;
      rec.record = make_record(deviation, bound.value, config.tol, ctx.str());
      rec.hypothesis_consistent = hyp.is_consistent;
      rec.hypothesis_witness = hyp.witness;
      records[static_cast<std::size_t>(i)] = std::move(rec);
    });
  }
  slot.rethrow();

  SweepReport report;
  report.failures = static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const auto& r) { return !r.record.holds; }));
  report.records = std::move(records);
  return report;
}

}  // namespace sconvex::cli

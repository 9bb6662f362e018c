#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sconvex/core_types.hpp"
#include "sconvex/toolkit.hpp"

namespace sconvex::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInequalityFailure = 1,
  kUsage = 2,
  kOracle = 3,
};

enum class OutputFormat { kJson, kCsv, kHuman };

struct SweepConfig {
  std::vector<double> s_grid{0.25, 0.5, 0.75, 1.0};
  std::size_t x_grid_points = 11;
  std::vector<double> p_grid{1.5, 2.0, 4.0};
  // Registry spec with an optional `@a,b` interval suffix.
  std::vector<std::string> function_specs = default_function_specs();
  double tol = 1e-9;
  OutputFormat output_format = OutputFormat::kJson;

  static std::vector<std::string> default_function_specs();
};

/// Throws DomainError on an empty grid, an empty function list or tol <= 0.
void validate(const SweepConfig& config);

/// Parsed function spec plus the interval it is swept over.
struct SweepFunction {
  Function1D fn;
  Interval interval;
};

/// `spec@a,b`; the interval defaults to [0.5, 2].
SweepFunction parse_sweep_function(const std::string& entry);

struct SweepRecord {
  TheoremId theorem = TheoremId::kSConvexAbs;
  std::string function;
  double a = 0.0;
  double b = 0.0;
  double s = 0.0;
  double x = 0.0;
  std::optional<double> p;
  VerificationRecord record;
  // Grid falsification of the theorem's hypothesis on |f'|^q.
  bool hypothesis_consistent = true;
  SConvexWitness hypothesis_witness;
};

struct SweepReport {
  std::vector<SweepRecord> records;
  std::size_t failures = 0;
  bool all_hold() const { return failures == 0; }
};

/// Checks every Ostrowski-type bound (t20, teo1, t21, z, t22) against the
/// oracle deviation over the configured tuples. Tuples are evaluated in
/// parallel; the report is ordered by (function, s, x, theorem, p).
SweepReport run_sweep(const SweepConfig& config);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sconvex::cli

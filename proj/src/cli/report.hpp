#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sconvex/cli.hpp"
#include "sconvex/quadrature.hpp"

namespace sconvex::cli {

using Json = nlohmann::ordered_json;

/// Shortest round-trip text of a double (the JSON representation).
std::string num(double v);

/// Rounded to 6 significant digits, for human output only.
std::string human(double v);

Json to_json(const BoundInputs& in);
Json to_json(const BoundResult& r);
Json to_json(const VerificationRecord& r);
Json to_json(const SweepRecord& r);
Json to_json(const QuadReport& r);

std::string csv_header_bound();
std::string csv_row(const BoundResult& r);
std::string csv_header_sweep();
std::string csv_row(const SweepRecord& r);

std::string csv_escape(const std::string& field);

}  // namespace sconvex::cli

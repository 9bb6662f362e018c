#include "report.hpp"

#include <cmath>
#include <sstream>

namespace sconvex::cli {

namespace {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : ""; }

}  // namespace

std::string num(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  return Json(v).dump();
}

std::string human(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Json to_json(const BoundInputs& in) {
  Json j;
  j["a"] = in.a;
  j["b"] = in.b;
  put(j, "x", in.x);
  put(j, "s", in.s);
  put(j, "p", in.p);
  put(j, "q", in.q);
  put(j, "da", in.da);
  put(j, "db", in.db);
  put(j, "dx", in.dx);
  put(j, "M", in.M);
  return j;
}

Json to_json(const BoundResult& r) {
  Json j;
  j["theorem"] = std::string(to_string(r.theorem));
  j["value"] = r.value;
  j["inputs"] = to_json(r.inputs);
  return j;
}

Json to_json(const VerificationRecord& r) {
  Json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["margin"] = r.margin;
  j["context"] = r.context;
  return j;
}

Json to_json(const SweepRecord& r) {
  Json j;
  j["theorem"] = std::string(to_string(r.theorem));
  j["function"] = r.function;
  j["a"] = r.a;
  j["b"] = r.b;
  j["s"] = r.s;
  j["x"] = r.x;
  if (r.p) j["p"] = *r.p;
  j["deviation"] = r.record.lhs;
  j["bound"] = r.record.rhs;
  j["holds"] = r.record.holds;
  j["margin"] = r.record.margin;
  j["hypothesis_consistent"] = r.hypothesis_consistent;
  if (!r.hypothesis_consistent) {
    j["hypothesis_witness"] = Json{{"x", r.hypothesis_witness.x},
                                   {"y", r.hypothesis_witness.y},
                                   {"alpha", r.hypothesis_witness.alpha}};
  }
  j["context"] = r.record.context;
  return j;
}

Json to_json(const QuadReport& r) {
  Json j;
  j["approx"] = r.approx;
  j["error_bound"] = r.error_bound;
  j["variant"] = std::string(to_string(r.variant.rule));
  j["panels"] = r.panels;
  if (r.true_error) j["true_error"] = *r.true_error;
  return j;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_header_bound() { return "theorem,value,a,b,x,s,p,q,da,db,dx,M"; }

std::string csv_row(const BoundResult& r) {
  const auto& in = r.inputs;
  std::ostringstream os;
  os << to_string(r.theorem) << ',' << num(r.value) << ',' << num(in.a) << ','
     << num(in.b) << ',' << opt(in.x) << ',' << opt(in.s) << ',' << opt(in.p)
     << ',' << opt(in.q) << ',' << opt(in.da) << ',' << opt(in.db) << ','
     << opt(in.dx) << ',' << opt(in.M);
  return os.str();
}

std::string csv_header_sweep() {
  return "theorem,function,a,b,s,x,p,deviation,bound,holds,margin,hypothesis_consistent";
}

std::string csv_row(const SweepRecord& r) {
  std::ostringstream os;
  os << to_string(r.theorem) << ',' << csv_escape(r.function) << ',' << num(r.a)
     << ',' << num(r.b) << ',' << num(r.s) << ',' << num(r.x) << ',' << opt(r.p)
     << ',' << num(r.record.lhs) << ',' << num(r.record.rhs) << ','
     << (r.record.holds ? "true" : "false") << ',' << num(r.record.margin) << ','
     << (r.hypothesis_consistent ? "true" : "false");
  return os.str();
}

}  // namespace sconvex::cli

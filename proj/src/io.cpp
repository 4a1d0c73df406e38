#include "norlund/io.hpp"

#include "norlund/errors.hpp"

namespace norlund::io {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

Json to_json(const std::vector<UniPoly>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(to_json(p));
  return out;
}

Json to_json(const Series<Rational>& f) { return to_json(f.coeffs()); }
Json to_json(const Series<UniPoly>& f) { return to_json(f.coeffs()); }

Json to_json(const IdentityReport& report, bool include_timing) {
  Json j;
  j["name"] = report.name;
  j["anchor"] = report.anchor;
  j["mode"] = to_string(report.mode);
  j["total_cases"] = report.total_cases;
  j["status"] = report.passed() ? "pass" : "fail";
  if (report.counterexample) {
    Json point = Json::object();
    for (const auto& [k, v] : report.counterexample->point) point[k] = v;
    j["counterexample"] = {{"point", point}, {"lhs", report.counterexample->lhs}, {"rhs", report.counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (include_timing) {
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected a rational string or an integer, got " + j.dump());
}

UniPoly poly_from_json(const Json& j) {
  if (!j.is_array()) return UniPoly::constant(rational_from_json(j));
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(Rational::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

namespace {

EulerianParams eulerian_preset(const Json& j) {
  if (j.value("preset", "") != "eulerian") throw DomainError("unknown preset in " + j.dump());
  if (!j.contains("rho")) throw DomainError("eulerian preset needs \"rho\"");
  const Rational alpha = j.contains("alpha") ? rational_from_json(j["alpha"]) : Rational(1);
  return EulerianParams{rational_from_json(j["rho"]), alpha};
}

}  // namespace

FrameworkSpec framework_spec_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("framework spec must be a JSON object");
  if (j.contains("preset")) return FrameworkSpec::eulerian(eulerian_preset(j));
  for (const char* key : {"Q1", "Q2", "G0", "r"}) {
    if (!j.contains(key)) throw DomainError(std::string("framework spec is missing \"") + key + "\"");
  }
  const Rational g0 =
      j["G0"].is_object() ? eulerian_preset(j["G0"]).leading_coefficient() : rational_from_json(j["G0"]);
  return FrameworkSpec{poly_from_json(j["Q1"]), poly_from_json(j["Q2"]), FrameworkSpec::constant_g0(g0),
                       rational_from_json(j["r"])};
}

}  // namespace norlund::io

#include "norlund/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "norlund/bell.hpp"
#include "norlund/classical.hpp"
#include "norlund/errors.hpp"
#include "norlund/framework.hpp"
#include "norlund/higher_order.hpp"
#include "norlund/identities.hpp"
#include "norlund/io.hpp"

#include "CLI11.hpp"

namespace norlund::cli {

namespace {

using io::Json;

constexpr std::size_t kDefaultMaxN = 64;

struct Options {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> big_n;
  std::optional<std::size_t> m;
  std::string d;
  std::string rho;
  std::string alpha;
  std::string s;
  std::string a;
  std::string method;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> m_max;
  bool timing = false;
  bool serial = false;
  std::vector<std::string> names;
  std::string spec_path;
  std::string preset;
};

// Caller error that is not a mathematical-domain violation (bad flag combination, unreadable file...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t max_n_cap() {
  const char* env = std::getenv("NORLUND_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("NORLUND_MAX_N must be a nonnegative integer, got '") + env + "'");
  }
}

std::size_t capped(std::optional<std::size_t> v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  const std::size_t cap = max_n_cap();
  if (*v > cap) {
    throw UsageError(std::string(flag) + " = " + std::to_string(*v) + " exceeds NORLUND_MAX_N = " + std::to_string(cap));
  }
  return *v;
}

std::optional<Rational> parse_s(const std::string& s) {
  if (s == "sym") return std::nullopt;
  return Rational::parse(s);
}

std::vector<Rational> weights(const Options& o) {
  if (!o.d.empty()) {
    auto d = io::parse_rational_list(o.d);
    if (o.m && *o.m != d.size()) {
      throw DomainError("--m " + std::to_string(*o.m) + " does not match the " + std::to_string(d.size()) +
                        " weights given by --d");
    }
    return d;
  }
  if (o.m) {
    if (*o.m == 0) throw DomainError("--m must be at least 1");
    return std::vector<Rational>(*o.m, Rational(1));
  }
  return {Rational(1)};
}

std::vector<Rational> broadcast(const std::string& text, std::size_t m, const char* flag, const char* fallback) {
  const std::string src = text.empty() ? std::string(fallback) : text;
  if (src.empty()) throw UsageError(std::string(flag) + " is required for this family");
  auto v = io::parse_rational_list(src);
  if (v.size() == 1) return std::vector<Rational>(m, v[0]);
  if (v.size() != m) {
    throw DomainError(std::string(flag) + " has " + std::to_string(v.size()) + " entries but m = " + std::to_string(m));
  }
  return v;
}

ParamSet eulerian_params(const Options& o) {
  auto d = weights(o);
  const std::size_t m = d.size();
  return ParamSet{std::move(d), broadcast(o.rho, m, "--rho", ""), broadcast(o.alpha, m, "--alpha", "1")};
}

Json meta_base(const std::string& command, const Options& o) {
  Json meta;
  meta["command"] = command;
  meta["family"] = o.family;
  return meta;
}

Json record(const std::string& kind, Json payload, Json meta) {
  Json r;
  r["kind"] = kind;
  r["payload"] = std::move(payload);
  r["meta"] = std::move(meta);
  return r;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(std::ostream& out, const std::string& format, const Json& rec) {
  if (format == "json") {
    out << rec.dump(2) << "\n";
    return;
  }
  const std::string kind = rec["kind"];
  const Json& payload = rec["payload"];
  if (kind == "number") {
    out << "value\n" << csv_cell(payload) << "\n";
  } else if (kind == "polynomial") {
    out << "degree,coefficient\n";
    for (std::size_t k = 0; k < payload.size(); ++k) out << k << "," << csv_cell(payload[k]) << "\n";
  } else if (kind == "series") {
    std::size_t width = 0;
    for (const auto& c : payload) width = std::max<std::size_t>(width, c.is_array() ? c.size() : 0);
    if (width == 0) {
      out << "k,coefficient\n";
      for (std::size_t k = 0; k < payload.size(); ++k) out << k << "," << csv_cell(payload[k]) << "\n";
    } else {
      out << "k";
      for (std::size_t j = 0; j < width; ++j) out << ",s^" << j;
      out << "\n";
      for (std::size_t k = 0; k < payload.size(); ++k) {
        out << k;
        for (std::size_t j = 0; j < width; ++j) out << "," << (j < payload[k].size() ? csv_cell(payload[k][j]) : "0");
        out << "\n";
      }
    }
  } else {
    out << "name,status,total_cases,mode\n";
    for (const auto& r : payload) {
      out << r["name"].get<std::string>() << "," << r["status"].get<std::string>() << "," << r["total_cases"] << ","
          << r["mode"].get<std::string>() << "\n";
    }
  }
}

// A polynomial result, or its value when --s is a rational.
Json poly_record(const UniPoly& p, const std::optional<Rational>& s, Json meta) {
  meta["s"] = s ? s->str() : "sym";
  if (s) return record("number", io::to_json(p.eval(*s)), std::move(meta));
  return record("polynomial", io::to_json(p), std::move(meta));
}

void require_method(const std::string& method, std::initializer_list<const char*> allowed, const std::string& family) {
  for (const char* a : allowed) {
    if (method == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError("--method " + method + " is not available for " + family + " (use " + list + ")");
}

Json cmd_compute(const Options& o) {
  const std::size_t n = capped(o.n, "--n");
  const auto s = parse_s(o.s.empty() ? "sym" : o.s);
  Json meta = meta_base("compute", o);
  meta["n"] = n;
  const std::string& f = o.family;

  if (f == "bernoulli-number") {
    return record("number", io::to_json(bernoulli_number(n)), std::move(meta));
  }
  if (f == "bell") {
    const std::string method = o.method.empty() ? "recurrence" : o.method;
    require_method(method, {"recurrence", "gf"}, f);
    if (o.a.empty()) throw UsageError("--a is required for bell");
    const auto args = io::parse_rational_list(o.a);
    meta["a"] = io::to_json(args);
    meta["method"] = method;
    const Rational v = method == "gf" ? complete_bell_via_gf<Rational>(n, args) : complete_bell<Rational>(n, args);
    return record("number", io::to_json(v), std::move(meta));
  }
  if (f == "bernoulli-poly") {
    const std::string method = o.method.empty() ? "gf" : o.method;
    require_method(method, {"gf", "bell"}, f);
    meta["method"] = method;
    const std::vector<Rational> one{Rational(1)};
    return poly_record(method == "bell" ? bernoulli_ho_bell(n, one) : bernoulli_poly(n), s, std::move(meta));
  }
  if (f == "euler-poly") {
    return poly_record(euler_poly(n), s, std::move(meta));
  }
  if (f == "eulerian-poly") {
    if (o.rho.empty()) throw UsageError("--rho is required for eulerian-poly");
    const EulerianParams p{Rational::parse(o.rho), o.alpha.empty() ? Rational(1) : Rational::parse(o.alpha)};
    meta["rho"] = p.rho.str();
    meta["alpha"] = p.alpha.str();
    return poly_record(eulerian_gen_poly(n, p), s, std::move(meta));
  }
  if (f == "bernoulli-ho") {
    const std::string method = o.method.empty() ? "gf" : o.method;
    require_method(method, {"gf", "bell", "eulerian"}, f);
    const auto d = weights(o);
    meta["m"] = d.size();
    meta["d"] = io::to_json(d);
    meta["method"] = method;
    const UniPoly p = method == "bell"       ? bernoulli_ho_bell(n, d)
                      : method == "eulerian" ? bernoulli_ho_from_eulerian(n, d)
                                             : bernoulli_ho_gf(n, d);
    return poly_record(p, s, std::move(meta));
  }
  if (f == "euler-ho") {
    const auto d = weights(o);
    meta["m"] = d.size();
    meta["d"] = io::to_json(d);
    return poly_record(euler_ho_gf(n, d), s, std::move(meta));
  }
  if (f == "eulerian-ho") {
    const std::string method = o.method.empty() ? "gf" : o.method;
    require_method(method, {"gf", "bell", "recurrence"}, f);
    const auto p = eulerian_params(o);
    p.validate();
    meta["m"] = p.m();
    meta["d"] = io::to_json(p.d);
    meta["rho"] = io::to_json(p.rho);
    meta["alpha"] = io::to_json(p.alpha);
    meta["method"] = method;
    const UniPoly h = method == "bell"         ? eulerian_ho_bell(n, p)
                      : method == "recurrence" ? eulerian_ho_recurrence_table(p, n)[n]
                                               : eulerian_ho_gf(n, p);
    return poly_record(h, s, std::move(meta));
  }
  throw UsageError("unknown family '" + f +
                   "' (expected bernoulli-number, bernoulli-poly, euler-poly, eulerian-poly, bernoulli-ho, euler-ho, "
                   "eulerian-ho or bell)");
}

Json cmd_expand(const Options& o) {
  const std::size_t order = capped(o.big_n, "--N");
  const auto s = parse_s(o.s.empty() ? "0" : o.s);
  Json meta = meta_base("expand", o);
  meta["N"] = order;

  Series<Rational> kernel(order);
  if (o.family == "bernoulli") {
    const auto d = weights(o);
    meta["d"] = io::to_json(d);
    kernel = bernoulli_ho_kernel(d, order);
  } else if (o.family == "euler") {
    const auto d = weights(o);
    meta["d"] = io::to_json(d);
    kernel = eulerian_ho_kernel(ParamSet::uniform(d, Rational(-1), Rational(1)), order);
  } else if (o.family == "eulerian") {
    const auto p = eulerian_params(o);
    meta["d"] = io::to_json(p.d);
    meta["rho"] = io::to_json(p.rho);
    meta["alpha"] = io::to_json(p.alpha);
    kernel = eulerian_ho_kernel(p, order);
  } else {
    throw UsageError("unknown family '" + o.family + "' for expand (expected bernoulli, euler or eulerian)");
  }
  meta["s"] = s ? s->str() : "sym";
  if (s) return record("series", io::to_json(series_mul(kernel, exp_st(*s, order))), std::move(meta));
  return record("series", io::to_json(series_mul(lift(kernel), exp_st(order))), std::move(meta));
}

struct VerifyResult {
  Json record;
  bool all_passed;
};

VerifyResult cmd_verify(const Options& o) {
  GridOverride grid;
  if (o.n_max) grid.n_max = capped(o.n_max, "--n-max");
  grid.m_max = o.m_max;

  std::vector<IdentityCheck> checks;
  const std::vector<std::string> names = o.names.empty() ? std::vector<std::string>{"all"} : o.names;
  for (const auto& name : names) {
    if (name == "all") {
      checks.insert(checks.end(), identity_registry().begin(), identity_registry().end());
      continue;
    }
    const auto* check = find_check(name);
    if (check == nullptr) throw UsageError("unknown identity '" + name + "'");
    checks.push_back(*check);
  }

  const auto reports = o.serial ? run_checks_serial(checks, grid, o.seed) : run_checks(checks, grid, o.seed);
  Json payload = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    payload.push_back(io::to_json(r, o.timing));
    if (r.passed()) ++passed;
  }
  Json meta;
  meta["command"] = "verify";
  meta["seed"] = o.seed;
  if (o.n_max) meta["n_max"] = *o.n_max;
  if (o.m_max) meta["m_max"] = *o.m_max;
  meta["passed"] = passed;
  meta["total"] = reports.size();
  return {record("report", std::move(payload), std::move(meta)), passed == reports.size()};
}

Json cmd_framework(const Options& o) {
  const std::size_t order = capped(o.big_n, "--N");
  if (o.s.empty()) throw UsageError("--s is required for framework");
  const Rational s = Rational::parse(o.s);

  FrameworkSpec spec;
  Json meta;
  meta["command"] = "framework";
  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in) throw UsageError("cannot open spec file '" + o.spec_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError("spec file '" + o.spec_path + "' is not valid JSON");
    }
    spec = io::framework_spec_from_json(j);
    meta["spec"] = o.spec_path;
  } else if (o.preset == "eulerian") {
    if (o.rho.empty()) throw UsageError("--rho is required for the eulerian preset");
    const EulerianParams p{Rational::parse(o.rho), o.alpha.empty() ? Rational(1) : Rational::parse(o.alpha)};
    spec = FrameworkSpec::eulerian(p);
    meta["preset"] = "eulerian";
    meta["rho"] = p.rho.str();
    meta["alpha"] = p.alpha.str();
  } else {
    throw UsageError("framework needs --spec FILE or --preset eulerian");
  }

  const std::string method = o.method.empty() ? "closed" : o.method;
  meta["Q1"] = io::to_json(spec.q1);
  meta["Q2"] = io::to_json(spec.q2);
  meta["r"] = spec.r.str();
  meta["s"] = s.str();
  meta["N"] = order;
  meta["method"] = method;

  FrameworkFamily family;
  if (!o.d.empty() || o.m) {
    require_method(method, {"closed", "recurrence"}, "higher-order framework families");
    const auto d = weights(o);
    meta["d"] = io::to_json(d);
    family = method == "closed" ? family_ho_from_gf(spec, s, d, order) : family_ho_recurrence(spec, s, d, order);
  } else {
    require_method(method, {"closed", "recurrence", "bell"}, "framework families");
    family = method == "closed"       ? family_from_closed_gf(spec, s, order)
             : method == "recurrence" ? family_from_recurrence(spec, s, order)
                                      : family_from_bell(spec, s, order);
  }
  meta["values"] = "P_n(s,r) for n = 0..N";
  return record("series", io::to_json(family.values), std::move(meta));
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

std::string single_line(std::string msg) {
  for (auto& c : msg) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return msg;
}

}  // namespace

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bernoulli, Euler and Eulerian polynomials of higher order, and identity verification", "norlund"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Compute one polynomial or number");
  compute->add_option("family", o.family, "bernoulli-number | bernoulli-poly | euler-poly | eulerian-poly | "
                                          "bernoulli-ho | euler-ho | eulerian-ho | bell")
      ->required();
  compute->add_option("--n", o.n, "Index n");
  compute->add_option("--m", o.m, "Order m (weights default to 1)");
  compute->add_option("--d", o.d, "Comma-separated weights d_i");
  compute->add_option("--rho", o.rho, "rho (scalar or per factor)");
  compute->add_option("--alpha", o.alpha, "alpha (scalar or per factor), default 1");
  compute->add_option("--s", o.s, "'sym' (default) or a rational value of s");
  compute->add_option("--a", o.a, "Comma-separated Bell arguments a_1..a_n");
  compute->add_option("--method", o.method, "gf | bell | recurrence | eulerian, where supported");
  add_format(compute, o);

  auto* expand = app.add_subcommand("expand", "Expand a generating function to order N");
  expand->add_option("family", o.family, "bernoulli | euler | eulerian")->required();
  expand->add_option("--N", o.big_n, "Truncation order");
  expand->add_option("--m", o.m, "Order m (weights default to 1)");
  expand->add_option("--d", o.d, "Comma-separated weights d_i");
  expand->add_option("--rho", o.rho, "rho (scalar or per factor)");
  expand->add_option("--alpha", o.alpha, "alpha (scalar or per factor), default 1");
  expand->add_option("--s", o.s, "A rational value of s (default 0) or 'sym'");
  add_format(expand, o);

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("names", o.names, "Identity names, or 'all' (default)");
  verify->add_option("--n-max", o.n_max, "Override the n range of every check");
  verify->add_option("--m-max", o.m_max, "Override the m range of every check");
  verify->add_option("--seed", o.seed, "Seed for the random parameter draws");
  verify->add_flag("--timing", o.timing, "Include elapsed_ms in each report");
  verify->add_flag("--serial", o.serial, "Run checks one after another");
  add_format(verify, o);

  auto* framework = app.add_subcommand("framework", "Evaluate a (Q1, Q2, G0) polynomial family at a rational s");
  framework->add_option("--spec", o.spec_path, "JSON spec file");
  framework->add_option("--preset", o.preset, "Built-in spec: eulerian")->check(CLI::IsMember({"eulerian"}));
  framework->add_option("--rho", o.rho, "rho for the eulerian preset");
  framework->add_option("--alpha", o.alpha, "alpha for the eulerian preset, default 1");
  framework->add_option("--s", o.s, "Rational value of s");
  framework->add_option("--N", o.big_n, "Highest index");
  framework->add_option("--m", o.m, "Order m of the higher-order family");
  framework->add_option("--d", o.d, "Weights of the higher-order family");
  framework->add_option("--method", o.method, "closed | recurrence | bell");
  add_format(framework, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << single_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (*compute) {
      emit(out, o.format, cmd_compute(o));
    } else if (*expand) {
      emit(out, o.format, cmd_expand(o));
    } else if (*verify) {
      auto result = cmd_verify(o);
      emit(out, o.format, result.record);
      return result.all_passed ? 0 : 1;
    } else {
      emit(out, o.format, cmd_framework(o));
    }
  } catch (const DomainError& e) {
    err << "error: " << single_line(e.what()) << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << single_line(e.what()) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << single_line(e.what()) << "\n";
    return 2;
  }
  return 0;
}

}  // namespace norlund::cli

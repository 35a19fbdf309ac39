// mvkraw: evaluate multivariate Krawtchouk tables and certify orthogonality.

#include <charconv>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "mvk/instance_io.hpp"

namespace {

using namespace mvk;

constexpr int kExitOk = 0;        // success / orthogonal
constexpr int kExitNegative = 1;  // not orthogonal / solver failure
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string field = "exact-rational";
  double tol = kDefaultEpsilon;
  int N = -1;
  std::string method = "gen";
  std::string input;
  std::string output = "json";
  std::string check = "b";
  int jobs = 1;
  std::string out;

  std::string x_arg, m_arg;                  // eval
  std::string kind, params, lhs, rhs;        // make
};

Composition parse_composition_arg(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']')
    t = t.substr(1, t.size() - 2);
  if (t.empty()) throw input_error("empty composition '" + text + "'");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string item =
        t.substr(pos, comma == std::string::npos ? comma : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw input_error("invalid composition entry '" + item + "' in '" +
                        text + "'");
    parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open input file '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

json load_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid JSON input: ") + e.what());
  }
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw input_error("cannot open output file '" + o.out + "'");
  f << text;
}

template <class S>
EqualityPolicy make_policy(const Options& o) {
  if constexpr (field_traits<S>::mode == FieldMode::complex_float)
    return EqualityPolicy::tolerance(o.tol);
  else
    return EqualityPolicy::exact();  // exact fields ignore --tol
}

template <class S>
std::optional<double> tolerance_field(const Options& o) {
  if constexpr (field_traits<S>::mode == FieldMode::complex_float)
    return o.tol;
  else
    return std::nullopt;
}

template <class S>
InstanceSpec<S> load_instance(const Options& o) {
  return instance_from_json<S>(load_json_text(read_text(o.input)));
}

PhiMethod parse_method_single(const std::string& m) {
  if (m == "gen") return PhiMethod::generating;
  if (m == "hyp") return PhiMethod::hypergeometric;
  throw input_error("--method must be gen, hyp or both");
}

template <class S>
int run_eval(const Options& o) {
  InstanceSpec<S> spec = load_instance<S>(o);
  Composition x = parse_composition_arg(o.x_arg);
  Composition m = parse_composition_arg(o.m_arg);
  if (o.N >= 0 && x.degree() != o.N)
    throw input_error("--N disagrees with the degree of --x");
  std::ostringstream os;
  int code = kExitOk;
  if (o.method == "both") {
    S g = phi_generating(spec.A0, x, m);
    S h = phi_hypergeometric(spec.A0, x, m);
    EqualityPolicy policy = make_policy<S>(o);
    bool agree = scalars_equal(g, h, policy, std::max(1.0, abs_value(g)));
    os << "generating: " << format_scalar(g) << '\n'
       << "hypergeometric: " << format_scalar(h) << '\n'
       << "agree: " << (agree ? "true" : "false") << '\n';
    if (!agree && policy.is_exact()) {
      // two exact evaluators of the same function cannot differ
      write_output(o, os.str());
      std::cerr << "internal error: exact evaluators disagree\n";
      return kExitInternal;
    }
  } else {
    S v = parse_method_single(o.method) == PhiMethod::generating
              ? phi_generating(spec.A0, x, m)
              : phi_hypergeometric(spec.A0, x, m);
    os << format_scalar(v) << '\n';
  }
  write_output(o, os.str());
  return code;
}

template <class S>
int run_table(const Options& o) {
  InstanceSpec<S> spec = load_instance<S>(o);
  if (o.N < 0) throw input_error("table needs --N");
  if (o.output != "json" && o.output != "csv")
    throw input_error("--output must be json or csv");
  const bool both = o.method == "both";
  PhiTable<S> t = phi_table(spec.A0, o.N,
                            both ? PhiMethod::generating
                                 : parse_method_single(o.method),
                            o.jobs);
  if (both) {
    PhiTable<S> h = phi_table(spec.A0, o.N, PhiMethod::hypergeometric, o.jobs);
    EqualityPolicy policy = make_policy<S>(o);
    for (std::size_t i = 0; i < t.values.size(); ++i)
      if (!scalars_equal(t.values[i], h.values[i], policy,
                         std::max(1.0, abs_value(t.values[i])))) {
        std::cerr << "internal error: evaluation methods disagree\n";
        return kExitInternal;
      }
  }
  std::ostringstream os;
  if (o.output == "json") {
    json j = table_to_json(t);
    if (both) j["method"] = "both";
    os << j.dump(2) << '\n';
  } else {
    table_to_csv(t, os);
  }
  write_output(o, os.str());
  return kExitOk;
}

template <class S>
int run_check(const Options& o) {
  if (o.check != "a" && o.check != "b" && o.check != "both")
    throw input_error("--check must be a, b or both");
  InstanceSpec<S> spec = load_instance<S>(o);
  if (o.N < 0) throw input_error("check needs --N");
  if (!spec.weights)
    throw input_error("check needs an instance that carries weights");
  EqualityPolicy policy = make_policy<S>(o);
  std::optional<double> tol = tolerance_field<S>(o);
  const WeightVector<S>& eta1 = spec.weights->first;
  const WeightVector<S>& eta2 = spec.weights->second;

  json out;
  OrthogonalityCertificate<S> certb =
      check_condition_b(spec.A0, eta1, eta2, o.N, policy);
  out["condition_b"] = certificate_to_json(certb, tol);
  bool overall = certb.ok();
  if (o.check == "a" || o.check == "both") {
    OrthogonalityCertificate<S> certa =
        check_condition_a(spec.A0, eta1, eta2, o.N, policy, o.jobs);
    out["condition_a"] = certificate_to_json(certa, tol);
    const bool agreement = certa.ok() == certb.ok();
    out["agreement"] = agreement;
    overall = overall && certa.ok();
    if (!agreement && policy.is_exact()) {
      // the two criteria are equivalent; exact disagreement means a bug
      write_output(o, out.dump(2) + "\n");
      std::cerr << "internal error: exact certificates disagree\n";
      return kExitInternal;
    }
  }
  write_output(o, out.dump(2) + "\n");
  return overall ? kExitOk : kExitNegative;
}

template <class S>
int run_solve(const Options& o) {
  InstanceSpec<S> spec = load_instance<S>(o);
  EqualityPolicy policy = make_policy<S>(o);
  SolveResult<S> r = solve_weights(spec.A0, policy);
  json out;
  if (!r.ok()) {
    out["error"] = solve_failure_name(r.reason);
    write_output(o, out.dump(2) + "\n");
    return kExitNegative;
  }
  out["eta1"] = scalar_list_to_json(r.eta1().entries());
  out["eta2"] = scalar_list_to_json(r.eta2().entries());
  out["zeta"] = format_scalar(S(1));
  write_output(o, out.dump(2) + "\n");
  return kExitOk;
}

std::vector<std::string> split_params(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    out.push_back(text.substr(
        pos, comma == std::string::npos ? comma : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class S>
int run_make(const Options& o) {
  std::vector<std::string> params = split_params(o.params);
  InstanceSpec<S> spec;
  if (o.kind == "classical") {
    if (params.size() != 1)
      throw input_error("classical takes exactly one parameter p");
    spec = classical_krawtchouk(parse_scalar<S>(params[0]));
  } else if (o.kind == "dft") {
    if (params.size() != 1)
      throw input_error("dft takes exactly one parameter k");
    int k = 0;
    auto [ptr, ec] = std::from_chars(params[0].data(),
                                     params[0].data() + params[0].size(), k);
    if (ec != std::errc() || ptr != params[0].data() + params[0].size())
      throw input_error("dft parameter must be an integer");
    spec = dft_character<S>(k);
  } else if (o.kind == "grunbaum-rahman") {
    if (params.size() != 4)
      throw input_error("grunbaum-rahman takes parameters u1,u2,v1,v2");
    spec = grunbaum_rahman(parse_scalar<S>(params[0]), parse_scalar<S>(params[1]),
                           parse_scalar<S>(params[2]), parse_scalar<S>(params[3]));
  } else if (o.kind == "kronecker") {
    if (!params.empty())
      throw input_error("kronecker takes no --params; use --lhs and --rhs");
    if (o.lhs.empty() || o.rhs.empty())
      throw input_error("kronecker needs --lhs and --rhs instance files");
    InstanceSpec<S> a = instance_from_json<S>(load_json_text(read_text(o.lhs)));
    InstanceSpec<S> b = instance_from_json<S>(load_json_text(read_text(o.rhs)));
    spec = kronecker_instance(a, b);
  } else if (o.kind == "raw") {
    throw input_error("raw instances are written by hand; load them directly");
  } else {
    throw input_error("--kind must be classical, dft, grunbaum-rahman or "
                      "kronecker");
  }
  write_output(o, instance_to_json(spec).dump(2) + "\n");
  return kExitOk;
}

template <class F>
int dispatch_field(const std::string& name, F&& f) {
  switch (field_mode_from_name(name)) {
    case FieldMode::rational:
      return f(std::type_identity<Rational>{});
    case FieldMode::gaussian_rational:
      return f(std::type_identity<GaussianRational>{});
    case FieldMode::complex_float:
      return f(std::type_identity<std::complex<double>>{});
  }
  throw internal_error("unreachable field mode");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multivariate Krawtchouk evaluation and orthogonality "
               "certification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool takes_input) {
    cmd->add_option("--field", o.field,
                    "scalar field: exact-rational, gaussian-rational or "
                    "complex-float")
        ->capture_default_str();
    cmd->add_option("--tol", o.tol, "comparison tolerance (complex-float only)")
        ->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "worker thread count")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write to this file instead of stdout");
    if (takes_input)
      cmd->add_option("--input", o.input,
                      "instance JSON file; '-' or absent reads stdin");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate phi(x; m) once");
  add_common(eval, true);
  eval->add_option("--x", o.x_arg, "row composition, e.g. 1,1 or [1,1]")
      ->required();
  eval->add_option("--m", o.m_arg, "column composition")->required();
  eval->add_option("--N", o.N, "optional cross-check of the level");
  eval->add_option("--method", o.method, "gen, hyp or both")
      ->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "emit the full phi table");
  add_common(table, true);
  table->add_option("--N", o.N, "level: both arguments range over X(n,N)")
      ->required();
  table->add_option("--method", o.method, "gen, hyp or both")
      ->capture_default_str();
  table->add_option("--output", o.output, "json or csv")->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "certify orthogonality");
  add_common(check, true);
  check->add_option("--N", o.N, "level")->required();
  check->add_option("--check", o.check,
                    "a, b or both; the matrix identity always runs")
      ->capture_default_str();

  CLI::App* solve = app.add_subcommand("solve", "recover admissible weights");
  add_common(solve, true);

  CLI::App* make = app.add_subcommand("make", "build a named instance");
  add_common(make, false);
  make->add_option("--kind", o.kind,
                   "classical, dft, grunbaum-rahman or kronecker")
      ->required();
  make->add_option("--params", o.params, "comma-separated scalar parameters");
  make->add_option("--lhs", o.lhs, "left factor instance file (kronecker)");
  make->add_option("--rhs", o.rhs, "right factor instance file (kronecker)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    auto run = [&](auto fn) { return dispatch_field(o.field, fn); };
    if (eval->parsed())
      return run([&](auto t) {
        return run_eval<typename decltype(t)::type>(o);
      });
    if (table->parsed())
      return run([&](auto t) {
        return run_table<typename decltype(t)::type>(o);
      });
    if (check->parsed())
      return run([&](auto t) {
        return run_check<typename decltype(t)::type>(o);
      });
    if (solve->parsed())
      return run([&](auto t) {
        return run_solve<typename decltype(t)::type>(o);
      });
    if (make->parsed())
      return run([&](auto t) {
        return run_make<typename decltype(t)::type>(o);
      });
    throw input_error("missing subcommand");
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

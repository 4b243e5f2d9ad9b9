#include "hyperspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperspec/analysis.hpp"
#include "hyperspec/experiments.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/operators.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

using nlohmann::json;
using nlohmann::ordered_json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::unsupported_family_operator:
    case Errc::unknown_limit: return kExitUnsupported;
    default: return kExitInputError;
  }
}

namespace {

struct Failure {
  int code;
  ordered_json detail;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(Errc::parse_error, "cannot write " + path);
  file << text;
}

OrientedHypergraph load_valid_hypergraph(const std::string& path) {
  auto g = parse_hypergraph(read_text(path));
  const auto result = validate(g);
  if (!result.ok()) {
    ordered_json detail;
    detail["error"] = "ValidationFailure";
    detail["input"] = path;
    ordered_json list = ordered_json::array();
    for (const auto& v : result.violations) {
      ordered_json item;
      item["kind"] = std::string(to_string(v.kind));
      if (v.vertex) item["vertex"] = *v.vertex;
      if (v.hyperedge) item["hyperedge"] = *v.hyperedge;
      item["message"] = v.message();
      list.push_back(std::move(item));
    }
    detail["violations"] = std::move(list);
    throw Failure{kExitInputError, std::move(detail)};
  }
  return g;
}

// Mini-form or JSON text; "@path" reads the spec from a file. A key
// "operator" inside the mini-form is lifted out.
FamilySpec load_family(const std::string& text, std::string& op_text) {
  auto spec = FamilySpec::from_cli(text.starts_with("@") ? read_text(text.substr(1)) : text);
  if (spec.params.contains("operator")) {
    if (op_text.empty()) op_text = spec.params["operator"].get<std::string>();
    spec.params.erase("operator");
  }
  return spec;
}

Operator require_operator(const std::string& text) {
  const auto op = parse_operator(text.empty() ? "L" : text);
  if (!op) throw Error(Errc::parse_error, "unknown operator \"" + text + "\"");
  return *op;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_matrix(const std::string& path, const SymmetricMatrix& q, std::ostream& out) {
  const bool market = path.ends_with(".mtx");
  write_text(path, market ? matrix_to_matrix_market(q) : matrix_to_csv(q), out);
}

struct Options {
  std::string input, family, op, out, matrix_out, sizes, mode, experiment, first, second, format,
      random;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double epsilon = 0.0, delta = 0.0;
  bool parallel = false;
  bool check = false;
};

int cmd_spectrum(const Options& o, CLI::App& app, std::ostream& out) {
  std::string op_text = o.op;
  SymmetricMatrix q;
  ordered_json source;
  if (!o.input.empty()) {
    const auto g = load_valid_hypergraph(o.input);
    q = build_operator(g, require_operator(op_text));
    source = o.input;
  } else if (!o.family.empty()) {
    const auto spec = load_family(o.family, op_text);
    const std::optional<std::size_t> size =
        app.count("--size") ? std::optional<std::size_t>(o.size) : std::nullopt;
    q = family_operator(spec, require_operator(op_text), instance_size(spec, size));
    source = spec.to_json();
  } else {
    throw Error(Errc::parse_error, "spectrum needs --input or --family");
  }
  const std::optional<double> tol = app.count("--tol") ? std::optional<double>(o.tol) : std::nullopt;
  const auto s = symmetric_eigenvalues(q, tol);
  if (!o.matrix_out.empty()) write_matrix(o.matrix_out, q, out);
  ordered_json j;
  j["source"] = source;
  j["operator"] = std::string(to_string(require_operator(op_text)));
  const auto body = spectrum_to_json(s);
  for (const auto& [key, value] : body.items()) j[key] = value;
  write_text(o.out, dump(j), out);
  return kExitOk;
}

int cmd_verify(const Options& o, CLI::App& app, std::ostream& out) {
  std::string op_text = o.op;
  if (o.family.empty()) throw Error(Errc::parse_error, "verify needs --family");
  const auto spec = load_family(o.family, op_text);
  const Operator op = require_operator(op_text);
  const std::optional<std::size_t> size =
      app.count("--size") ? std::optional<std::size_t>(o.size) : std::nullopt;
  const auto closed = closed_form_spectrum(spec, op, size);
  const auto q = family_operator(spec, op, instance_size(spec, size));
  const auto numeric = eigenvalues_quad(q);
  const auto expected = closed.values();
  if (numeric.size() != expected.size())
    throw Failure{kExitFailure, ordered_json{{"error", "OrderMismatch"},
                                             {"numeric", numeric.size()},
                                             {"closed_form", expected.size()}}};
  quad worst = 0;
  for (std::size_t k = 0; k < numeric.size(); ++k)
    worst = std::max(worst, fabsq(numeric[k] - expected[k]));
  const double tolerance = app.count("--tol") ? o.tol : 1e-7;
  const bool pass = static_cast<double>(worst) <= tolerance;

  ordered_json j;
  j["family"] = spec.to_json();
  j["operator"] = std::string(to_string(op));
  j["n"] = closed.order;
  ordered_json terms = ordered_json::array();
  for (const auto* list : {&closed.terms, &closed.residuals})
    for (const auto& t : *list)
      terms.push_back({{"label", t.label}, {"value", t.approx()}, {"multiplicity", t.multiplicity}});
  j["closed_form"] = std::move(terms);
  j["max_abs_error"] = static_cast<double>(worst);
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  write_text(o.out, dump(j), out);
  return pass ? kExitOk : kExitFailure;
}

int cmd_converge(const Options& o, CLI::App& app, std::ostream& out) {
  ExperimentSpec spec;
  if (!o.experiment.empty()) {
    spec = ExperimentSpec::from_json(parse_json(read_text(o.experiment)));
  } else {
    std::string op_text = o.op;
    if (!o.first.empty()) {
      spec.family.first = load_family(o.first, op_text);
      if (!o.second.empty()) spec.family.second = load_family(o.second, op_text);
    } else if (!o.family.empty()) {
      spec.family.first = load_family(o.family, op_text);
    } else {
      throw Error(Errc::parse_error, "converge needs --experiment, --family or --first/--second");
    }
    if (o.sizes.empty()) throw Error(Errc::parse_error, "converge needs --sizes");
    spec.sizes = parse_sizes(o.sizes);
    spec.op = require_operator(op_text);
    const auto mode = parse_mode(o.mode.empty() ? "class" : o.mode);
    if (!mode) throw Error(Errc::parse_error, "unknown mode \"" + o.mode + "\"");
    spec.mode = *mode;
  }
  // Flags override the experiment file.
  if (app.count("--seed")) spec.seed = o.seed;
  if (app.count("--tol")) spec.tol = o.tol;
  if (app.count("--epsilon")) spec.epsilon = o.epsilon;
  if (app.count("--delta")) spec.delta = o.delta;

  const auto report = run_experiment(spec, o.parallel);
  if (!o.out.empty()) {
    write_text(o.out + ".csv", report.to_csv(), out);
    write_text(o.out + ".json", dump(report.to_json()), out);
  } else if (o.format == "json") {
    out << dump(report.to_json());
  } else {
    out << report.to_csv();
  }
  return o.check && !report.trend.ok() ? kExitFailure : kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.first.empty() || o.second.empty())
    throw Error(Errc::parse_error, "bounds needs --first and --second");
  const auto g1 = load_valid_hypergraph(o.first);
  const auto g2 = load_valid_hypergraph(o.second);
  if (g1.n_vertices() != g2.n_vertices())
    throw Error(Errc::vertex_set_mismatch, std::to_string(g1.n_vertices()) + " vs " +
                                               std::to_string(g2.n_vertices()) + " vertices");
  auto reports = thmci_check(g1, g2);
  for (Operator op : {Operator::D, Operator::A, Operator::L, Operator::K}) {
    auto wh = wielandt_hoffman_check(build_operator(g1, op), build_operator(g2, op));
    wh.quantity = "wielandt_hoffman_" + std::string(to_string(op));
    reports.push_back(std::move(wh));
  }
  const auto diff = hyperedge_difference(g1, g2);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const BoundReport& r) { return r.holds(); });

  if (o.format == "json") {
    ordered_json j;
    j["c1"] = diff.c1;
    j["c2"] = diff.c2;
    j["n"] = g1.n_vertices();
    ordered_json rows = ordered_json::array();
    for (const auto& r : reports)
      rows.push_back({{"quantity", r.quantity},
                      {"measured", r.measured},
                      {"bound", r.bound},
                      {"slack", r.slack},
                      {"holds", r.holds()}});
    j["reports"] = std::move(rows);
    j["slack_tolerance"] = kBoundSlackTolerance;
    write_text(o.out, dump(j), out);
  } else {
    std::ostringstream os;
    os << "c1=" << diff.c1 << " c2=" << diff.c2 << " n=" << g1.n_vertices() << '\n';
    os << "quantity,measured,bound,slack,holds\n";
    for (const auto& r : reports)
      os << r.quantity << ',' << format_real(r.measured) << ',' << format_real(r.bound) << ','
         << format_real(r.slack) << ',' << (r.holds() ? "yes" : "no") << '\n';
    write_text(o.out, os.str(), out);
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_gen(const Options& o, CLI::App& app, std::ostream& out) {
  OrientedHypergraph g;
  if (!o.random.empty()) {
    std::size_t n = 0, m = 0, card = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(o.random);
    if (!(in >> n >> c1 >> m >> c2 >> card) || c1 != ':' || c2 != ':')
      throw Error(Errc::parse_error, "--random expects n:m:max_card");
    g = random_hypergraph(n, m, card, o.seed);
  } else if (!o.family.empty()) {
    std::string ignored;
    const auto spec = load_family(o.family, ignored);
    g = instantiate(spec, app.count("--size") ? std::optional<std::size_t>(o.size) : std::nullopt);
  } else {
    throw Error(Errc::parse_error, "gen needs --family or --random");
  }
  write_text(o.out, to_canonical_json(g) + "\n", out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of oriented hypergraphs", "hyperspec"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--operator", o.op, "D, A, L, K, LH or KH");
    sub->add_option("--tol", o.tol, "clustering tolerance (verify: pass tolerance)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--out", o.out, "output file (converge: path prefix)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities of an operator");
  add_common(spectrum);
  spectrum->add_option("--input", o.input, "hypergraph JSON file, - for stdin");
  spectrum->add_option("--family", o.family, "family spec: mini-form, JSON, or @file");
  spectrum->add_option("--size", o.size, "family size");
  spectrum->add_option("--matrix-out", o.matrix_out, "write the operator as CSV or .mtx");

  auto* verify = app.add_subcommand("verify", "compare numeric spectra with closed forms");
  add_common(verify);
  verify->add_option("--family", o.family, "family spec")->required();
  verify->add_option("--size", o.size, "family size");

  auto* converge = app.add_subcommand("converge", "convergence experiment over sizes");
  add_common(converge);
  converge->add_option("--experiment", o.experiment, "experiment JSON file");
  converge->add_option("--family", o.family, "family spec");
  converge->add_option("--first", o.first, "first family of a pair");
  converge->add_option("--second", o.second, "second family of a pair");
  converge->add_option("--sizes", o.sizes, "a:b:step, a:b:xk or a,b,c");
  converge->add_option("--mode", o.mode, "class, weak_star or tv");
  converge->add_option("--epsilon", o.epsilon, "weak-star rate bound epsilon");
  converge->add_option("--delta", o.delta, "weak-star rate bound delta");
  converge->add_option("--format", o.format, "stdout format: csv or json");
  converge->add_flag("--parallel", o.parallel, "evaluate sizes concurrently");
  converge->add_flag("--check", o.check, "exit 3 when the trend assertion fails");

  auto* bounds = app.add_subcommand("bounds", "operator difference norms against their bounds");
  add_common(bounds);
  bounds->add_option("--first", o.first, "first hypergraph JSON")->required();
  bounds->add_option("--second", o.second, "second hypergraph JSON")->required();
  bounds->add_option("--format", o.format, "table or json");

  auto* gen = app.add_subcommand("gen", "emit a family member as hypergraph JSON");
  add_common(gen);
  gen->add_option("--family", o.family, "family spec");
  gen->add_option("--size", o.size, "family size");
  gen->add_option("--random", o.random, "random hypergraph n:m:max_card");

  std::vector<const char*> argv{"hyperspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*spectrum) return cmd_spectrum(o, *spectrum, out);
    if (*verify) return cmd_verify(o, *verify, out);
    if (*converge) return cmd_converge(o, *converge, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*gen) return cmd_gen(o, *gen, out);
  } catch (const Failure& f) {
    err << f.detail.dump() << '\n';
    return f.code;
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    err << j.dump() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    ordered_json j;
    j["error"] = "ParseError";
    j["message"] = e.what();
    err << j.dump() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"] = "Failure";
    j["message"] = e.what();
    err << j.dump() << '\n';
    return kExitFailure;
  }
  return kExitInputError;
}

}  // namespace hyperspec

#include "hyperspec/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <future>
#include <sstream>

#include "hyperspec/analysis.hpp"
#include "hyperspec/io.hpp"

namespace hyperspec {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::class_limit: return "class";
    case ExperimentMode::weak_star: return "weak_star";
    case ExperimentMode::tv: return "tv";
  }
  return "?";
}

std::optional<ExperimentMode> parse_mode(std::string_view text) {
  if (text == "class") return ExperimentMode::class_limit;
  if (text == "weak_star") return ExperimentMode::weak_star;
  if (text == "tv") return ExperimentMode::tv;
  return std::nullopt;
}

FamilyPairSpec FamilyPairSpec::from_json(const json& j) {
  FamilyPairSpec pair;
  if (j.is_object() && j.contains("first")) {
    pair.first = FamilySpec::from_json(j["first"]);
    if (j.contains("second")) pair.second = FamilySpec::from_json(j["second"]);
  } else {
    pair.first = FamilySpec::from_json(j);
  }
  return pair;
}

json FamilyPairSpec::to_json() const {
  if (!second) return first.to_json();
  return json{{"first", first.to_json()}, {"second", second->to_json()}};
}

namespace {

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end || text.empty())
    throw Error(Errc::parse_error, "bad size \"" + std::string(text) + "\"");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> sizes;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw Error(Errc::parse_error, "sizes must be a:b:step");
    const std::size_t a = parse_count(parts[0]), b = parse_count(parts[1]);
    const bool geometric = !parts[2].empty() && parts[2][0] == 'x';
    const std::size_t step = parse_count(geometric ? parts[2].substr(1) : parts[2]);
    if (a == 0 || b < a || (geometric ? step < 2 : step == 0))
      throw Error(Errc::parse_error, "sizes range does not advance");
    for (std::size_t s = a; s <= b; s = geometric ? s * step : s + step) sizes.push_back(s);
  } else {
    for (auto part : split(text, ',')) sizes.push_back(parse_count(part));
  }
  for (std::size_t k = 1; k < sizes.size(); ++k)
    if (sizes[k] <= sizes[k - 1]) throw Error(Errc::parse_error, "sizes must be ascending");
  return sizes;
}

ExperimentSpec ExperimentSpec::from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::parse_error, "experiment must be a JSON object");
  ExperimentSpec spec;
  if (j.contains("family_pair"))
    spec.family = FamilyPairSpec::from_json(j["family_pair"]);
  else if (j.contains("first"))
    spec.family = FamilyPairSpec::from_json(j);
  else if (j.contains("family"))
    spec.family = FamilyPairSpec::from_json(j["family"]);
  else
    throw Error(Errc::parse_error, "experiment needs \"family\" or \"family_pair\"");

  if (!j.contains("sizes")) throw Error(Errc::parse_error, "experiment needs \"sizes\"");
  if (j["sizes"].is_string()) {
    spec.sizes = parse_sizes(j["sizes"].get<std::string>());
  } else if (j["sizes"].is_array()) {
    for (const auto& s : j["sizes"]) {
      if (!s.is_number_integer() || s.get<std::int64_t>() <= 0)
        throw Error(Errc::parse_error, "sizes must be positive integers");
      spec.sizes.push_back(s.get<std::size_t>());
    }
    for (std::size_t k = 1; k < spec.sizes.size(); ++k)
      if (spec.sizes[k] <= spec.sizes[k - 1])
        throw Error(Errc::parse_error, "sizes must be ascending");
  } else {
    throw Error(Errc::parse_error, "\"sizes\" must be a list or a:b:step");
  }

  if (j.contains("operator")) {
    const auto op = parse_operator(j["operator"].get<std::string>());
    if (!op) throw Error(Errc::parse_error, "unknown operator " + j["operator"].dump());
    spec.op = *op;
  }
  if (j.contains("mode")) {
    const auto mode = parse_mode(j["mode"].get<std::string>());
    if (!mode) throw Error(Errc::parse_error, "unknown mode " + j["mode"].dump());
    spec.mode = *mode;
  }
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("tol")) spec.tol = j["tol"].get<double>();
  if (j.contains("epsilon")) spec.epsilon = j["epsilon"].get<double>();
  if (j.contains("delta")) spec.delta = j["delta"].get<double>();
  return spec;
}

json ExperimentSpec::to_json() const {
  json j;
  j["family"] = family.to_json();
  j["sizes"] = sizes;
  j["operator"] = std::string(hyperspec::to_string(op));
  j["mode"] = std::string(hyperspec::to_string(mode));
  j["seed"] = seed;
  if (tol) j["tol"] = *tol;
  if (epsilon) j["epsilon"] = *epsilon;
  if (delta) j["delta"] = *delta;
  return j;
}

SymmetricMatrix family_operator(const FamilySpec& spec, Operator op, std::size_t size) {
  if (spec.kind == FamilyKind::r_complete && op != Operator::LH && op != Operator::KH) {
    const auto r = spec.params.contains("r") ? spec.params["r"].get<std::size_t>() : 0;
    return r_complete_operator(size, r, op);
  }
  return build_operator(instantiate(spec, size), op);
}

std::size_t tv_row_difference(const OrientedHypergraph& g1, const OrientedHypergraph& g2,
                              Operator op) {
  if (g1.n_vertices() != g2.n_vertices())
    throw Error(Errc::vertex_set_mismatch, "pair has different vertex counts");
  if (op != Operator::L)
    return differing_rows(build_operator(g1, op), build_operator(g2, op)).size();
  const auto a1 = adjacency_matrix_exact(g1), a2 = adjacency_matrix_exact(g2);
  const auto d1 = g1.degrees(), d2 = g2.degrees();
  std::size_t count = 0;
  for (std::size_t i = 0; i < g1.n_vertices(); ++i) {
    const auto r1 = a1.row(i), r2 = a2.row(i);
    if (d1[i] != d2[i] || !std::equal(r1.begin(), r1.end(), r2.begin())) ++count;
  }
  return count;
}

namespace {

double combinatorial_bound(const OrientedHypergraph& g1, const OrientedHypergraph& g2,
                           Operator op) {
  const auto diff = hyperedge_difference(g1, g2);
  const double c1 = static_cast<double>(diff.c1), c2 = static_cast<double>(diff.c2);
  if (op == Operator::L)
    return 2.0 * std::sqrt(2.0 * static_cast<double>(g1.n_vertices())) * c1 * c2;
  return 3.0 * c1 * c1 * c2;
}

void fill_measure(ExperimentRow& row, const SpectralMeasure& mu) {
  row.atoms = mu.atoms();
  row.weights = mu.weights();
  row.cluster_tol = mu.tol();
}

ExperimentRow run_size(const ExperimentSpec& spec, std::size_t size) {
  ExperimentRow row;
  row.size = size;
  row.op = spec.op;
  const auto& first = spec.family.first;
  row.n = instance_size(first, size);

  if (spec.mode == ExperimentMode::class_limit) {
    const auto q = family_operator(first, spec.op, size);
    const auto mu = spectral_measure(q, spec.tol);
    fill_measure(row, mu);
    const auto limit = spectral_class_limit(first, spec.op);
    row.value = limit.measure ? weak_star_gap(mu, *limit.measure) : mu.dominant_atom();
    return row;
  }

  if (!spec.family.second)
    throw Error(Errc::invalid_parameters, "this mode compares two families");
  const auto g1 = instantiate(first, size);
  const auto g2 = instantiate(*spec.family.second, size);
  if (g1.n_vertices() != g2.n_vertices())
    throw Error(Errc::generation_failure, "families differ in vertex count at size " +
                                              std::to_string(size));
  const auto q1 = build_operator(g1, spec.op);
  const auto q2 = build_operator(g2, spec.op);
  const auto s1 = symmetric_eigenvalues(q1, spec.tol);
  const auto mu1 = spectral_measure(s1);
  const auto mu2 = spectral_measure(q2, spec.tol);
  fill_measure(row, mu1);

  if (spec.mode == ExperimentMode::weak_star) {
    row.value = weak_star_gap(mu1, mu2);
    if (spec.epsilon && spec.delta) {
      // Every battery member is bounded by 1.
      row.bound = weak_star_rate_bound(*spec.epsilon, *spec.delta, 1.0,
                                       combinatorial_bound(g1, g2, spec.op), row.n);
    }
  } else {
    row.match_tol = default_match_tolerance(mu1, mu2);
    row.value = tv_distance(mu1, mu2, row.match_tol);
    const auto b = tv_bound(s1, tv_row_difference(g1, g2, spec.op));
    row.bound = b.value;
    row.s = b.s;
    row.k = b.k;
    row.c = b.c;
  }
  if (row.bound) row.slack = *row.bound - row.value;
  return row;
}

TrendCheck assess(const ExperimentSpec& spec, const std::vector<ExperimentRow>& rows,
                  bool divergent) {
  TrendCheck t;
  t.kind = divergent ? "divergence" : "decay";
  if (rows.empty()) return t;
  const double first = rows.front().value, last = rows.back().value;
  t.ratio_ok = divergent ? last >= 2.0 * first : last <= 0.5 * first;
  for (const auto& r : rows)
    if (r.slack && *r.slack < -kBoundSlackTolerance) t.bounds_ok = false;
  (void)spec;
  return t;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec, bool parallel) {
  if (spec.sizes.empty()) throw Error(Errc::empty_list, "experiment has no sizes");
  for (std::size_t k = 1; k < spec.sizes.size(); ++k)
    if (spec.sizes[k] <= spec.sizes[k - 1])
      throw Error(Errc::invalid_parameters, "sizes must be ascending");

  bool divergent = false;
  ExperimentReport report;
  report.spec = spec;
  switch (spec.mode) {
    case ExperimentMode::class_limit: {
      const auto limit = spectral_class_limit(spec.family.first, spec.op);
      divergent = !limit.measure;
      report.value_label = divergent ? "dominant_atom" : "weak_star_gap_to_limit";
      break;
    }
    case ExperimentMode::weak_star: report.value_label = "weak_star_gap"; break;
    case ExperimentMode::tv: report.value_label = "tv_distance"; break;
  }

  std::vector<std::future<ExperimentRow>> jobs;
  for (std::size_t size : spec.sizes)
    jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                              [&spec, size] { return run_size(spec, size); }));
  for (auto& job : jobs) report.rows.push_back(job.get());
  report.trend = assess(spec, report.rows, divergent);
  return report;
}

ExperimentReport tv_convergence_run(const FamilyPairSpec& pair, std::vector<std::size_t> sizes,
                                    Operator op, bool parallel) {
  if (op == Operator::LH || op == Operator::KH)
    throw Error(Errc::unsupported_family_operator, "tv runs use A, D, K or L");
  ExperimentSpec spec;
  spec.family = pair;
  spec.sizes = std::move(sizes);
  spec.op = op;
  spec.mode = ExperimentMode::tv;
  return run_experiment(spec, parallel);
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os << "size,value,bound,slack\n";
  for (const auto& r : rows) {
    os << r.size << ',' << format_real(r.value) << ',';
    if (r.bound) os << format_real(*r.bound);
    os << ',';
    if (r.slack) os << format_real(*r.slack);
    os << '\n';
  }
  return os.str();
}

ordered_json ExperimentReport::to_json() const {
  ordered_json j;
  j["spec"] = spec.to_json();
  j["value"] = value_label;
  ordered_json rows_json = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["size"] = r.size;
    row["n"] = r.n;
    row["operator"] = std::string(hyperspec::to_string(r.op));
    row["atoms"] = r.atoms;
    row["weights"] = r.weights;
    row["value"] = r.value;
    row["bound"] = r.bound ? ordered_json(*r.bound) : ordered_json(nullptr);
    row["slack"] = r.slack ? ordered_json(*r.slack) : ordered_json(nullptr);
    row["cluster_tol"] = r.cluster_tol;
    if (r.match_tol) row["match_tol"] = *r.match_tol;
    if (r.s) {
      row["s"] = *r.s;
      row["k"] = *r.k;
      row["c"] = *r.c;
    }
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);

  ordered_json trend_json;
  trend_json["kind"] = trend.kind;
  trend_json["ratio_ok"] = trend.ratio_ok;
  trend_json["bounds_ok"] = trend.bounds_ok;
  trend_json["ok"] = trend.ok();
  j["trend"] = std::move(trend_json);

  ordered_json meta;
  meta["version"] = std::string(kVersion);
  meta["seed"] = spec.seed;
  meta["cluster_tolerance"] =
      spec.tol ? ordered_json(*spec.tol) : ordered_json("max(1e-8, 1e-12*order*max|entry|)");
  const char* env = std::getenv("HYPERSPEC_TOL");
  meta["HYPERSPEC_TOL"] = env ? ordered_json(env) : ordered_json(nullptr);
  meta["match_tolerance"] = "10 x cluster tolerance";
  meta["bound_slack_tolerance"] = kBoundSlackTolerance;
  meta["battery"] = "hats of half-width 1 at integers, bumps of half-width 1 at half-integers";
  j["metadata"] = std::move(meta);
  return j;
}

}  // namespace hyperspec

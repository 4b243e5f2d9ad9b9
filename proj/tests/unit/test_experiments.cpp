#include "doctest.h"

#include "hyperspec/experiments.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/operators.hpp"

using namespace hyperspec;

namespace {

ExperimentSpec connected_sum(Operator op) {
  return ExperimentSpec::from_json(nlohmann::json::parse(R"({
    "family_pair": {
      "first": {"kind": "perturbed", "params": {
        "base": {"kind": "disjoint_union", "params": {"copies": 2, "of": {"kind": "r_complete", "params": {"r": 2}}}},
        "bridges": "sqrt", "bridge_orientation": "graph"}},
      "second": {"kind": "disjoint_union", "params": {"copies": 2, "of": {"kind": "r_complete", "params": {"r": 2}}}}
    },
    "sizes": [20, 40, 80],
    "mode": "tv",
    "operator": ")" + std::string(to_string(op)) + R"("})"));
}

}  // namespace

TEST_CASE("size lists") {
  CHECK(parse_sizes("10:40:10") == std::vector<std::size_t>{10, 20, 30, 40});
  CHECK(parse_sizes("20:320:x2") == std::vector<std::size_t>{20, 40, 80, 160, 320});
  CHECK(parse_sizes("5,7,9") == std::vector<std::size_t>{5, 7, 9});
  for (const char* bad : {"", "9,5", "10:5:1", "1:9:0", "1:9:x1", "a,b"}) CHECK_THROWS_AS(parse_sizes(bad), Error);
}

TEST_CASE("modes") {
  CHECK(parse_mode("class") == ExperimentMode::class_limit);
  CHECK(parse_mode("weak_star") == ExperimentMode::weak_star);
  CHECK(parse_mode("tv") == ExperimentMode::tv);
  CHECK_FALSE(parse_mode("other").has_value());
}

TEST_CASE("experiment spec round trip") {
  const auto spec = connected_sum(Operator::K);
  const auto again = ExperimentSpec::from_json(spec.to_json());
  CHECK(again.to_json() == spec.to_json());
  CHECK(again.sizes == spec.sizes);
  CHECK(again.op == Operator::K);
}

TEST_CASE("family operator uses pair counts for r-complete") {
  const auto spec = FamilySpec::from_cli("r_complete r=3");
  const auto q = family_operator(spec, Operator::L, 9);
  const auto want = normalized_laplacian(r_complete(9, 3));
  for (std::size_t k = 0; k < q.values().size(); ++k) CHECK(std::fabs(q.values()[k] - want.values()[k]) <= 1e-15);
}

TEST_CASE("tv row difference") {
  const auto g1 = cycle_graph(10);
  const auto g2 = perturb(g1, {Hyperedge::edge(0, 5)}, {});
  CHECK(tv_row_difference(g1, g2, Operator::A) == 2);
  CHECK(tv_row_difference(g1, g2, Operator::D) == 2);
  CHECK(tv_row_difference(g1, g2, Operator::K) == 2);
  CHECK(tv_row_difference(g1, g2, Operator::L) == 2);
  CHECK(tv_row_difference(g1, g1, Operator::L) == 0);
}

TEST_CASE("tv experiments hold their bounds and decay") {
  for (Operator op : {Operator::L, Operator::K, Operator::D, Operator::A}) {
    const auto report = run_experiment(connected_sum(op));
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) {
      REQUIRE(row.bound.has_value());
      CHECK(row.value <= *row.bound + 1e-8);
      CHECK(row.c.value() == static_cast<std::size_t>(2 * std::ceil(std::sqrt(row.n))));
    }
    CHECK(report.trend.kind == "decay");
    CHECK(report.trend.bounds_ok);
  }
}

TEST_CASE("runs are deterministic and parallel-safe") {
  const auto spec = connected_sum(Operator::L);
  const auto a = run_experiment(spec, false), b = run_experiment(spec, true);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json().dump() == b.to_json().dump());

  auto random = ExperimentSpec::from_json(nlohmann::json::parse(
      R"({"family": {"kind": "r_complete", "params": {"r": 2}}, "sizes": "10,20", "mode": "class", "operator": "L", "seed": 5})"));
  CHECK(run_experiment(random).to_json().dump() == run_experiment(random, true).to_json().dump());
}

TEST_CASE("class experiments") {
  auto spec = ExperimentSpec::from_json(nlohmann::json::parse(
      R"({"family": {"kind": "hyperflower_fixed_core", "params": {"t": 2, "core": 2}}, "sizes": [20, 80, 320], "mode": "class", "operator": "K"})"));
  const auto report = run_experiment(spec);
  CHECK(report.trend.kind == "decay");
  CHECK(report.trend.ok());
  CHECK(report.rows.back().value < report.rows.front().value / 2);

  spec = ExperimentSpec::from_json(nlohmann::json::parse(
      R"({"family": {"kind": "r_complete", "params": {"r": 3}}, "sizes": [10, 20, 40], "mode": "class", "operator": "K"})"));
  const auto divergent = run_experiment(spec);
  CHECK(divergent.trend.kind == "divergence");
  CHECK(divergent.trend.ok());

  spec.op = Operator::LH;
  CHECK_THROWS_AS(tv_convergence_run(spec.family, spec.sizes, Operator::LH), Error);
}

TEST_CASE("report csv layout") {
  const auto report = run_experiment(connected_sum(Operator::D));
  const auto csv = report.to_csv();
  CHECK(csv.rfind("size,value,bound,slack\n20,", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 4);
  const auto j = report.to_json();
  CHECK(j["metadata"]["version"] == std::string(kVersion));
  CHECK(j["rows"][0].contains("s"));
}

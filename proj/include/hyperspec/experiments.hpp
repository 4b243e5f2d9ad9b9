#ifndef HYPERSPEC_EXPERIMENTS_HPP
#define HYPERSPEC_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperspec/families.hpp"
#include "hyperspec/operators.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

inline constexpr std::string_view kVersion = "1.0.0";

enum class ExperimentMode { class_limit, weak_star, tv };

std::string_view to_string(ExperimentMode mode);
std::optional<ExperimentMode> parse_mode(std::string_view text);

struct FamilyPairSpec {
  FamilySpec first;
  std::optional<FamilySpec> second;

  // {"first": spec, "second": spec}, or a bare family spec for single-family runs.
  static FamilyPairSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// "a:b:step" (additive), "a:b:xk" (geometric) or "a,b,c".
std::vector<std::size_t> parse_sizes(std::string_view text);

struct ExperimentSpec {
  FamilyPairSpec family;
  std::vector<std::size_t> sizes;
  Operator op = Operator::L;
  ExperimentMode mode = ExperimentMode::class_limit;
  std::uint64_t seed = 0;
  std::optional<double> tol;  // clustering tolerance; default is scale-aware
  // Modulus-of-continuity parameters for the weak-star rate bound.
  std::optional<double> epsilon;
  std::optional<double> delta;

  // Keys: "family" or "family_pair" (or "first"/"second"), "sizes", "operator",
  // "mode", and optional "seed", "tol", "epsilon", "delta".
  static ExperimentSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct ExperimentRow {
  std::size_t size = 0;
  std::size_t n = 0;
  Operator op = Operator::L;
  std::vector<double> atoms;    // measure of the first family
  std::vector<double> weights;
  double value = 0.0;
  std::optional<double> bound;
  std::optional<double> slack;  // bound - value
  double cluster_tol = 0.0;
  std::optional<double> match_tol;
  // tv mode: the terms of (k + 2cs)/n.
  std::optional<std::size_t> s, k, c;
};

struct TrendCheck {
  std::string kind;  // "decay" (last <= first/2) or "divergence" (last >= 2 first)
  bool ratio_ok = false;
  bool bounds_ok = true;
  bool ok() const { return ratio_ok && bounds_ok; }
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<ExperimentRow> rows;  // ascending size
  std::string value_label;          // what `value` measures
  TrendCheck trend;

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

// Operator of a family instance; r-complete D, A, L, K come from pair counts.
SymmetricMatrix family_operator(const FamilySpec& spec, Operator op, std::size_t size);

// Sizes may be evaluated concurrently; rows come back in size order.
ExperimentReport run_experiment(const ExperimentSpec& spec, bool parallel = false);

ExperimentReport tv_convergence_run(const FamilyPairSpec& pair, std::vector<std::size_t> sizes,
                                    Operator op, bool parallel = false);

// Rows where the operators really differ. For L, rows i where A or D of the two
// hypergraphs differ: D^-1 A then differs only in those rows and is similar to L.
std::size_t tv_row_difference(const OrientedHypergraph& g1, const OrientedHypergraph& g2,
                              Operator op);

}  // namespace hyperspec

#endif

#ifndef HYPERSPEC_FAMILIES_HPP
#define HYPERSPEC_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperspec/eigensolver.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/operators.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

// r_complete refuses to materialize more hyperedges than this.
inline constexpr std::uint64_t kMaxMaterializedHyperedges = 4'000'000;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Generators. All-inputs incidences except the three graph families, which
// give each edge one input and one output.
OrientedHypergraph single_hyperedge(std::size_t n);
OrientedHypergraph r_complete(std::size_t n, std::size_t r);
// Vertices [0, core) form the core; hyperedge j adds vertices
// core + j*t .. core + j*t + t - 1.
OrientedHypergraph hyperflower(std::size_t l, std::size_t t, std::size_t core);
OrientedHypergraph cycle_graph(std::size_t n);
OrientedHypergraph path_graph(std::size_t n);
OrientedHypergraph star_graph(std::size_t n);
OrientedHypergraph disjoint_union(const std::vector<OrientedHypergraph>& parts);
OrientedHypergraph perturb(const OrientedHypergraph& g, const std::vector<Hyperedge>& add,
                           const std::vector<std::size_t>& remove);

// D, A, L or K of the r-complete hypergraph built from pair counts, without
// enumerating the C(n, r) hyperedges.
SymmetricMatrix r_complete_operator(std::size_t n, std::size_t r, Operator op);

enum class FamilyKind {
  single_hyperedge,
  r_complete,
  hyperflower_fixed_lt,
  hyperflower_fixed_core,
  cycle_graph,
  path_graph,
  star_graph,
  disjoint_union,
  perturbed,
};

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view text);

// {"kind": "...", "params": {...}}. Size-dependent parameters (n, the core of
// a fixed-(l,t) hyperflower, l of a fixed-core hyperflower) may be left out
// and supplied per size.
struct FamilySpec {
  FamilyKind kind = FamilyKind::single_hyperedge;
  nlohmann::json params = nlohmann::json::object();

  static FamilySpec from_json(const nlohmann::json& j);
  // "hyperflower l=5 t=3 core=2" style; also accepts a JSON object literal.
  static FamilySpec from_cli(std::string_view text);
  nlohmann::json to_json() const;
};

OrientedHypergraph instantiate(const FamilySpec& spec, std::optional<std::size_t> size = {});
// Vertex count of the instance that instantiate(spec, size) would build.
std::size_t instance_size(const FamilySpec& spec, std::optional<std::size_t> size = {});

struct ClosedFormTerm {
  std::string label;
  quad value;
  std::size_t multiplicity;

  double approx() const { return static_cast<double>(value); }
};

struct ClosedFormSpectrum {
  std::size_t order = 0;
  std::vector<ClosedFormTerm> terms;
  // Eigenvalues the theory leaves implicit, recovered here from trace identities.
  std::vector<ClosedFormTerm> residuals;

  std::size_t residual_count() const { return residuals.size(); }
  // Every eigenvalue with multiplicity, ascending.
  std::vector<quad> values() const;
  std::vector<double> values_double() const;
};

ClosedFormSpectrum closed_form_single_hyperedge(std::size_t n, Operator op);
ClosedFormSpectrum closed_form_r_complete(std::size_t n, std::size_t r, Operator op);
// Requires core >= 1. For A the two residual eigenvalues solve
// a + b = -sum(listed), a^2 + b^2 = tr(A^2) - sum(listed^2), a <= b.
ClosedFormSpectrum closed_form_hyperflower(std::size_t l, std::size_t t, std::size_t core,
                                           Operator op);
ClosedFormSpectrum closed_form_spectrum(const FamilySpec& spec, Operator op,
                                        std::optional<std::size_t> size = {});

// Hyperflower K^H: the largest atom in the form n - t l^2 + t
// next to the one implied by K and K^H sharing nonzero spectra (n l - t l^2 + t),
// and the value the eigensolver actually finds.
struct KhAtomDiscrepancy {
  double stated_atom = 0.0;
  double identity_atom = 0.0;
  double numeric_largest = 0.0;
  bool stated_matches = false;
  bool identity_matches = false;
};

KhAtomDiscrepancy hyperflower_kh_discrepancy(std::size_t l, std::size_t t, std::size_t core,
                                             double tol = 1e-7);

struct ClassLimit {
  std::optional<SpectralMeasure> measure;  // empty: the family has no spectral class
  std::string source;
};

// The limiting measure of a growing family, or an empty measure where the
// class provably does not exist. Throws unknown_limit otherwise.
ClassLimit spectral_class_limit(const FamilySpec& spec, Operator op);

}  // namespace hyperspec

#endif

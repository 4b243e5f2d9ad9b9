#ifndef HYPERSPEC_ANALYSIS_HPP
#define HYPERSPEC_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/matrix.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

// Slack below this counts as a violated bound.
inline constexpr double kBoundSlackTolerance = 1e-8;

struct HyperedgeDifference {
  std::vector<Hyperedge> shared;
  std::vector<Hyperedge> only_first;
  std::vector<Hyperedge> only_second;
  std::size_t c1 = 0;  // |only_first| + |only_second|
  std::size_t c2 = 0;  // largest cardinality among the unshared hyperedges
};

// Maximal shared multiset: identical signed hyperedges are matched with multiplicity.
HyperedgeDifference hyperedge_difference(const OrientedHypergraph& g1,
                                         const OrientedHypergraph& g2);

struct BoundReport {
  std::string quantity;
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - measured

  bool holds(double tolerance = kBoundSlackTolerance) const { return slack >= -tolerance; }
};

BoundReport make_bound_report(std::string quantity, double measured, double bound);

double schatten1_norm(const SymmetricMatrix& q);
double frobenius_norm(const SymmetricMatrix& q);

// sum |lambda_i(q1) - lambda_i(q2)| against the Schatten-1 norm of q1 - q2.
BoundReport wielandt_hoffman_check(const SymmetricMatrix& q1, const SymmetricMatrix& q2);

// Four reports: A, D, K differences against 3 c1^2 c2 and L against 2 sqrt(2n) c1 c2.
std::vector<BoundReport> thmci_check(const OrientedHypergraph& g1, const OrientedHypergraph& g2);

// Entry-level shape of the operator differences.
struct DifferenceStructure {
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::size_t adjacency_nonzeros = 0;    // off-diagonal nonzeros of A1 - A2
  std::int64_t adjacency_max_abs = 0;
  bool degree_diagonal = true;           // D1 - D2 has no off-diagonal entries
  std::size_t degree_nonzeros = 0;
  std::int64_t degree_max_abs = 0;
  double laplacian_max_abs = 0.0;        // max |(L1 - L2)_ij|
};

DifferenceStructure difference_structure(const OrientedHypergraph& g1,
                                         const OrientedHypergraph& g2);

// Default tolerance for identifying atoms of two measures: 10x the larger
// clustering tolerance recorded in them (1e-8 when none is recorded).
double default_match_tolerance(const SpectralMeasure& mu1, const SpectralMeasure& mu2);
double tv_distance(const SpectralMeasure& mu1, const SpectralMeasure& mu2,
                   std::optional<double> match_tol = {});

// Hats (half-width 1) at integer centres and bumps at half-integer centres,
// restricted to the members whose support meets an atom of one of the
// measures; the omitted grid members integrate to zero against both.
std::vector<TestFunction> make_battery(std::span<const SpectralMeasure* const> measures);
std::vector<TestFunction> make_battery(const SpectralMeasure& mu1, const SpectralMeasure& mu2);

double weak_star_gap(const SpectralMeasure& mu1, const SpectralMeasure& mu2,
                     std::span<const TestFunction> battery);
// Uses make_battery(mu1, mu2).
double weak_star_gap(const SpectralMeasure& mu1, const SpectralMeasure& mu2);

// eps + 2 sup|f| * schatten_bound / (delta * n).
double weak_star_rate_bound(double epsilon, double delta, double sup_abs, double schatten_bound,
                            std::size_t n);

struct CheckReport {
  std::vector<std::string> violations;
  double worst_slack = 0.0;  // most negative slack seen (0 when none)
  std::size_t checks = 0;

  bool ok() const { return violations.empty(); }
};

// Number of eigenvalues in `sorted` within tol of lambda.
std::size_t count_near(std::span<const double> sorted, double lambda, double tol);

// Cauchy interlacing between q and its principal submatrix on `keep`, plus the
// multiplicity inequalities for every clustered eigenvalue of either matrix.
CheckReport interlacing_check(const SymmetricMatrix& q, std::span<const std::size_t> keep,
                              std::optional<double> tol = {});

// Rows i with some q1(i,j) != q2(i,j), by exact comparison.
std::vector<std::size_t> differing_rows(const SymmetricMatrix& q1, const SymmetricMatrix& q2);

CheckReport multiplicity_stability_check(const SymmetricMatrix& q1, const SymmetricMatrix& q2,
                                         std::size_t c, std::optional<double> tol = {});

// Smallest (k + 2cs)/n over choices of the s heaviest clusters of q1's spectrum
// (k being the eigenvalue count outside them).
struct TvBound {
  std::size_t s = 0;
  std::size_t k = 0;
  std::size_t c = 0;
  std::size_t n = 0;
  double value = 1.0;
};

TvBound tv_bound(const Spectrum& first, std::size_t differing_row_count);

}  // namespace hyperspec

#endif

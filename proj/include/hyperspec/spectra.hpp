#ifndef HYPERSPEC_SPECTRA_HPP
#define HYPERSPEC_SPECTRA_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/eigensolver.hpp"
#include "hyperspec/matrix.hpp"

namespace hyperspec {

struct Cluster {
  double value;  // mean of the clustered eigenvalues
  std::size_t multiplicity;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<Cluster> clusters;
  double tol = 0.0;

  std::size_t order() const { return eigenvalues.size(); }
  // Multiplicity of the cluster whose representative lies within `match_tol`
  // of `lambda`; 0 when there is none.
  std::size_t multiplicity(double lambda, double match_tol) const;
};

// Default clustering tolerance for a matrix: max(1e-8, 1e-12 * order * max|entry|).
double default_cluster_tolerance(const SymmetricMatrix& q);
// HYPERSPEC_TOL, when set and parseable, overrides the default.
double cluster_tolerance_for(const SymmetricMatrix& q);

// Greedy left-to-right: a new cluster starts when the gap to the previous
// eigenvalue exceeds tol.
std::vector<Cluster> cluster_multiplicities(std::span<const double> sorted, double tol);

std::vector<double> eigenvalues(const SymmetricMatrix& q);
// Same kernel in binary128. Integer-valued matrices whose entries are exact
// in double are solved without any rounding of the input.
std::vector<quad> eigenvalues_quad(const SymmetricMatrix& q);
Spectrum symmetric_eigenvalues(const SymmetricMatrix& q, std::optional<double> tol = {});
// Raw row-major input, checked for exact symmetry.
Spectrum symmetric_eigenvalues(std::size_t order, std::span<const double> row_major,
                               std::optional<double> tol = {});

class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  // Atoms strictly increasing, weights positive and summing to 1 within 1e-12.
  SpectralMeasure(std::vector<double> atoms, std::vector<double> weights, std::size_t n = 0,
                  double tol = 0.0);

  static SpectralMeasure dirac(double atom) { return SpectralMeasure({atom}, {1.0}); }
  // Merges atoms closer than `merge_tol` and drops zero weights before validating.
  static SpectralMeasure from_terms(std::vector<std::pair<double, double>> atom_weight,
                                    double merge_tol = 0.0);

  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t n() const { return n_; }
  double tol() const { return tol_; }
  std::size_t size() const { return atoms_.size(); }
  double total_mass() const;
  // Atom carrying the largest weight (smallest such atom on ties).
  double dominant_atom() const;

 private:
  std::vector<double> atoms_;
  std::vector<double> weights_;
  std::size_t n_ = 0;
  double tol_ = 0.0;
};

SpectralMeasure spectral_measure(const Spectrum& s);
SpectralMeasure spectral_measure(const SymmetricMatrix& q, std::optional<double> tol = {});

struct Interval {
  double lo;
  double hi;
};

// A real function with a declared compact support, or no support when the
// function is unbounded (usable for integration but not for weak-star work).
struct TestFunction {
  std::string name;
  std::function<double(double)> f;
  std::optional<Interval> support;
  double sup_abs = 0.0;  // sup |f|; meaningful only with a compact support

  double operator()(double x) const { return f(x); }
  bool compact() const { return support.has_value(); }

  // Peak 1 at center, linear down to 0 at center +- half_width.
  static TestFunction hat(double center, double half_width = 1.0);
  // C-infinity bump exp(1 - 1/(1 - u^2)), u = (x - center)/half_width; peak 1.
  static TestFunction bump(double center, double half_width = 1.0);
  static TestFunction power(int k);
};

double integrate(const SpectralMeasure& mu, const TestFunction& f);

}  // namespace hyperspec

#endif

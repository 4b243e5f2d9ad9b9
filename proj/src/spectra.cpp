#include "hyperspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

namespace hyperspec {

std::size_t Spectrum::multiplicity(double lambda, double match_tol) const {
  for (const auto& c : clusters)
    if (std::fabs(c.value - lambda) <= match_tol) return c.multiplicity;
  return 0;
}

double default_cluster_tolerance(const SymmetricMatrix& q) {
  double max_entry = 0.0;
  for (double v : q.values()) max_entry = std::max(max_entry, std::fabs(v));
  return std::max(1e-8, 1e-12 * static_cast<double>(q.order()) * max_entry);
}

double cluster_tolerance_for(const SymmetricMatrix& q) {
  if (const char* env = std::getenv("HYPERSPEC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
  }
  return default_cluster_tolerance(q);
}

std::vector<Cluster> cluster_multiplicities(std::span<const double> sorted, double tol) {
  std::vector<Cluster> clusters;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted[i] - sorted[i - 1] > tol) {
      if (i > start) {
        const double sum = std::accumulate(sorted.begin() + start, sorted.begin() + i, 0.0);
        clusters.push_back({sum / static_cast<double>(i - start), i - start});
      }
      start = i;
    }
  }
  return clusters;
}

std::vector<double> eigenvalues(const SymmetricMatrix& q) {
  const auto v = q.values();
  return symmetric_eigenvalues_of<double>({v.begin(), v.end()}, q.order());
}

std::vector<quad> eigenvalues_quad(const SymmetricMatrix& q) {
  const auto v = q.values();
  std::vector<quad> a(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) a[k] = static_cast<quad>(v[k]);
  return symmetric_eigenvalues_of<quad>(std::move(a), q.order());
}

Spectrum symmetric_eigenvalues(const SymmetricMatrix& q, std::optional<double> tol) {
  Spectrum s;
  s.eigenvalues = eigenvalues(q);
  s.tol = tol.value_or(cluster_tolerance_for(q));
  s.clusters = cluster_multiplicities(s.eigenvalues, s.tol);
  return s;
}

Spectrum symmetric_eigenvalues(std::size_t order, std::span<const double> row_major,
                               std::optional<double> tol) {
  return symmetric_eigenvalues(
      SymmetricMatrix::from_row_major(order, {row_major.begin(), row_major.end()}), tol);
}

SpectralMeasure::SpectralMeasure(std::vector<double> atoms, std::vector<double> weights,
                                 std::size_t n, double tol)
    : atoms_(std::move(atoms)), weights_(std::move(weights)), n_(n), tol_(tol) {
  if (atoms_.size() != weights_.size() || atoms_.empty())
    throw Error(Errc::invalid_parameters, "measure needs matching, nonempty atoms and weights");
  for (std::size_t k = 1; k < atoms_.size(); ++k)
    if (!(atoms_[k] > atoms_[k - 1]))
      throw Error(Errc::invalid_parameters, "measure atoms must be strictly increasing");
  for (double w : weights_)
    if (!(w > 0.0)) throw Error(Errc::invalid_parameters, "measure weights must be positive");
  if (std::fabs(total_mass() - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "measure total mass " << total_mass() << " differs from 1";
    throw Error(Errc::invalid_parameters, os.str());
  }
}

SpectralMeasure SpectralMeasure::from_terms(std::vector<std::pair<double, double>> atom_weight,
                                            double merge_tol) {
  std::sort(atom_weight.begin(), atom_weight.end());
  std::vector<double> atoms, weights;
  for (const auto& [a, w] : atom_weight) {
    if (w == 0.0) continue;
    if (!atoms.empty() && a - atoms.back() <= merge_tol) {
      weights.back() += w;
    } else {
      atoms.push_back(a);
      weights.push_back(w);
    }
  }
  return SpectralMeasure(std::move(atoms), std::move(weights));
}

double SpectralMeasure::total_mass() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double SpectralMeasure::dominant_atom() const {
  const auto it = std::max_element(weights_.begin(), weights_.end());
  return atoms_[static_cast<std::size_t>(it - weights_.begin())];
}

SpectralMeasure spectral_measure(const Spectrum& s) {
  if (s.order() == 0) throw Error(Errc::invalid_parameters, "spectral measure of empty matrix");
  std::vector<double> atoms, weights;
  const double n = static_cast<double>(s.order());
  for (const auto& c : s.clusters) {
    atoms.push_back(c.value);
    weights.push_back(static_cast<double>(c.multiplicity) / n);
  }
  return SpectralMeasure(std::move(atoms), std::move(weights), s.order(), s.tol);
}

SpectralMeasure spectral_measure(const SymmetricMatrix& q, std::optional<double> tol) {
  return spectral_measure(symmetric_eigenvalues(q, tol));
}

TestFunction TestFunction::hat(double center, double half_width) {
  std::ostringstream name;
  name << "hat(" << center << "," << half_width << ")";
  return {name.str(),
          [center, half_width](double x) {
            return std::max(0.0, 1.0 - std::fabs(x - center) / half_width);
          },
          Interval{center - half_width, center + half_width}, 1.0};
}

TestFunction TestFunction::bump(double center, double half_width) {
  std::ostringstream name;
  name << "bump(" << center << "," << half_width << ")";
  return {name.str(),
          [center, half_width](double x) {
            const double u = (x - center) / half_width;
            if (std::fabs(u) >= 1.0) return 0.0;
            return std::exp(1.0 - 1.0 / (1.0 - u * u));
          },
          Interval{center - half_width, center + half_width}, 1.0};
}

TestFunction TestFunction::power(int k) {
  return {"x^" + std::to_string(k), [k](double x) { return std::pow(x, k); }, std::nullopt, 0.0};
}

double integrate(const SpectralMeasure& mu, const TestFunction& f) {
  double total = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) total += mu.weights()[k] * f(mu.atoms()[k]);
  return total;
}

}  // namespace hyperspec

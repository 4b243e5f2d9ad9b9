#include "hyperspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "hyperspec/operators.hpp"

namespace hyperspec {

HyperedgeDifference hyperedge_difference(const OrientedHypergraph& g1,
                                         const OrientedHypergraph& g2) {
  if (g1.n_vertices() != g2.n_vertices())
    throw Error(Errc::vertex_set_mismatch, std::to_string(g1.n_vertices()) + " vs " +
                                               std::to_string(g2.n_vertices()) + " vertices");
  std::map<Hyperedge, std::size_t> available;
  for (const auto& h : g2.hyperedges()) ++available[h];

  HyperedgeDifference diff;
  std::map<Hyperedge, std::size_t> matched;
  for (const auto& h : g1.hyperedges()) {
    auto it = available.find(h);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++matched[h];
      diff.shared.push_back(h);
    } else {
      diff.only_first.push_back(h);
    }
  }
  for (const auto& h : g2.hyperedges()) {
    auto it = matched.find(h);
    if (it != matched.end() && it->second > 0) {
      --it->second;
    } else {
      diff.only_second.push_back(h);
    }
  }
  diff.c1 = diff.only_first.size() + diff.only_second.size();
  for (const auto* side : {&diff.only_first, &diff.only_second})
    for (const auto& h : *side) diff.c2 = std::max(diff.c2, h.cardinality());
  return diff;
}

BoundReport make_bound_report(std::string quantity, double measured, double bound) {
  return {std::move(quantity), measured, bound, bound - measured};
}

double schatten1_norm(const SymmetricMatrix& q) {
  double total = 0.0;
  for (double lambda : eigenvalues(q)) total += std::fabs(lambda);
  return total;
}

double frobenius_norm(const SymmetricMatrix& q) {
  double total = 0.0;
  for (double v : q.values()) total += v * v;
  return std::sqrt(total);
}

BoundReport wielandt_hoffman_check(const SymmetricMatrix& q1, const SymmetricMatrix& q2) {
  if (q1.order() != q2.order())
    throw Error(Errc::order_mismatch, std::to_string(q1.order()) + " vs " +
                                          std::to_string(q2.order()));
  const auto l1 = eigenvalues(q1);
  const auto l2 = eigenvalues(q2);
  double measured = 0.0;
  for (std::size_t i = 0; i < l1.size(); ++i) measured += std::fabs(l1[i] - l2[i]);
  return make_bound_report("wielandt_hoffman", measured, schatten1_norm(q1 - q2));
}

std::vector<BoundReport> thmci_check(const OrientedHypergraph& g1, const OrientedHypergraph& g2) {
  const auto diff = hyperedge_difference(g1, g2);
  const double c1 = static_cast<double>(diff.c1);
  const double c2 = static_cast<double>(diff.c2);
  const double n = static_cast<double>(g1.n_vertices());
  const double combinatorial = 3.0 * c1 * c1 * c2;
  const double normalized = 2.0 * std::sqrt(2.0 * n) * c1 * c2;

  std::vector<BoundReport> reports;
  reports.push_back(make_bound_report(
      "delta1_adjacency",
      schatten1_norm((adjacency_matrix_exact(g1) - adjacency_matrix_exact(g2)).cast<double>()),
      combinatorial));
  reports.push_back(make_bound_report(
      "delta2_degree",
      schatten1_norm((degree_matrix_exact(g1) - degree_matrix_exact(g2)).cast<double>()),
      combinatorial));
  reports.push_back(make_bound_report(
      "delta3_kirchhoff",
      schatten1_norm(
          (kirchhoff_laplacian_exact(g1) - kirchhoff_laplacian_exact(g2)).cast<double>()),
      combinatorial));
  reports.push_back(make_bound_report(
      "delta4_normalized",
      schatten1_norm(normalized_laplacian(g1) - normalized_laplacian(g2)), normalized));
  return reports;
}

DifferenceStructure difference_structure(const OrientedHypergraph& g1,
                                         const OrientedHypergraph& g2) {
  const auto diff = hyperedge_difference(g1, g2);
  DifferenceStructure out;
  out.c1 = diff.c1;
  out.c2 = diff.c2;
  const auto da = adjacency_matrix_exact(g1) - adjacency_matrix_exact(g2);
  const auto dd = degree_matrix_exact(g1) - degree_matrix_exact(g2);
  const auto dl = normalized_laplacian(g1) - normalized_laplacian(g2);
  const std::size_t n = g1.n_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && da(i, j) != 0) {
        ++out.adjacency_nonzeros;
        out.adjacency_max_abs = std::max(out.adjacency_max_abs, std::abs(da(i, j)));
      }
      if (dd(i, j) != 0) {
        if (i != j) out.degree_diagonal = false;
        ++out.degree_nonzeros;
        out.degree_max_abs = std::max(out.degree_max_abs, std::abs(dd(i, j)));
      }
      out.laplacian_max_abs = std::max(out.laplacian_max_abs, std::fabs(dl(i, j)));
    }
  }
  return out;
}

double default_match_tolerance(const SpectralMeasure& mu1, const SpectralMeasure& mu2) {
  const double recorded = std::max(mu1.tol(), mu2.tol());
  return 10.0 * (recorded > 0.0 ? recorded : 1e-8);
}

double tv_distance(const SpectralMeasure& mu1, const SpectralMeasure& mu2,
                   std::optional<double> match_tol) {
  const double tol = match_tol.value_or(default_match_tolerance(mu1, mu2));
  struct Entry {
    double atom;
    double w1;
    double w2;
  };
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < mu1.size(); ++k) entries.push_back({mu1.atoms()[k], mu1.weights()[k], 0.0});
  for (std::size_t k = 0; k < mu2.size(); ++k) entries.push_back({mu2.atoms()[k], 0.0, mu2.weights()[k]});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.atom < b.atom; });

  double total = 0.0;
  double group1 = 0.0, group2 = 0.0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k > 0 && entries[k].atom - entries[k - 1].atom > tol) {
      total += std::fabs(group1 - group2);
      group1 = group2 = 0.0;
    }
    group1 += entries[k].w1;
    group2 += entries[k].w2;
  }
  total += std::fabs(group1 - group2);
  return 0.5 * total;
}

std::vector<TestFunction> make_battery(std::span<const SpectralMeasure* const> measures) {
  std::set<double> hat_centres;
  std::set<double> bump_centres;
  for (const SpectralMeasure* mu : measures) {
    for (double a : mu->atoms()) {
      for (double c = std::ceil(a - 1.0); c <= std::floor(a + 1.0); c += 1.0)
        hat_centres.insert(c);
      for (double c = std::ceil(a - 1.5) + 0.5; c <= a + 1.0; c += 1.0) bump_centres.insert(c);
    }
  }
  std::vector<TestFunction> battery;
  for (double c : hat_centres) battery.push_back(TestFunction::hat(c, 1.0));
  for (double c : bump_centres) battery.push_back(TestFunction::bump(c, 1.0));
  return battery;
}

std::vector<TestFunction> make_battery(const SpectralMeasure& mu1, const SpectralMeasure& mu2) {
  const SpectralMeasure* both[] = {&mu1, &mu2};
  return make_battery(both);
}

double weak_star_gap(const SpectralMeasure& mu1, const SpectralMeasure& mu2,
                     std::span<const TestFunction> battery) {
  for (const auto& f : battery)
    if (!f.compact()) throw Error(Errc::unbounded_test_function, f.name);
  double gap = 0.0;
  for (const auto& f : battery) gap = std::max(gap, std::fabs(integrate(mu1, f) - integrate(mu2, f)));
  return gap;
}

double weak_star_gap(const SpectralMeasure& mu1, const SpectralMeasure& mu2) {
  const auto battery = make_battery(mu1, mu2);
  return weak_star_gap(mu1, mu2, battery);
}

double weak_star_rate_bound(double epsilon, double delta, double sup_abs, double schatten_bound,
                            std::size_t n) {
  if (!(delta > 0.0) || n == 0)
    throw Error(Errc::invalid_parameters, "rate bound needs delta > 0 and n > 0");
  return epsilon + 2.0 * sup_abs * schatten_bound / (delta * static_cast<double>(n));
}

std::size_t count_near(std::span<const double> sorted, double lambda, double tol) {
  const auto lo = std::lower_bound(sorted.begin(), sorted.end(), lambda - tol);
  const auto hi = std::upper_bound(sorted.begin(), sorted.end(), lambda + tol);
  return static_cast<std::size_t>(hi - lo);
}

namespace {

std::string describe(const char* what, double lambda, std::size_t lhs, std::size_t rhs,
                     std::size_t c) {
  std::ostringstream os;
  os << what << " at lambda=" << lambda << ": " << lhs << " < " << rhs << " - " << c;
  return os.str();
}

// M(first) >= M(second) - c, checked for every listed lambda.
void check_multiplicities(const std::vector<Cluster>& clusters, std::span<const double> first,
                          std::span<const double> second, std::size_t c, double match_tol,
                          const char* label, CheckReport& report) {
  for (const auto& cl : clusters) {
    const std::size_t m_first = count_near(first, cl.value, match_tol);
    const std::size_t m_second = count_near(second, cl.value, match_tol);
    ++report.checks;
    if (m_first + c < m_second) {
      report.violations.push_back(describe(label, cl.value, m_first, m_second, c));
      report.worst_slack = std::min(report.worst_slack,
                                    static_cast<double>(m_first + c) - static_cast<double>(m_second));
    }
  }
}

}  // namespace

CheckReport interlacing_check(const SymmetricMatrix& q, std::span<const std::size_t> keep,
                              std::optional<double> tol) {
  if (keep.empty()) throw Error(Errc::empty_keep_set, "keep set is empty");
  std::vector<std::size_t> rows(keep.begin(), keep.end());
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() || rows.back() >= q.order())
    throw Error(Errc::invalid_parameters, "keep set must hold distinct row indices");
  if (rows.size() >= q.order())
    throw Error(Errc::invalid_parameters, "keep set must drop at least one row");

  const std::size_t c = q.order() - rows.size();
  const SymmetricMatrix p = q.principal_submatrix(rows);
  const auto lq = eigenvalues(q);
  const auto lp = eigenvalues(p);
  const double order_tol = 1e-8 * std::max(1.0, frobenius_norm(q));

  CheckReport report;
  for (std::size_t k = 0; k < lp.size(); ++k) {
    ++report.checks;
    const double lower = lp[k] - lq[k];
    const double upper = lq[k + c] - lp[k];
    const double slack = std::min(lower, upper);
    if (slack < -order_tol) {
      std::ostringstream os;
      os << "interlacing at k=" << k << ": " << lq[k] << " <= " << lp[k] << " <= " << lq[k + c];
      report.violations.push_back(os.str());
    }
    report.worst_slack = std::min(report.worst_slack, slack);
  }

  const double cluster_tol = tol.value_or(cluster_tolerance_for(q));
  const double match_tol = 10.0 * cluster_tol;
  const auto cq = cluster_multiplicities(lq, cluster_tol);
  const auto cp = cluster_multiplicities(lp, cluster_tol);
  for (const auto* clusters : {&cq, &cp}) {
    check_multiplicities(*clusters, lp, lq, c, match_tol, "M(P) >= M(Q) - c", report);
    check_multiplicities(*clusters, lq, lp, c, match_tol, "M(Q) >= M(P) - c", report);
  }
  return report;
}

std::vector<std::size_t> differing_rows(const SymmetricMatrix& q1, const SymmetricMatrix& q2) {
  if (q1.order() != q2.order()) throw Error(Errc::order_mismatch, "row comparison");
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < q1.order(); ++i) {
    const auto r1 = q1.row(i);
    const auto r2 = q2.row(i);
    if (!std::equal(r1.begin(), r1.end(), r2.begin())) rows.push_back(i);
  }
  return rows;
}

CheckReport multiplicity_stability_check(const SymmetricMatrix& q1, const SymmetricMatrix& q2,
                                         std::size_t c, std::optional<double> tol) {
  const auto rows = differing_rows(q1, q2);
  if (rows.size() > c)
    throw Error(Errc::row_difference_exceeds_c,
                std::to_string(rows.size()) + " rows differ, c = " + std::to_string(c));
  const auto l1 = eigenvalues(q1);
  const auto l2 = eigenvalues(q2);
  const double cluster_tol =
      tol.value_or(std::max(cluster_tolerance_for(q1), cluster_tolerance_for(q2)));
  CheckReport report;
  check_multiplicities(cluster_multiplicities(l2, cluster_tol), l1, l2, 2 * c,
                       10.0 * cluster_tol, "M(Q1) >= M(Q2) - 2c", report);
  return report;
}

TvBound tv_bound(const Spectrum& first, std::size_t differing_row_count) {
  std::vector<std::size_t> mult;
  for (const auto& cl : first.clusters) mult.push_back(cl.multiplicity);
  std::sort(mult.begin(), mult.end(), std::greater<>());

  TvBound best;
  best.n = first.order();
  best.c = differing_row_count;
  best.k = best.n;
  best.value = 1.0;
  if (best.n == 0) return best;
  const double n = static_cast<double>(best.n);
  std::size_t covered = 0;
  for (std::size_t s = 0; s <= mult.size(); ++s) {
    if (s > 0) covered += mult[s - 1];
    const std::size_t k = best.n - covered;
    const double value = (static_cast<double>(k) + 2.0 * static_cast<double>(differing_row_count * s)) / n;
    if (value < best.value || s == 0) {
      best.s = s;
      best.k = k;
      best.value = value;
    }
  }
  return best;
}

}  // namespace hyperspec

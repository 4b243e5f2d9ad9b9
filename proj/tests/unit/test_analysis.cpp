#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "generators.hpp"
#include "hyperspec/analysis.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/operators.hpp"
#include "hyperspec/spectra.hpp"

using namespace hyperspec;

namespace {

// Largest number of identical pairs over every matching of the two lists.
std::size_t max_shared_by_permutation(const std::vector<Hyperedge>& a, std::vector<Hyperedge> b) {
  std::sort(b.begin(), b.end());
  std::size_t best = 0;
  do {
    std::size_t shared = 0;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) shared += a[k] == b[k];
    best = std::max(best, shared);
  } while (std::next_permutation(b.begin(), b.end()));
  return best;
}

}  // namespace

TEST_CASE("hyperedge difference") {
  const auto g = hyperflower(3, 2, 1);
  CHECK(hyperedge_difference(g, g).c1 == 0);

  const auto plus = perturb(g, {Hyperedge({0, 1}, {2})}, {});
  const auto d = hyperedge_difference(g, plus);
  CHECK(d.c1 == 1);
  CHECK(d.c2 == 3);
  CHECK(d.only_second.size() == 1);

  // Flipping one sign makes the old and new hyperedge distinct elements.
  const OrientedHypergraph g1(3, {Hyperedge::all_inputs({0, 1, 2})});
  const OrientedHypergraph g2(3, {Hyperedge({0, 1}, {2})});
  const auto flip = hyperedge_difference(g1, g2);
  CHECK(max_shared_by_permutation(g1.hyperedges(), g2.hyperedges()) == 0);
  CHECK(flip.c1 == 2);
  CHECK(flip.c2 == 3);

  CHECK_THROWS_AS(hyperedge_difference(g1, hyperflower(2, 1, 2)), Error);
  try {
    hyperedge_difference(g1, single_hyperedge(4));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::vertex_set_mismatch);
  }
}

TEST_CASE("hyperedge difference matches exhaustive matching") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3;
    std::vector<Hyperedge> e1, e2;
    for (int k = 0; k < 4; ++k) e1.push_back(testgen::random_hyperedge(n, 2, rng));
    for (int k = 0; k < 4; ++k) e2.push_back(testgen::random_hyperedge(n, 2, rng));
    const OrientedHypergraph g1(n, e1), g2(n, e2);
    const auto d = hyperedge_difference(g1, g2);
    const std::size_t shared = max_shared_by_permutation(e1, e2);
    CHECK(d.shared.size() == shared);
    CHECK(d.c1 == 8 - 2 * shared);
  }
}

TEST_CASE("norms") {
  CHECK(schatten1_norm(SymmetricMatrix::diagonal(std::vector<double>{3, -4})) == doctest::Approx(7));
  CHECK(schatten1_norm(kirchhoff_laplacian(OrientedHypergraph(2, {Hyperedge::edge(0, 1)}))) ==
        doctest::Approx(2));
  CHECK(frobenius_norm(SymmetricMatrix::from_row_major(2, {1, 2, 2, 1})) ==
        doctest::Approx(std::sqrt(10.0)));
  CHECK(frobenius_norm(SymmetricMatrix::identity(9)) == doctest::Approx(3.0));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = testgen::random_symmetric(2 + trial % 15, rng, 3.0);
    CHECK(schatten1_norm(q) >= std::fabs(q.trace()) - 1e-12);
    double sq = 0;
    for (double l : eigenvalues(q)) sq += l * l;
    CHECK(std::fabs(frobenius_norm(q) - std::sqrt(sq)) <= 1e-9);
  }
}

TEST_CASE("Wielandt-Hoffman") {
  const auto r = wielandt_hoffman_check(SymmetricMatrix::diagonal(std::vector<double>{1, 2}),
                                        SymmetricMatrix::diagonal(std::vector<double>{2, 1}));
  CHECK(r.measured == doctest::Approx(0.0));
  CHECK(r.bound == doctest::Approx(2.0));
  CHECK(r.holds());

  const auto same = wielandt_hoffman_check(SymmetricMatrix::identity(3), SymmetricMatrix::identity(3));
  CHECK(same.measured == 0.0);
  CHECK(same.bound == 0.0);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 25;
    CHECK(wielandt_hoffman_check(testgen::random_symmetric(n, rng), testgen::random_symmetric(n, rng))
              .holds());
  }
  CHECK_THROWS_AS(wielandt_hoffman_check(SymmetricMatrix::identity(2), SymmetricMatrix::identity(3)),
                  Error);
}

TEST_CASE("thmci bounds") {
  const auto g = r_complete(5, 2);
  const auto plus = perturb(g, {Hyperedge::edge(0, 1)}, {});
  const auto reports = thmci_check(g, plus);
  REQUIRE(reports.size() == 4);
  CHECK(reports[2].quantity == "delta3_kirchhoff");
  CHECK(reports[2].measured == doctest::Approx(2.0));
  CHECK(reports[2].bound == doctest::Approx(6.0));

  for (const auto& r : thmci_check(g, g)) CHECK(r.measured == doctest::Approx(0.0));

  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto base = random_hypergraph(4 + seed % 30, 3 + seed % 20, 4, seed);
    const auto other = testgen::random_perturbation(base, 3, 4, rng);
    for (const auto& r : thmci_check(base, other)) CHECK(r.holds());
  }
}

TEST_CASE("operator difference structure") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto base = random_hypergraph(5 + seed % 20, 3 + seed % 10, 4, seed);
    const auto other = testgen::random_perturbation(base, 3, 4, rng);
    const auto s = difference_structure(base, other);
    const auto c1 = static_cast<std::int64_t>(s.c1);
    CHECK(s.degree_diagonal);
    CHECK(s.degree_nonzeros <= s.c1 * s.c2);
    CHECK(s.degree_max_abs <= c1);
    CHECK(s.adjacency_max_abs <= c1);
    // Each unshared hyperedge of cardinality k touches k(k-1) ordered pairs.
    CHECK(s.adjacency_nonzeros <= s.c1 * s.c2 * (s.c2 > 0 ? s.c2 - 1 : 0));
    if (s.c2 <= 3) CHECK(s.adjacency_nonzeros <= 2 * s.c1 * s.c2);
    CHECK(s.laplacian_max_abs <= 2.0);
  }
}

TEST_CASE("adjacency difference can exceed 2 c1 c2 nonzero entries") {
  // One added hyperedge of cardinality 4: 12 off-diagonal nonzeros against 2*1*4 = 8.
  const auto g = single_hyperedge(4);
  const auto plus = perturb(g, {Hyperedge({0, 1}, {2, 3})}, {});
  const auto s = difference_structure(g, plus);
  CHECK(s.c1 == 1);
  CHECK(s.c2 == 4);
  CHECK(s.adjacency_nonzeros == 12);
  CHECK(s.adjacency_nonzeros > 2 * s.c1 * s.c2);
  for (const auto& r : thmci_check(g, plus)) CHECK(r.holds());
}

TEST_CASE("total variation distance") {
  CHECK(tv_distance(SpectralMeasure::dirac(0), SpectralMeasure::dirac(1)) == 1.0);
  const SpectralMeasure mu({0.0, 2.0}, {0.75, 0.25});
  CHECK(tv_distance(mu, mu) == 0.0);
  CHECK(tv_distance(mu, SpectralMeasure({0.0, 2.0}, {0.5, 0.5})) == doctest::Approx(0.25));
  // Atoms closer than the match tolerance are identified.
  CHECK(tv_distance(SpectralMeasure::dirac(1.0), SpectralMeasure::dirac(1.0 + 1e-9), 1e-7) == 0.0);
}

TEST_CASE("tv distance is a metric") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testgen::random_measure(rng), b = testgen::random_measure(rng),
               c = testgen::random_measure(rng);
    const double ab = tv_distance(a, b), ba = tv_distance(b, a);
    CHECK(ab == doctest::Approx(ba));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0 + 1e-12);
    CHECK(tv_distance(a, a) == 0.0);
    CHECK(tv_distance(a, c) <= ab + tv_distance(b, c) + 1e-12);
  }
}

TEST_CASE("weak-star gap") {
  const SpectralMeasure mu({0.0, 2.0}, {0.75, 0.25});
  CHECK(weak_star_gap(mu, mu) == 0.0);

  std::vector<TestFunction> hats;
  for (int c = -1; c <= 4; ++c) hats.push_back(TestFunction::hat(c, 1.0));
  CHECK(weak_star_gap(SpectralMeasure::dirac(0), SpectralMeasure::dirac(3), hats) == doctest::Approx(1.0));

  std::vector<TestFunction> unbounded{TestFunction::power(2)};
  try {
    weak_star_gap(mu, mu, unbounded);
    FAIL("expected UnboundedTestFunction");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unbounded_test_function);
  }

  // |mu1(f) - mu2(f)| <= 2 sup|f| tv for every battery member.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testgen::random_measure(rng), b = testgen::random_measure(rng);
    const double tv = tv_distance(a, b);
    for (const auto& f : make_battery(a, b))
      CHECK(std::fabs(integrate(a, f) - integrate(b, f)) <= 2.0 * f.sup_abs * tv + 1e-12);
  }
}

TEST_CASE("weak-star gap shrinks for hyperflowers differing by one hyperedge") {
  double previous = 1.0;
  for (std::size_t core : {44u, 94u, 194u}) {  // n = 50, 100, 200 with l = t = 3
    const auto g = hyperflower(3, 2, core);
    const auto plus = perturb(g, {Hyperedge::all_inputs({0, core, core + 1})}, {});
    const double gap = weak_star_gap(spectral_measure(adjacency_matrix(g)),
                                     spectral_measure(adjacency_matrix(plus)));
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(weak_star_rate_bound(0.1, 0.5, 1.0, 6.0, 60) == doctest::Approx(0.1 + 12.0 / 30.0));
}

TEST_CASE("interlacing") {
  const std::vector<std::size_t> keep{0, 2};
  const auto id = interlacing_check(SymmetricMatrix::identity(3), keep);
  CHECK(id.ok());

  const std::vector<std::size_t> drop_one{0, 1, 2, 3, 4};
  CHECK(interlacing_check(normalized_laplacian(r_complete(6, 2)), drop_one).ok());

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 20;
    std::uniform_int_distribution<std::size_t> k(1, n - 1);
    const auto q = trial % 2 ? testgen::random_symmetric(n, rng) : testgen::random_degenerate_symmetric(n, rng);
    const auto r = interlacing_check(q, testgen::random_keep(n, k(rng), rng));
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }

  const std::vector<std::size_t> none;
  try {
    interlacing_check(SymmetricMatrix::identity(3), none);
    FAIL("expected EmptyKeepSet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_keep_set);
  }
  const std::vector<std::size_t> all{0, 1, 2};
  CHECK_THROWS_AS(interlacing_check(SymmetricMatrix::identity(3), all), Error);
}

TEST_CASE("multiplicity stability") {
  const auto q = normalized_laplacian(r_complete(6, 2));
  CHECK(multiplicity_stability_check(q, q, 0).ok());
  CHECK(multiplicity_stability_check(q, q, 4).ok());

  const auto g = hyperflower(4, 2, 3);
  const auto plus = perturb(g, {Hyperedge::all_inputs({3, 5})}, {});
  CHECK(multiplicity_stability_check(normalized_laplacian(g), normalized_laplacian(plus), 8).ok());
  const auto k1 = kirchhoff_laplacian(g), k2 = kirchhoff_laplacian(plus);
  CHECK(differing_rows(k1, k2).size() == 2);
  CHECK(multiplicity_stability_check(k1, k2, 2).ok());
  try {
    multiplicity_stability_check(k1, k2, 1);
    FAIL("expected RowDifferenceExceedsC");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::row_difference_exceeds_c);
  }

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 15;
    const auto q1 = testgen::random_degenerate_symmetric(n, rng);
    auto q2 = q1;
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    const std::size_t i = row(rng);
    for (std::size_t j = 0; j < n; ++j) q2.set(i, j, q2(i, j) + (j % 2 ? 1.0 : 0.0));
    const std::size_t c = differing_rows(q1, q2).size();
    CHECK(multiplicity_stability_check(q1, q2, c).ok());
  }
}

TEST_CASE("tv bound") {
  // Atoms 18/19 (x19) and 2 (x1): with c = 1 the heavy atom alone gives (1 + 2)/20.
  const auto s = symmetric_eigenvalues(normalized_laplacian(r_complete(20, 2)));
  const auto b = tv_bound(s, 1);
  CHECK(b.n == 20);
  CHECK(b.s == 1);
  CHECK(b.k == 1);
  CHECK(b.value == doctest::Approx(3.0 / 20));
  CHECK(tv_bound(s, 0).value == 0.0);
  CHECK(tv_bound(s, 50).value == 1.0);
}

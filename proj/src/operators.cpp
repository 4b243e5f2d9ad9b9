#include "hyperspec/operators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace hyperspec {

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::D: return "D";
    case Operator::A: return "A";
    case Operator::L: return "L";
    case Operator::K: return "K";
    case Operator::LH: return "LH";
    case Operator::KH: return "KH";
  }
  return "?";
}

std::optional<Operator> parse_operator(std::string_view text) {
  if (text == "D") return Operator::D;
  if (text == "A") return Operator::A;
  if (text == "L") return Operator::L;
  if (text == "K") return Operator::K;
  if (text == "LH" || text == "L^H") return Operator::LH;
  if (text == "KH" || text == "K^H") return Operator::KH;
  return std::nullopt;
}

bool is_integer_valued(Operator op) {
  return op == Operator::D || op == Operator::A || op == Operator::K || op == Operator::KH;
}

namespace {

// (hyperedge, sign) pairs for each vertex.
std::vector<std::vector<std::pair<std::size_t, int>>> vertex_incidences(
    const OrientedHypergraph& g) {
  std::vector<std::vector<std::pair<std::size_t, int>>> out(g.n_vertices());
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    const Hyperedge& h = g.hyperedge(e);
    for (Vertex v : h.inputs) out[v].emplace_back(e, 1);
    for (Vertex v : h.outputs) out[v].emplace_back(e, -1);
  }
  return out;
}

std::vector<std::int64_t> integer_degrees(const OrientedHypergraph& g) {
  const auto deg = g.degrees();
  return {deg.begin(), deg.end()};
}

}  // namespace

IntegerSymmetricMatrix degree_matrix_exact(const OrientedHypergraph& g) {
  require_valid(g);
  const auto deg = integer_degrees(g);
  return IntegerSymmetricMatrix::diagonal(deg);
}

IntegerSymmetricMatrix adjacency_matrix_exact(const OrientedHypergraph& g) {
  require_valid(g);
  IntegerSymmetricMatrix a(g.n_vertices());
  std::vector<std::pair<Vertex, int>> members;
  for (const auto& h : g.hyperedges()) {
    members.clear();
    for (Vertex v : h.inputs) members.emplace_back(v, 1);
    for (Vertex v : h.outputs) members.emplace_back(v, -1);
    // Anti-oriented pairs add one, co-oriented pairs subtract one.
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        a.add(members[x].first, members[y].first, -members[x].second * members[y].second);
  }
  return a;
}

IntegerSymmetricMatrix kirchhoff_laplacian_exact(const OrientedHypergraph& g) {
  const auto d = degree_matrix_exact(g);
  const auto a = adjacency_matrix_exact(g);
  return d - a;
}

IntegerSymmetricMatrix kirchhoff_from_incidence_exact(const OrientedHypergraph& g) {
  require_valid(g);
  const auto inc = incidence_matrix(g);
  const std::size_t n = g.n_vertices();
  IntegerSymmetricMatrix k(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t e = 0; e < inc.cols(); ++e) s += inc(i, e) * inc(j, e);
      k.set(i, j, s);
    }
  }
  return k;
}

IntegerSymmetricMatrix hyperedge_kirchhoff_laplacian_exact(const OrientedHypergraph& g) {
  require_valid(g);
  IntegerSymmetricMatrix kh(g.n_hyperedges());
  for (const auto& incidences : vertex_incidences(g))
    for (std::size_t x = 0; x < incidences.size(); ++x)
      for (std::size_t y = x; y < incidences.size(); ++y)
        kh.add(incidences[x].first, incidences[y].first,
               incidences[x].second * incidences[y].second);
  return kh;
}

IncidenceMatrix incidence_matrix(const OrientedHypergraph& g) {
  require_valid(g);
  IncidenceMatrix inc(g.n_vertices(), g.n_hyperedges(), 0);
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    const Hyperedge& h = g.hyperedge(e);
    for (Vertex v : h.inputs) inc(v, e) = 1;
    for (Vertex v : h.outputs) inc(v, e) = -1;
  }
  return inc;
}

SymmetricMatrix degree_matrix(const OrientedHypergraph& g) {
  return degree_matrix_exact(g).cast<double>();
}

SymmetricMatrix adjacency_matrix(const OrientedHypergraph& g) {
  return adjacency_matrix_exact(g).cast<double>();
}

SymmetricMatrix normalized_laplacian_from(const IntegerSymmetricMatrix& adjacency,
                                          std::span<const std::int64_t> degrees) {
  const std::size_t n = adjacency.order();
  if (degrees.size() != n) throw Error(Errc::order_mismatch, "degree vector length");
  std::vector<double> inv_sqrt(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] <= 0) throw Error(Errc::isolated_vertex, "vertex " + std::to_string(i));
    inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(degrees[i]));
  }
  SymmetricMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    l.set(i, i, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto aij = adjacency(i, j);
      if (aij != 0) l.set(i, j, -static_cast<double>(aij) * inv_sqrt[i] * inv_sqrt[j]);
    }
  }
  return l;
}

SymmetricMatrix normalized_laplacian(const OrientedHypergraph& g) {
  const auto a = adjacency_matrix_exact(g);
  const auto deg = integer_degrees(g);
  return normalized_laplacian_from(a, deg);
}

SymmetricMatrix hyperedge_normalized_laplacian(const OrientedHypergraph& g) {
  require_valid(g);
  const auto deg = g.degrees();
  const auto incidences = vertex_incidences(g);
  // Accumulate the upper triangle only, then mirror, so the result is exactly symmetric.
  const std::size_t m = g.n_hyperedges();
  std::vector<double> upper(m * m, 0.0);
  for (std::size_t v = 0; v < incidences.size(); ++v) {
    const double w = 1.0 / static_cast<double>(deg[v]);
    const auto& inc = incidences[v];
    for (std::size_t x = 0; x < inc.size(); ++x)
      for (std::size_t y = x; y < inc.size(); ++y) {
        const auto [e, f] = std::minmax(inc[x].first, inc[y].first);
        upper[e * m + f] += inc[x].second * inc[y].second * w;
      }
  }
  SymmetricMatrix lh(m);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = e; f < m; ++f) lh.set(e, f, upper[e * m + f]);
  return lh;
}

SymmetricMatrix kirchhoff_laplacian(const OrientedHypergraph& g) {
  return kirchhoff_laplacian_exact(g).cast<double>();
}

SymmetricMatrix hyperedge_kirchhoff_laplacian(const OrientedHypergraph& g) {
  return hyperedge_kirchhoff_laplacian_exact(g).cast<double>();
}

SymmetricMatrix build_operator(const OrientedHypergraph& g, Operator op) {
  switch (op) {
    case Operator::D: return degree_matrix(g);
    case Operator::A: return adjacency_matrix(g);
    case Operator::L: return normalized_laplacian(g);
    case Operator::K: return kirchhoff_laplacian(g);
    case Operator::LH: return hyperedge_normalized_laplacian(g);
    case Operator::KH: return hyperedge_kirchhoff_laplacian(g);
  }
  throw Error(Errc::invalid_parameters, "unknown operator");
}

}  // namespace hyperspec

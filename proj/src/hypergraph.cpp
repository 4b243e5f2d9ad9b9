#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>
#include <utility>

namespace hyperspec {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::catalyst_vertex: return "CatalystVertex";
    case Errc::empty_hyperedge: return "EmptyHyperedge";
    case Errc::isolated_vertex: return "IsolatedVertex";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::degenerate_size: return "DegenerateSize";
    case Errc::validation_failure: return "ValidationFailure";
    case Errc::non_symmetric_input: return "NonSymmetricInput";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::vertex_set_mismatch: return "VertexSetMismatch";
    case Errc::unbounded_test_function: return "UnboundedTestFunction";
    case Errc::empty_keep_set: return "EmptyKeepSet";
    case Errc::row_difference_exceeds_c: return "RowDifferenceExceedsC";
    case Errc::generation_failure: return "GenerationFailure";
    case Errc::empty_list: return "EmptyList";
    case Errc::unsupported_family_operator: return "UnsupportedFamilyOperator";
    case Errc::unknown_limit: return "UnknownLimit";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Hyperedge::Hyperedge(std::vector<Vertex> in, std::vector<Vertex> out)
    : inputs(std::move(in)), outputs(std::move(out)) {
  sort_unique(inputs);
  sort_unique(outputs);
}

Hyperedge Hyperedge::all_inputs(std::vector<Vertex> members) {
  return Hyperedge(std::move(members), {});
}

bool Hyperedge::contains(Vertex v) const {
  return sorted_contains(inputs, v) || sorted_contains(outputs, v);
}

int Hyperedge::sign(Vertex v) const {
  if (sorted_contains(inputs, v)) return 1;
  if (sorted_contains(outputs, v)) return -1;
  return 0;
}

std::size_t cardinality(const Hyperedge& h) { return h.cardinality(); }

OrientedHypergraph::OrientedHypergraph(std::size_t n_vertices, std::vector<Hyperedge> hyperedges)
    : n_vertices_(n_vertices), hyperedges_(std::move(hyperedges)) {}

std::vector<std::size_t> OrientedHypergraph::degrees() const {
  std::vector<std::size_t> deg(n_vertices_, 0);
  for (const auto& h : hyperedges_) {
    for (Vertex v : h.inputs)
      if (v < n_vertices_) ++deg[v];
    for (Vertex v : h.outputs)
      if (v < n_vertices_) ++deg[v];
  }
  return deg;
}

std::size_t OrientedHypergraph::incidence_count() const {
  std::size_t total = 0;
  for (const auto& h : hyperedges_) total += h.cardinality();
  return total;
}

std::string Violation::message() const {
  std::ostringstream os;
  os << to_string(kind);
  if (vertex) os << " vertex=" << *vertex;
  if (hyperedge) os << " hyperedge=" << *hyperedge;
  return os.str();
}

bool ValidationResult::has(Errc kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

ValidationResult validate(const OrientedHypergraph& g) {
  ValidationResult result;
  const std::size_t n = g.n_vertices();
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    const Hyperedge& h = g.hyperedge(e);
    if (h.cardinality() == 0) result.violations.push_back({Errc::empty_hyperedge, {}, e});
    for (const auto* side : {&h.inputs, &h.outputs})
      for (Vertex v : *side)
        if (v >= n) result.violations.push_back({Errc::index_out_of_range, v, e});
    for (Vertex v : h.inputs)
      if (sorted_contains(h.outputs, v))
        result.violations.push_back({Errc::catalyst_vertex, v, e});
  }
  const auto deg = g.degrees();
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 0) result.violations.push_back({Errc::isolated_vertex, v, {}});
  return result;
}

void require_valid(const OrientedHypergraph& g) {
  const auto result = validate(g);
  if (!result.ok())
    throw Error(Errc::validation_failure, result.violations.front().message());
}

std::size_t degree(const OrientedHypergraph& g, Vertex i) {
  if (i >= g.n_vertices())
    throw Error(Errc::index_out_of_range, "vertex " + std::to_string(i));
  std::size_t d = 0;
  for (const auto& h : g.hyperedges())
    if (h.contains(i)) ++d;
  return d;
}

std::optional<std::size_t> is_p_regular(const OrientedHypergraph& g) {
  const auto deg = g.degrees();
  if (deg.empty()) return std::nullopt;
  if (std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == deg.front(); }))
    return deg.front();
  return std::nullopt;
}

bool is_valid_bipartition(const OrientedHypergraph& g, const std::vector<bool>& in_first) {
  for (const auto& h : g.hyperedges()) {
    // Inputs must share a side, outputs must share the other one.
    std::optional<bool> input_side;
    for (Vertex v : h.inputs) {
      if (input_side && *input_side != in_first[v]) return false;
      input_side = in_first[v];
    }
    std::optional<bool> output_side;
    for (Vertex v : h.outputs) {
      if (output_side && *output_side != in_first[v]) return false;
      output_side = in_first[v];
    }
    if (input_side && output_side && *input_side == *output_side) return false;
  }
  return true;
}

std::optional<Bipartition> is_bipartite(const OrientedHypergraph& g) {
  const std::size_t n = g.n_vertices();
  // parity 0: same side, 1: opposite sides.
  std::vector<std::vector<std::pair<Vertex, int>>> constraints(n);
  for (const auto& h : g.hyperedges()) {
    std::vector<std::pair<Vertex, int>> members;
    for (Vertex v : h.inputs) members.emplace_back(v, 1);
    for (Vertex v : h.outputs) members.emplace_back(v, -1);
    // A star around the first member carries every pairwise constraint.
    for (std::size_t k = 1; k < members.size(); ++k) {
      const auto [a, sa] = members.front();
      const auto [b, sb] = members[k];
      const int parity = sa == sb ? 0 : 1;
      constraints[a].emplace_back(b, parity);
      constraints[b].emplace_back(a, parity);
    }
  }

  std::vector<int> colour(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (const auto& [w, parity] : constraints[u]) {
        const int want = colour[u] ^ parity;
        if (colour[w] == -1) {
          colour[w] = want;
          frontier.push(w);
        } else if (colour[w] != want) {
          return std::nullopt;
        }
      }
    }
  }

  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

OrientedHypergraph dual(const OrientedHypergraph& g) {
  const std::size_t n = g.n_vertices();
  std::vector<Hyperedge> edges(n);
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    const Hyperedge& h = g.hyperedge(e);
    for (Vertex v : h.inputs) edges.at(v).inputs.push_back(e);
    for (Vertex v : h.outputs) edges.at(v).outputs.push_back(e);
  }
  // Hyperedge indices are visited in ascending order, so lists are already sorted.
  return OrientedHypergraph(g.n_hyperedges(), std::move(edges));
}

OrientedHypergraph all_inputs_variant(const OrientedHypergraph& g) {
  std::vector<Hyperedge> edges;
  edges.reserve(g.n_hyperedges());
  for (const auto& h : g.hyperedges()) {
    std::vector<Vertex> members = h.inputs;
    members.insert(members.end(), h.outputs.begin(), h.outputs.end());
    edges.push_back(Hyperedge::all_inputs(std::move(members)));
  }
  return OrientedHypergraph(g.n_vertices(), std::move(edges));
}

RandomHypergraph generate_random_hypergraph(std::size_t n, std::size_t m, std::size_t max_card,
                                            std::uint64_t seed) {
  if (n < 1 || m < 1 || max_card < 1 || max_card > n)
    throw Error(Errc::invalid_parameters, "random_hypergraph requires n>=1, m>=1, 1<=max_card<=n");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> card_dist(1, max_card);
  std::bernoulli_distribution sign_dist(0.5);
  std::vector<Vertex> pool(n);

  std::vector<Hyperedge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t card = card_dist(rng);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    // Partial Fisher-Yates: the first `card` slots are a uniform sample.
    for (std::size_t k = 0; k < card; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, n - 1);
      std::swap(pool[k], pool[pick(rng)]);
    }
    std::vector<Vertex> in, out;
    for (std::size_t k = 0; k < card; ++k) (sign_dist(rng) ? in : out).push_back(pool[k]);
    edges.emplace_back(std::move(in), std::move(out));
  }

  RandomHypergraph result;
  OrientedHypergraph draft(n, edges);
  const auto deg = draft.degrees();
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 0) {
      edges.push_back(Hyperedge::all_inputs({v}));
      result.repaired.push_back(v);
    }
  }
  result.graph = OrientedHypergraph(n, std::move(edges));
  return result;
}

OrientedHypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_card,
                                     std::uint64_t seed) {
  return generate_random_hypergraph(n, m, max_card, seed).graph;
}

OrientedHypergraph random_simple_graph(std::size_t n, double edge_probability,
                                       std::uint64_t seed) {
  if (n < 2 || edge_probability < 0.0 || edge_probability > 1.0)
    throw Error(Errc::invalid_parameters, "random_simple_graph requires n>=2, p in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(edge_probability);
  std::bernoulli_distribution flip(0.5);
  std::vector<Hyperedge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!keep(rng)) continue;
      edges.push_back(flip(rng) ? Hyperedge::edge(i, j) : Hyperedge::edge(j, i));
    }
  }
  std::vector<std::size_t> deg = OrientedHypergraph(n, edges).degrees();
  for (Vertex i = 0; i < n; ++i) {
    if (deg[i] != 0) continue;
    const Vertex j = (i + 1) % n;
    edges.push_back(Hyperedge::edge(i, j));
    ++deg[i];
    ++deg[j];
  }
  return OrientedHypergraph(n, std::move(edges));
}

}  // namespace hyperspec

#ifndef HYPERSPEC_HYPERGRAPH_HPP
#define HYPERSPEC_HYPERGRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/error.hpp"

namespace hyperspec {

using Vertex = std::size_t;

// Signed hyperedge: inputs carry incidence +1, outputs -1. Both lists are
// kept sorted and duplicate-free.
struct Hyperedge {
  std::vector<Vertex> inputs;
  std::vector<Vertex> outputs;

  Hyperedge() = default;
  Hyperedge(std::vector<Vertex> in, std::vector<Vertex> out);

  static Hyperedge all_inputs(std::vector<Vertex> members);
  static Hyperedge edge(Vertex from, Vertex to) { return Hyperedge({from}, {to}); }

  std::size_t cardinality() const { return inputs.size() + outputs.size(); }
  bool contains(Vertex v) const;
  // +1, -1, or 0 when v is not in the hyperedge.
  int sign(Vertex v) const;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
  friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;
};

std::size_t cardinality(const Hyperedge& h);

class OrientedHypergraph {
 public:
  OrientedHypergraph() = default;
  OrientedHypergraph(std::size_t n_vertices, std::vector<Hyperedge> hyperedges);

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_hyperedges() const { return hyperedges_.size(); }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
  const Hyperedge& hyperedge(std::size_t index) const { return hyperedges_.at(index); }

  // Degrees of all vertices, counting duplicate hyperedges with multiplicity.
  // Hyperedge members outside [0, n) are ignored here; validate() reports them.
  std::vector<std::size_t> degrees() const;
  std::size_t incidence_count() const;

  friend bool operator==(const OrientedHypergraph&, const OrientedHypergraph&) = default;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Hyperedge> hyperedges_;
};

struct Violation {
  Errc kind;
  std::optional<Vertex> vertex;
  std::optional<std::size_t> hyperedge;

  std::string message() const;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Errc kind) const;
};

ValidationResult validate(const OrientedHypergraph& g);
// Throws Error(validation_failure) listing the first violation.
void require_valid(const OrientedHypergraph& g);

std::size_t degree(const OrientedHypergraph& g, Vertex i);
std::optional<std::size_t> is_p_regular(const OrientedHypergraph& g);

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

// 2-colours the parity-constraint graph (co-oriented pairs on the same side,
// anti-oriented pairs on opposite sides). Either side may come back empty.
std::optional<Bipartition> is_bipartite(const OrientedHypergraph& g);
// True when every hyperedge has its inputs on one side and outputs on the other.
bool is_valid_bipartition(const OrientedHypergraph& g, const std::vector<bool>& in_first);

// Vertices and hyperedges swap roles; incidence signs carry over unchanged.
OrientedHypergraph dual(const OrientedHypergraph& g);
// Every incidence turned into an input.
OrientedHypergraph all_inputs_variant(const OrientedHypergraph& g);

struct RandomHypergraph {
  OrientedHypergraph graph;
  // Vertices that received a singleton repair hyperedge.
  std::vector<Vertex> repaired;
};

RandomHypergraph generate_random_hypergraph(std::size_t n, std::size_t m, std::size_t max_card,
                                            std::uint64_t seed);
OrientedHypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_card,
                                     std::uint64_t seed);
// Simple graph: each edge one input and one output, no parallel edges.
// Isolated vertices are joined to their successor modulo n.
OrientedHypergraph random_simple_graph(std::size_t n, double edge_probability, std::uint64_t seed);

}  // namespace hyperspec

#endif

#ifndef HYPERSPEC_OPERATORS_HPP
#define HYPERSPEC_OPERATORS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/matrix.hpp"

namespace hyperspec {

enum class Operator { D, A, L, K, LH, KH };

std::string_view to_string(Operator op);
// Accepts "D", "A", "L", "K", "LH", "KH" (also "L^H", "K^H").
std::optional<Operator> parse_operator(std::string_view text);
inline constexpr Operator kAllOperators[] = {Operator::D, Operator::A,  Operator::L,
                                             Operator::K, Operator::LH, Operator::KH};
// D, A, K and K^H have integer entries.
bool is_integer_valued(Operator op);

// Exact integer constructions. All of them require a valid hypergraph.
IntegerSymmetricMatrix degree_matrix_exact(const OrientedHypergraph& g);
IntegerSymmetricMatrix adjacency_matrix_exact(const OrientedHypergraph& g);
// D - A.
IntegerSymmetricMatrix kirchhoff_laplacian_exact(const OrientedHypergraph& g);
// I * I^T, the second route to K.
IntegerSymmetricMatrix kirchhoff_from_incidence_exact(const OrientedHypergraph& g);
// I^T * I (m x m).
IntegerSymmetricMatrix hyperedge_kirchhoff_laplacian_exact(const OrientedHypergraph& g);

IncidenceMatrix incidence_matrix(const OrientedHypergraph& g);

SymmetricMatrix degree_matrix(const OrientedHypergraph& g);
SymmetricMatrix adjacency_matrix(const OrientedHypergraph& g);
// id - D^{-1/2} A D^{-1/2}; the diagonal is exactly 1.
SymmetricMatrix normalized_laplacian(const OrientedHypergraph& g);
// I^T D^{-1} I (m x m).
SymmetricMatrix hyperedge_normalized_laplacian(const OrientedHypergraph& g);
SymmetricMatrix kirchhoff_laplacian(const OrientedHypergraph& g);
SymmetricMatrix hyperedge_kirchhoff_laplacian(const OrientedHypergraph& g);

// Normalized Laplacian from precomputed integer A and degrees.
SymmetricMatrix normalized_laplacian_from(const IntegerSymmetricMatrix& adjacency,
                                          std::span<const std::int64_t> degrees);

SymmetricMatrix build_operator(const OrientedHypergraph& g, Operator op);

}  // namespace hyperspec

#endif

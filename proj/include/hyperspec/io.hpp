#ifndef HYPERSPEC_IO_HPP
#define HYPERSPEC_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/matrix.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

// {"n": 3, "hyperedges": [{"inputs": [0, 1], "outputs": [2]}]}, index lists ascending.
std::string to_canonical_json(const OrientedHypergraph& g);
nlohmann::json hypergraph_to_json(const OrientedHypergraph& g);

// Structural parsing only; call validate() for the hypergraph invariants.
OrientedHypergraph hypergraph_from_json(const nlohmann::json& j);
OrientedHypergraph parse_hypergraph(std::string_view text);
nlohmann::json parse_json(std::string_view text);

nlohmann::ordered_json spectrum_to_json(const Spectrum& s);
nlohmann::ordered_json measure_to_json(const SpectralMeasure& mu);

// Shortest text that reads back to the same double.
std::string format_real(double x);

std::string matrix_to_csv(const SymmetricMatrix& q);
std::string matrix_to_csv(const DenseMatrix<int>& m);
// MatrixMarket coordinate text, 1-based, nonzero entries only.
std::string matrix_to_matrix_market(const SymmetricMatrix& q);
std::string matrix_to_matrix_market(const DenseMatrix<int>& m);

}  // namespace hyperspec

#endif

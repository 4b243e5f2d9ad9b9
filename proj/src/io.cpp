#include "hyperspec/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace hyperspec {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void write_list(std::ostringstream& os, const std::vector<Vertex>& list) {
  os << '[';
  for (std::size_t k = 0; k < list.size(); ++k) os << (k ? ", " : "") << list[k];
  os << ']';
}

std::vector<Vertex> index_list(const json& h, const char* key, std::size_t edge) {
  if (!h.contains(key)) return {};
  const auto& list = h[key];
  if (!list.is_array())
    throw Error(Errc::parse_error, "hyperedge " + std::to_string(edge) + ": \"" + key +
                                       "\" must be an array");
  std::vector<Vertex> out;
  for (const auto& v : list) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw Error(Errc::parse_error, "hyperedge " + std::to_string(edge) + ": \"" + key +
                                         "\" holds a non-index value " + v.dump());
    out.push_back(v.get<Vertex>());
  }
  return out;
}

}  // namespace

std::string to_canonical_json(const OrientedHypergraph& g) {
  std::ostringstream os;
  os << "{\"n\": " << g.n_vertices() << ", \"hyperedges\": [";
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    const auto& h = g.hyperedge(e);
    os << (e ? ", " : "") << "{\"inputs\": ";
    write_list(os, h.inputs);
    os << ", \"outputs\": ";
    write_list(os, h.outputs);
    os << '}';
  }
  os << "]}";
  return os.str();
}

json hypergraph_to_json(const OrientedHypergraph& g) { return json::parse(to_canonical_json(g)); }

OrientedHypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::parse_error, "hypergraph must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0)
    throw Error(Errc::parse_error, "hypergraph needs a nonnegative integer \"n\"");
  if (!j.contains("hyperedges") || !j["hyperedges"].is_array())
    throw Error(Errc::parse_error, "hypergraph needs a \"hyperedges\" array");
  std::vector<Hyperedge> edges;
  std::size_t e = 0;
  for (const auto& h : j["hyperedges"]) {
    if (!h.is_object())
      throw Error(Errc::parse_error, "hyperedge " + std::to_string(e) + " must be an object");
    edges.emplace_back(index_list(h, "inputs", e), index_list(h, "outputs", e));
    ++e;
  }
  return OrientedHypergraph(j["n"].get<std::size_t>(), std::move(edges));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

OrientedHypergraph parse_hypergraph(std::string_view text) {
  return hypergraph_from_json(parse_json(text));
}

ordered_json spectrum_to_json(const Spectrum& s) {
  ordered_json j;
  const auto mu = spectral_measure(s);
  j["atoms"] = mu.atoms();
  j["weights"] = mu.weights();
  j["n"] = s.order();
  j["tol"] = s.tol;
  j["eigenvalues"] = s.eigenvalues;
  std::vector<std::size_t> mult;
  for (const auto& c : s.clusters) mult.push_back(c.multiplicity);
  j["multiplicities"] = mult;
  return j;
}

ordered_json measure_to_json(const SpectralMeasure& mu) {
  ordered_json j;
  j["atoms"] = mu.atoms();
  j["weights"] = mu.weights();
  j["n"] = mu.n();
  j["tol"] = mu.tol();
  return j;
}

std::string format_real(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

template <typename M>
std::string csv_of(const M& m, std::size_t rows, std::size_t cols) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) os << ',';
      if constexpr (std::is_floating_point_v<std::decay_t<decltype(m(i, j))>>)
        os << format_real(m(i, j));
      else
        os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

template <typename M>
std::string market_of(const M& m, std::size_t rows, std::size_t cols, const char* field) {
  std::ostringstream body;
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(i, j) == 0) continue;
      ++nnz;
      body << i + 1 << ' ' << j + 1 << ' ';
      if constexpr (std::is_floating_point_v<std::decay_t<decltype(m(i, j))>>)
        body << format_real(m(i, j));
      else
        body << m(i, j);
      body << '\n';
    }
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate " << field << " general\n"
     << rows << ' ' << cols << ' ' << nnz << '\n'
     << body.str();
  return os.str();
}

}  // namespace

std::string matrix_to_csv(const SymmetricMatrix& q) { return csv_of(q, q.order(), q.order()); }
std::string matrix_to_csv(const DenseMatrix<int>& m) { return csv_of(m, m.rows(), m.cols()); }

std::string matrix_to_matrix_market(const SymmetricMatrix& q) {
  return market_of(q, q.order(), q.order(), "real");
}
std::string matrix_to_matrix_market(const DenseMatrix<int>& m) {
  return market_of(m, m.rows(), m.cols(), "integer");
}

}  // namespace hyperspec

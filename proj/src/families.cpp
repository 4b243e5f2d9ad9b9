#include "hyperspec/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace hyperspec {

using nlohmann::json;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw Error(Errc::invalid_parameters, "binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

OrientedHypergraph single_hyperedge(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_parameters, "single_hyperedge needs n >= 1");
  if (n == 1) throw Error(Errc::degenerate_size, "single_hyperedge closed forms assume n >= 2");
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  return OrientedHypergraph(n, {Hyperedge::all_inputs(std::move(all))});
}

OrientedHypergraph r_complete(std::size_t n, std::size_t r) {
  if (r < 2 || r > n) throw Error(Errc::invalid_parameters, "r_complete needs 2 <= r <= n");
  const std::uint64_t m = binomial(n, r);
  if (m > kMaxMaterializedHyperedges)
    throw Error(Errc::invalid_parameters,
                "r_complete(" + std::to_string(n) + "," + std::to_string(r) + ") has " +
                    std::to_string(m) + " hyperedges; use r_complete_operator");
  std::vector<Hyperedge> edges;
  edges.reserve(m);
  std::vector<Vertex> combo(r);
  for (std::size_t k = 0; k < r; ++k) combo[k] = k;
  while (true) {
    edges.push_back(Hyperedge::all_inputs(combo));
    // Next combination in lexicographic order.
    std::size_t k = r;
    while (k > 0 && combo[k - 1] == n - r + (k - 1)) --k;
    if (k == 0) break;
    ++combo[k - 1];
    for (std::size_t j = k; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
  return OrientedHypergraph(n, std::move(edges));
}

OrientedHypergraph hyperflower(std::size_t l, std::size_t t, std::size_t core) {
  if (l < 1 || t < 1 || core + t * l < 2)
    throw Error(Errc::invalid_parameters, "hyperflower needs l >= 1, t >= 1, core + t*l >= 2");
  const std::size_t n = core + t * l;
  std::vector<Hyperedge> edges;
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < core; ++v) members.push_back(v);
    for (std::size_t i = 0; i < t; ++i) members.push_back(core + j * t + i);
    edges.push_back(Hyperedge::all_inputs(std::move(members)));
  }
  return OrientedHypergraph(n, std::move(edges));
}

OrientedHypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_parameters, "cycle_graph needs n >= 3");
  std::vector<Hyperedge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(Hyperedge::edge(v, (v + 1) % n));
  return OrientedHypergraph(n, std::move(edges));
}

OrientedHypergraph path_graph(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_parameters, "path_graph needs n >= 2");
  std::vector<Hyperedge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back(Hyperedge::edge(v, v + 1));
  return OrientedHypergraph(n, std::move(edges));
}

OrientedHypergraph star_graph(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_parameters, "star_graph needs n >= 2");
  std::vector<Hyperedge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back(Hyperedge::edge(0, v));
  return OrientedHypergraph(n, std::move(edges));
}

OrientedHypergraph disjoint_union(const std::vector<OrientedHypergraph>& parts) {
  if (parts.empty()) throw Error(Errc::empty_list, "disjoint_union of no hypergraphs");
  std::size_t offset = 0;
  std::vector<Hyperedge> edges;
  for (const auto& g : parts) {
    for (const auto& h : g.hyperedges()) {
      Hyperedge shifted = h;
      for (auto& v : shifted.inputs) v += offset;
      for (auto& v : shifted.outputs) v += offset;
      edges.push_back(std::move(shifted));
    }
    offset += g.n_vertices();
  }
  return OrientedHypergraph(offset, std::move(edges));
}

OrientedHypergraph perturb(const OrientedHypergraph& g, const std::vector<Hyperedge>& add,
                           const std::vector<std::size_t>& remove) {
  std::vector<bool> drop(g.n_hyperedges(), false);
  for (std::size_t idx : remove) {
    if (idx >= g.n_hyperedges())
      throw Error(Errc::index_out_of_range, "hyperedge " + std::to_string(idx));
    drop[idx] = true;
  }
  std::vector<Hyperedge> edges;
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e)
    if (!drop[e]) edges.push_back(g.hyperedge(e));
  edges.insert(edges.end(), add.begin(), add.end());
  OrientedHypergraph out(g.n_vertices(), std::move(edges));
  require_valid(out);
  return out;
}

SymmetricMatrix r_complete_operator(std::size_t n, std::size_t r, Operator op) {
  if (r < 2 || r > n) throw Error(Errc::invalid_parameters, "r_complete needs 2 <= r <= n");
  const auto p = static_cast<std::int64_t>(binomial(n - 1, r - 1));
  // Every pair of vertices is co-oriented in C(n-2, r-2) hyperedges.
  const auto pair = static_cast<std::int64_t>(binomial(n - 2, r - 2));
  IntegerSymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, -pair);
  const std::vector<std::int64_t> deg(n, p);
  switch (op) {
    case Operator::D: return IntegerSymmetricMatrix::diagonal(deg).cast<double>();
    case Operator::A: return a.cast<double>();
    case Operator::K: return (IntegerSymmetricMatrix::diagonal(deg) - a).cast<double>();
    case Operator::L: return normalized_laplacian_from(a, deg);
    default:
      throw Error(Errc::unsupported_family_operator,
                  "r_complete_operator builds D, A, L and K only");
  }
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::single_hyperedge: return "single_hyperedge";
    case FamilyKind::r_complete: return "r_complete";
    case FamilyKind::hyperflower_fixed_lt: return "hyperflower_fixed_lt";
    case FamilyKind::hyperflower_fixed_core: return "hyperflower_fixed_core";
    case FamilyKind::cycle_graph: return "cycle_graph";
    case FamilyKind::path_graph: return "path_graph";
    case FamilyKind::star_graph: return "star_graph";
    case FamilyKind::disjoint_union: return "disjoint_union";
    case FamilyKind::perturbed: return "perturbed";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (auto kind : {FamilyKind::single_hyperedge, FamilyKind::r_complete,
                    FamilyKind::hyperflower_fixed_lt, FamilyKind::hyperflower_fixed_core,
                    FamilyKind::cycle_graph, FamilyKind::path_graph, FamilyKind::star_graph,
                    FamilyKind::disjoint_union, FamilyKind::perturbed})
    if (text == to_string(kind)) return kind;
  if (text == "hyperflower") return FamilyKind::hyperflower_fixed_lt;
  if (text == "cycle") return FamilyKind::cycle_graph;
  if (text == "path") return FamilyKind::path_graph;
  if (text == "star") return FamilyKind::star_graph;
  return std::nullopt;
}

FamilySpec FamilySpec::from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(Errc::parse_error, "family spec needs a string \"kind\"");
  const auto kind = parse_family_kind(j["kind"].get<std::string>());
  if (!kind) throw Error(Errc::parse_error, "unknown family kind " + j["kind"].dump());
  FamilySpec spec;
  spec.kind = *kind;
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw Error(Errc::parse_error, "\"params\" must be an object");
    spec.params = j["params"];
  }
  return spec;
}

FamilySpec FamilySpec::from_cli(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '{') {
    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) throw Error(Errc::parse_error, "family spec is not valid JSON");
    return from_json(j);
  }
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw Error(Errc::parse_error, "empty family spec");
  if (token.rfind("family=", 0) == 0) token = token.substr(7);
  const auto kind = parse_family_kind(token);
  if (!kind) throw Error(Errc::parse_error, "unknown family kind " + token);
  FamilySpec spec;
  spec.kind = *kind;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(Errc::parse_error, "expected key=value, got " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(value, &used);
      if (used != value.size() || v < 0) throw std::invalid_argument(value);
      spec.params[key] = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      spec.params[key] = value;
    }
  }
  return spec;
}

json FamilySpec::to_json() const {
  json j = json::object();
  j["kind"] = std::string(hyperspec::to_string(kind));
  j["params"] = params;
  return j;
}

namespace {

std::size_t param(const json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer() ||
      params[key].get<std::int64_t>() < 0)
    throw Error(Errc::invalid_parameters, std::string("missing or invalid parameter ") + key);
  return params[key].get<std::size_t>();
}

std::size_t sized_param(const json& params, const char* key, std::optional<std::size_t> size) {
  return size ? *size : param(params, key);
}

struct FlowerParams {
  std::size_t l, t, core;
};

FlowerParams flower_params(const FamilySpec& spec, std::optional<std::size_t> size) {
  const auto& p = spec.params;
  if (spec.kind == FamilyKind::hyperflower_fixed_lt) {
    const std::size_t l = param(p, "l"), t = param(p, "t");
    if (!size) return {l, t, param(p, "core")};
    if (*size < t * l + 1)
      throw Error(Errc::generation_failure, "size " + std::to_string(*size) +
                                                " leaves no core for l*t = " +
                                                std::to_string(t * l));
    return {l, t, *size - t * l};
  }
  const std::size_t t = param(p, "t"), core = param(p, "core");
  if (!size) return {param(p, "l"), t, core};
  if (t == 0 || *size <= core || (*size - core) % t != 0)
    throw Error(Errc::generation_failure, "size " + std::to_string(*size) +
                                              " is not core + t*l for core=" +
                                              std::to_string(core) + ", t=" + std::to_string(t));
  return {(*size - core) / t, t, core};
}

std::vector<FamilySpec> union_components(const FamilySpec& spec, std::optional<std::size_t> size,
                                         std::vector<std::optional<std::size_t>>& sizes) {
  const auto& p = spec.params;
  std::vector<FamilySpec> parts;
  sizes.clear();
  if (p.contains("components")) {
    if (!p["components"].is_array() || p["components"].empty())
      throw Error(Errc::empty_list, "disjoint_union needs a nonempty component list");
    for (const auto& c : p["components"]) {
      parts.push_back(FamilySpec::from_json(c));
      sizes.push_back(std::nullopt);
    }
    return parts;
  }
  const std::size_t copies = param(p, "copies");
  if (copies == 0) throw Error(Errc::empty_list, "disjoint_union with zero copies");
  if (!p.contains("of")) throw Error(Errc::invalid_parameters, "disjoint_union needs \"of\"");
  std::optional<std::size_t> each;
  if (size) {
    if (*size % copies != 0)
      throw Error(Errc::generation_failure,
                  "size " + std::to_string(*size) + " not divisible by " + std::to_string(copies));
    each = *size / copies;
  }
  for (std::size_t k = 0; k < copies; ++k) {
    parts.push_back(FamilySpec::from_json(p["of"]));
    sizes.push_back(each);
  }
  return parts;
}

std::size_t ceil_sqrt(std::size_t n) {
  std::size_t c = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (c * c < n) ++c;
  while (c > 0 && (c - 1) * (c - 1) >= n) --c;
  return c;
}

std::vector<Hyperedge> parse_hyperedges(const json& list) {
  std::vector<Hyperedge> out;
  if (!list.is_array()) throw Error(Errc::parse_error, "hyperedge list must be an array");
  for (const auto& h : list) {
    std::vector<Vertex> in, outv;
    if (h.contains("inputs")) in = h["inputs"].get<std::vector<Vertex>>();
    if (h.contains("outputs")) outv = h["outputs"].get<std::vector<Vertex>>();
    out.emplace_back(std::move(in), std::move(outv));
  }
  return out;
}

OrientedHypergraph instantiate_perturbed(const FamilySpec& spec, std::optional<std::size_t> size) {
  const auto& p = spec.params;
  if (!p.contains("base")) throw Error(Errc::invalid_parameters, "perturbed needs \"base\"");
  const FamilySpec base = FamilySpec::from_json(p["base"]);
  const OrientedHypergraph g = instantiate(base, size);

  std::vector<Hyperedge> add;
  if (p.contains("add")) add = parse_hyperedges(p["add"]);
  std::vector<std::size_t> remove;
  if (p.contains("remove")) remove = p["remove"].get<std::vector<std::size_t>>();

  if (p.contains("bridges")) {
    if (base.kind != FamilyKind::disjoint_union)
      throw Error(Errc::invalid_parameters, "bridges need a disjoint_union base");
    std::vector<std::optional<std::size_t>> sizes;
    const auto parts = union_components(base, size, sizes);
    if (parts.size() < 2) throw Error(Errc::invalid_parameters, "bridges need two components");
    const std::size_t s0 = instance_size(parts[0], sizes[0]);
    const std::size_t s1 = instance_size(parts[1], sizes[1]);
    std::size_t count = 0;
    if (p["bridges"].is_string() && p["bridges"].get<std::string>() == "sqrt")
      count = ceil_sqrt(g.n_vertices());
    else
      count = param(p, "bridges");
    if (count > std::min(s0, s1))
      throw Error(Errc::generation_failure, std::to_string(count) + " bridges exceed component size");
    const bool graph_style =
        p.contains("bridge_orientation") && p["bridge_orientation"] == "graph";
    for (std::size_t j = 0; j < count; ++j)
      add.push_back(graph_style ? Hyperedge::edge(j, s0 + j) : Hyperedge::all_inputs({j, s0 + j}));
  }
  try {
    return perturb(g, add, remove);
  } catch (const Error& e) {
    if (e.code() == Errc::validation_failure) throw Error(Errc::generation_failure, e.what());
    throw;
  }
}

}  // namespace

OrientedHypergraph instantiate(const FamilySpec& spec, std::optional<std::size_t> size) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::single_hyperedge: return single_hyperedge(sized_param(p, "n", size));
    case FamilyKind::r_complete: return r_complete(sized_param(p, "n", size), param(p, "r"));
    case FamilyKind::hyperflower_fixed_lt:
    case FamilyKind::hyperflower_fixed_core: {
      const auto f = flower_params(spec, size);
      return hyperflower(f.l, f.t, f.core);
    }
    case FamilyKind::cycle_graph: return cycle_graph(sized_param(p, "n", size));
    case FamilyKind::path_graph: return path_graph(sized_param(p, "n", size));
    case FamilyKind::star_graph: return star_graph(sized_param(p, "n", size));
    case FamilyKind::disjoint_union: {
      std::vector<std::optional<std::size_t>> sizes;
      const auto parts = union_components(spec, size, sizes);
      std::vector<OrientedHypergraph> graphs;
      for (std::size_t k = 0; k < parts.size(); ++k) graphs.push_back(instantiate(parts[k], sizes[k]));
      auto g = disjoint_union(graphs);
      if (size && g.n_vertices() != *size)
        throw Error(Errc::generation_failure, "union size differs from requested size");
      return g;
    }
    case FamilyKind::perturbed: return instantiate_perturbed(spec, size);
  }
  throw Error(Errc::invalid_parameters, "unknown family kind");
}

std::size_t instance_size(const FamilySpec& spec, std::optional<std::size_t> size) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::hyperflower_fixed_lt:
    case FamilyKind::hyperflower_fixed_core: {
      const auto f = flower_params(spec, size);
      return f.core + f.t * f.l;
    }
    case FamilyKind::disjoint_union: {
      std::vector<std::optional<std::size_t>> sizes;
      const auto parts = union_components(spec, size, sizes);
      std::size_t total = 0;
      for (std::size_t k = 0; k < parts.size(); ++k) total += instance_size(parts[k], sizes[k]);
      return total;
    }
    case FamilyKind::perturbed:
      return instance_size(FamilySpec::from_json(p.at("base")), size);
    default: return sized_param(p, "n", size);
  }
}

std::vector<quad> ClosedFormSpectrum::values() const {
  std::vector<quad> out;
  for (const auto* list : {&terms, &residuals})
    for (const auto& t : *list) out.insert(out.end(), t.multiplicity, t.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> ClosedFormSpectrum::values_double() const {
  std::vector<double> out;
  for (quad v : values()) out.push_back(static_cast<double>(v));
  return out;
}

namespace {

quad ratio(std::int64_t num, std::int64_t den) { return static_cast<quad>(num) / static_cast<quad>(den); }

ClosedFormTerm term(std::string label, quad value, std::size_t multiplicity) {
  return {std::move(label), value, multiplicity};
}

// Pads with zeros so the hyperedge operators have order m.
ClosedFormSpectrum hyperedge_side(const ClosedFormSpectrum& vertex_side, std::size_t m) {
  ClosedFormSpectrum out;
  out.order = m;
  std::size_t nonzero = 0;
  for (const auto& t : vertex_side.terms) {
    if (t.value == 0 || t.multiplicity == 0) continue;
    out.terms.push_back(t);
    nonzero += t.multiplicity;
  }
  if (nonzero > m)
    throw Error(Errc::invalid_parameters, "more nonzero eigenvalues than hyperedges");
  if (nonzero < m) out.terms.push_back(term("0", 0, m - nonzero));
  return out;
}

void drop_empty_terms(ClosedFormSpectrum& s) {
  std::erase_if(s.terms, [](const ClosedFormTerm& t) { return t.multiplicity == 0; });
}

}  // namespace

ClosedFormSpectrum closed_form_single_hyperedge(std::size_t n, Operator op) {
  if (n < 2) throw Error(Errc::degenerate_size, "single_hyperedge closed forms assume n >= 2");
  const auto nn = static_cast<std::int64_t>(n);
  ClosedFormSpectrum s;
  s.order = n;
  switch (op) {
    case Operator::D: s.terms = {term("1", 1, n)}; break;
    case Operator::A: s.terms = {term("1", 1, n - 1), term("1-n", 1 - nn, 1)}; break;
    case Operator::L:
    case Operator::K: s.terms = {term("0", 0, n - 1), term("n", nn, 1)}; break;
    case Operator::LH:
    case Operator::KH:
      s.order = 1;
      s.terms = {term("n", nn, 1)};
      break;
  }
  return s;
}

ClosedFormSpectrum closed_form_r_complete(std::size_t n, std::size_t r, Operator op) {
  if (r < 2 || r > n) throw Error(Errc::invalid_parameters, "r_complete needs 2 <= r <= n");
  const auto p = static_cast<std::int64_t>(binomial(n - 1, r - 1));
  const auto nn = static_cast<std::int64_t>(n);
  const auto rr = static_cast<std::int64_t>(r);
  ClosedFormSpectrum s;
  s.order = n;
  switch (op) {
    case Operator::D: s.terms = {term("C(n-1,r-1)", p, n)}; break;
    case Operator::L:
      s.terms = {term("(n-r)/(n-1)", ratio(nn - rr, nn - 1), n - 1), term("r", rr, 1)};
      break;
    case Operator::A:
      s.terms = {term("C(n-1,r-1)*(1-(n-r)/(n-1))", ratio(p * (rr - 1), nn - 1), n - 1),
                 term("C(n-1,r-1)*(1-r)", p * (1 - rr), 1)};
      break;
    case Operator::K:
      s.terms = {term("C(n-1,r-1)*(n-r)/(n-1)", ratio(p * (nn - rr), nn - 1), n - 1),
                 term("C(n-1,r-1)*r", p * rr, 1)};
      break;
    case Operator::LH:
    case Operator::KH: {
      const auto m = binomial(n, r);
      return hyperedge_side(closed_form_r_complete(n, r, op == Operator::LH ? Operator::L : Operator::K),
                            m);
    }
  }
  return s;
}

ClosedFormSpectrum closed_form_hyperflower(std::size_t l, std::size_t t, std::size_t core,
                                           Operator op) {
  if (l < 1 || t < 1) throw Error(Errc::invalid_parameters, "hyperflower needs l >= 1, t >= 1");
  if (core == 0)
    throw Error(Errc::unsupported_family_operator,
                "hyperflower closed forms need a nonempty core");
  const std::size_t n = core + t * l;
  const auto L = static_cast<std::int64_t>(l);
  const auto T = static_cast<std::int64_t>(t);
  const auto C = static_cast<std::int64_t>(core);
  const auto N = static_cast<std::int64_t>(n);
  ClosedFormSpectrum s;
  s.order = n;
  switch (op) {
    case Operator::D: s.terms = {term("l", L, core), term("1", 1, t * l)}; break;
    case Operator::L:
      s.terms = {term("0", 0, n - l), term("t", T, l - 1), term("n-tl+t", N - T * L + T, 1)};
      break;
    case Operator::K:
      s.terms = {term("0", 0, n - l), term("t", T, l - 1),
                 term("nl-tl^2+t", N * L - T * L * L + T, 1)};
      break;
    case Operator::A: {
      s.terms = {term("l", L, core - 1), term("1", 1, l * (t - 1)), term("1-t", 1 - T, l - 1)};
      // Trace identities fix the two remaining eigenvalues.
      std::int64_t listed_sum = 0, listed_sq = 0;
      for (const auto& tm : s.terms) {
        const auto v = static_cast<std::int64_t>(tm.value);
        listed_sum += v * static_cast<std::int64_t>(tm.multiplicity);
        listed_sq += v * v * static_cast<std::int64_t>(tm.multiplicity);
      }
      const std::int64_t trace_a2 = C * (C - 1) * L * L + 2 * C * T * L + L * T * (T - 1);
      const std::int64_t sum = -listed_sum;
      const std::int64_t sum_sq = trace_a2 - listed_sq;
      const std::int64_t disc = 2 * sum_sq - sum * sum;
      if (disc < 0) throw Error(Errc::invalid_parameters, "inconsistent hyperflower trace system");
      const quad root = sqrtq(static_cast<quad>(disc));
      s.residuals = {term("a", (static_cast<quad>(sum) - root) / 2, 1),
                     term("b", (static_cast<quad>(sum) + root) / 2, 1)};
      break;
    }
    case Operator::LH:
      s.order = l;
      s.terms = {term("t", T, l - 1), term("n-tl+t", N - T * L + T, 1)};
      break;
    case Operator::KH:
      // The nonzero-spectrum identity with K fixes the large atom at nl - tl^2 + t.
      s.order = l;
      s.terms = {term("t", T, l - 1), term("nl-tl^2+t", N * L - T * L * L + T, 1)};
      break;
  }
  drop_empty_terms(s);
  return s;
}

ClosedFormSpectrum closed_form_spectrum(const FamilySpec& spec, Operator op,
                                        std::optional<std::size_t> size) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::single_hyperedge:
      return closed_form_single_hyperedge(sized_param(p, "n", size), op);
    case FamilyKind::r_complete:
      return closed_form_r_complete(sized_param(p, "n", size), param(p, "r"), op);
    case FamilyKind::hyperflower_fixed_lt:
    case FamilyKind::hyperflower_fixed_core: {
      const auto f = flower_params(spec, size);
      return closed_form_hyperflower(f.l, f.t, f.core, op);
    }
    default:
      throw Error(Errc::unsupported_family_operator,
                  "no closed form for family " + std::string(to_string(spec.kind)));
  }
}

KhAtomDiscrepancy hyperflower_kh_discrepancy(std::size_t l, std::size_t t, std::size_t core,
                                             double tol) {
  const std::size_t n = core + t * l;
  KhAtomDiscrepancy out;
  out.stated_atom = static_cast<double>(n) - static_cast<double>(t * l * l) + static_cast<double>(t);
  out.identity_atom =
      static_cast<double>(n * l) - static_cast<double>(t * l * l) + static_cast<double>(t);
  const auto kh = eigenvalues(hyperedge_kirchhoff_laplacian(hyperflower(l, t, core)));
  out.numeric_largest = kh.back();
  out.stated_matches = std::fabs(out.numeric_largest - out.stated_atom) <= tol;
  out.identity_matches = std::fabs(out.numeric_largest - out.identity_atom) <= tol;
  return out;
}

ClassLimit spectral_class_limit(const FamilySpec& spec, Operator op) {
  auto dirac = [](double x, std::string src) {
    return ClassLimit{SpectralMeasure::dirac(x), std::move(src)};
  };
  auto none = [](std::string src) { return ClassLimit{std::nullopt, std::move(src)}; };
  const auto unknown = [&]() -> ClassLimit {
    throw Error(Errc::unknown_limit, "no stated spectral class for " +
                                         std::string(to_string(spec.kind)) + " under " +
                                         std::string(to_string(op)));
  };

  switch (spec.kind) {
    case FamilyKind::single_hyperedge:
      if (op == Operator::D || op == Operator::A) return dirac(1.0, "single hyperedge");
      if (op == Operator::L || op == Operator::K) return dirac(0.0, "single hyperedge");
      return unknown();
    case FamilyKind::r_complete:
      if (op == Operator::L) return dirac(1.0, "r-complete");
      if (op == Operator::D || op == Operator::A || op == Operator::K)
        return none("r-complete: eigenvalues grow with the degrees");
      return unknown();
    case FamilyKind::hyperflower_fixed_lt:
      // Core vertices have degree l and carry all but tl + 1 eigenvalues of D and A.
      if (op == Operator::D || op == Operator::A)
        return dirac(static_cast<double>(param(spec.params, "l")), "hyperflower, growing core");
      if (op == Operator::L || op == Operator::K) return dirac(0.0, "hyperflower, growing core");
      return none("hyperflower, growing core: hyperedge operators have no class");
    case FamilyKind::hyperflower_fixed_core: {
      const double t = static_cast<double>(param(spec.params, "t"));
      const std::string src = "hyperflower, growing number of hyperedges";
      switch (op) {
        case Operator::D: return dirac(1.0, src);
        case Operator::L:
        case Operator::K:
          return {SpectralMeasure::from_terms({{0.0, (t - 1.0) / t}, {t, 1.0 / t}}), src};
        case Operator::A:
          return {SpectralMeasure::from_terms({{1.0, (t - 1.0) / t}, {1.0 - t, 1.0 / t}}), src};
        case Operator::LH:
        case Operator::KH: return dirac(t, src);
      }
      return unknown();
    }
    case FamilyKind::star_graph:
      if (op == Operator::D || op == Operator::L || op == Operator::K)
        return dirac(1.0, "star graphs");
      if (op == Operator::A) return dirac(0.0, "star graphs");
      return unknown();
    case FamilyKind::cycle_graph:
      if (op == Operator::D) return dirac(2.0, "2-regular cycles");
      return unknown();
    default: return unknown();
  }
}

}  // namespace hyperspec

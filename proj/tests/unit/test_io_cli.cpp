#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hyperspec/cli.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/operators.hpp"

using namespace hyperspec;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "/tmp/hyperspec_unit_" + name; }

}  // namespace

TEST_CASE("canonical json") {
  const OrientedHypergraph g(3, {Hyperedge({1, 0}, {2}), Hyperedge::all_inputs({2})});
  CHECK(to_canonical_json(g) ==
        R"({"n": 3, "hyperedges": [{"inputs": [0, 1], "outputs": [2]}, {"inputs": [2], "outputs": []}]})");
  CHECK(to_canonical_json(OrientedHypergraph(2, {})) == R"({"n": 2, "hyperedges": []})");
}

TEST_CASE("json round trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_hypergraph(3 + seed % 8, 1 + seed % 6, 3, seed);
    const auto text = to_canonical_json(g);
    const auto back = parse_hypergraph(text);
    CHECK(back == g);
    CHECK(to_canonical_json(back) == text);
    CHECK(hypergraph_from_json(hypergraph_to_json(g)) == g);
  }
}

TEST_CASE("json parse errors") {
  for (const char* bad : {"{", "[]", R"({"hyperedges": []})", R"({"n": -1, "hyperedges": []})",
                          R"({"n": 2, "hyperedges": [{"inputs": ["a"], "outputs": []}]})"}) {
    try {
      parse_hypergraph(bad);
      FAIL("expected ParseError for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }
  // A missing side reads as empty.
  CHECK(parse_hypergraph(R"({"n": 1, "hyperedges": [{"inputs": [0]}]})") ==
        OrientedHypergraph(1, {Hyperedge::all_inputs({0})}));
  // Out of range indices parse; validate() reports them.
  const auto g = parse_hypergraph(R"({"n": 2, "hyperedges": [{"inputs": [5], "outputs": []}]})");
  CHECK_FALSE(validate(g).ok());
}

TEST_CASE("real formatting") {
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(2.0) == "2");
  CHECK(format_real(0.1) == "0.1");
  CHECK(std::stod(format_real(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("matrix export") {
  const auto k = kirchhoff_laplacian(path_graph(3));
  CHECK(matrix_to_csv(k) == "1,-1,0\n-1,2,-1\n0,-1,1\n");
  const auto mm = matrix_to_matrix_market(k);
  CHECK(mm.rfind("%%MatrixMarket matrix coordinate real general\n3 3 7\n1 1 1\n", 0) == 0);
  const auto inc = matrix_to_matrix_market(incidence_matrix(OrientedHypergraph(2, {Hyperedge({0}, {1})})));
  CHECK(inc == "%%MatrixMarket matrix coordinate integer general\n2 1 2\n1 1 1\n2 1 -1\n");
}

TEST_CASE("cli gen and spectrum") {
  const auto gen = cli({"gen", "--family", "r_complete n=3 r=2"});
  CHECK(gen.code == kExitOk);
  CHECK(gen.out == to_canonical_json(r_complete(3, 2)) + "\n");

  const auto random = cli({"gen", "--random", "6:5:3", "--seed", "11"});
  CHECK(random.out == cli({"gen", "--random", "6:5:3", "--seed", "11"}).out);

  const auto path = temp_path("input.json");
  std::ofstream(path) << gen.out;
  const auto spec = cli({"spectrum", "--input", path, "--operator", "L"});
  REQUIRE(spec.code == kExitOk);
  const auto j = parse_json(spec.out);
  CHECK(j["operator"] == "L");
  CHECK(j["n"] == 3);
  CHECK(j["multiplicities"] == nlohmann::json::array({2, 1}));
  CHECK(std::fabs(j["atoms"][0].get<double>() - 0.5) <= 1e-12);

  const auto fam = cli({"spectrum", "--family", "single_hyperedge n=3", "--operator", "LH"});
  CHECK(parse_json(fam.out)["eigenvalues"] == nlohmann::json::array({3.0}));
}

TEST_CASE("cli errors") {
  const auto path = temp_path("bad.json");
  std::ofstream(path) << "{\"n\": 3, \"hyperedges\": [";
  const auto malformed = cli({"spectrum", "--input", path});
  CHECK(malformed.code == kExitInputError);
  CHECK(parse_json(malformed.err)["error"] == "ParseError");

  std::ofstream(path) << R"({"n": 2, "hyperedges": [{"inputs": [0], "outputs": [0]}]})";
  const auto invalid = cli({"spectrum", "--input", path});
  CHECK(invalid.code == kExitInputError);
  CHECK(parse_json(invalid.err)["error"] == "ValidationFailure");

  CHECK(cli({"spectrum", "--family", "path_graph n=3", "--operator", "Q"}).code == kExitInputError);
  CHECK(cli({"bogus"}).code == kExitInputError);

  const auto unsupported = cli({"verify", "--family", "hyperflower l=5 t=3 core=0", "--operator", "K"});
  CHECK(unsupported.code == kExitUnsupported);
  CHECK(parse_json(unsupported.err)["error"] == "UnsupportedFamilyOperator");
  const auto no_limit = cli({"converge", "--family", "path_graph", "--sizes", "10,20", "--mode", "class"});
  CHECK(no_limit.code == kExitUnsupported);

  CHECK(exit_code_for(Errc::parse_error) == kExitInputError);
  CHECK(exit_code_for(Errc::unknown_limit) == kExitUnsupported);
  CHECK(exit_code_for(Errc::validation_failure) == kExitInputError);
}

TEST_CASE("cli verify") {
  const auto ok = cli({"verify", "--family", "hyperflower l=5 t=3 core=2", "--operator", "A"});
  CHECK(ok.code == kExitOk);
  const auto j = parse_json(ok.out);
  CHECK(j["pass"] == true);
  CHECK(j["max_abs_error"].get<double>() <= 1e-7);
}

TEST_CASE("cli bounds") {
  const auto a = temp_path("a.json"), b = temp_path("b.json");
  std::ofstream(a) << to_canonical_json(r_complete(6, 2));
  std::ofstream(b) << to_canonical_json(perturb(r_complete(6, 2), {Hyperedge::all_inputs({0, 1, 2})}, {0}));
  const auto res = cli({"bounds", "--first", a, "--second", b, "--format", "json"});
  CHECK(res.code == kExitOk);
  const auto j = parse_json(res.out);
  CHECK(j["c1"] == 2);
  CHECK(j["c2"] == 3);

  std::ofstream(b) << to_canonical_json(r_complete(5, 2));
  CHECK(cli({"bounds", "--first", a, "--second", b}).code == kExitInputError);
}

TEST_CASE("cli converge writes csv and json") {
  const auto prefix = temp_path("run");
  const auto res = cli({"converge", "--family", "star_graph", "--sizes", "10:40:x2", "--mode", "class",
                        "--operator", "L", "--out", prefix, "--check"});
  CHECK(res.code == kExitOk);
  std::ifstream csv(prefix + ".csv"), json(prefix + ".json");
  REQUIRE(csv.good());
  REQUIRE(json.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "size,value,bound,slack");
  const auto j = nlohmann::json::parse(json);
  CHECK(j["rows"].size() == 3);
  CHECK(j["metadata"]["seed"] == 0);
}

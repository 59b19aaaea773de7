#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "masi/errors.hpp"
#include "masi/io.hpp"

using namespace masi;
using nlohmann::json;

TEST_CASE("matrix round trip") {
  const ComplexMatrix m = random_complex_matrix(3, 1, 0);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  const json j = json::parse(R"({"re": [[0.75, 0], [0, 0.25]]})");
  const ComplexMatrix d = matrix_from_json(j);
  CHECK(d.dim() == 2);
  CHECK(d(0, 0) == Complex{0.75, 0.0});
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"re": [[1, 0], [0]]})")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"im": [[1]]})")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"re": [["a"]]})")), Error);
}

TEST_CASE("state JSON") {
  const MaterializedState s =
      state_from_json(json::parse(R"({"dims": [2, 2], "re": [[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]]})"));
  CHECK(s.bipartite());
  CHECK(s.dims == std::vector<std::size_t>{2, 2});

  const MaterializedState spec =
      state_from_json(json::parse(R"({"kind": "werner", "dims": [2, 2], "param": 1.0})"));
  CHECK(std::abs(spec.state.purity() - 1.0) < 1e-12);

  const StateSpec prod = state_spec_from_json(
      json::parse(R"({"kind": "product", "parts": [{"kind": "pure_haar", "dims": [2], "seed": 3},
                                                   {"kind": "mixed_ginibre", "dims": [3], "seed": 4}]})"));
  CHECK(prod.kind == StateKind::Product);
  REQUIRE(prod.parts.size() == 2);
  CHECK(prod.parts[1].seed == 4);

  try {
    state_from_json(json::parse(R"({"dims": [2, 3], "re": [[1, 0], [0, 0]]})"));
    FAIL("expected InvalidSpec");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"re": [[0.6, 0], [0, 0.6]]})")), Error);
}

TEST_CASE("state files") {
  const auto path = std::filesystem::temp_directory_path() / "masi_io_test_state.json";
  {
    std::ofstream out(path);
    out << R"({"dims": [2], "re": [[0.75, 0], [0, 0.25]], "im": [[0, 0], [0, 0]]})";
  }
  const MaterializedState s = load_state_file(path.string());
  CHECK(s.state.dim() == 2);
  CHECK(s.state.eigenvalues()[0] == doctest::Approx(0.75));
  {
    std::ofstream out(path);
    out << "{not json";
  }
  try {
    load_state_file(path.string());
    FAIL("expected FileError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FileError);
  }
  std::filesystem::remove(path);
  try {
    load_state_file(path.string());
    FAIL("expected FileError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FileError);
  }
}

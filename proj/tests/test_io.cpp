#include <filesystem>
#include <fstream>
#include <variant>

#include "doctest.h"
#include "lclc/error.hpp"
#include "lclc/io.hpp"

using namespace lclc;

TEST_CASE("explicit weights") {
  auto d = parse_distribution(R"({"offset": -1, "weights": [1, 2, 1]})");
  REQUIRE(std::holds_alternative<LatticePMF>(d));
  const auto& x = std::get<LatticePMF>(d);
  CHECK(x.offset() == -1);
  CHECK(x.mass(0) == 0.5);
  CHECK(std::get<LatticePMF>(parse_distribution(R"({"weights": [3]})")).offset() == 0);
}

TEST_CASE("parametric laws") {
  auto d = parse_distribution(R"({"law": "symmetric_geometric", "lambda": 0.25})");
  REQUIRE(std::holds_alternative<ParametricLaw>(d));
  CHECK(std::get<ParametricLaw>(d).kind() == LawKind::SymmetricGeometric);
  CHECK(std::get<ParametricLaw>(d).lambda() == 0.25);
  CHECK(to_pmf(d).offset() < 0);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_distribution("not json"), Error);
  CHECK_THROWS_AS(parse_distribution(R"({"weights": "abc"})"), Error);
  CHECK_THROWS_AS(parse_distribution(R"({"law": "poisson", "lambda": 0.5})"), Error);
  CHECK_THROWS_AS(parse_distribution(R"({"law": "geometric"})"), Error);
  CHECK_THROWS_AS(parse_distribution(R"({"law": "geometric", "lambda": 2})"), Error);
  CHECK_THROWS_AS(parse_distribution(R"({"weights": [1, -1]})"), Error);
  CHECK_THROWS_AS(load_distribution("/nonexistent/lclc.json"), Error);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "lclc_io_test.json";
  std::ofstream(path) << R"({"weights": [0.5, 0.3, 0.2]})";
  auto d = load_distribution(path);
  CHECK(std::get<LatticePMF>(d).size() == 3);
  std::filesystem::remove(path);
}

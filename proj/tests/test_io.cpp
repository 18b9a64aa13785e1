#include "arrgr/corpus.hpp"
#include "arrgr/error.hpp"
#include "arrgr/io.hpp"
#include "doctest.h"

using namespace arrgr;

TEST_CASE("arrangement JSON") {
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    const auto j = io::arrangement_to_json(entry.arrangement);
    CHECK(io::arrangement_from_json(io::parse_json(j.dump())) == entry.arrangement);
  }
  const auto a = io::arrangement_from_json(io::parse_json(R"({"dim": 1, "forms": [{"linear": ["2/4"], "constant": -1}]})"));
  CHECK(a.size() == 1);
  CHECK(a.form(0).linear[0] == Rational(1, 2));
  CHECK(a.label(0) == "1");

  CHECK_THROWS_AS(io::arrangement_from_json(io::parse_json(R"({"forms": []})")), InputError);
  CHECK_THROWS_AS(io::arrangement_from_json(io::parse_json(R"({"dim": 1, "forms": [{"linear": [0.5]}]})")), InputError);
  CHECK_THROWS_AS(io::arrangement_from_json(io::parse_json(R"({"dim": 1, "forms": [{"linear": ["1/0"]}]})")), InputError);
  try {
    io::parse_json("{\n  \"dim\": 1,\n  \"forms\": [,]\n}");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("circuit JSON") {
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    const auto c = circuits_from_arrangement(entry.arrangement);
    const auto back = io::circuits_from_json(io::parse_json(io::circuits_to_json(c, entry.arrangement.is_central()).dump()));
    CHECK(back.ground() == c.ground());
    CHECK(back.circuits() == c.circuits());
  }
  // Negations are completed on load.
  const auto c = io::circuits_from_json(
      io::parse_json(R"({"ground": ["a","b","c"], "circuits": [{"plus": ["a","c"], "minus": ["b"]}]})"));
  CHECK(c.circuits().size() == 2);
  CHECK_THROWS_AS(io::circuits_from_json(io::parse_json(R"({"ground": ["a"], "circuits": [{"plus": ["z"], "minus": []}]})")),
                  InputError);
  CHECK_THROWS_AS(io::circuits_from_json(io::parse_json(R"({"ground": ["a","b"], "circuits": [{"plus": ["a"], "minus": []}]})")),
                  InputError);
}

TEST_CASE("group JSON") {
  const auto b3 = Arrangement::braid(3);
  const auto coords = io::group_from_json(io::parse_json(R"({"group": "Sn-coordinates"})"), b3);
  CHECK(coords.elements.size() == 6);

  const auto listed = io::group_from_json(io::parse_json(R"({"group": "Z2", "action": [
      {"perm": {}},
      {"perm": {"12": "12", "13": "23", "23": "13"}, "flips": {"12": -1}}]})"),
                                          b3);
  CHECK(listed.elements.size() == 2);
  CHECK(listed.classes().size() == 2);
  CHECK(listed.elements[1].action.flips[0] == -1);

  const auto by_matrix = io::group_from_json(io::parse_json(R"({"group": "S2", "action": [
      {"matrix": [[1,0,0],[0,1,0],[0,0,1]], "cycle_type": [1,1]},
      {"matrix": [[0,1,0],[1,0,0],[0,0,1]], "cycle_type": [2]}]})"),
                                             b3);
  CHECK(by_matrix.symmetric_degree() == 2);
  CHECK(by_matrix.elements[1].action == listed.elements[1].action);

  CHECK_THROWS_AS(io::group_from_json(io::parse_json(R"({"group": "bad", "action": [
      {"perm": {"12": "12", "13": "23", "23": "13"}, "flips": {"12": -1}}]})"),
                                      b3),
                  InputError);
  CHECK_THROWS_AS(io::group_from_json(io::parse_json(R"({"group": "bad", "action": [{"perm": {"12": "99"}}]})"), b3),
                  InputError);
}

TEST_CASE("algebra element JSON") {
  const auto b3 = Arrangement::braid(3);
  const CordovilAlgebra alg(MatroidData::from_arrangement(b3), HyperplaneOrdering::natural(3));
  const auto x = alg.multiply(alg.generator(0), alg.generator(1));
  const auto j = io::element_to_json(x, b3.labels());
  CHECK(j.dump() == R"({"basis":[["12","23"],["13","23"]],"coeffs":["1","-1"]})");
  CHECK(io::element_from_json(io::parse_json(j.dump()), b3.labels()) == x);
}

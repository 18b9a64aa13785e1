#include <random>
#include <set>

#include "arrgr/corpus.hpp"
#include "arrgr/error.hpp"
#include "arrgr/oriented_matroid.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace arrgr;
using arrgr::testing::random_ordering;

namespace {

SignedSet signed_set(const Arrangement& a, std::vector<std::string> plus, std::vector<std::string> minus) {
  SignedSet x;
  for (const auto& l : plus) x.plus |= singleton(a.index_of(l));
  for (const auto& l : minus) x.minus |= singleton(a.index_of(l));
  return x;
}

// Circuits straight from the definition: minimal supports with nonempty flat
// admitting an infeasible sign decomposition; signs are those decompositions.
std::vector<SignedSet> circuits_by_definition(const Arrangement& a) {
  std::vector<IndexSet> dependent;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << a.size()); ++s) {
    const auto support = static_cast<IndexSet>(s);
    if (!flat_nonempty(a, support)) continue;
    for (IndexSet plus = support;; plus = (plus - 1) & support) {
      if (!sign_condition_feasible(a, {plus, support & ~plus})) {
        dependent.push_back(support);
        break;
      }
      if (plus == 0) break;
    }
  }
  std::vector<SignedSet> out;
  for (IndexSet s : dependent) {
    const bool minimal = std::none_of(dependent.begin(), dependent.end(),
                                      [s](IndexSet t) { return t != s && is_subset(t, s); });
    if (!minimal) continue;
    for (IndexSet plus = s;; plus = (plus - 1) & s) {
      if (!sign_condition_feasible(a, {plus, s & ~plus})) out.push_back({plus, s & ~plus});
      if (plus == 0) break;
    }
  }
  return out;
}

std::vector<std::int64_t> grade_counts(const std::vector<std::vector<IndexSet>>& g) {
  std::vector<std::int64_t> out;
  for (const auto& grade : g) out.push_back(static_cast<std::int64_t>(grade.size()));
  return out;
}

}  // namespace

TEST_CASE("circuits of small arrangements") {
  const auto b3 = Arrangement::braid(3);
  const auto c = circuits_from_arrangement(b3);
  REQUIRE(c.circuits().size() == 2);
  CHECK(c.circuits()[0] == signed_set(b3, {"12", "23"}, {"13"}));
  CHECK(c.circuits()[1] == signed_set(b3, {"13"}, {"12", "23"}));
  CHECK(c.representatives().size() == 1);

  CHECK(circuits_from_arrangement(point_in_line()).circuits().empty());
  // Parallel hyperplanes have empty flat: no circuit.
  CHECK(circuits_from_arrangement(parallel_pair()).circuits().empty());

  const auto s3 = Arrangement::semiorder(3);
  const auto sc = circuits_from_arrangement(s3);
  for (const auto& x : sc.circuits()) {
    CHECK(x.support() != (singleton(s3.index_of("12")) | singleton(s3.index_of("21"))));
  }
}

TEST_CASE("circuits agree with the sign-infeasibility definition") {
  for (const auto& [name, a] : test_corpus()) {
    if (a.size() > 8) continue;
    CAPTURE(name);
    auto expected = circuits_by_definition(a);
    auto got = circuits_from_arrangement(a).circuits();
    auto key = [](const SignedSet& x) { return std::pair{x.plus, x.minus}; };
    std::sort(expected.begin(), expected.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    std::sort(got.begin(), got.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    CHECK(got == expected);
  }
}

TEST_CASE("circuit axioms") {
  const auto b4 = circuits_from_arrangement(Arrangement::braid(4));
  CHECK(validate_circuit_axioms(b4.circuits(), b4.ground()).ok());
  CHECK(b4.representatives().size() == 7);

  const std::vector<std::string> ground{"1", "2", "3"};
  const auto singleton_report = validate_circuit_axioms({{0b001, 0}, {0, 0b001}}, ground);
  CHECK(singleton_report.violates(1));

  const auto missing_negation = validate_circuit_axioms({{0b001, 0b010}}, ground);
  CHECK(missing_negation.violates(2));

  const auto nested = validate_circuit_axioms({{0b001, 0b010}, {0b010, 0b001}, {0b011, 0b100}, {0b100, 0b011}}, ground);
  CHECK(nested.violates(3));

  CHECK_THROWS_AS(CircuitSet::create(ground, {{0b001, 0b010}}, false), InputError);
  CHECK(CircuitSet::create(ground, {{0b001, 0b010}}, true).circuits().size() == 2);
  CHECK_THROWS_AS(CircuitSet::create(ground, {{0b011, 0b010}}), InputError);

  for (const auto& [name, a] : test_corpus()) {
    if (!a.is_central()) continue;
    CAPTURE(name);
    const auto c = circuits_from_arrangement(a);
    CHECK(validate_circuit_axioms(c.circuits(), c.ground()).ok());
  }
}

TEST_CASE("elimination axiom violation is reported") {
  // Two circuits sharing element 1 with opposite signs and nothing to
  // eliminate into.
  const std::vector<std::string> ground{"a", "b", "c"};
  std::vector<SignedSet> cs{{0b001, 0b010}, {0b010, 0b001}, {0b100, 0b001}, {0b001, 0b100}};
  const auto report = validate_circuit_axioms(cs, ground);
  CHECK(report.violates(4));
}

TEST_CASE("broken circuits") {
  const auto b3 = Arrangement::braid(3);
  const auto bc = broken_circuits(circuits_from_arrangement(b3), HyperplaneOrdering::natural(3));
  REQUIRE(bc.size() == 1);
  CHECK(bc[0] == (singleton(0) | singleton(1)));

  CHECK(broken_circuits(circuits_from_arrangement(point_in_line()), HyperplaneOrdering::natural(1)).empty());

  // Braid B4: 4 triangles and 3 four-cycles.
  const auto b4 = Arrangement::braid(4);
  const auto c4 = circuits_from_arrangement(b4);
  const auto bc4 = broken_circuits(c4, HyperplaneOrdering::natural(6));
  std::set<IndexSet> expected;
  for (IndexSet s : c4.supports()) {
    const auto idx = elements(s);
    expected.insert(s & ~singleton(idx.back()));
  }
  CHECK(bc4.size() == 7);
  CHECK(std::set<IndexSet>(bc4.begin(), bc4.end()) == expected);
}

TEST_CASE("NBC sets and Poincare polynomials") {
  const auto b3 = MatroidData::from_arrangement(Arrangement::braid(3));
  const auto nbc = nbc_sets(b3, HyperplaneOrdering::natural(3));
  CHECK(grade_counts(nbc) == std::vector<std::int64_t>{1, 3, 2});
  CHECK(nbc[2] == std::vector<IndexSet>{0b101, 0b110});
  CHECK(poincare_from_nbc(b3, HyperplaneOrdering::natural(3)).to_string() == "1 + 3t^2 + 2t^4");

  const auto pt = MatroidData::from_arrangement(point_in_line());
  CHECK(poincare_from_nbc(pt, HyperplaneOrdering::natural(1)).to_string() == "1 + t^2");

  const auto b4 = MatroidData::from_arrangement(Arrangement::braid(4));
  CHECK(poincare_from_nbc(b4, HyperplaneOrdering::natural(6)).to_string() == "1 + 6t^2 + 11t^4 + 6t^6");

  const auto s3 = MatroidData::from_arrangement(Arrangement::semiorder(3));
  CHECK(grade_counts(nbc_sets(s3, HyperplaneOrdering::natural(6))) == std::vector<std::int64_t>{1, 6, 12});
}

TEST_CASE("ordering from labels") {
  const auto b3 = Arrangement::braid(3);
  const auto ord = HyperplaneOrdering::from_labels("23,12,13", b3.labels());
  CHECK(ord.at(0) == 2);
  CHECK(ord.position(1) == 2);
  CHECK(ord.max_of(0b111) == 1);
  CHECK(ord.min_of(0b111) == 2);
  CHECK_THROWS_AS(HyperplaneOrdering::from_labels("23,12", b3.labels()), InputError);
  CHECK_THROWS_AS(HyperplaneOrdering::from_labels("23,12,99", b3.labels()), InputError);
  CHECK_THROWS_AS(HyperplaneOrdering::from_sequence({0, 0, 1}), InputError);
}

TEST_CASE("NBC properties over the corpus") {
  std::mt19937 rng(3);
  for (const auto& [name, a] : test_corpus()) {
    CAPTURE(name);
    const auto m = MatroidData::from_arrangement(a);
    const auto base = poincare_from_nbc(m, HyperplaneOrdering::natural(a.size()));
    CHECK(base.total() == static_cast<std::int64_t>(chambers(a).size()));
    for (int k = 0; k < 5; ++k) CHECK(poincare_from_nbc(m, random_ordering(a.size(), rng)) == base);

    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto del = MatroidData::from_arrangement(delete_hyperplane(a, i));
      const auto res = restrict_to(a, i).arrangement;
      const auto rm = MatroidData::from_arrangement(res);
      CHECK(base == poincare_from_nbc(del, HyperplaneOrdering::natural(a.size() - 1)) +
                        poincare_from_nbc(rm, HyperplaneOrdering::natural(res.size())).shifted());
    }

    const auto ca = cone(a);
    const auto cm = MatroidData::from_arrangement(ca);
    CHECK(poincare_from_nbc(cm, HyperplaneOrdering::natural(ca.size())) == base + base.shifted());

    // Cone circuits avoiding H0 are the circuits of the coned forms alone.
    const auto h0 = singleton(ca.size() - 1);
    std::vector<SignedSet> avoiding;
    for (const auto& x : cm.circuits().circuits()) {
      if ((x.support() & h0) == 0) avoiding.push_back(x);
    }
    const auto central = circuits_from_arrangement(delete_hyperplane(ca, ca.size() - 1));
    CHECK(avoiding == central.circuits());
  }
}

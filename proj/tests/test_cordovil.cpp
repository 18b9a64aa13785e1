#include <random>
#include <set>

#include "arrgr/cordovil.hpp"
#include "arrgr/corpus.hpp"
#include "arrgr/error.hpp"
#include "arrgr/oracles.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace arrgr;
using arrgr::testing::counts;
using arrgr::testing::random_ordering;

namespace {

CordovilAlgebra algebra_of(const Arrangement& a) {
  return CordovilAlgebra(MatroidData::from_arrangement(a), HyperplaneOrdering::natural(a.size()));
}

MultilinearPoly mono(const Arrangement& a, std::vector<std::string> labels) {
  IndexSet s = 0;
  for (const auto& l : labels) s |= singleton(a.index_of(l));
  return MultilinearPoly::monomial(s);
}

AlgebraElement random_element(const CordovilAlgebra& alg, std::mt19937& rng) {
  MultilinearPoly p;
  const IndexSet all = full_set(alg.size());
  for (int t = 0; t < 3; ++t) {
    const IndexSet s = static_cast<IndexSet>(rng()) & all;
    p.add_term(s, static_cast<long>(rng() % 7) - 3);
  }
  return alg.straighten(p);
}

}  // namespace

TEST_CASE("dtilde") {
  const auto b3 = Arrangement::braid(3);
  const auto ord = HyperplaneOrdering::natural(3);
  const SignedSet x{singleton(0) | singleton(2), singleton(1)};
  CHECK(dtilde(x, ord).to_string(b3.labels(), "x") == "x13*x23 - x12*x23 + x12*x13");
  CHECK(dtilde(x.negated(), ord) == dtilde(x, ord));

  const SignedSet pair{singleton(0), singleton(1)};
  CHECK(dtilde(pair, HyperplaneOrdering::natural(2)) ==
        MultilinearPoly::monomial(singleton(1)) - MultilinearPoly::monomial(singleton(0)));
}

TEST_CASE("straightening examples") {
  const auto b3 = Arrangement::braid(3);
  const auto alg = algebra_of(b3);
  CHECK(alg.straighten(mono(b3, {"12", "23"})).coords == mono(b3, {"12", "23"}));
  CHECK(alg.straighten(mono(b3, {"12", "13"})).coords == mono(b3, {"12", "23"}) - mono(b3, {"13", "23"}));
  CHECK(alg.straighten(mono(b3, {"12", "13", "23"})).coords.terms().empty());
  CHECK(alg.multiply(alg.generator(0), alg.generator(1)) == alg.straighten(mono(b3, {"12", "13"})));

  const auto pp = parallel_pair();
  const auto palg = algebra_of(pp);
  CHECK(palg.straighten(MultilinearPoly::monomial(full_set(2))).coords.terms().empty());
  CHECK_THROWS_AS(palg.straighten(MultilinearPoly::monomial(singleton(3))), InputError);
}

TEST_CASE("straightening agrees with the quotient oracle") {
  for (const auto& entry : test_corpus()) {
    const auto& a = entry.arrangement;
    if (a.size() > 8) continue;
    CAPTURE(entry.name);
    const auto m = MatroidData::from_arrangement(a);
    const auto ord = HyperplaneOrdering::natural(a.size());
    const CordovilAlgebra alg(m, ord);
    const auto ideal = oracles::cordovil_ideal(m, ord);

    const auto nbc = nbc_sets(m, ord);
    std::set<IndexSet> nbc_all;
    for (const auto& g : nbc) nbc_all.insert(g.begin(), g.end());

    for (IndexSet s = 0; s <= full_set(a.size()); ++s) {
      const auto p = MultilinearPoly::monomial(s);
      const auto image = alg.straighten(p);
      for (const auto& [t, c] : image.coords.terms()) CHECK(nbc_all.count(t) == 1);
      CHECK(oracles::congruent_mod_ideal(ideal, p, image.coords, a.size()));
      CHECK(alg.straighten(image.coords) == image);
    }
    CHECK(oracles::cordovil_quotient_dims(m, ord) == alg.hilbert_series());
  }
}

TEST_CASE("straightening span dimensions") {
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    const auto& a = entry.arrangement;
    const auto alg = algebra_of(a);
    const auto dims = alg.straightening_span_dims();
    const auto h = counts(alg.hilbert_series());
    REQUIRE(dims.size() == h.size());
    std::size_t total = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      CHECK(static_cast<std::int64_t>(dims[k]) == h[k]);
      total += dims[k];
    }
    CHECK(total == chambers(a).size());
  }
}

TEST_CASE("Hilbert series") {
  CHECK(algebra_of(Arrangement::braid(4)).hilbert_series().to_string() == "1 + 6t^2 + 11t^4 + 6t^6");
  CHECK(algebra_of(point_in_line()).hilbert_series().to_string() == "1 + t^2");
  CHECK(algebra_of(Arrangement::semiorder(3)).hilbert_series().to_string() == "1 + 6t^2 + 12t^4");

  for (const auto& entry : test_corpus()) {
    const auto& a = entry.arrangement;
    if (a.size() < 2) continue;
    CAPTURE(entry.name);
    const auto h = algebra_of(a).hilbert_series();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto del = algebra_of(delete_hyperplane(a, i)).hilbert_series();
      const auto res = algebra_of(restrict_to(a, i).arrangement).hilbert_series();
      CHECK(h == del + res.shifted());
    }
  }
}

TEST_CASE("multiplication") {
  std::mt19937 rng(7);
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    const auto alg = algebra_of(entry.arrangement);
    const std::size_t top = counts(alg.hilbert_series()).size() - 1;
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_element(alg, rng);
      const auto b = random_element(alg, rng);
      const auto c = random_element(alg, rng);
      CHECK(alg.multiply(alg.unit(), a) == a);
      CHECK(alg.multiply(a, b) == alg.multiply(b, a));
      CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
    }
    // Any product of more than `top` generators vanishes.
    for (int trial = 0; trial < 20; ++trial) {
      auto prod = alg.unit();
      for (std::size_t k = 0; k <= top; ++k) prod = alg.multiply(prod, alg.generator(rng() % alg.size()));
      CHECK(prod.coords.terms().empty());
    }
  }
  const auto b3 = algebra_of(Arrangement::braid(3));
  CHECK(b3.multiply(b3.generator(1), b3.generator(1)).coords.terms().empty());
}

TEST_CASE("ordering independence of the Hilbert series") {
  std::mt19937 rng(11);
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    const auto m = MatroidData::from_arrangement(entry.arrangement);
    const auto h = CordovilAlgebra(m, HyperplaneOrdering::natural(m.size())).hilbert_series();
    for (int t = 0; t < 5; ++t) {
      const CordovilAlgebra alg(m, random_ordering(m.size(), rng));
      CHECK(alg.hilbert_series() == h);
      CHECK(alg.straightening_span_dims().size() == counts(h).size());
    }
  }
}

TEST_CASE("B families") {
  const auto pp = MatroidData::from_arrangement(parallel_pair());
  const auto prel = b_relation_families(pp);
  REQUIRE(of_family(prel, 2).size() == 1);
  CHECK(of_family(prel, 2)[0].poly == Poly::generator(2, 0) * Poly::generator(2, 1));
  CHECK(of_family(prel, 1).size() == 2);

  const auto pt = b_relation_families(MatroidData::from_arrangement(point_in_line()));
  CHECK(pt.size() == 1);
  CHECK(of_family(pt, 2).empty());
  CHECK(of_family(pt, 3).empty());

  const auto b3 = Arrangement::braid(3);
  const auto m = MatroidData::from_arrangement(b3);
  const auto f3 = of_family(b_relation_families(m), 3);
  REQUIRE(f3.size() == 2);
  const SignedSet x{singleton(0) | singleton(2), singleton(1)};
  const auto d = Poly::from_multilinear(3, dtilde(x, HyperplaneOrdering::natural(3)));
  for (const auto& r : f3) {
    // The double sum for X is -dtilde(X); for -X it is dtilde(X).
    CHECK(r.poly == (r.source == x ? -d : d));
  }
}

TEST_CASE("leading forms") {
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    const auto m = MatroidData::from_arrangement(entry.arrangement);
    const auto report = leading_form_check(m, HyperplaneOrdering::natural(m.size()));
    CHECK(report.ok());
    CHECK(report.entries.size() == m.circuits().circuits().size());
    for (const auto& e : report.entries) {
      for (const auto& f : report.entries) {
        if (f.circuit == e.circuit.negated()) CHECK(f.sign == -e.sign);
      }
    }
  }
  const auto b3 = MatroidData::from_arrangement(Arrangement::braid(3));
  const auto report = leading_form_check(b3, HyperplaneOrdering::natural(3));
  const SignedSet x{singleton(0) | singleton(2), singleton(1)};
  for (const auto& e : report.entries) CHECK(e.sign == (e.circuit == x ? 1 : -1));
  CHECK(leading_form_check(MatroidData::from_arrangement(Arrangement::braid(4)), HyperplaneOrdering::natural(6))
            .entries.size() == 14);
}

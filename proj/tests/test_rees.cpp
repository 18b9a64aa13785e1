#include "arrgr/corpus.hpp"
#include "arrgr/error.hpp"
#include "arrgr/rees.hpp"
#include "doctest.h"

using namespace arrgr;

namespace {

std::vector<std::size_t> partial_sums(const ReesHilbertReport& r) {
  std::vector<std::size_t> out;
  for (const auto& row : r.rows) out.push_back(row.filtration_dim);
  return out;
}

}  // namespace

TEST_CASE("Rees families of small arrangements") {
  const auto pt = point_in_line();
  const auto rels = rees_relation_families(pt);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].poly.to_string(pt.labels()) == "e1^2 - u*e1");
  CHECK(specialize(rels[0], 0).poly.to_string(pt.labels()) == "e1^2");
  CHECK(specialize(rels[0], 1).poly.to_string(pt.labels()) == "e1^2 - e1");
  CHECK_THROWS_AS(specialize(rels[0], 2), InputError);

  const auto pp = parallel_pair();
  const auto f2 = of_family(rees_relation_families(pp), 2);
  REQUIRE(f2.size() == 1);
  const Poly e1 = Poly::generator(2, 0), e2 = Poly::generator(2, 1), u = Poly::param_u(2);
  CHECK(f2[0].poly == e2 * (e1 - u));

  const auto b3 = Arrangement::braid(3);
  const Poly a = Poly::generator(3, 0), b = Poly::generator(3, 1), c = Poly::generator(3, 2), w = Poly::param_u(3);
  const SignedSet x{singleton(0) | singleton(2), singleton(1)};
  bool found = false;
  for (const auto& r : of_family(rees_relation_families(b3), 3)) {
    if (r.source != x) continue;
    found = true;
    const Poly inner = a * c * (b - w) - (a - w) * (c - w) * b;
    CHECK(r.poly * w == inner);
    CHECK(r.poly.is_homogeneous());
  }
  CHECK(found);
}

TEST_CASE("specializations") {
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    const auto report = compare_specializations(entry.arrangement);
    CHECK(report.ok());
    CHECK(report.missing_u0.empty());
    CHECK(report.mismatched_u1.empty());
    CHECK(report.inhomogeneous == 0);
    CHECK(report.matched_u1 == report.relations);
    for (const auto& [rel, vanishes] : report.extra_u0) {
      CHECK(rel.family == 2);
      CHECK(vanishes);
    }
  }
  // Only central circuit supports show up as extra monomials.
  CHECK(compare_specializations(parallel_pair()).extra_u0.empty());
  CHECK(compare_specializations(Arrangement::braid(3)).extra_u0.size() == 2);
}

TEST_CASE("Rees Hilbert table") {
  CHECK(partial_sums(rees_hilbert_check(point_in_line())) == std::vector<std::size_t>{1, 2});
  CHECK(partial_sums(rees_hilbert_check(Arrangement::braid(4))) == std::vector<std::size_t>{1, 7, 18, 24});
  CHECK(partial_sums(rees_hilbert_check(Arrangement::semiorder(3))) == std::vector<std::size_t>{1, 7, 19});
  for (const auto& entry : test_corpus()) {
    CAPTURE(entry.name);
    CHECK(rees_hilbert_check(entry.arrangement).ok());
  }
}

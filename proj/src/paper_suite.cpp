#include "arrgr/paper_suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "arrgr/cordovil.hpp"
#include "arrgr/corpus.hpp"
#include "arrgr/oracles.hpp"
#include "arrgr/rees.hpp"
#include "arrgr/symmetry.hpp"
#include "arrgr/vg_ring.hpp"

namespace arrgr {

namespace {

using Table = std::map<Partition, long>;

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

std::string format_table(const Table& t) {
  std::string out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [lambda, m] = *it;
    if (!out.empty()) out += " + ";
    out += (m == 1 ? "" : std::to_string(m)) + lambda.to_string();
  }
  return out.empty() ? "0" : out;
}

// Collects failures; the first one becomes the detail line.
struct Checker {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  CriterionResult result(std::string summary) const {
    CriterionResult r;
    r.passed = failures.empty();
    r.detail = failures.empty() ? summary + " (" + std::to_string(checks) + " checks)"
                                : failures.front() + " [" + std::to_string(failures.size()) + " failures]";
    return r;
  }
};

std::vector<Table> graded_tables(const Arrangement& a, CharacterVector& chamber) {
  const VgRing ring(a);
  const auto g = graded_character(ring, coordinate_permutation_group(a));
  std::vector<Table> out;
  for (const auto& layer : g.layers) out.push_back(decompose(g.as_symmetric(layer), static_cast<int>(a.dim())));
  chamber = g.as_symmetric(g.chamber_character);
  return out;
}

CriterionResult braid4_table() {
  Checker c;
  CharacterVector chamber;
  const auto tables = graded_tables(Arrangement::braid(4), chamber);
  const std::vector<Table> expected{
      {{P({4}), 1}},
      {{P({3, 1}), 1}, {P({2, 1, 1}), 1}},
      {{P({3, 1}), 1}, {P({2, 1, 1}), 1}, {P({2, 2}), 2}, {P({1, 1, 1, 1}), 1}},
      {{P({3, 1}), 1}, {P({2, 1, 1}), 1}},
  };
  c.expect(tables.size() == expected.size(), "braid(4) has " + std::to_string(tables.size()) + " grades");
  for (std::size_t k = 0; k < std::min(tables.size(), expected.size()); ++k) {
    c.expect(tables[k] == expected[k], "grade " + std::to_string(k) + ": " + format_table(tables[k]));
  }
  c.expect(chamber == regular_character(4), "chamber character is not regular");
  std::string summary;
  for (std::size_t k = 0; k < tables.size(); ++k) summary += (k ? "; " : "") + format_table(tables[k]);
  return c.result(summary);
}

CriterionResult semiorder3_table() {
  Checker c;
  CharacterVector chamber;
  const auto tables = graded_tables(Arrangement::semiorder(3), chamber);
  const Partition tau = P({3}), sigma = P({1, 1, 1}), rho = P({2, 1});
  const std::vector<Table> expected{{{tau, 1}}, {{tau, 1}, {sigma, 1}, {rho, 2}}, {{tau, 3}, {sigma, 1}, {rho, 4}}};
  const Table total = decompose(chamber, 3);
  c.expect(total == Table{{tau, 5}, {sigma, 2}, {rho, 6}}, "chamber character: " + format_table(total));
  c.expect(tables.size() == expected.size(), "semiorder(3) has " + std::to_string(tables.size()) + " grades");
  for (std::size_t k = 0; k < std::min(tables.size(), expected.size()); ++k) {
    c.expect(tables[k] == expected[k], "grade " + std::to_string(k) + ": " + format_table(tables[k]));
  }
  std::string summary = "chambers " + format_table(total) + "; grades";
  for (std::size_t k = 0; k < tables.size(); ++k) summary += (k ? "; " : " ") + format_table(tables[k]);
  return c.result(summary);
}

CriterionResult dimension_identity() {
  Checker c;
  const auto corpus = test_corpus();
  for (const auto& [name, a] : corpus) {
    const VgRing ring(a);
    const auto profile = ring.filtration_profile();
    const auto m = MatroidData::from_arrangement(a);
    const CordovilAlgebra alg(m, HyperplaneOrdering::natural(a.size()));
    const auto nbc = alg.hilbert_series().coeffs;
    const auto span = alg.straightening_span_dims();
    std::size_t total = 0;
    for (std::size_t k = 0; k < profile.gr.size(); ++k) {
      const std::int64_t want = k < nbc.size() ? nbc[k] : 0;
      const std::int64_t got_span = k < span.size() ? static_cast<std::int64_t>(span[k]) : 0;
      c.expect(static_cast<std::int64_t>(profile.gr[k]) == want && got_span == want,
               name + ": grade " + std::to_string(k) + " gr=" + std::to_string(profile.gr[k]) +
                   " nbc=" + std::to_string(want) + " span=" + std::to_string(got_span));
      total += profile.gr[k];
    }
    c.expect(total == profile.chambers, name + ": gr total differs from chamber count");
  }
  return c.result(std::to_string(corpus.size()) + " arrangements");
}

CriterionResult presentation_completeness() {
  Checker c;
  const auto corpus = test_corpus();
  for (const auto& [name, a] : corpus) {
    const VgRing ring(a);
    const auto dim = ring.presentation_dimension(PresentationFamilies::OneAndTwo);
    c.expect(dim == ring.num_chambers(), name + ": presentation dimension " + std::to_string(dim) + " vs " +
                                             std::to_string(ring.num_chambers()) + " chambers");
    if (a.is_central()) {
      const auto dim13 = ring.presentation_dimension(PresentationFamilies::OneAndThree);
      c.expect(dim13 == ring.num_chambers(), name + ": families (1)+(3) give " + std::to_string(dim13));
    }
  }
  return c.result(std::to_string(corpus.size()) + " arrangements");
}

GradedCounts poin(const Arrangement& a) {
  return poincare_from_nbc(MatroidData::from_arrangement(a), HyperplaneOrdering::natural(a.size()));
}

CriterionResult recursions() {
  Checker c;
  std::size_t identities = 0;
  for (const auto& [name, a] : test_corpus()) {
    const auto p = poin(a);
    if (a.size() >= 2) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto rhs = poin(delete_hyperplane(a, i)) + poin(restrict_to(a, i).arrangement).shifted();
        c.expect(p == rhs, name + ": recursion fails at " + a.label(i) + ": " + p.to_string() + " vs " + rhs.to_string());
        ++identities;
      }
    }
    const auto coned = poin(cone(a));
    c.expect(coned == p + p.shifted(), name + ": cone gives " + coned.to_string());
    ++identities;
  }
  return c.result(std::to_string(identities) + " polynomial identities");
}

CriterionResult rees_specializations() {
  Checker c;
  std::size_t relations = 0, extras = 0;
  for (const auto& [name, a] : test_corpus()) {
    const auto report = compare_specializations(a);
    relations += report.relations;
    extras += report.extra_u0.size();
    c.expect(report.missing_u0.empty(), name + ": " + std::to_string(report.missing_u0.size()) + " B generators not reached at u=0");
    c.expect(report.mismatched_u1.empty(), name + ": " + std::to_string(report.mismatched_u1.size()) + " mismatches at u=1");
    c.expect(report.inhomogeneous == 0, name + ": inhomogeneous relations");
    for (const auto& [rel, vanishes] : report.extra_u0) {
      c.expect(vanishes, name + ": u=0 image of " + format_source(rel, a.labels()) + " is nonzero in B");
    }
    const auto hilbert = rees_hilbert_check(a);
    c.expect(hilbert.ok(), name + ": Rees partial sums differ from filtration dims");
  }
  return c.result(std::to_string(relations) + " relations, " + std::to_string(extras) +
                  " u=0 circuit monomials reduce to 0");
}

CriterionResult leading_forms() {
  Checker c;
  std::size_t circuits = 0;
  for (const auto& [name, a] : test_corpus()) {
    const auto report = leading_form_check(MatroidData::from_arrangement(a), HyperplaneOrdering::natural(a.size()));
    circuits += report.entries.size();
    for (const auto& e : report.entries) {
      c.expect(e.sign != 0, name + ": leading form of " + e.leading.to_string(a.labels(), "e") + " is not +-dtilde");
    }
  }
  return c.result(std::to_string(circuits) + " signed circuits");
}

CriterionResult circuit_axioms() {
  Checker c;
  for (const auto& [name, a] : test_corpus()) {
    if (!a.is_central()) continue;
    const auto cs = circuits_from_arrangement(a);
    c.expect(validate_circuit_axioms(cs.circuits(), cs.ground()).ok(), name + ": axioms fail");
  }
  const auto b4 = circuits_from_arrangement(Arrangement::braid(4));
  auto dropped = b4.circuits();
  dropped.pop_back();
  c.expect(validate_circuit_axioms(dropped, b4.ground()).violates(2), "dropped negation not flagged");
  auto with_singleton = b4.circuits();
  with_singleton.push_back({singleton(0), 0});
  with_singleton.push_back({0, singleton(0)});
  c.expect(validate_circuit_axioms(with_singleton, b4.ground()).violates(1) ||
               validate_circuit_axioms(with_singleton, b4.ground()).violates(3),
           "singleton circuit not flagged");
  return c.result("central corpus members and two negative controls");
}

HyperplaneOrdering shuffled(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  return HyperplaneOrdering::from_sequence(std::move(seq));
}

CriterionResult property_suites() {
  Checker c;
  std::mt19937 rng(20240611);
  for (const auto& [name, a] : test_corpus()) {
    const auto m = MatroidData::from_arrangement(a);
    const auto natural = HyperplaneOrdering::natural(a.size());
    const auto base = poincare_from_nbc(m, natural);
    for (int t = 0; t < 5; ++t) {
      c.expect(poincare_from_nbc(m, shuffled(a.size(), rng)) == base, name + ": NBC counts depend on the ordering");
    }

    if (a.size() <= 8) {
      const auto ord = shuffled(a.size(), rng);
      const CordovilAlgebra alg(m, ord);
      const auto ideal = oracles::cordovil_ideal(m, ord);
      for (IndexSet s = 0; s <= full_set(a.size()); ++s) {
        const auto p = MultilinearPoly::monomial(s);
        c.expect(oracles::congruent_mod_ideal(ideal, p, alg.straighten(p).coords, a.size()),
                 name + ": straightening of " + p.to_string(a.labels(), "x") + " leaves its coset");
      }
      c.expect(oracles::cordovil_quotient_dims(m, ord) == alg.hilbert_series(), name + ": quotient dims differ");
    }

    const CordovilAlgebra alg(m, natural);
    auto random_element = [&] {
      MultilinearPoly p;
      for (int k = 0; k < 3; ++k) p.add_term(static_cast<IndexSet>(rng()) & full_set(a.size()), static_cast<long>(rng() % 7) - 3);
      return alg.straighten(p);
    };
    for (int t = 0; t < 200; ++t) {
      const auto x = random_element(), y = random_element(), z = random_element();
      c.expect(alg.multiply(x, y) == alg.multiply(y, x), name + ": multiplication not commutative");
      c.expect(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)),
               name + ": multiplication not associative");
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        c.expect(mn_character(lambda, mu) == oracles::irreducible_by_kostka(lambda, mu),
                 "character " + lambda.to_string() + " at " + mu.to_string());
      }
    }
  }
  return c.result("orderings, straightening oracle, multiplication, characters");
}

}  // namespace

std::vector<Criterion> paper_criteria() {
  return {
      {1, "braid(4) graded S4 representation table", 5, braid4_table},
      {2, "semiorder(3) graded S3 representation table", 2, semiorder3_table},
      {3, "filtration, NBC and straightening dimensions agree", 60, dimension_identity},
      {4, "presentation dimension equals chamber count", 60, presentation_completeness},
      {5, "deletion-restriction and cone recursions", 30, recursions},
      {6, "Rees specializations and Hilbert table", 10, rees_specializations},
      {7, "leading forms of family-(3) relations", 10, leading_forms},
      {8, "circuit axioms and negative controls", 10, circuit_axioms},
      {9, "randomized property suites", 120, property_suites},
  };
}

CriterionResult run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.id = c.id;
  r.title = c.title;
  r.limit_seconds = c.limit_seconds;
  return r;
}

}  // namespace arrgr

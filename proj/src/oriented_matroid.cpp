#include "arrgr/oriented_matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "arrgr/error.hpp"

namespace arrgr {

// ---------------------------------------------------------------------------
// HyperplaneOrdering

HyperplaneOrdering HyperplaneOrdering::natural(std::size_t n) {
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  return from_sequence(std::move(seq));
}

HyperplaneOrdering HyperplaneOrdering::from_sequence(std::vector<std::size_t> sequence) {
  HyperplaneOrdering o;
  o.position_.assign(sequence.size(), sequence.size());
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const auto e = sequence[k];
    if (e >= sequence.size() || o.position_[e] != sequence.size()) {
      throw InputError("ordering is not a permutation of the ground set");
    }
    o.position_[e] = k;
  }
  o.sequence_ = std::move(sequence);
  return o;
}

HyperplaneOrdering HyperplaneOrdering::from_labels(const std::string& spec, const std::vector<std::string>& labels) {
  std::vector<std::size_t> seq;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto it = std::find(labels.begin(), labels.end(), item);
    if (it == labels.end()) throw InputError("ordering names unknown label '" + item + "'");
    seq.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  if (seq.size() != labels.size()) throw InputError("ordering must list every hyperplane exactly once");
  return from_sequence(std::move(seq));
}

std::size_t HyperplaneOrdering::max_of(IndexSet s) const {
  if (s == 0) throw InputError("max_of empty set");
  return at(static_cast<std::size_t>(31 - std::countl_zero(to_positions(s))));
}

std::size_t HyperplaneOrdering::min_of(IndexSet s) const {
  if (s == 0) throw InputError("min_of empty set");
  return at(static_cast<std::size_t>(std::countr_zero(to_positions(s))));
}

IndexSet HyperplaneOrdering::to_positions(IndexSet s) const {
  IndexSet p = 0;
  for (auto e : elements(s)) p |= singleton(position(e));
  return p;
}

IndexSet HyperplaneOrdering::from_positions(IndexSet p) const {
  IndexSet s = 0;
  for (auto k : elements(p)) s |= singleton(at(k));
  return s;
}

// ---------------------------------------------------------------------------
// Axioms

bool AxiomReport::violates(int axiom) const {
  return std::any_of(violations.begin(), violations.end(), [axiom](const AxiomViolation& v) { return v.axiom == axiom; });
}

namespace {

std::string format_signed(const SignedSet& x, const std::vector<std::string>& ground) {
  return "(" + format_set(x.plus, ground) + "," + format_set(x.minus, ground) + ")";
}

bool contains_signed(const std::vector<SignedSet>& cs, const SignedSet& x) {
  return std::find(cs.begin(), cs.end(), x) != cs.end();
}

}  // namespace

AxiomReport validate_circuit_axioms(const std::vector<SignedSet>& circuits, const std::vector<std::string>& ground) {
  AxiomReport report;
  for (const auto& x : circuits) {
    if (popcount(x.support()) <= 1) {
      report.violations.push_back({1, format_signed(x, ground) + " has support of size " +
                                          std::to_string(popcount(x.support()))});
    }
  }
  for (const auto& x : circuits) {
    if (!contains_signed(circuits, x.negated())) {
      report.violations.push_back({2, format_signed(x, ground) + " present but its negation is missing"});
    }
  }
  for (const auto& x : circuits) {
    for (const auto& y : circuits) {
      if (is_subset(x.support(), y.support()) && x != y && x != y.negated()) {
        report.violations.push_back(
            {3, "support of " + format_signed(x, ground) + " lies inside support of " + format_signed(y, ground)});
      }
    }
  }
  for (const auto& x : circuits) {
    for (const auto& y : circuits) {
      if (x == y.negated()) continue;
      for (auto e : elements(x.plus & y.minus)) {
        const IndexSet zp = (x.plus | y.plus) & ~singleton(e);
        const IndexSet zm = (x.minus | y.minus) & ~singleton(e);
        const bool eliminated = std::any_of(circuits.begin(), circuits.end(), [&](const SignedSet& z) {
          return is_subset(z.plus, zp) && is_subset(z.minus, zm);
        });
        if (!eliminated) {
          report.violations.push_back({4, "no elimination of " + ground.at(e) + " from " + format_signed(x, ground) +
                                              " and " + format_signed(y, ground)});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// CircuitSet

namespace {

SignedSet positive_on_min(const SignedSet& x) {
  const auto low = static_cast<std::size_t>(std::countr_zero(x.support()));
  return contains(x.plus, low) ? x : x.negated();
}

void sort_circuits(std::vector<SignedSet>& cs) {
  std::sort(cs.begin(), cs.end(), [](const SignedSet& a, const SignedSet& b) {
    if (a.support() != b.support()) return graded_lex_less(a.support(), b.support());
    const bool ra = positive_on_min(a) == a, rb = positive_on_min(b) == b;
    return ra && !rb;
  });
}

}  // namespace

namespace {

std::vector<SignedSet> normalize_input(const std::vector<std::string>& ground, const std::vector<SignedSet>& circuits,
                                       bool complete_negations) {
  if (ground.size() > kMaxElements) throw ResourceError("ground set larger than 31 elements");
  const IndexSet all = full_set(ground.size());
  std::vector<SignedSet> unique;
  for (const auto& x : circuits) {
    if ((x.plus & x.minus) != 0) throw InputError("signed set has an element in both X+ and X-");
    if (!is_subset(x.support(), all)) throw InputError("signed set outside ground set");
    if (!contains_signed(unique, x)) unique.push_back(x);
    if (complete_negations && !contains_signed(unique, x.negated())) unique.push_back(x.negated());
  }
  return unique;
}

}  // namespace

CircuitSet CircuitSet::create_unvalidated(std::vector<std::string> ground, std::vector<SignedSet> circuits) {
  auto unique = normalize_input(ground, circuits, true);
  sort_circuits(unique);
  return CircuitSet(std::move(ground), std::move(unique));
}

CircuitSet CircuitSet::create(std::vector<std::string> ground, std::vector<SignedSet> circuits,
                              bool complete_negations) {
  auto unique = normalize_input(ground, circuits, complete_negations);
  const auto report = validate_circuit_axioms(unique, ground);
  if (!report.ok()) {
    throw InputError("circuit axiom (" + std::to_string(report.violations.front().axiom) +
                     ") violated: " + report.violations.front().witness);
  }
  sort_circuits(unique);
  return CircuitSet(std::move(ground), std::move(unique));
}

std::vector<SignedSet> CircuitSet::representatives() const {
  std::vector<SignedSet> out;
  for (const auto& x : circuits_) {
    if (positive_on_min(x) == x) out.push_back(x);
  }
  return out;
}

std::vector<IndexSet> CircuitSet::supports() const {
  std::vector<IndexSet> out;
  for (const auto& x : representatives()) out.push_back(x.support());
  return out;
}

namespace {

std::vector<bool> compute_flats(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<bool> nonempty(std::size_t{1} << n, true);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const auto set = static_cast<IndexSet>(s);
    bool sub_empty = false;
    for (auto i : elements(set)) {
      if (!nonempty[set & ~singleton(i)]) {
        sub_empty = true;
        break;
      }
    }
    nonempty[set] = !sub_empty && flat_nonempty(a, set);
  }
  return nonempty;
}

CircuitSet circuits_with_flats(const Arrangement& a, const std::vector<bool>& flats) {
  const std::size_t n = a.size();
  std::vector<IndexSet> candidates;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const auto set = static_cast<IndexSet>(s);
    const int k = popcount(set);
    if (k >= 2 && static_cast<std::size_t>(k) <= a.dim() + 2 && flats[set]) candidates.push_back(set);
  }
  std::sort(candidates.begin(), candidates.end(), graded_lex_less);
  std::vector<SignedSet> circuits;
  std::vector<IndexSet> found;
  for (IndexSet s : candidates) {
    if (std::any_of(found.begin(), found.end(), [s](IndexSet c) { return is_subset(c, s); })) continue;
    const auto rk = rank_and_kernel(homogenized_matrix(a, s));
    if (rk.kernel_basis.size() != 1) continue;
    const auto& lambda = rk.kernel_basis.front();
    if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x == 0; })) continue;
    SignedSet x;
    const auto idx = elements(s);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      (lambda[k] > 0 ? x.plus : x.minus) |= singleton(idx[k]);
    }
    found.push_back(s);
    circuits.push_back(positive_on_min(x));
  }
  if (a.is_central()) return CircuitSet::create(a.labels(), std::move(circuits), true);
  return CircuitSet::create_unvalidated(a.labels(), std::move(circuits));
}

}  // namespace

CircuitSet circuits_from_arrangement(const Arrangement& a) { return circuits_with_flats(a, compute_flats(a)); }

// ---------------------------------------------------------------------------
// MatroidData

MatroidData MatroidData::from_arrangement(const Arrangement& a) {
  auto flats = compute_flats(a);
  auto c = circuits_with_flats(a, flats);
  return MatroidData(std::move(c), std::move(flats));
}

MatroidData MatroidData::from_circuits(CircuitSet c) {
  std::vector<bool> flats(std::size_t{1} << c.size(), true);
  return MatroidData(std::move(c), std::move(flats));
}

std::vector<IndexSet> MatroidData::minimal_empty_flats() const {
  std::vector<IndexSet> out;
  for (std::size_t s = 1; s < flat_nonempty_.size(); ++s) {
    const auto set = static_cast<IndexSet>(s);
    if (flat_nonempty_[set]) continue;
    const auto idx = elements(set);
    const bool minimal = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) {
      return flat_nonempty_[set & ~singleton(i)];
    });
    if (minimal) out.push_back(set);
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Broken circuits and NBC

std::vector<IndexSet> broken_circuits(const CircuitSet& c, const HyperplaneOrdering& ord) {
  if (ord.size() != c.size()) throw InputError("ordering size does not match ground set");
  std::set<IndexSet, GradedLexLess> out;
  for (IndexSet s : c.supports()) out.insert(s & ~singleton(ord.max_of(s)));
  return {out.begin(), out.end()};
}

std::vector<std::vector<IndexSet>> nbc_sets(const MatroidData& m, const HyperplaneOrdering& ord) {
  const auto broken = broken_circuits(m.circuits(), ord);
  const std::size_t n = m.size();
  std::vector<std::vector<IndexSet>> graded(n + 1);
  std::vector<IndexSet> all;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) all.push_back(static_cast<IndexSet>(s));
  std::sort(all.begin(), all.end(), graded_lex_less);
  for (IndexSet s : all) {
    if (!m.flat_nonempty(s)) continue;
    if (std::any_of(broken.begin(), broken.end(), [s](IndexSet b) { return is_subset(b, s); })) continue;
    graded[static_cast<std::size_t>(popcount(s))].push_back(s);
  }
  while (graded.size() > 1 && graded.back().empty()) graded.pop_back();
  return graded;
}

GradedCounts poincare_from_nbc(const MatroidData& m, const HyperplaneOrdering& ord) {
  GradedCounts g;
  for (const auto& grade : nbc_sets(m, ord)) g.coeffs.push_back(static_cast<std::int64_t>(grade.size()));
  g.trim();
  return g;
}

}  // namespace arrgr

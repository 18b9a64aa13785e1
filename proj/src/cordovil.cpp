#include "arrgr/cordovil.hpp"

#include <algorithm>

#include "arrgr/error.hpp"
#include "arrgr/vg_ring.hpp"

namespace arrgr {

MultilinearPoly dtilde(const SignedSet& x, const HyperplaneOrdering& ord) {
  const IndexSet support = x.support();
  const SignedSet oriented = x.sign_of(ord.min_of(support)) > 0 ? x : x.negated();
  MultilinearPoly out;
  for (auto a : elements(support)) out.add_term(support & ~singleton(a), oriented.sign_of(a));
  return out;
}

CordovilAlgebra::CordovilAlgebra(MatroidData data, HyperplaneOrdering ord)
    : data_(std::move(data)), ord_(std::move(ord)), circuits_(data_.circuits().representatives()) {
  if (ord_.size() != data_.size()) throw InputError("ordering size does not match ground set");
}

const MultilinearPoly& CordovilAlgebra::reduce_monomial(IndexSet s) const {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  MultilinearPoly result;
  if (data_.flat_nonempty(s)) {
    // The broken circuit with the largest position mask goes first.
    const SignedSet* chosen = nullptr;
    IndexSet chosen_key = 0;
    for (const auto& x : circuits_) {
      const std::size_t top = ord_.max_of(x.support());
      const IndexSet broken = x.support() & ~singleton(top);
      if (!is_subset(broken, s)) continue;
      const IndexSet key = ord_.to_positions(broken);
      if (chosen == nullptr || key > chosen_key) {
        chosen = &x;
        chosen_key = key;
      }
    }
    if (chosen == nullptr) {
      result = MultilinearPoly::monomial(s);
    } else {
      const std::size_t top = ord_.max_of(chosen->support());
      if (!contains(s, top)) {
        // x_B = -(1/Phi(top)) sum_{a in B} Phi(a) x_{X \ a}; times x_{s \ B}
        // gives x_{s \ a + top}, which is larger in the ordering.
        const IndexSet broken = chosen->support() & ~singleton(top);
        const Rational scale(-chosen->sign_of(top));
        for (auto a : elements(broken)) {
          const IndexSet next = (s & ~singleton(a)) | singleton(top);
          result += reduce_monomial(next) * (scale * chosen->sign_of(a));
        }
      }
      // Otherwise s contains the whole circuit support, which is 0.
    }
  }
  return memo_.emplace(s, std::move(result)).first->second;
}

AlgebraElement CordovilAlgebra::straighten(const MultilinearPoly& p) const {
  if (!is_subset(p.variables(), full_set(size()))) throw InputError("polynomial outside ground set");
  AlgebraElement out;
  for (const auto& [s, c] : p.terms()) out.coords += reduce_monomial(s) * c;
  return out;
}

AlgebraElement CordovilAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  return straighten(a.coords.multiply(b.coords, SquareRule::Nilpotent));
}

GradedCounts CordovilAlgebra::hilbert_series() const { return poincare_from_nbc(data_, ord_); }

std::vector<std::size_t> CordovilAlgebra::straightening_span_dims() const {
  const std::size_t n = size();
  // Coordinates over the NBC basis, grade by grade.
  const auto nbc = nbc_sets(data_, ord_);
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < nbc.size(); ++k) {
    std::map<IndexSet, std::size_t> column;
    for (std::size_t j = 0; j < nbc[k].size(); ++j) column[nbc[k][j]] = j;
    EchelonBasis span(nbc[k].size());
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (popcount(static_cast<IndexSet>(s)) != static_cast<int>(k)) continue;
      const auto image = reduce_monomial(static_cast<IndexSet>(s));
      RatVector v(nbc[k].size());
      for (const auto& [t, c] : image.terms()) {
        auto it = column.find(t);
        if (it == column.end()) throw ConsistencyError("straightening left the NBC span");
        v[it->second] = c;
      }
      span.insert(std::move(v));
    }
    dims.push_back(span.rank());
  }
  return dims;
}

std::vector<Relation> b_relation_families(const MatroidData& m) {
  const std::size_t n = m.size();
  std::vector<Relation> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly e = Poly::generator(n, i);
    out.push_back({1, SignedSet{singleton(i), 0}, e * e});
  }
  for (IndexSet s : m.minimal_empty_flats()) {
    out.push_back({2, SignedSet{s, 0}, Poly::from_multilinear(n, MultilinearPoly::monomial(s))});
  }
  for (const auto& x : m.circuits().circuits()) {
    MultilinearPoly sum;
    for (auto k : elements(x.minus)) sum.add_term(x.support() & ~singleton(k), 1);
    for (auto k : elements(x.plus)) sum.add_term(x.support() & ~singleton(k), -1);
    out.push_back({3, x, Poly::from_multilinear(n, sum)});
  }
  return out;
}

bool LeadingFormReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const LeadingFormEntry& e) { return e.sign != 0; });
}

LeadingFormReport leading_form_check(const MatroidData& m, const HyperplaneOrdering& ord) {
  const std::size_t n = m.size();
  LeadingFormReport report;
  for (const auto& x : m.circuits().circuits()) {
    const Poly rel = signed_product(n, x.plus, x.minus, 1, 0) - signed_product(n, x.minus, x.plus, 1, 0);
    const MultilinearPoly expanded = rel.to_multilinear();
    LeadingFormEntry e{x, expanded.homogeneous_part(expanded.degree()), dtilde(x, ord), 0};
    if (e.leading == e.dtilde) {
      e.sign = 1;
    } else if (e.leading == -e.dtilde) {
      e.sign = -1;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace arrgr

#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrgr/oriented_matroid.hpp"
#include "arrgr/relations.hpp"

namespace arrgr {

/// sum_{a in support} Phi_X(a) prod_{b != a} x_b, with X reoriented so its
/// ord-smallest element is positive.
MultilinearPoly dtilde(const SignedSet& x, const HyperplaneOrdering& ord);

/// Element of the commutative algebra with x_a^2 = 0 and dtilde(X) = 0,
/// written in the no-broken-circuit basis of a fixed ordering.
struct AlgebraElement {
  MultilinearPoly coords;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

class CordovilAlgebra {
 public:
  CordovilAlgebra(MatroidData data, HyperplaneOrdering ord);

  const MatroidData& data() const { return data_; }
  const HyperplaneOrdering& ordering() const { return ord_; }
  std::size_t size() const { return data_.size(); }

  /// Rewrites p (squarefree, nilpotent convention) into the NBC span: a
  /// monomial with empty flat is 0; one containing a broken circuit
  /// X\{max X} is replaced using dtilde(X) = 0.
  AlgebraElement straighten(const MultilinearPoly& p) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement unit() const { return {MultilinearPoly::constant(1)}; }
  AlgebraElement generator(std::size_t i) const { return straighten(MultilinearPoly::monomial(singleton(i))); }

  /// NBC counts by grade.
  GradedCounts hilbert_series() const;
  /// Rank, per grade, of the straightened images of all squarefree monomials.
  std::vector<std::size_t> straightening_span_dims() const;

 private:
  const MultilinearPoly& reduce_monomial(IndexSet s) const;

  MatroidData data_;
  HyperplaneOrdering ord_;
  std::vector<SignedSet> circuits_;  // one orientation per circuit
  mutable std::map<IndexSet, MultilinearPoly> memo_;
};

/// Families (1)-(3) of the ideal I_0: x_i^2; monomials of minimal empty-flat
/// sets; and for every signed circuit (both orientations) the double sum
/// sum_{k in S-} e_{S+} e_{S- \ k} - sum_{k in S+} e_{S+ \ k} e_{S-}.
std::vector<Relation> b_relation_families(const MatroidData& m);

struct LeadingFormEntry {
  SignedSet circuit;
  MultilinearPoly leading;
  MultilinearPoly dtilde;
  int sign = 0;  // +1 or -1 when leading == sign * dtilde, 0 on mismatch
};

struct LeadingFormReport {
  std::vector<LeadingFormEntry> entries;
  bool ok() const;
};

/// Top-degree part of every Heaviside family-(3) relation versus dtilde.
LeadingFormReport leading_form_check(const MatroidData& m, const HyperplaneOrdering& ord);

}  // namespace arrgr

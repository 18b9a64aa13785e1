#pragma once

#include <string>
#include <vector>

#include "arrgr/arrangement.hpp"
#include "arrgr/oriented_matroid.hpp"
#include "arrgr/relations.hpp"

namespace arrgr {

/// Rational value per chamber, indexed by the canonical chamber order.
using ChamberFunction = RatVector;

struct FiltrationProfile {
  /// dims[k] = dim P^k for k = 0..n.
  std::vector<std::size_t> dims;
  /// gr[k] = dims[k] - dims[k-1].
  std::vector<std::size_t> gr;
  std::size_t chambers = 0;
};

struct RelationFailure {
  Relation relation;
  std::size_t chamber = 0;
  Rational value;
};

struct VgVerification {
  std::size_t relations_checked = 0;
  std::vector<RelationFailure> failures;
  std::size_t span_dim = 0;
  std::size_t chambers = 0;
  bool ok() const { return failures.empty() && span_dim == chambers; }
};

/// Which generator families to impose when computing the quotient dimension.
enum class PresentationFamilies { OneAndTwo, OneAndThree };

/// The ring of locally constant functions on the complement, generated by
/// the Heaviside functions of the hyperplanes.
class VgRing {
 public:
  explicit VgRing(const Arrangement& a);

  const Arrangement& arrangement() const { return arrangement_; }
  const std::vector<SignVector>& chambers() const { return chambers_; }
  std::size_t num_chambers() const { return chambers_.size(); }

  /// 1 on chambers where form i is positive, 0 elsewhere.
  ChamberFunction heaviside(std::size_t i) const;
  /// Product of the Heaviside functions in s; the constant 1 for s empty.
  ChamberFunction monomial_eval(IndexSet s) const;
  /// Evaluates a u-free polynomial with e_i -> Heaviside function i.
  ChamberFunction evaluate(const Poly& p) const;
  ChamberFunction evaluate(const MultilinearPoly& p) const;

  FiltrationProfile filtration_profile() const;
  /// Linearly independent chamber functions spanning P^k, for every k; each
  /// list extends the previous one.
  std::vector<std::vector<ChamberFunction>> filtration_bases() const;

  /// Families (1), (2), (3) of the Heaviside presentation. Family (3) is
  /// emitted for both orientations of every signed circuit.
  std::vector<Relation> relation_families() const;
  /// Family-(3)-shaped polynomials for minimal infeasible signed sets whose
  /// flat is empty: not relations, used as a negative control.
  std::vector<Relation> family3_without_flat_condition() const;

  VgVerification verify_relations() const;
  VgVerification verify(const std::vector<Relation>& rels) const;

  /// 2^n minus the rank of the ideal in the multilinear ring Q[e]/(e_i^2 - e_i)
  /// generated by the chosen families. Throws ResourceError when n > n_max.
  std::size_t presentation_dimension(PresentationFamilies families = PresentationFamilies::OneAndTwo,
                                     std::size_t n_max = 14) const;

 private:
  Arrangement arrangement_;
  std::vector<SignVector> chambers_;
  std::vector<SignedSet> minimal_infeasible_;
  CircuitSet circuits_;
};

/// prod_{i in S+} e_i * prod_{j in S-} (e_j - c), with c the given constant
/// times u^u_power (u_power 0 gives the Heaviside form, 1 the Rees form).
Poly signed_product(std::size_t n, IndexSet positive_part, IndexSet shifted_part, const Rational& c, unsigned u_power);

}  // namespace arrgr

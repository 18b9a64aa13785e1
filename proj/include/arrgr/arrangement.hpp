#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrgr/feasibility.hpp"
#include "arrgr/matrix.hpp"
#include "arrgr/subset.hpp"

namespace arrgr {

/// omega(v) = linear·v + constant.
struct AffineForm {
  RatVector linear;
  Rational constant;

  Rational evaluate(std::span<const Rational> v) const;
  bool is_central() const { return constant == 0; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Sign vector over the forms of an arrangement; true means '+'.
using SignVector = std::vector<bool>;

std::string format_signs(const SignVector& s);

/// A sign condition on a subset of forms (X+, X-). Also the data of a signed
/// circuit; see oriented_matroid.hpp.
struct SignedSet {
  IndexSet plus = 0;
  IndexSet minus = 0;

  IndexSet support() const { return plus | minus; }
  SignedSet negated() const { return {minus, plus}; }
  /// Sign of element i: +1, -1 or 0.
  int sign_of(std::size_t i) const { return contains(plus, i) ? 1 : (contains(minus, i) ? -1 : 0); }
  /// True when this is a signed subset of other (agreeing signs).
  bool conforms_to(const SignedSet& other) const {
    return is_subset(plus, other.plus) && is_subset(minus, other.minus);
  }
  friend bool operator==(const SignedSet&, const SignedSet&) = default;
};

/// Orders by support size, then support (graded lex), then plus-part.
bool signed_set_less(const SignedSet& a, const SignedSet& b);

/// A finite rational affine hyperplane arrangement with one chosen
/// orientation per hyperplane.
class Arrangement {
 public:
  /// Validates forms: linear parts of length dim and nonzero, no two forms
  /// scalar multiples of each other (either sign), labels distinct.
  static Arrangement build(std::size_t dim, std::vector<AffineForm> forms, std::vector<std::string> labels);

  static Arrangement braid(std::size_t n);
  static Arrangement semiorder(std::size_t n);
  /// Coordinate hyperplanes x_i = 0 in Q^n.
  static Arrangement boolean(std::size_t n);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<AffineForm>& forms() const { return forms_; }
  const AffineForm& form(std::size_t i) const { return forms_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Throws InputError when absent.
  std::size_t index_of(const std::string& label) const;
  bool is_central() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  Arrangement(std::size_t dim, std::vector<AffineForm> forms, std::vector<std::string> labels)
      : dim_(dim), forms_(std::move(forms)), labels_(std::move(labels)) {}

  std::size_t dim_ = 0;
  std::vector<AffineForm> forms_;
  std::vector<std::string> labels_;
};

/// Central arrangement in Q^{d+1}: form i becomes linear·v + constant·r, and
/// the form -r is appended with label "H0".
Arrangement cone(const Arrangement& a);

Arrangement delete_hyperplane(const Arrangement& a, std::size_t i);

struct Restriction {
  Arrangement arrangement;
  /// Original form index -> index in the restriction, for every surviving
  /// form (collapsed duplicates map to the first-seen representative).
  std::map<std::size_t, std::size_t> provenance;
};

/// Restriction to H_i, parametrized by eliminating the largest coordinate
/// with a nonzero coefficient in form i. Forms parallel to H_i are dropped;
/// forms whose restrictions are scalar multiples collapse to the first seen.
Restriction restrict_to(const Arrangement& a, std::size_t i);

/// True iff sign(form_i(v)) = required sign for all i in the signed set, for
/// some v.
bool sign_condition_feasible(const Arrangement& a, const SignedSet& s);

/// Chambers as sign vectors in lexicographic order with '+' before '-'.
std::vector<SignVector> chambers(const Arrangement& a);

/// Whether {form_i = 0 : i in s} has a rational solution.
bool flat_nonempty(const Arrangement& a, IndexSet s);

/// Signed sets with empty open intersection whose proper signed subsets all
/// have nonempty intersection. Ordered by signed_set_less.
std::vector<SignedSet> minimal_infeasible_sign_sets(const Arrangement& a);

/// Matrix with one column per form: (linear part, constant).
RatMatrix homogenized_matrix(const Arrangement& a, IndexSet columns);

}  // namespace arrgr

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrgr/arrangement.hpp"
#include "arrgr/characters.hpp"
#include "arrgr/vg_ring.hpp"

namespace arrgr {

/// w · omega_i = lambda · omega_{perm[i]} with sign(lambda) = flips[i].
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> flips;

  static SignedPermutation identity(std::size_t n);
  bool is_identity() const;
  /// (this ∘ other): apply other first.
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

/// The permutation of forms induced by v -> matrix·v + translation. Throws
/// InputError for a singular matrix and ConsistencyError ("not a symmetry")
/// when some form has no image in the arrangement.
SignedPermutation derive_signed_permutation(const Arrangement& a, const RatMatrix& matrix, const RatVector& translation);

/// Image index of each chamber (positions in chambers(a)). Throws
/// ConsistencyError if an image sign vector is not a chamber.
std::vector<std::size_t> chamber_permutation(const std::vector<SignVector>& chambers, const SignedPermutation& w);

struct GroupElement {
  SignedPermutation action;
  std::string class_label;
  std::optional<Partition> cycle_type;
};

/// A finite group given by all of its elements acting on the forms.
struct GroupSpec {
  std::string name;
  std::vector<GroupElement> elements;

  /// n when every element carries an S_n cycle type, else 0.
  int symmetric_degree() const;
  /// Class labels in first-appearance order.
  std::vector<std::string> classes() const;
};

/// Throws InputError unless the element list is a group (identity,
/// composition and inverses) acting on n forms.
void validate_group(const GroupSpec& g, std::size_t n);

/// S_d acting on Q^d by permuting coordinates; classes are cycle types.
GroupSpec coordinate_permutation_group(const Arrangement& a);

/// Labels conjugacy classes "c1", "c2", ... by closure under conjugation,
/// for groups supplied without cycle types.
void assign_conjugacy_classes(GroupSpec& g);

struct GradedCharacters {
  std::vector<std::string> classes;
  std::map<std::string, std::size_t> class_sizes;
  std::map<std::string, Partition> cycle_types;  // filled for S_n actions
  /// layers[k][c] = trace on P^k minus trace on P^{k-1} for class c.
  std::vector<std::vector<Rational>> layers;
  /// Permutation character on chambers.
  std::vector<Rational> chamber_character;

  /// Class function of one grade keyed by cycle type (S_n actions only).
  CharacterVector as_symmetric(const std::vector<Rational>& values) const;
};

/// trace(Pi ∘ rho) for the orthogonal projection Pi onto span(basis) and the
/// chamber permutation rho. Throws ConsistencyError if span(basis) is not
/// rho-invariant.
Rational projection_trace(const std::vector<ChamberFunction>& basis, const std::vector<std::size_t>& chamber_perm);

GradedCharacters graded_character(const VgRing& ring, const GroupSpec& group);

}  // namespace arrgr

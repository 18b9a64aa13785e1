#pragma once

#include <string>
#include <vector>

#include "arrgr/arrangement.hpp"
#include "arrgr/oriented_matroid.hpp"
#include "arrgr/relations.hpp"

namespace arrgr {

/// Generators of the equivariant presentation over Q[e_1..e_n, u]:
/// (1) e_i(e_i - u); (2) prod_{S+} e_i prod_{S-} (e_j - u) for each minimal
/// infeasible signed set; (3) u^{-1}(prod_{X+} e prod_{X-} (e - u) -
/// prod_{X+} (e - u) prod_{X-} e) for each signed circuit with nonempty flat.
/// Throws ConsistencyError if a family-(3) difference is not divisible by u.
std::vector<Relation> rees_relation_families(const Arrangement& a);

/// Substitutes u = value (0 or 1).
Relation specialize(const Relation& r, int u_value);

struct SpecializationReport {
  std::size_t relations = 0;
  /// u = 0: polynomials matching a B-family generator of the same family.
  std::size_t matched_u0 = 0;
  /// u = 0 images that are not literally B generators, with whether they
  /// vanish in the Cordovil algebra.
  std::vector<std::pair<Relation, bool>> extra_u0;
  /// B generators not hit by any u = 0 image.
  std::vector<Relation> missing_u0;
  /// u = 1 images differing from the VG generator built from the same source.
  std::vector<Relation> mismatched_u1;
  std::size_t matched_u1 = 0;
  std::size_t inhomogeneous = 0;

  bool ok() const;
};

SpecializationReport compare_specializations(const Arrangement& a);

struct ReesHilbertRow {
  std::size_t k = 0;
  std::size_t filtration_dim = 0;  // dim P^k
  std::size_t gr_partial = 0;      // sum_{j<=k} gr_j
  std::size_t nbc_partial = 0;     // sum_{j<=k} NBC count in grade j
};

struct ReesHilbertReport {
  std::vector<ReesHilbertRow> rows;
  bool ok() const;
};

ReesHilbertReport rees_hilbert_check(const Arrangement& a);

}  // namespace arrgr

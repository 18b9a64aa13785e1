#pragma once

#include <vector>

#include "arrgr/characters.hpp"
#include "arrgr/matrix.hpp"
#include "arrgr/oriented_matroid.hpp"
#include "arrgr/polynomial.hpp"

// Brute-force reference computations, independent of the fast paths they
// check. Exponential; meant for small inputs.
namespace arrgr::oracles {

/// Span, inside the 2^n-dimensional algebra with x_a^2 = 0, of all multiples
/// m·dtilde(X) (X a circuit) and m·x_S (S with empty flat). Coordinates are
/// indexed by IndexSet.
EchelonBasis cordovil_ideal(const MatroidData& m, const HyperplaneOrdering& ord);

/// Graded dimensions of the quotient by cordovil_ideal.
GradedCounts cordovil_quotient_dims(const MatroidData& m, const HyperplaneOrdering& ord);

/// True when p - q lies in the ideal.
bool congruent_mod_ideal(const EchelonBasis& ideal, const MultilinearPoly& p, const MultilinearPoly& q, std::size_t n);

/// Number of semistandard tableaux of shape lambda and content mu.
long kostka(const Partition& lambda, const Partition& mu);

/// Permutation character of S_n on row tabloids of shape lambda at class mu.
long tabloid_character(const Partition& lambda, const Partition& mu);

/// chi_lambda(mu) by unitriangular inversion of M^lambda = sum K S^nu.
long irreducible_by_kostka(const Partition& lambda, const Partition& mu);

}  // namespace arrgr::oracles

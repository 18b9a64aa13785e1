#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrgr/rational.hpp"

namespace arrgr {

/// Weakly decreasing positive parts. Also used for cycle types.
struct Partition {
  std::vector<int> parts;

  int size() const;
  /// "(3,1)", "(1,1,1,1)"; the empty partition prints as "()".
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Throws InputError unless parts are positive and weakly decreasing.
Partition make_partition(std::vector<int> parts);

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// Cycle type of a permutation given in one-line notation (0-based images).
Partition cycle_type(const std::vector<std::size_t>& perm);

/// Number of permutations of S_n with the given cycle type.
long class_size(const Partition& mu);

/// Irreducible character value chi_lambda at the class mu, by the
/// Murnaghan–Nakayama rule. Throws InputError when |lambda| != |mu|.
long mn_character(const Partition& lambda, const Partition& mu);

/// Class function of S_n keyed by cycle type.
using CharacterVector = std::map<Partition, Rational>;

/// Nonzero multiplicities of the irreducibles in chi, via the character inner
/// product. Throws NotACharacter-style ConsistencyError when a multiplicity is
/// negative or fractional.
std::map<Partition, long> decompose(const CharacterVector& chi, int n);

/// Character of the regular representation of S_n.
CharacterVector regular_character(int n);

}  // namespace arrgr

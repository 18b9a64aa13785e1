#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "arrgr/corpus.hpp"
#include "arrgr/oriented_matroid.hpp"

namespace arrgr::testing {

inline HyperplaneOrdering random_ordering(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  return HyperplaneOrdering::from_sequence(std::move(seq));
}

inline std::vector<std::int64_t> counts(const GradedCounts& g) { return g.coeffs; }

}  // namespace arrgr::testing

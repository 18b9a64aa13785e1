#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrgr/arrangement.hpp"

namespace arrgr {

/// {x = 0} in Q^1.
Arrangement point_in_line();
/// {x = 0, x = 1} in Q^1.
Arrangement parallel_pair();
/// Three lines in general position in the plane, bounding a triangle.
Arrangement generic_three_lines();
/// Affine arrangement with coefficients in [-2, 2] drawn from a fixed
/// mt19937 stream; resamples until the forms are valid and distinct.
Arrangement random_arrangement(std::size_t dim, std::size_t n, std::uint32_t seed);

struct CorpusEntry {
  std::string name;
  Arrangement arrangement;
};

/// Single hyperplane, parallel pair, braid 2-4, semiorder 2-3, boolean 2-4,
/// generic three lines, and one random arrangement.
std::vector<CorpusEntry> test_corpus();

}  // namespace arrgr

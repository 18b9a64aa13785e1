#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace arrgr {

/// Subset of {0..31} as a bitmask. Ground sets are desk-scale.
using IndexSet = std::uint32_t;

inline constexpr std::size_t kMaxElements = 31;

inline int popcount(IndexSet s) { return std::popcount(s); }
inline bool contains(IndexSet s, std::size_t i) { return (s >> i) & 1U; }
inline IndexSet singleton(std::size_t i) { return IndexSet{1} << i; }
inline bool is_subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }
inline IndexSet full_set(std::size_t n) { return n == 0 ? 0 : (~IndexSet{0} >> (32 - n)); }

std::vector<std::size_t> elements(IndexSet s);
IndexSet from_elements(const std::vector<std::size_t>& idx);

/// Graded-then-lexicographic order on sorted index lists.
bool graded_lex_less(IndexSet a, IndexSet b);

struct GradedLexLess {
  bool operator()(IndexSet a, IndexSet b) const { return graded_lex_less(a, b); }
};

/// "{a,b,c}" using the given element labels.
std::string format_set(IndexSet s, const std::vector<std::string>& labels);

}  // namespace arrgr

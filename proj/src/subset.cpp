#include "arrgr/subset.hpp"

#include <algorithm>

namespace arrgr {

std::vector<std::size_t> elements(IndexSet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

IndexSet from_elements(const std::vector<std::size_t>& idx) {
  IndexSet s = 0;
  for (auto i : idx) s |= singleton(i);
  return s;
}

bool graded_lex_less(IndexSet a, IndexSet b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  const auto ea = elements(a), eb = elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string format_set(IndexSet s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (auto i : elements(s)) {
    if (!first) out += ",";
    out += labels.at(i);
    first = false;
  }
  return out + "}";
}

}  // namespace arrgr

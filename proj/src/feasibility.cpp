#include "arrgr/feasibility.hpp"

#include <algorithm>
#include <set>

#include "arrgr/error.hpp"

namespace arrgr {

namespace {

// a·v + c > 0, stored as the row (a_1..a_d, c).
using Row = RatVector;

// Scale by a positive rational so the first nonzero linear coefficient has
// absolute value 1; the constant alone is scaled to ±1 for variable-free rows.
void normalize(Row& row) {
  for (const auto& x : row) {
    if (x != 0) {
      const Rational s = abs(x);
      for (auto& y : row) y /= s;
      return;
    }
  }
}

struct RowLess {
  bool operator()(const Row& a, const Row& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
  }
};

}  // namespace

bool strict_feasible(const std::vector<StrictConstraint>& constraints) {
  if (constraints.empty()) return true;
  const std::size_t d = constraints.front().linear.size();
  std::set<Row, RowLess> rows;
  for (const auto& c : constraints) {
    if (c.linear.size() != d) throw InputError("strict_feasible: rows of unequal length");
    Row row(c.linear);
    row.push_back(c.constant);
    if (c.side == Side::Negative) {
      for (auto& x : row) x = -x;
    }
    normalize(row);
    rows.insert(std::move(row));
  }

  for (std::size_t var = 0; var < d; ++var) {
    std::vector<const Row*> pos, neg;
    std::set<Row, RowLess> next;
    for (const auto& row : rows) {
      const int s = sgn(row[var]);
      if (s > 0) {
        pos.push_back(&row);
      } else if (s < 0) {
        neg.push_back(&row);
      } else {
        next.insert(row);
      }
    }
    for (const Row* p : pos) {
      for (const Row* n : neg) {
        // p[var] > 0 > n[var]: (-n[var])·p + p[var]·n eliminates var.
        const Rational wp = -(*n)[var];
        const Rational wn = (*p)[var];
        Row combined(d + 1);
        for (std::size_t j = 0; j <= d; ++j) combined[j] = wp * (*p)[j] + wn * (*n)[j];
        normalize(combined);
        next.insert(std::move(combined));
      }
    }
    rows = std::move(next);
    for (const auto& row : rows) {
      const bool variable_free =
          std::all_of(row.begin(), row.end() - 1, [](const Rational& x) { return x == 0; });
      if (variable_free && row.back() <= 0) return false;
    }
  }
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.back() > 0; });
}

}  // namespace arrgr

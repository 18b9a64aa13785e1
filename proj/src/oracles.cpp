#include "arrgr/oracles.hpp"

#include <functional>
#include <map>

#include "arrgr/cordovil.hpp"

namespace arrgr::oracles {

namespace {

// Adds every monomial multiple of g to the ideal.
void add_multiples(EchelonBasis& ideal, const MultilinearPoly& g, std::size_t n) {
  const IndexSet all = full_set(n);
  for (IndexSet m = 0; m <= all; ++m) {
    const MultilinearPoly prod = MultilinearPoly::monomial(m).multiply(g, SquareRule::Nilpotent);
    if (!prod.terms().empty()) ideal.insert(prod.dense(n));
  }
}

}  // namespace

EchelonBasis cordovil_ideal(const MatroidData& m, const HyperplaneOrdering& ord) {
  const std::size_t n = m.size();
  EchelonBasis ideal(std::size_t{1} << n);
  for (const auto& x : m.circuits().representatives()) add_multiples(ideal, dtilde(x, ord), n);
  for (IndexSet s : m.minimal_empty_flats()) add_multiples(ideal, MultilinearPoly::monomial(s), n);
  return ideal;
}

GradedCounts cordovil_quotient_dims(const MatroidData& m, const HyperplaneOrdering& ord) {
  const std::size_t n = m.size();
  const auto ideal = cordovil_ideal(m, ord);
  std::vector<long> dims(n + 1, 0);
  for (IndexSet s = 0; s <= full_set(n); ++s) ++dims[popcount(s)];
  // Generators are homogeneous, so each pivot row is too.
  for (std::size_t p : ideal.pivots()) --dims[popcount(static_cast<IndexSet>(p))];
  GradedCounts out{dims};
  out.trim();
  return out;
}

bool congruent_mod_ideal(const EchelonBasis& ideal, const MultilinearPoly& p, const MultilinearPoly& q,
                         std::size_t n) {
  return ideal.contains((p - q).dense(n));
}

long kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  const auto& shape = lambda.parts;
  std::vector<std::vector<int>> tab(shape.size());
  std::vector<int> remaining(mu.parts.begin(), mu.parts.end());
  long count = 0;
  // Fill cells row by row, left to right.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == shape.size()) {
      ++count;
      return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
      fill(r + 1, 0);
      return;
    }
    const int lo_row = c > 0 ? tab[r][c - 1] : 0;
    const int lo_col = r > 0 ? tab[r - 1][c] + 1 : 0;
    for (int v = std::max(lo_row, lo_col); v < static_cast<int>(remaining.size()); ++v) {
      if (remaining[v] == 0) continue;
      --remaining[v];
      tab[r].push_back(v);
      fill(r, c + 1);
      tab[r].pop_back();
      ++remaining[v];
    }
  };
  fill(0, 0);
  return count;
}

long tabloid_character(const Partition& lambda, const Partition& mu) {
  // Fixed tabloids: each cycle of mu lies inside one row of lambda.
  std::vector<int> room(lambda.parts.begin(), lambda.parts.end());
  long count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == mu.parts.size()) {
      ++count;
      return;
    }
    for (auto& r : room) {
      if (r < mu.parts[k]) continue;
      r -= mu.parts[k];
      place(k + 1);
      r += mu.parts[k];
    }
  };
  place(0);
  return count;
}

long irreducible_by_kostka(const Partition& lambda, const Partition& mu) {
  const int n = lambda.size();
  std::map<Partition, long> chi;
  // (n) first; every nu dominating lambda comes earlier in this order.
  for (const auto& nu : partitions_of(n)) {
    long value = tabloid_character(nu, mu);
    for (const auto& [rho, v] : chi) value -= kostka(rho, nu) * v;
    chi[nu] = value;
    if (nu == lambda) return value;
  }
  return 0;
}

}  // namespace arrgr::oracles

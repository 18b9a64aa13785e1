#include <algorithm>
#include <functional>
#include <random>

#include "arrgr/error.hpp"
#include "arrgr/feasibility.hpp"
#include "arrgr/matrix.hpp"
#include "arrgr/polynomial.hpp"
#include "doctest.h"

using namespace arrgr;

namespace {

// Rank oracle independent of row reduction: clear denominators row by row,
// then find the largest nonzero minor via Leibniz expansion in __int128.
__int128 leibniz(const std::vector<std::vector<long long>>& m, const std::vector<int>& rows,
                 std::vector<int> cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  std::sort(cols.begin(), cols.end());
  __int128 det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (cols[i] > cols[j]) ++inversions;
    __int128 term = 1;
    for (std::size_t i = 0; i < k; ++i) term *= m[rows[i]][cols[i]];
    det += (inversions % 2 == 0) ? term : -term;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return det;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(c);
      return;
    }
    for (int i = start; i < n; ++i) {
      c[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::size_t minor_rank(const RatMatrix& m) {
  std::vector<std::vector<long long>> z(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational scaled = m(r, c) * l;
      z[r][c] = scaled.get_num().get_si();
    }
  }
  const int max_k = static_cast<int>(std::min(m.rows(), m.cols()));
  for (int k = max_k; k > 0; --k) {
    for (const auto& rows : combinations(static_cast<int>(m.rows()), k)) {
      for (const auto& cols : combinations(static_cast<int>(m.cols()), k)) {
        if (leibniz(z, rows, cols) != 0) return static_cast<std::size_t>(k);
      }
    }
  }
  return 0;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t target_rank) {
  // Product of rows x r and r x cols factors with small rational entries.
  auto entry = [&rng] {
    Rational q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    q.canonicalize();
    return q;
  };
  RatMatrix a(rows, target_rank), b(target_rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < target_rank; ++j) a(i, j) = entry();
  for (std::size_t i = 0; i < target_rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = entry();
  return a * b;
}

StrictConstraint c1(long a, long c, Side s) { return StrictConstraint{{Rational(a)}, Rational(c), s}; }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("rank_and_kernel examples") {
  SUBCASE("identity") {
    const auto rk = rank_and_kernel(RatMatrix::identity(2));
    CHECK(rk.rank == 2);
    CHECK(rk.kernel_basis.empty());
  }
  SUBCASE("single row") {
    const auto rk = rank_and_kernel(RatMatrix::from_rows({{1, -1, 1}}, 3));
    CHECK(rk.rank == 1);
    CHECK(rk.kernel_basis.size() == 2);
  }
  SUBCASE("braid B3 homogenized columns") {
    // Columns w12, w13, w23 over (x1, x2, x3, constant).
    const auto m = RatMatrix::from_rows({{1, 1, 0}, {-1, 0, 1}, {0, -1, -1}, {0, 0, 0}}, 3);
    const auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel_basis.size() == 1);
    CHECK(rk.kernel_basis[0] == RatVector{1, -1, 1});
  }
  SUBCASE("empty matrix") {
    CHECK(rank_and_kernel(RatMatrix(0, 0)).rank == 0);
    CHECK(rank_and_kernel(RatMatrix(0, 3)).kernel_basis.size() == 3);
  }
}

TEST_CASE("rank_and_kernel agrees with the minor-rank oracle on random 6x6 matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = rng() % 7;
    const RatMatrix m = r == 0 ? RatMatrix(6, 6) : random_matrix(rng, 6, 6, r);
    const auto rk = rank_and_kernel(m);
    REQUIRE(rk.rank == minor_rank(m));
    REQUIRE(rk.rank + rk.kernel_basis.size() == 6);
    for (const auto& v : rk.kernel_basis) {
      const auto mv = m * std::span<const Rational>(v);
      for (const auto& x : mv) REQUIRE(x == 0);
      const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
      REQUIRE(lead != v.end());
      REQUIRE(*lead == 1);
    }
  }
}

TEST_CASE("EchelonBasis tracks span membership") {
  EchelonBasis b(3);
  CHECK(b.insert({1, 2, 3}));
  CHECK(b.insert({0, 1, 1}));
  CHECK_FALSE(b.insert({2, 5, 7}));
  CHECK(b.contains({1, 3, 4}));
  CHECK_FALSE(b.contains({0, 0, 1}));
  CHECK(b.rank() == 2);
}

TEST_CASE("inverse") {
  const auto m = RatMatrix::from_rows({{2, 1}, {1, 1}}, 2);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == RatMatrix::identity(2));
  CHECK_FALSE(inverse(RatMatrix::from_rows({{1, 2}, {2, 4}}, 2)).has_value());
}

TEST_CASE("strict_feasible examples") {
  CHECK(strict_feasible({c1(1, 0, Side::Positive), c1(1, -1, Side::Negative)}));
  CHECK_FALSE(strict_feasible({c1(1, -1, Side::Positive), c1(1, 0, Side::Negative)}));
  // x1 > x2, x2 > x3, x1 < x3.
  CHECK_FALSE(strict_feasible({{{1, -1, 0}, 0, Side::Positive},
                               {{0, 1, -1}, 0, Side::Positive},
                               {{1, 0, -1}, 0, Side::Negative}}));
  CHECK(strict_feasible({}));
  CHECK_THROWS_AS(strict_feasible({{{1, 0}, 0, Side::Positive}, {{1}, 0, Side::Positive}}), InputError);
  // Touching boundary: x > 0 and x < 0 is empty even though x >= 0, x <= 0 is not.
  CHECK_FALSE(strict_feasible({c1(1, 0, Side::Positive), c1(1, 0, Side::Negative)}));
}

TEST_CASE("strict_feasible properties on random systems") {
  std::mt19937 rng(11);
  auto entry = [&rng] { return Rational(static_cast<long>(rng() % 5) - 2); };
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    std::vector<StrictConstraint> cs;
    const std::size_t count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i) {
      StrictConstraint c{RatVector(d), entry(), rng() % 2 ? Side::Positive : Side::Negative};
      for (auto& x : c.linear) x = entry();
      cs.push_back(std::move(c));
    }
    const bool base = strict_feasible(cs);

    auto scaled = cs;
    for (auto& c : scaled) {
      Rational s(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 4) + 1);
      s.canonicalize();
      for (auto& x : c.linear) x *= s;
      c.constant *= s;
    }
    CHECK(strict_feasible(scaled) == base);

    auto more = cs;
    StrictConstraint extra{RatVector(d), entry(), Side::Positive};
    for (auto& x : extra.linear) x = entry();
    more.push_back(extra);
    if (!base) CHECK_FALSE(strict_feasible(more));

    // A single nonconstant form is feasible with either sign.
    StrictConstraint single{RatVector(d), entry(), Side::Positive};
    single.linear[rng() % d] = 1 + static_cast<long>(rng() % 3);
    CHECK(strict_feasible({single}));
    single.side = Side::Negative;
    CHECK(strict_feasible({single}));
  }
}

TEST_CASE("multilinear polynomial arithmetic") {
  const std::vector<std::string> labels{"12", "13", "23"};
  auto x = [](std::size_t i) { return MultilinearPoly::monomial(singleton(i)); };
  const MultilinearPoly d = x(1).multiply(x(2), SquareRule::Nilpotent) - x(0).multiply(x(2), SquareRule::Nilpotent) +
                            x(0).multiply(x(1), SquareRule::Nilpotent);
  CHECK(d.to_string(labels, "x") == "x13*x23 - x12*x23 + x12*x13");
  CHECK(x(0).multiply(x(0), SquareRule::Nilpotent).is_zero());
  CHECK(x(0).multiply(x(0), SquareRule::Idempotent) == x(0));
  CHECK((x(0) * Rational(-1, 2) + MultilinearPoly::constant(3)).to_string(labels, "e") == "-1/2*e12 + 3");
  CHECK(d.degree() == 2);
  CHECK(MultilinearPoly{}.to_string(labels, "x") == "0");
}

TEST_CASE("general polynomials with u") {
  const std::vector<std::string> labels{"1"};
  const Poly e = Poly::generator(1, 0);
  const Poly u = Poly::param_u(1);
  const Poly rel = e * (e - u);
  CHECK(rel.to_string(labels) == "e1^2 - u*e1");
  CHECK(rel.is_homogeneous());
  CHECK(rel.specialize_u(0).to_string(labels) == "e1^2");
  CHECK(rel.specialize_u(1).to_string(labels) == "e1^2 - e1");
  CHECK(rel.specialize_u(1).reduce(SquareRule::Idempotent).is_zero());
  CHECK((e * u - u * u).divide_by_u(1).to_string(labels) == "e1 - u");
  CHECK_THROWS_AS((rel + e * e).divide_by_u(1), ConsistencyError);
}

TEST_CASE("graded counts") {
  GradedCounts g{{1, 6, 12}};
  CHECK(g.to_string() == "1 + 6t^2 + 12t^4");
  CHECK(g.shifted().to_string() == "t^2 + 6t^4 + 12t^6");
  CHECK((g + g.shifted()) == GradedCounts{{1, 7, 18, 12}});
  CHECK(g.total() == 19);
}

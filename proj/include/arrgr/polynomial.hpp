#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arrgr/rational.hpp"
#include "arrgr/subset.hpp"

namespace arrgr {

/// How repeated generators collapse when multiplying squarefree monomials.
enum class SquareRule {
  Idempotent,  // e_i^2 = e_i   (Heaviside functions)
  Nilpotent,   // x_i^2 = 0     (Cordovil / cohomology generators)
};

/// Rational polynomial that is squarefree in its generators. Monomials are
/// index subsets, ordered graded-then-lexicographic.
class MultilinearPoly {
 public:
  using Terms = std::map<IndexSet, Rational, GradedLexLess>;

  MultilinearPoly() = default;
  static MultilinearPoly constant(const Rational& c);
  static MultilinearPoly monomial(IndexSet s, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(IndexSet s) const;
  /// -1 for the zero polynomial.
  int degree() const;
  MultilinearPoly homogeneous_part(int degree) const;
  /// Union of all monomial supports.
  IndexSet variables() const;

  void add_term(IndexSet s, const Rational& c);

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  MultilinearPoly& operator-=(const MultilinearPoly& other);
  MultilinearPoly& operator*=(const Rational& c);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  friend MultilinearPoly operator*(MultilinearPoly a, const Rational& c) { return a *= c; }
  MultilinearPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) { return a.terms_ == b.terms_; }

  MultilinearPoly multiply(const MultilinearPoly& other, SquareRule rule) const;

  /// Dense coordinate vector over all 2^n squarefree monomials (index = mask).
  std::vector<Rational> dense(std::size_t n) const;

  /// e.g. "x13*x23 - x12*x23 + x12*x13"; terms in descending graded-lex order.
  std::string to_string(const std::vector<std::string>& labels, const std::string& prefix) const;

 private:
  Terms terms_;
};

/// Monomial in generators e_1..e_n and the parameter u.
struct PolyTerm {
  std::vector<std::uint8_t> exps;
  unsigned u = 0;

  int degree() const;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

struct PolyTermLess {
  bool operator()(const PolyTerm& a, const PolyTerm& b) const;
};

/// General rational polynomial in Q[e_1..e_n, u]. Hosts relations before any
/// square rule is applied (e.g. e_i^2 - e_i, e_i(e_i - u)).
class Poly {
 public:
  using Terms = std::map<PolyTerm, Rational, PolyTermLess>;

  explicit Poly(std::size_t n = 0) : n_(n) {}
  static Poly constant(std::size_t n, const Rational& c);
  static Poly generator(std::size_t n, std::size_t i);
  static Poly param_u(std::size_t n);
  static Poly from_multilinear(std::size_t n, const MultilinearPoly& p);

  std::size_t num_generators() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const PolyTerm& t, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Smallest u-exponent among the terms (0 for the zero polynomial).
  unsigned min_u_exponent() const;
  /// Exact division by u^k; throws ConsistencyError if some term has a
  /// smaller u-exponent.
  Poly divide_by_u(unsigned k = 1) const;
  /// Substitute u = value and collect.
  Poly specialize_u(const Rational& value) const;
  /// True when every term has the same total degree (deg e_i = deg u).
  bool is_homogeneous() const;

  /// Requires a u-free polynomial; applies the square rule and returns the
  /// multilinear image.
  MultilinearPoly reduce(SquareRule rule) const;
  /// Requires a u-free squarefree polynomial.
  MultilinearPoly to_multilinear() const;

  /// e.g. "e12^2 - e12" or "e12*e23 - u*e12"; descending graded-lex order.
  std::string to_string(const std::vector<std::string>& labels, const std::string& prefix = "e") const;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Polynomial in t^2 stored by grade: coeffs[k] multiplies t^(2k).
struct GradedCounts {
  std::vector<std::int64_t> coeffs;

  void trim();
  std::int64_t total() const;
  /// "1 + 6t^2 + 12t^4"
  std::string to_string() const;

  friend GradedCounts operator+(const GradedCounts& a, const GradedCounts& b);
  /// Multiply by t^2.
  GradedCounts shifted() const;
  friend bool operator==(const GradedCounts& a, const GradedCounts& b);
};

}  // namespace arrgr

#include "arrgr/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arrgr/error.hpp"

namespace arrgr {

namespace {

// Appends " + c*" / " - c*" style coefficient text; returns true when the
// monomial text must follow (i.e. the term is not a bare constant).
void append_coefficient(std::string& out, const Rational& c, bool first, bool has_monomial) {
  const bool negative = c < 0;
  const Rational mag = abs(c);
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (!has_monomial) {
    out += arrgr::to_string(mag);
  } else if (mag != 1) {
    out += arrgr::to_string(mag) + "*";
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// MultilinearPoly

MultilinearPoly MultilinearPoly::constant(const Rational& c) { return monomial(0, c); }

MultilinearPoly MultilinearPoly::monomial(IndexSet s, const Rational& c) {
  MultilinearPoly p;
  p.add_term(s, c);
  return p;
}

Rational MultilinearPoly::coefficient(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultilinearPoly::degree() const {
  return terms_.empty() ? -1 : popcount(terms_.rbegin()->first);
}

MultilinearPoly MultilinearPoly::homogeneous_part(int degree) const {
  MultilinearPoly out;
  for (const auto& [s, c] : terms_) {
    if (popcount(s) == degree) out.terms_.emplace(s, c);
  }
  return out;
}

IndexSet MultilinearPoly::variables() const {
  IndexSet v = 0;
  for (const auto& [s, c] : terms_) v |= s;
  return v;
}

void MultilinearPoly::add_term(IndexSet s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& other) {
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) coeff *= c;
  return *this;
}

MultilinearPoly MultilinearPoly::multiply(const MultilinearPoly& other, SquareRule rule) const {
  MultilinearPoly out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      if (rule == SquareRule::Nilpotent && (a & b) != 0) continue;
      out.add_term(a | b, ca * cb);
    }
  }
  return out;
}

std::vector<Rational> MultilinearPoly::dense(std::size_t n) const {
  std::vector<Rational> v(std::size_t{1} << n);
  for (const auto& [s, c] : terms_) {
    if (!is_subset(s, full_set(n))) throw InputError("monomial outside ground set");
    v[s] = c;
  }
  return v;
}

std::string MultilinearPoly::to_string(const std::vector<std::string>& labels,
                                       const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [s, c] = *it;
    append_coefficient(out, c, first, s != 0);
    bool first_var = true;
    for (auto i : elements(s)) {
      if (!first_var) out += "*";
      out += prefix + labels.at(i);
      first_var = false;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poly

int PolyTerm::degree() const {
  return std::accumulate(exps.begin(), exps.end(), static_cast<int>(u));
}

bool PolyTermLess::operator()(const PolyTerm& a, const PolyTerm& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Lexicographic on the sorted variable multiset with u first: at the first
  // variable where exponents differ, more copies of it sorts earlier.
  if (a.u != b.u) return a.u > b.u;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  }
  return false;
}

Poly Poly::constant(std::size_t n, const Rational& c) {
  Poly p(n);
  p.add_term(PolyTerm{std::vector<std::uint8_t>(n, 0), 0}, c);
  return p;
}

Poly Poly::generator(std::size_t n, std::size_t i) {
  PolyTerm t{std::vector<std::uint8_t>(n, 0), 0};
  t.exps.at(i) = 1;
  Poly p(n);
  p.add_term(t, 1);
  return p;
}

Poly Poly::param_u(std::size_t n) {
  Poly p(n);
  p.add_term(PolyTerm{std::vector<std::uint8_t>(n, 0), 1}, 1);
  return p;
}

Poly Poly::from_multilinear(std::size_t n, const MultilinearPoly& m) {
  Poly p(n);
  for (const auto& [s, c] : m.terms()) {
    PolyTerm t{std::vector<std::uint8_t>(n, 0), 0};
    for (auto i : elements(s)) t.exps.at(i) = 1;
    p.add_term(t, c);
  }
  return p;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

void Poly::add_term(const PolyTerm& t, const Rational& c) {
  if (c == 0) return;
  if (t.exps.size() != n_) throw InputError("term arity mismatch");
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.n_ != n_) throw InputError("polynomial arity mismatch");
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.n_ != n_) throw InputError("polynomial arity mismatch");
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) throw InputError("polynomial arity mismatch");
  Poly out(a.n_);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      PolyTerm t{ta.exps, ta.u + tb.u};
      for (std::size_t i = 0; i < t.exps.size(); ++i) t.exps[i] += tb.exps[i];
      out.add_term(t, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out(n_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
  return out;
}

unsigned Poly::min_u_exponent() const {
  if (terms_.empty()) return 0;
  unsigned m = ~0U;
  for (const auto& [t, c] : terms_) m = std::min(m, t.u);
  return m;
}

Poly Poly::divide_by_u(unsigned k) const {
  Poly out(n_);
  for (const auto& [t, c] : terms_) {
    if (t.u < k) throw ConsistencyError("polynomial is not divisible by u");
    out.terms_.emplace(PolyTerm{t.exps, t.u - k}, c);
  }
  return out;
}

Poly Poly::specialize_u(const Rational& value) const {
  Poly out(n_);
  for (const auto& [t, c] : terms_) {
    Rational factor = 1;
    for (unsigned i = 0; i < t.u; ++i) factor *= value;
    out.add_term(PolyTerm{t.exps, 0}, c * factor);
  }
  return out;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

MultilinearPoly Poly::reduce(SquareRule rule) const {
  MultilinearPoly out;
  for (const auto& [t, c] : terms_) {
    if (t.u != 0) throw InputError("reduce: polynomial still contains u");
    IndexSet s = 0;
    bool killed = false;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (t.exps[i] > 1 && rule == SquareRule::Nilpotent) killed = true;
      s |= singleton(i);
    }
    if (!killed) out.add_term(s, c);
  }
  return out;
}

MultilinearPoly Poly::to_multilinear() const {
  for (const auto& [t, c] : terms_) {
    if (t.u != 0 || std::any_of(t.exps.begin(), t.exps.end(), [](auto e) { return e > 1; })) {
      throw InputError("to_multilinear: polynomial is not squarefree and u-free");
    }
  }
  return reduce(SquareRule::Idempotent);
}

std::string Poly::to_string(const std::vector<std::string>& labels, const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [t, c] = *it;
    append_coefficient(out, c, first, t.degree() != 0);
    std::vector<std::string> factors;
    if (t.u == 1) factors.push_back("u");
    if (t.u > 1) factors.push_back("u^" + std::to_string(t.u));
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      std::string f = prefix + labels.at(i);
      if (t.exps[i] > 1) f += "^" + std::to_string(t.exps[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k != 0) out += "*";
      out += factors[k];
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// GradedCounts

void GradedCounts::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::int64_t GradedCounts::total() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
}

std::string GradedCounts::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const auto mag = c < 0 ? -c : c;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << "t^" << 2 * k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

GradedCounts operator+(const GradedCounts& a, const GradedCounts& b) {
  GradedCounts out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) out.coeffs[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
  out.trim();
  return out;
}

GradedCounts GradedCounts::shifted() const {
  GradedCounts out;
  out.coeffs.push_back(0);
  out.coeffs.insert(out.coeffs.end(), coeffs.begin(), coeffs.end());
  out.trim();
  return out;
}

bool operator==(const GradedCounts& a, const GradedCounts& b) {
  GradedCounts x = a, y = b;
  x.trim();
  y.trim();
  return x.coeffs == y.coeffs;
}

}  // namespace arrgr

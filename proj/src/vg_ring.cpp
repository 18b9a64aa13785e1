#include "arrgr/vg_ring.hpp"

#include <set>

#include "arrgr/error.hpp"

namespace arrgr {

Poly signed_product(std::size_t n, IndexSet positive_part, IndexSet shifted_part, const Rational& c,
                    unsigned u_power) {
  Poly shift = Poly::constant(n, c);
  for (unsigned k = 0; k < u_power; ++k) shift = shift * Poly::param_u(n);
  Poly out = Poly::constant(n, 1);
  for (auto i : elements(positive_part)) out = out * Poly::generator(n, i);
  for (auto j : elements(shifted_part)) out = out * (Poly::generator(n, j) - shift);
  return out;
}

VgRing::VgRing(const Arrangement& a)
    : arrangement_(a),
      chambers_(arrgr::chambers(a)),
      minimal_infeasible_(minimal_infeasible_sign_sets(a)),
      circuits_(circuits_from_arrangement(a)) {}

ChamberFunction VgRing::heaviside(std::size_t i) const {
  if (i >= arrangement_.size()) throw InputError("hyperplane index out of range");
  ChamberFunction f(chambers_.size());
  for (std::size_t c = 0; c < chambers_.size(); ++c) f[c] = chambers_[c][i] ? 1 : 0;
  return f;
}

ChamberFunction VgRing::monomial_eval(IndexSet s) const {
  ChamberFunction f(chambers_.size());
  for (std::size_t c = 0; c < chambers_.size(); ++c) {
    bool all = true;
    for (auto i : elements(s)) all = all && chambers_[c][i];
    f[c] = all ? 1 : 0;
  }
  return f;
}

ChamberFunction VgRing::evaluate(const Poly& p) const {
  if (p.num_generators() != arrangement_.size()) throw InputError("polynomial arity mismatch");
  ChamberFunction f(chambers_.size());
  for (const auto& [t, c] : p.terms()) {
    if (t.u != 0) throw InputError("cannot evaluate a polynomial containing u");
    for (std::size_t ch = 0; ch < chambers_.size(); ++ch) {
      bool all = true;
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (t.exps[i] != 0 && !chambers_[ch][i]) all = false;
      }
      if (all) f[ch] += c;
    }
  }
  return f;
}

ChamberFunction VgRing::evaluate(const MultilinearPoly& p) const {
  ChamberFunction f(chambers_.size());
  for (const auto& [s, c] : p.terms()) {
    const auto m = monomial_eval(s);
    for (std::size_t ch = 0; ch < f.size(); ++ch) {
      if (m[ch] != 0) f[ch] += c;
    }
  }
  return f;
}

std::vector<std::vector<ChamberFunction>> VgRing::filtration_bases() const {
  const std::size_t n = arrangement_.size();
  std::vector<IndexSet> monomials;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) monomials.push_back(static_cast<IndexSet>(s));
  std::sort(monomials.begin(), monomials.end(), graded_lex_less);

  EchelonBasis span(chambers_.size());
  std::vector<std::vector<ChamberFunction>> bases(n + 1);
  std::vector<ChamberFunction> current;
  std::size_t next = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    for (; next < monomials.size() && popcount(monomials[next]) == static_cast<int>(k); ++next) {
      if (span.full()) continue;
      auto f = monomial_eval(monomials[next]);
      if (span.insert(f)) current.push_back(std::move(f));
    }
    bases[k] = current;
  }
  return bases;
}

FiltrationProfile VgRing::filtration_profile() const {
  FiltrationProfile p;
  p.chambers = chambers_.size();
  std::size_t prev = 0;
  for (const auto& basis : filtration_bases()) {
    p.dims.push_back(basis.size());
    p.gr.push_back(basis.size() - prev);
    prev = basis.size();
  }
  return p;
}

std::vector<Relation> VgRing::relation_families() const {
  const std::size_t n = arrangement_.size();
  std::vector<Relation> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly e = Poly::generator(n, i);
    out.push_back({1, SignedSet{singleton(i), 0}, e * e - e});
  }
  for (const auto& s : minimal_infeasible_) {
    out.push_back({2, s, signed_product(n, s.plus, s.minus, 1, 0)});
  }
  for (const auto& x : circuits_.circuits()) {
    out.push_back({3, x, signed_product(n, x.plus, x.minus, 1, 0) - signed_product(n, x.minus, x.plus, 1, 0)});
  }
  return out;
}

std::vector<Relation> VgRing::family3_without_flat_condition() const {
  const std::size_t n = arrangement_.size();
  std::vector<Relation> out;
  for (const auto& s : minimal_infeasible_) {
    if (flat_nonempty(arrangement_, s.support())) continue;
    out.push_back({3, s, signed_product(n, s.plus, s.minus, 1, 0) - signed_product(n, s.minus, s.plus, 1, 0)});
  }
  return out;
}

VgVerification VgRing::verify(const std::vector<Relation>& rels) const {
  VgVerification v;
  v.chambers = chambers_.size();
  for (const auto& r : rels) {
    ++v.relations_checked;
    const auto f = evaluate(r.poly);
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (f[c] != 0) {
        v.failures.push_back({r, c, f[c]});
        break;
      }
    }
  }
  v.span_dim = filtration_profile().dims.back();
  return v;
}

VgVerification VgRing::verify_relations() const { return verify(relation_families()); }

std::size_t VgRing::presentation_dimension(PresentationFamilies families, std::size_t n_max) const {
  const std::size_t n = arrangement_.size();
  if (n > n_max) {
    throw ResourceError("presentation_dimension: " + std::to_string(n) + " hyperplanes exceeds bound " +
                        std::to_string(n_max));
  }
  const int wanted = families == PresentationFamilies::OneAndTwo ? 2 : 3;
  const std::size_t dim = std::size_t{1} << n;
  EchelonBasis ideal(dim);
  for (const auto& r : relation_families()) {
    if (r.family != wanted) continue;
    const MultilinearPoly g = r.poly.reduce(SquareRule::Idempotent);
    const IndexSet vars = g.variables();
    const IndexSet rest = full_set(n) & ~vars;
    // Distinct multiples by monomials inside the generator's own variables.
    std::set<std::vector<std::pair<IndexSet, std::string>>> seen;
    std::vector<MultilinearPoly> local;
    for (IndexSet m1 = vars;; m1 = (m1 - 1) & vars) {
      auto p = g.multiply(MultilinearPoly::monomial(m1), SquareRule::Idempotent);
      if (!p.is_zero()) {
        std::vector<std::pair<IndexSet, std::string>> key;
        for (const auto& [s, c] : p.terms()) key.emplace_back(s, c.get_str());
        if (seen.insert(std::move(key)).second) local.push_back(std::move(p));
      }
      if (m1 == 0) break;
    }
    // Multiplying by monomials in disjoint variables just unions supports.
    for (const auto& p : local) {
      for (IndexSet m2 = rest;; m2 = (m2 - 1) & rest) {
        RatVector v(dim);
        for (const auto& [s, c] : p.terms()) v[s | m2] = c;
        ideal.insert(std::move(v));
        if (m2 == 0) break;
      }
    }
  }
  return dim - ideal.rank();
}

}  // namespace arrgr

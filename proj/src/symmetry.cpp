#include "arrgr/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arrgr/error.hpp"

namespace arrgr {

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation w{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
  std::iota(w.perm.begin(), w.perm.end(), std::size_t{0});
  return w;
}

bool SignedPermutation::is_identity() const { return *this == identity(perm.size()); }

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  SignedPermutation out{std::vector<std::size_t>(perm.size()), std::vector<int>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.perm[i] = perm.at(other.perm[i]);
    out.flips[i] = other.flips[i] * flips.at(other.perm[i]);
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out{std::vector<std::size_t>(perm.size()), std::vector<int>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.perm[perm[i]] = i;
    out.flips[perm[i]] = flips[i];
  }
  return out;
}

SignedPermutation derive_signed_permutation(const Arrangement& a, const RatMatrix& matrix,
                                            const RatVector& translation) {
  const std::size_t d = a.dim();
  if (matrix.rows() != d || matrix.cols() != d || translation.size() != d) {
    throw InputError("affine map has the wrong dimension");
  }
  const auto inv = inverse(matrix);
  if (!inv) throw InputError("affine map is not invertible");
  SignedPermutation w{std::vector<std::size_t>(a.size()), std::vector<int>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    // (omega_i ∘ map^{-1})(v) = (l M^{-1})·v + c - (l M^{-1})·t
    const auto& f = a.form(i);
    RatVector lin(d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) lin[c] += f.linear[r] * (*inv)(r, c);
    Rational constant = f.constant;
    for (std::size_t c = 0; c < d; ++c) constant -= lin[c] * translation[c];

    bool matched = false;
    for (std::size_t j = 0; j < a.size() && !matched; ++j) {
      const auto& g = a.form(j);
      std::size_t lead = 0;
      while (g.linear[lead] == 0) ++lead;
      const Rational lambda = lin[lead] / g.linear[lead];
      if (lambda == 0) continue;
      bool same = constant == lambda * g.constant;
      for (std::size_t c = 0; c < d && same; ++c) same = lin[c] == lambda * g.linear[c];
      if (same) {
        w.perm[i] = j;
        w.flips[i] = sgn(lambda);
        matched = true;
      }
    }
    if (!matched) throw ConsistencyError("not a symmetry: form '" + a.label(i) + "' has no image");
  }
  return w;
}

std::vector<std::size_t> chamber_permutation(const std::vector<SignVector>& chambers, const SignedPermutation& w) {
  std::map<SignVector, std::size_t> index;
  for (std::size_t c = 0; c < chambers.size(); ++c) index.emplace(chambers[c], c);
  std::vector<std::size_t> out(chambers.size());
  for (std::size_t c = 0; c < chambers.size(); ++c) {
    SignVector image(chambers[c].size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      image[w.perm.at(i)] = w.flips.at(i) > 0 ? chambers[c][i] : !chambers[c][i];
    }
    auto it = index.find(image);
    if (it == index.end()) throw ConsistencyError("image of chamber " + format_signs(chambers[c]) + " is not a chamber");
    out[c] = it->second;
  }
  return out;
}

int GroupSpec::symmetric_degree() const {
  if (elements.empty()) return 0;
  for (const auto& e : elements) {
    if (!e.cycle_type) return 0;
  }
  return elements.front().cycle_type->size();
}

std::vector<std::string> GroupSpec::classes() const {
  std::vector<std::string> out;
  for (const auto& e : elements) {
    if (std::find(out.begin(), out.end(), e.class_label) == out.end()) out.push_back(e.class_label);
  }
  return out;
}

void validate_group(const GroupSpec& g, std::size_t n) {
  std::set<SignedPermutation> members;
  for (const auto& e : g.elements) {
    if (e.action.perm.size() != n || e.action.flips.size() != n) throw InputError("group element has wrong arity");
    std::vector<std::size_t> sorted = e.action.perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted[i] != i) throw InputError("group element is not a permutation of the forms");
      if (e.action.flips[i] != 1 && e.action.flips[i] != -1) throw InputError("flips must be +1 or -1");
    }
    members.insert(e.action);
  }
  if (!members.count(SignedPermutation::identity(n))) throw InputError("group lacks the identity");
  for (const auto& x : members) {
    if (!members.count(x.inverse())) throw InputError("group is not closed under inverses");
    for (const auto& y : members) {
      if (!members.count(x.compose(y))) throw InputError("group is not closed under composition");
    }
  }
}

GroupSpec coordinate_permutation_group(const Arrangement& a) {
  const std::size_t d = a.dim();
  GroupSpec g;
  g.name = "S" + std::to_string(d);
  std::vector<std::size_t> pi(d);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  do {
    // v -> P v with (P v)_{pi(i)} = v_i.
    RatMatrix p(d, d);
    for (std::size_t i = 0; i < d; ++i) p(pi[i], i) = 1;
    const auto ct = cycle_type(pi);
    g.elements.push_back({derive_signed_permutation(a, p, RatVector(d)), ct.to_string(), ct});
  } while (std::next_permutation(pi.begin(), pi.end()));
  return g;
}

void assign_conjugacy_classes(GroupSpec& g) {
  std::vector<int> cls(g.elements.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    if (cls[i] >= 0) continue;
    ++next;
    for (const auto& h : g.elements) {
      const auto conj = h.action.compose(g.elements[i].action).compose(h.action.inverse());
      for (std::size_t j = 0; j < g.elements.size(); ++j) {
        if (g.elements[j].action == conj) cls[j] = next;
      }
    }
  }
  for (std::size_t i = 0; i < g.elements.size(); ++i) g.elements[i].class_label = "c" + std::to_string(cls[i]);
}

CharacterVector GradedCharacters::as_symmetric(const std::vector<Rational>& values) const {
  CharacterVector chi;
  for (std::size_t c = 0; c < classes.size(); ++c) chi[cycle_types.at(classes[c])] = values.at(c);
  return chi;
}

Rational projection_trace(const std::vector<ChamberFunction>& basis, const std::vector<std::size_t>& chamber_perm) {
  const std::size_t r = basis.size();
  if (r == 0) return 0;
  const std::size_t m = basis.front().size();
  EchelonBasis span(m);
  for (const auto& b : basis) span.insert(b);
  std::vector<ChamberFunction> moved;
  for (const auto& b : basis) {
    // (rho f)(w C) = f(C)
    ChamberFunction f(m);
    for (std::size_t c = 0; c < m; ++c) f[chamber_perm[c]] = b[c];
    if (!span.contains(f)) throw ConsistencyError("filtration layer is not invariant under the group");
    moved.push_back(std::move(f));
  }
  RatMatrix gram(r, r), cross(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t c = 0; c < m; ++c) {
        if (basis[i][c] == 0) continue;
        gram(i, j) += basis[i][c] * basis[j][c];
        cross(i, j) += basis[i][c] * moved[j][c];
      }
    }
  }
  const auto gram_inv = inverse(gram);
  if (!gram_inv) throw ConsistencyError("filtration basis is not independent");
  const RatMatrix prod = *gram_inv * cross;
  Rational trace = 0;
  for (std::size_t i = 0; i < r; ++i) trace += prod(i, i);
  return trace;
}

GradedCharacters graded_character(const VgRing& ring, const GroupSpec& group) {
  validate_group(group, ring.arrangement().size());
  GradedCharacters out;
  out.classes = group.classes();
  const auto bases = ring.filtration_bases();
  const std::size_t grades = bases.size();
  std::map<std::string, std::vector<Rational>> by_class;
  for (const auto& e : group.elements) {
    ++out.class_sizes[e.class_label];
    if (e.cycle_type) out.cycle_types[e.class_label] = *e.cycle_type;
    const auto perm = chamber_permutation(ring.chambers(), e.action);
    std::vector<Rational> traces;
    for (const auto& basis : bases) traces.push_back(projection_trace(basis, perm));
    auto [it, inserted] = by_class.try_emplace(e.class_label, traces);
    if (!inserted && it->second != traces) {
      throw ConsistencyError("character is not constant on class " + e.class_label);
    }
  }
  out.layers.assign(grades, std::vector<Rational>(out.classes.size()));
  out.chamber_character.assign(out.classes.size(), 0);
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const auto& traces = by_class.at(out.classes[c]);
    for (std::size_t k = 0; k < grades; ++k) {
      out.layers[k][c] = traces[k] - (k == 0 ? Rational(0) : traces[k - 1]);
    }
    out.chamber_character[c] = traces.back();
  }
  // Drop trailing zero layers beyond the top nonzero grade.
  while (out.layers.size() > 1 &&
         std::all_of(out.layers.back().begin(), out.layers.back().end(), [](const Rational& x) { return x == 0; })) {
    out.layers.pop_back();
  }
  return out;
}

}  // namespace arrgr

#include "arrgr/arrangement.hpp"

#include <algorithm>
#include <set>

#include "arrgr/error.hpp"

namespace arrgr {

Rational AffineForm::evaluate(std::span<const Rational> v) const {
  Rational s = constant;
  for (std::size_t i = 0; i < linear.size(); ++i) s += linear[i] * v[i];
  return s;
}

std::string format_signs(const SignVector& s) {
  std::string out;
  for (bool b : s) out += b ? '+' : '-';
  return out;
}

bool signed_set_less(const SignedSet& a, const SignedSet& b) {
  if (a.support() != b.support()) return graded_lex_less(a.support(), b.support());
  // More pluses first.
  if (a.plus != b.plus) return graded_lex_less(b.plus, a.plus);
  return false;
}

namespace {

bool proportional(const AffineForm& f, const AffineForm& g) {
  std::vector<RatVector> rows;
  RatVector a = f.linear, b = g.linear;
  a.push_back(f.constant);
  b.push_back(g.constant);
  rows.push_back(std::move(a));
  rows.push_back(std::move(b));
  return rank(RatMatrix::from_rows(rows, f.linear.size() + 1)) < 2;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

Arrangement Arrangement::build(std::size_t dim, std::vector<AffineForm> forms, std::vector<std::string> labels) {
  if (forms.size() != labels.size()) throw InputError("number of labels does not match number of forms");
  if (forms.size() > kMaxElements) throw ResourceError("more than 31 hyperplanes");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].linear.size() != dim) {
      throw InputError("form '" + labels[i] + "' has linear part of length " +
                       std::to_string(forms[i].linear.size()) + ", expected " + std::to_string(dim));
    }
    if (is_zero(forms[i].linear)) throw InputError("form '" + labels[i] + "' is constant");
    if (!seen.insert(labels[i]).second) throw InputError("duplicate label '" + labels[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(forms[i], forms[j])) {
        throw InputError("forms '" + labels[j] + "' and '" + labels[i] + "' define the same hyperplane");
      }
    }
  }
  return Arrangement(dim, std::move(forms), std::move(labels));
}

Arrangement Arrangement::braid(std::size_t n) {
  if (n < 2) throw InputError("braid arrangement needs n >= 2");
  if (n > 9) throw ResourceError("braid arrangement labels support n <= 9");
  std::vector<AffineForm> forms;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      AffineForm f{RatVector(n), 0};
      f.linear[i] = 1;
      f.linear[j] = -1;
      forms.push_back(std::move(f));
      labels.push_back(std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return build(n, std::move(forms), std::move(labels));
}

Arrangement Arrangement::semiorder(std::size_t n) {
  if (n < 2) throw InputError("semiorder arrangement needs n >= 2");
  if (n > 6) throw ResourceError("semiorder arrangement supports n <= 6");
  std::vector<AffineForm> forms;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      AffineForm f{RatVector(n), -1};
      f.linear[i] = 1;
      f.linear[j] = -1;
      forms.push_back(std::move(f));
      labels.push_back(std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return build(n, std::move(forms), std::move(labels));
}

Arrangement Arrangement::boolean(std::size_t n) {
  if (n < 1) throw InputError("boolean arrangement needs n >= 1");
  std::vector<AffineForm> forms;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    AffineForm f{RatVector(n), 0};
    f.linear[i] = 1;
    forms.push_back(std::move(f));
    labels.push_back(std::to_string(i + 1));
  }
  return build(n, std::move(forms), std::move(labels));
}

std::size_t Arrangement::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown hyperplane label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Arrangement::is_central() const {
  return std::all_of(forms_.begin(), forms_.end(), [](const AffineForm& f) { return f.is_central(); });
}

Arrangement cone(const Arrangement& a) {
  std::vector<AffineForm> forms;
  std::vector<std::string> labels = a.labels();
  for (const auto& f : a.forms()) {
    AffineForm c{f.linear, 0};
    c.linear.push_back(f.constant);
    forms.push_back(std::move(c));
  }
  AffineForm h0{RatVector(a.dim() + 1), 0};
  h0.linear.back() = -1;
  forms.push_back(std::move(h0));
  std::string extra = "H0";
  while (std::find(labels.begin(), labels.end(), extra) != labels.end()) extra += "'";
  labels.push_back(extra);
  return Arrangement::build(a.dim() + 1, std::move(forms), std::move(labels));
}

Arrangement delete_hyperplane(const Arrangement& a, std::size_t i) {
  if (i >= a.size()) throw InputError("hyperplane index out of range");
  auto forms = a.forms();
  auto labels = a.labels();
  forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(i));
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(i));
  return Arrangement::build(a.dim(), std::move(forms), std::move(labels));
}

Restriction restrict_to(const Arrangement& a, std::size_t i) {
  if (i >= a.size()) throw InputError("hyperplane index out of range");
  const AffineForm& h = a.form(i);
  std::size_t pivot = a.dim();
  for (std::size_t k = a.dim(); k-- > 0;) {
    if (h.linear[k] != 0) {
      pivot = k;
      break;
    }
  }
  // On H: x_pivot = -(constant + sum_{k != pivot} h_k x_k) / h_pivot.
  std::vector<AffineForm> forms;
  std::vector<std::string> labels;
  Restriction out{Arrangement::build(a.dim() - 1, {}, {}), {}};
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == i) continue;
    const AffineForm& f = a.form(j);
    const Rational ratio = f.linear[pivot] / h.linear[pivot];
    AffineForm g{RatVector{}, f.constant - ratio * h.constant};
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (k != pivot) g.linear.push_back(f.linear[k] - ratio * h.linear[k]);
    }
    if (is_zero(g.linear)) {
      if (g.constant == 0) throw ConsistencyError("two forms define the same hyperplane");
      continue;
    }
    auto dup = std::find_if(forms.begin(), forms.end(), [&g](const AffineForm& e) { return proportional(e, g); });
    if (dup != forms.end()) {
      out.provenance[j] = static_cast<std::size_t>(dup - forms.begin());
      continue;
    }
    out.provenance[j] = forms.size();
    forms.push_back(std::move(g));
    labels.push_back(a.label(j));
  }
  out.arrangement = Arrangement::build(a.dim() - 1, std::move(forms), std::move(labels));
  return out;
}

namespace {

StrictConstraint constraint_for(const AffineForm& f, bool positive) {
  return StrictConstraint{f.linear, f.constant, positive ? Side::Positive : Side::Negative};
}

void chamber_search(const Arrangement& a, std::vector<StrictConstraint>& prefix, SignVector& signs,
                    std::vector<SignVector>& out) {
  const std::size_t depth = signs.size();
  if (depth == a.size()) {
    out.push_back(signs);
    return;
  }
  for (bool positive : {true, false}) {
    prefix.push_back(constraint_for(a.form(depth), positive));
    if (strict_feasible(prefix)) {
      signs.push_back(positive);
      chamber_search(a, prefix, signs, out);
      signs.pop_back();
    }
    prefix.pop_back();
  }
}

}  // namespace

bool sign_condition_feasible(const Arrangement& a, const SignedSet& s) {
  std::vector<StrictConstraint> cs;
  for (auto i : elements(s.support())) cs.push_back(constraint_for(a.form(i), contains(s.plus, i)));
  if (cs.empty()) return true;
  return strict_feasible(cs);
}

std::vector<SignVector> chambers(const Arrangement& a) {
  std::vector<SignVector> out;
  std::vector<StrictConstraint> prefix;
  SignVector signs;
  chamber_search(a, prefix, signs, out);
  return out;
}

bool flat_nonempty(const Arrangement& a, IndexSet s) {
  if (s == 0) return true;
  const auto idx = elements(s);
  RatMatrix lin(idx.size(), a.dim());
  RatMatrix aug(idx.size(), a.dim() + 1);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto& f = a.form(idx[r]);
    for (std::size_t c = 0; c < a.dim(); ++c) {
      lin(r, c) = f.linear[c];
      aug(r, c) = f.linear[c];
    }
    aug(r, a.dim()) = f.constant;
  }
  return rank(lin) == rank(aug);
}

std::vector<SignedSet> minimal_infeasible_sign_sets(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<IndexSet> supports;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) supports.push_back(static_cast<IndexSet>(s));
  std::sort(supports.begin(), supports.end(), graded_lex_less);
  std::vector<SignedSet> found;
  for (IndexSet support : supports) {
    // Enumerate plus-parts as subsets of the support.
    std::vector<SignedSet> here;
    for (IndexSet plus = support;; plus = (plus - 1) & support) {
      const SignedSet candidate{plus, support & ~plus};
      const bool dominated = std::any_of(found.begin(), found.end(),
                                         [&candidate](const SignedSet& m) { return m.conforms_to(candidate); });
      if (!dominated && !sign_condition_feasible(a, candidate)) here.push_back(candidate);
      if (plus == 0) break;
    }
    std::sort(here.begin(), here.end(), signed_set_less);
    found.insert(found.end(), here.begin(), here.end());
  }
  return found;
}

RatMatrix homogenized_matrix(const Arrangement& a, IndexSet columns) {
  const auto idx = elements(columns);
  RatMatrix m(a.dim() + 1, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const auto& f = a.form(idx[c]);
    for (std::size_t r = 0; r < a.dim(); ++r) m(r, c) = f.linear[r];
    m(a.dim(), c) = f.constant;
  }
  return m;
}

}  // namespace arrgr

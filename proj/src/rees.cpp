#include "arrgr/rees.hpp"

#include <algorithm>
#include <set>

#include "arrgr/cordovil.hpp"
#include "arrgr/error.hpp"
#include "arrgr/vg_ring.hpp"

namespace arrgr {

std::vector<Relation> rees_relation_families(const Arrangement& a) {
  const std::size_t n = a.size();
  const Poly u = Poly::param_u(n);
  std::vector<Relation> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly e = Poly::generator(n, i);
    out.push_back({1, SignedSet{singleton(i), 0}, e * (e - u)});
  }
  for (const auto& s : minimal_infeasible_sign_sets(a)) {
    out.push_back({2, s, signed_product(n, s.plus, s.minus, 1, 1)});
  }
  const auto m = MatroidData::from_arrangement(a);
  for (const auto& x : m.circuits().circuits()) {
    const Poly diff = signed_product(n, x.plus, x.minus, 1, 1) - signed_product(n, x.minus, x.plus, 1, 1);
    if (diff.min_u_exponent() < 1) {
      throw ConsistencyError("family-(3) difference not divisible by u for " + format_source({3, x, diff}, a.labels()));
    }
    out.push_back({3, x, diff.divide_by_u(1)});
  }
  return out;
}

Relation specialize(const Relation& r, int u_value) {
  if (u_value != 0 && u_value != 1) throw InputError("u can only be specialized to 0 or 1");
  return {r.family, r.source, r.poly.specialize_u(u_value)};
}

bool SpecializationReport::ok() const {
  const bool extras_vanish =
      std::all_of(extra_u0.begin(), extra_u0.end(), [](const auto& e) { return e.second; });
  return extras_vanish && missing_u0.empty() && mismatched_u1.empty() && inhomogeneous == 0;
}

SpecializationReport compare_specializations(const Arrangement& a) {
  const auto rees = rees_relation_families(a);
  const auto m = MatroidData::from_arrangement(a);
  const CordovilAlgebra algebra(m, HyperplaneOrdering::natural(a.size()));
  const auto b = b_relation_families(m);
  const auto vg = VgRing(a).relation_families();

  SpecializationReport report;
  report.relations = rees.size();
  std::vector<bool> hit(b.size(), false);
  for (const auto& r : rees) {
    if (!r.poly.is_homogeneous()) ++report.inhomogeneous;

    const auto zero = specialize(r, 0);
    bool matched = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].family == r.family && b[j].poly == zero.poly) {
        hit[j] = true;
        matched = true;
      }
    }
    if (matched) {
      ++report.matched_u0;
    } else {
      const bool vanishes = algebra.straighten(zero.poly.reduce(SquareRule::Nilpotent)).coords.terms().empty();
      report.extra_u0.push_back({zero, vanishes});
    }

    const auto one = specialize(r, 1);
    const auto same = std::find_if(vg.begin(), vg.end(), [&](const Relation& v) {
      return v.family == r.family && v.source == r.source;
    });
    if (same != vg.end() && same->poly == one.poly) {
      ++report.matched_u1;
    } else {
      report.mismatched_u1.push_back(one);
    }
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!hit[j]) report.missing_u0.push_back(b[j]);
  }
  if (report.matched_u1 != vg.size()) {
    for (const auto& v : vg) {
      const bool found = std::any_of(rees.begin(), rees.end(), [&](const Relation& r) {
        return r.family == v.family && r.source == v.source;
      });
      if (!found) report.mismatched_u1.push_back(v);
    }
  }
  return report;
}

bool ReesHilbertReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReesHilbertRow& r) {
    return r.filtration_dim == r.gr_partial && r.gr_partial == r.nbc_partial;
  });
}

ReesHilbertReport rees_hilbert_check(const Arrangement& a) {
  const auto profile = VgRing(a).filtration_profile();
  const auto nbc = nbc_sets(MatroidData::from_arrangement(a), HyperplaneOrdering::natural(a.size()));
  ReesHilbertReport report;
  std::size_t gr_sum = 0, nbc_sum = 0;
  for (std::size_t k = 0; k < profile.dims.size(); ++k) {
    gr_sum += profile.gr[k];
    if (k < nbc.size()) nbc_sum += nbc[k].size();
    report.rows.push_back({k, profile.dims[k], gr_sum, nbc_sum});
  }
  // Trailing grades where nothing changes carry no information.
  while (report.rows.size() > 1 && report.rows.back().filtration_dim == report.rows[report.rows.size() - 2].filtration_dim &&
         report.rows.back().nbc_partial == report.rows[report.rows.size() - 2].nbc_partial) {
    report.rows.pop_back();
  }
  return report;
}

}  // namespace arrgr

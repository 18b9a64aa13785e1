#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "arrgr/cordovil.hpp"
#include "arrgr/error.hpp"
#include "arrgr/io.hpp"
#include "arrgr/oracles.hpp"
#include "arrgr/paper_suite.hpp"
#include "arrgr/rees.hpp"
#include "arrgr/symmetry.hpp"
#include "arrgr/vg_ring.hpp"

using namespace arrgr;
using io::Json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kResource = 3 };

struct Config {
  std::string file;
  int braid = 0;
  int semiorder = 0;
  int boolean = 0;
  std::string order;
  std::string group = "Sn-coordinates";
  bool json = false;
  std::size_t nmax = 14;
};

// Either an arrangement or a bare circuit set read from a file.
struct Input {
  std::optional<Arrangement> arrangement;
  std::optional<CircuitSet> circuits;

  const std::vector<std::string>& labels() const { return arrangement ? arrangement->labels() : circuits->ground(); }
  std::size_t size() const { return labels().size(); }
  MatroidData matroid() const {
    return arrangement ? MatroidData::from_arrangement(*arrangement) : MatroidData::from_circuits(*circuits);
  }
  const Arrangement& need_arrangement(const std::string& cmd) const {
    if (!arrangement) throw InputError("'" + cmd + "' needs an arrangement, not a circuit file");
    return *arrangement;
  }
};

Input load(const Config& cfg) {
  const int sources = !cfg.file.empty() + (cfg.braid > 0) + (cfg.semiorder > 0) + (cfg.boolean > 0);
  if (sources != 1) throw InputError("give exactly one of --file, --braid, --semiorder, --boolean");
  Input in;
  if (cfg.braid > 0) {
    in.arrangement = Arrangement::braid(cfg.braid);
  } else if (cfg.semiorder > 0) {
    in.arrangement = Arrangement::semiorder(cfg.semiorder);
  } else if (cfg.boolean > 0) {
    in.arrangement = Arrangement::boolean(cfg.boolean);
  } else {
    const Json j = io::read_json_file(cfg.file);
    if (j.is_object() && j.contains("circuits")) {
      in.circuits = io::circuits_from_json(j);
    } else {
      in.arrangement = io::arrangement_from_json(j);
    }
  }
  if (in.size() > cfg.nmax) {
    throw ResourceError(std::to_string(in.size()) + " hyperplanes exceed --nmax " + std::to_string(cfg.nmax));
  }
  return in;
}

HyperplaneOrdering ordering(const Config& cfg, const Input& in) {
  return cfg.order.empty() ? HyperplaneOrdering::natural(in.size()) : HyperplaneOrdering::from_labels(cfg.order, in.labels());
}

Json counts_json(const GradedCounts& g) { return Json(g.coeffs); }

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return "(" + out + ")";
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_chambers(const Config& cfg, const Input& in) {
  const auto& a = in.need_arrangement("chambers");
  const auto ch = chambers(a);
  Json list = Json::array();
  std::ostringstream out;
  out << ch.size() << " chambers\n";
  for (const auto& s : ch) {
    list.push_back(format_signs(s));
    out << "  " << format_signs(s) << "\n";
  }
  emit(cfg, {{"labels", a.labels()}, {"count", ch.size()}, {"chambers", list}}, out.str());
  return kPass;
}

int cmd_circuits(const Config& cfg, const Input& in) {
  const CircuitSet cs = in.arrangement ? circuits_from_arrangement(*in.arrangement) : *in.circuits;
  const bool central = !in.arrangement || in.arrangement->is_central();
  std::optional<AxiomReport> report;
  if (central) report = validate_circuit_axioms(cs.circuits(), cs.ground());
  std::ostringstream out;
  out << cs.circuits().size() << " signed circuits\n";
  for (const auto& x : cs.circuits()) {
    out << "  +" << format_set(x.plus, cs.ground()) << " -" << format_set(x.minus, cs.ground()) << "\n";
  }
  if (report) {
    out << "axioms: " << (report->ok() ? "ok" : "violated") << "\n";
    for (const auto& v : report->violations) out << "  axiom " << v.axiom << ": " << v.witness << "\n";
  } else {
    out << "axioms: not checked (affine arrangement)\n";
  }
  Json j = io::circuits_to_json(cs, central);
  if (report) j["axioms_ok"] = report->ok();
  emit(cfg, j, out.str());
  return !report || report->ok() ? kPass : kFail;
}

int cmd_nbc(const Config& cfg, const Input& in) {
  const auto sets = nbc_sets(in.matroid(), ordering(cfg, in));
  Json grades = Json::array();
  std::ostringstream out;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    Json grade = Json::array();
    out << "grade " << k << " (" << sets[k].size() << "):";
    for (IndexSet s : sets[k]) {
      grade.push_back(format_set(s, in.labels()));
      out << " " << format_set(s, in.labels());
    }
    out << "\n";
    grades.push_back(grade);
  }
  emit(cfg, {{"grades", grades}}, out.str());
  return kPass;
}

int cmd_poincare(const Config& cfg, const Input& in) {
  const auto p = poincare_from_nbc(in.matroid(), ordering(cfg, in));
  emit(cfg, {{"poincare", p.to_string()}, {"coeffs", counts_json(p)}}, p.to_string() + "\n");
  return kPass;
}

int cmd_vg(const Config& cfg, const Input& in) {
  const auto& a = in.need_arrangement("vg");
  const VgRing ring(a);
  const auto profile = ring.filtration_profile();
  const auto rels = ring.relation_families();
  const auto check = ring.verify(rels);
  const auto pres = ring.presentation_dimension(PresentationFamilies::OneAndTwo, cfg.nmax);
  std::optional<std::size_t> pres13;
  if (a.is_central()) pres13 = ring.presentation_dimension(PresentationFamilies::OneAndThree, cfg.nmax);

  std::string gens;
  for (std::size_t i = 0; i < a.size(); ++i) gens += (i ? "," : "") + std::string("e") + a.label(i);
  std::string ideal;
  Json rel_json = Json::array();
  for (const auto& r : rels) {
    const auto text = r.poly.to_string(a.labels());
    ideal += (ideal.empty() ? "" : ", ") + text;
    rel_json.push_back({{"family", r.family}, {"source", format_source(r, a.labels())}, {"poly", text}});
  }
  const std::string presentation = "Q[" + gens + "]/<" + ideal + ">";
  const bool ok = check.ok() && pres == ring.num_chambers() && (!pres13 || *pres13 == ring.num_chambers());

  std::ostringstream out;
  out << "chambers: " << ring.num_chambers() << "\n";
  out << "filtration dims: " << join(profile.dims) << "\n";
  out << "gr dims: " << join(profile.gr) << "\n";
  out << "presentation: " << presentation << "\n";
  out << "relations vanishing: " << check.relations_checked - check.failures.size() << "/" << check.relations_checked << "\n";
  for (const auto& f : check.failures) {
    out << "  nonzero: " << f.relation.poly.to_string(a.labels()) << " on " << format_signs(ring.chambers()[f.chamber]) << "\n";
  }
  out << "presentation dimension: " << pres << "\n";
  if (pres13) out << "presentation dimension, families (1)+(3): " << *pres13 << "\n";
  out << (ok ? "PASS" : "FAIL") << "\n";

  Json j{{"chambers", ring.num_chambers()}, {"dims", profile.dims}, {"gr", profile.gr}, {"presentation", presentation},
         {"relations", rel_json}, {"failures", check.failures.size()}, {"presentation_dimension", pres}, {"ok", ok}};
  if (pres13) j["presentation_dimension_1_3"] = *pres13;
  emit(cfg, j, out.str());
  return ok ? kPass : kFail;
}

int cmd_cordovil(const Config& cfg, const Input& in) {
  const auto m = in.matroid();
  const auto ord = ordering(cfg, in);
  const CordovilAlgebra alg(m, ord);
  const auto h = alg.hilbert_series();
  const auto span = alg.straightening_span_dims();
  bool ok = true;
  for (std::size_t k = 0; k < span.size(); ++k) ok = ok && k < h.coeffs.size() && static_cast<std::int64_t>(span[k]) == h.coeffs[k];

  std::ostringstream out;
  out << "hilbert series: " << h.to_string() << "\n";
  out << "straightening span dims: " << join(span) << "\n";
  Json j{{"hilbert", counts_json(h)}, {"span_dims", span}};

  if (in.size() <= 8) {
    const auto ideal = oracles::cordovil_ideal(m, ord);
    std::size_t agree = 0, total = 0;
    for (IndexSet s = 0; s <= full_set(in.size()); ++s, ++total) {
      const auto p = MultilinearPoly::monomial(s);
      agree += oracles::congruent_mod_ideal(ideal, p, alg.straighten(p).coords, in.size());
    }
    ok = ok && agree == total;
    out << "straightening vs quotient oracle: " << agree << "/" << total << "\n";
    j["oracle_agreement"] = {agree, total};
  }
  Json products = Json::array();
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t k = i + 1; k < in.size(); ++k) {
      const auto x = alg.multiply(alg.generator(i), alg.generator(k));
      if (x.coords == MultilinearPoly::monomial(singleton(i) | singleton(k))) continue;
      out << "x" << in.labels()[i] << "*x" << in.labels()[k] << " = " << x.coords.to_string(in.labels(), "x") << "\n";
      products.push_back({{"pair", {in.labels()[i], in.labels()[k]}}, {"value", io::element_to_json(x, in.labels())}});
    }
  }
  j["rewritten_products"] = products;

  if (in.arrangement) {
    const auto report = leading_form_check(m, ord);
    std::size_t plus = 0, minus = 0;
    for (const auto& e : report.entries) {
      plus += e.sign > 0;
      minus += e.sign < 0;
      if (e.sign == 0) out << "  leading form mismatch: " << e.leading.to_string(in.labels(), "e") << "\n";
    }
    out << "leading forms: " << plus << " equal dtilde, " << minus << " equal -dtilde, "
        << report.entries.size() - plus - minus << " mismatches\n";
    ok = ok && report.ok();
    j["leading_forms"] = {{"plus", plus}, {"minus", minus}, {"ok", report.ok()}};
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  j["ok"] = ok;
  emit(cfg, j, out.str());
  return ok ? kPass : kFail;
}

int cmd_rees(const Config& cfg, const Input& in) {
  const auto& a = in.need_arrangement("rees");
  const auto rels = rees_relation_families(a);
  const auto spec = compare_specializations(a);
  const auto hilbert = rees_hilbert_check(a);
  const bool ok = spec.ok() && hilbert.ok();

  std::ostringstream out;
  Json rel_json = Json::array();
  for (const auto& r : rels) {
    out << "(" << r.family << ") " << format_source(r, a.labels()) << ": " << r.poly.to_string(a.labels()) << "\n";
    rel_json.push_back({{"family", r.family}, {"source", format_source(r, a.labels())}, {"poly", r.poly.to_string(a.labels())},
                        {"u0", specialize(r, 0).poly.to_string(a.labels())}, {"u1", specialize(r, 1).poly.to_string(a.labels())}});
  }
  out << "u=0: " << spec.matched_u0 << " match B generators, " << spec.extra_u0.size()
      << " further monomials vanish in B, " << spec.missing_u0.size() << " B generators missed\n";
  out << "u=1: " << spec.matched_u1 << " match VG generators, " << spec.mismatched_u1.size() << " mismatches\n";
  out << "k  dim P^k  sum gr  sum nbc\n";
  Json table = Json::array();
  for (const auto& row : hilbert.rows) {
    out << row.k << "  " << row.filtration_dim << "  " << row.gr_partial << "  " << row.nbc_partial << "\n";
    table.push_back({row.k, row.filtration_dim, row.gr_partial, row.nbc_partial});
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  emit(cfg,
       {{"relations", rel_json},
        {"u0", {{"matched", spec.matched_u0}, {"vanishing_extras", spec.extra_u0.size()}, {"missing", spec.missing_u0.size()}}},
        {"u1", {{"matched", spec.matched_u1}, {"mismatched", spec.mismatched_u1.size()}}},
        {"hilbert", table},
        {"ok", ok}},
       out.str());
  return ok ? kPass : kFail;
}

int cmd_characters(const Config& cfg, const Input& in) {
  const auto& a = in.need_arrangement("characters");
  const GroupSpec g = cfg.group == "Sn-coordinates" ? coordinate_permutation_group(a)
                                                   : io::group_from_json(io::read_json_file(cfg.group), a);
  const VgRing ring(a);
  const auto chars = graded_character(ring, g);
  const int n = g.symmetric_degree();
  std::ostringstream out;
  Json j{{"group", g.name}, {"classes", chars.classes}};

  auto value_row = [&](const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(to_string(x));
    return s;
  };
  out << "class:";
  for (const auto& c : chars.classes) out << " " << c;
  out << "\n";
  Json layers = Json::array();
  for (std::size_t k = 0; k < chars.layers.size(); ++k) {
    out << "grade " << k << ":";
    for (const auto& x : value_row(chars.layers[k])) out << " " << x;
    out << "\n";
    layers.push_back(value_row(chars.layers[k]));
  }
  out << "chambers:";
  for (const auto& x : value_row(chars.chamber_character)) out << " " << x;
  out << "\n";
  j["layers"] = layers;
  j["chamber_character"] = value_row(chars.chamber_character);

  if (n > 0) {
    const auto parts = partitions_of(n);
    out << "\nmultiplicities:";
    for (const auto& p : parts) out << " " << p.to_string();
    out << "\n";
    Json table = Json::array();
    auto row = [&](const std::string& name, const std::vector<Rational>& values) {
      const auto m = decompose(chars.as_symmetric(values), n);
      out << name << ":";
      Json r = Json::object();
      for (const auto& p : parts) {
        const long v = m.count(p) ? m.at(p) : 0;
        out << " " << v;
        r[p.to_string()] = v;
      }
      out << "\n";
      return r;
    };
    for (std::size_t k = 0; k < chars.layers.size(); ++k) table.push_back(row("grade " + std::to_string(k), chars.layers[k]));
    j["decomposition"] = table;
    j["total"] = row("total", chars.chamber_character);
  }
  emit(cfg, j, out.str());
  return kPass;
}

int cmd_export(const Input& in) {
  const Json j = in.arrangement ? io::arrangement_to_json(*in.arrangement) : io::circuits_to_json(*in.circuits, true);
  std::cout << j.dump(2) << "\n";
  return kPass;
}

int cmd_paper_suite(const Config& cfg) {
  bool all = true;
  Json list = Json::array();
  std::ostringstream out;
  for (const auto& c : paper_criteria()) {
    const auto r = run_criterion(c);
    const bool pass = r.passed && r.within_limit();
    all = all && pass;
    out << (pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << ": " << r.detail << "\n";
    list.push_back({{"id", r.id}, {"title", r.title}, {"pass", pass}, {"detail", r.detail}});
  }
  emit(cfg, {{"criteria", list}, {"ok", all}}, out.str());
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplane arrangement rings: chambers, circuits, NBC bases, filtrations and representations"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--file", cfg.file, "arrangement or circuit JSON file");
  app.add_option("--braid", cfg.braid, "braid arrangement on n coordinates");
  app.add_option("--semiorder", cfg.semiorder, "semiorder arrangement on n coordinates");
  app.add_option("--boolean", cfg.boolean, "coordinate hyperplanes in dimension n");
  app.add_option("--order", cfg.order, "hyperplane ordering, e.g. \"23,12,13\"");
  app.add_option("--group", cfg.group, "group JSON file or Sn-coordinates");
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--nmax", cfg.nmax, "largest number of hyperplanes accepted")->capture_default_str();

  const std::vector<std::pair<std::string, std::string>> commands{
      {"chambers", "list chambers as sign vectors"},
      {"circuits", "signed circuits and axiom check"},
      {"nbc", "no-broken-circuit sets by grade"},
      {"poincare", "Poincare polynomial from NBC counts"},
      {"vg", "Heaviside filtration, relations and presentation dimension"},
      {"cordovil", "Hilbert series, straightening checks and leading forms"},
      {"rees", "equivariant relations, specializations and Hilbert table"},
      {"characters", "graded characters and decompositions"},
      {"paper-suite", "run every reproduction criterion"},
      {"export", "print the input as JSON"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "paper-suite") return cmd_paper_suite(cfg);
    const Input in = load(cfg);
    if (cmd == "chambers") return cmd_chambers(cfg, in);
    if (cmd == "circuits") return cmd_circuits(cfg, in);
    if (cmd == "nbc") return cmd_nbc(cfg, in);
    if (cmd == "poincare") return cmd_poincare(cfg, in);
    if (cmd == "vg") return cmd_vg(cfg, in);
    if (cmd == "cordovil") return cmd_cordovil(cfg, in);
    if (cmd == "rees") return cmd_rees(cfg, in);
    if (cmd == "characters") return cmd_characters(cfg, in);
    if (cmd == "export") return cmd_export(in);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}

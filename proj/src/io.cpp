#include "arrgr/io.hpp"

#include <fstream>
#include <sstream>

#include "arrgr/error.hpp"

namespace arrgr::io {

namespace {

Rational rational_of(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected an integer or a rational string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& l) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == l) return i;
  }
  throw InputError("unknown label '" + l + "'");
}

IndexSet label_set(const Json& j, const std::vector<std::string>& labels) {
  if (!j.is_array()) throw InputError("expected a list of labels");
  IndexSet s = 0;
  for (const auto& l : j) s |= singleton(label_index(labels, l.get<std::string>()));
  return s;
}

Json labels_of(IndexSet s, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (auto i : elements(s)) out.push_back(labels[i]);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Arrangement arrangement_from_json(const Json& j) {
  try {
    const auto dim = field(j, "dim").get<std::size_t>();
    const Json& forms = field(j, "forms");
    if (!forms.is_array()) throw InputError("'forms' must be a list");
    std::vector<AffineForm> out;
    std::vector<std::string> labels;
    for (const auto& f : forms) {
      AffineForm form;
      for (const auto& x : field(f, "linear")) form.linear.push_back(rational_of(x));
      form.constant = f.contains("constant") ? rational_of(f.at("constant")) : Rational(0);
      labels.push_back(f.contains("label") ? f.at("label").get<std::string>() : std::to_string(out.size() + 1));
      out.push_back(std::move(form));
    }
    return Arrangement::build(dim, std::move(out), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed arrangement: ") + e.what());
  }
}

Json arrangement_to_json(const Arrangement& a) {
  Json forms = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json lin = Json::array();
    for (const auto& x : a.form(i).linear) lin.push_back(to_string(x));
    forms.push_back({{"linear", lin}, {"constant", to_string(a.form(i).constant)}, {"label", a.label(i)}});
  }
  return {{"dim", a.dim()}, {"forms", forms}};
}

CircuitSet circuits_from_json(const Json& j) {
  try {
    const auto ground = field(j, "ground").get<std::vector<std::string>>();
    std::vector<SignedSet> circuits;
    for (const auto& c : field(j, "circuits")) {
      circuits.push_back({label_set(field(c, "plus"), ground), label_set(field(c, "minus"), ground)});
    }
    const bool validate = j.value("validate", true);
    return validate ? CircuitSet::create(ground, std::move(circuits)) : CircuitSet::create_unvalidated(ground, std::move(circuits));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed circuit file: ") + e.what());
  }
}

Json circuits_to_json(const CircuitSet& c, bool validate) {
  Json list = Json::array();
  for (const auto& x : c.circuits()) {
    list.push_back({{"plus", labels_of(x.plus, c.ground())}, {"minus", labels_of(x.minus, c.ground())}});
  }
  return {{"ground", c.ground()}, {"circuits", list}, {"validate", validate}};
}

GroupSpec group_from_json(const Json& j, const Arrangement& a) {
  try {
    const auto name = field(j, "group").get<std::string>();
    if (name == "Sn-coordinates") return coordinate_permutation_group(a);
    GroupSpec g;
    g.name = name;
    const std::size_t n = a.size();
    for (const auto& e : field(j, "action")) {
      GroupElement el{SignedPermutation::identity(n), "", std::nullopt};
      if (e.contains("matrix")) {
        const auto rows = e.at("matrix");
        std::vector<RatVector> m;
        for (const auto& r : rows) {
          RatVector row;
          for (const auto& x : r) row.push_back(rational_of(x));
          m.push_back(std::move(row));
        }
        RatVector t(a.dim());
        if (e.contains("translation")) {
          t.clear();
          for (const auto& x : e.at("translation")) t.push_back(rational_of(x));
        }
        if (m.size() != a.dim()) throw InputError("matrix has the wrong number of rows");
        el.action = derive_signed_permutation(a, RatMatrix::from_rows(m, a.dim()), t);
      } else {
        if (e.contains("perm")) {
          for (const auto& [from, to] : e.at("perm").items()) {
            el.action.perm[label_index(a.labels(), from)] = label_index(a.labels(), to.get<std::string>());
          }
        }
        if (e.contains("flips")) {
          for (const auto& [l, f] : e.at("flips").items()) el.action.flips[label_index(a.labels(), l)] = f.get<int>();
        }
      }
      if (e.contains("cycle_type")) el.cycle_type = make_partition(e.at("cycle_type").get<std::vector<int>>());
      g.elements.push_back(std::move(el));
    }
    const bool typed = std::all_of(g.elements.begin(), g.elements.end(), [](const GroupElement& x) { return x.cycle_type.has_value(); });
    if (typed) {
      for (auto& el : g.elements) el.class_label = el.cycle_type->to_string();
    } else {
      for (auto& el : g.elements) el.cycle_type.reset();
      assign_conjugacy_classes(g);
    }
    validate_group(g, n);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group file: ") + e.what());
  }
}

Json element_to_json(const AlgebraElement& x, const std::vector<std::string>& labels) {
  Json basis = Json::array(), coeffs = Json::array();
  for (const auto& [s, c] : x.coords.terms()) {
    basis.push_back(labels_of(s, labels));
    coeffs.push_back(to_string(c));
  }
  return {{"basis", basis}, {"coeffs", coeffs}};
}

AlgebraElement element_from_json(const Json& j, const std::vector<std::string>& labels) {
  try {
    const Json& basis = field(j, "basis");
    const Json& coeffs = field(j, "coeffs");
    if (basis.size() != coeffs.size()) throw InputError("basis and coeffs differ in length");
    AlgebraElement x;
    for (std::size_t i = 0; i < basis.size(); ++i) x.coords.add_term(label_set(basis[i], labels), rational_of(coeffs[i]));
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed algebra element: ") + e.what());
  }
}

}  // namespace arrgr::io

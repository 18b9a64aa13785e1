#include "arrgr/relations.hpp"

namespace arrgr {

std::vector<Relation> of_family(const std::vector<Relation>& rels, int family) {
  std::vector<Relation> out;
  for (const auto& r : rels) {
    if (r.family == family) out.push_back(r);
  }
  return out;
}

std::string format_source(const Relation& r, const std::vector<std::string>& labels) {
  if (r.source.minus == 0 && r.family != 2 && r.family != 3) return format_set(r.source.plus, labels);
  auto inner = [&labels](IndexSet s) {
    std::string out;
    bool first = true;
    for (auto i : elements(s)) {
      if (!first) out += ",";
      out += labels.at(i);
      first = false;
    }
    return out;
  };
  return "{" + inner(r.source.plus) + "|" + inner(r.source.minus) + "}";
}

}  // namespace arrgr

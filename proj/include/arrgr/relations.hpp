#pragma once

#include <string>
#include <vector>

#include "arrgr/arrangement.hpp"
#include "arrgr/polynomial.hpp"

namespace arrgr {

/// A generator of a presentation ideal, tagged with its family number and the
/// signed set (or plain index set, with minus empty) it was built from.
struct Relation {
  int family = 0;
  SignedSet source;
  Poly poly;
};

std::vector<Relation> of_family(const std::vector<Relation>& rels, int family);

/// "{12,23|13}" for a signed source, "{1,2}" for an unsigned one.
std::string format_source(const Relation& r, const std::vector<std::string>& labels);

}  // namespace arrgr

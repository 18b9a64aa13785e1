#pragma once

#include <string>
#include <vector>

#include "arrgr/arrangement.hpp"
#include "arrgr/polynomial.hpp"

namespace arrgr {

/// Total order on the ground set. position(e) is the rank of element e.
class HyperplaneOrdering {
 public:
  /// Identity order on n elements.
  static HyperplaneOrdering natural(std::size_t n);
  /// sequence[k] is the element placed at position k; must be a permutation.
  static HyperplaneOrdering from_sequence(std::vector<std::size_t> sequence);
  /// Comma-separated labels, e.g. "23,12,13".
  static HyperplaneOrdering from_labels(const std::string& spec, const std::vector<std::string>& labels);

  std::size_t size() const { return sequence_.size(); }
  std::size_t position(std::size_t element) const { return position_.at(element); }
  std::size_t at(std::size_t pos) const { return sequence_.at(pos); }
  const std::vector<std::size_t>& sequence() const { return sequence_; }

  /// Element of s that comes last (first) in the order; s must be nonempty.
  std::size_t max_of(IndexSet s) const;
  std::size_t min_of(IndexSet s) const;
  /// Maps a set of elements to the set of their positions.
  IndexSet to_positions(IndexSet s) const;
  IndexSet from_positions(IndexSet p) const;

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

struct AxiomViolation {
  int axiom = 0;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(int axiom) const;
};

/// Checks the four signed-circuit axioms of a loop-free oriented matroid
/// exhaustively. Violations are collected, never thrown.
AxiomReport validate_circuit_axioms(const std::vector<SignedSet>& circuits, const std::vector<std::string>& ground);

/// Signed circuits of a loop-free oriented matroid on a labelled ground set.
/// Always closed under negation.
class CircuitSet {
 public:
  /// Validates the axioms; negations are added first when complete_negations
  /// is set. Throws InputError carrying the first violation otherwise.
  static CircuitSet create(std::vector<std::string> ground, std::vector<SignedSet> circuits,
                           bool complete_negations = true);
  /// Affine arrangements give circuit families that need not satisfy the
  /// elimination axiom; those are assembled without validation.
  static CircuitSet create_unvalidated(std::vector<std::string> ground, std::vector<SignedSet> circuits);

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  /// Both orientations of every circuit, ordered by support then orientation.
  const std::vector<SignedSet>& circuits() const { return circuits_; }
  /// One orientation per circuit (the one positive on its smallest element).
  std::vector<SignedSet> representatives() const;
  std::vector<IndexSet> supports() const;

 private:
  CircuitSet(std::vector<std::string> ground, std::vector<SignedSet> circuits)
      : ground_(std::move(ground)), circuits_(std::move(circuits)) {}

  std::vector<std::string> ground_;
  std::vector<SignedSet> circuits_;
};

/// Minimally dependent supports with nonempty flat, signed by the
/// dependency coefficients; both orientations included.
CircuitSet circuits_from_arrangement(const Arrangement& a);

/// Everything NBC and the Cordovil algebra need: circuits plus which index
/// sets have a nonempty flat. Raw circuit input treats every flat as
/// nonempty (central, loop-free).
class MatroidData {
 public:
  static MatroidData from_arrangement(const Arrangement& a);
  static MatroidData from_circuits(CircuitSet c);

  std::size_t size() const { return circuits_.size(); }
  const std::vector<std::string>& labels() const { return circuits_.ground(); }
  const CircuitSet& circuits() const { return circuits_; }
  bool flat_nonempty(IndexSet s) const { return flat_nonempty_[s]; }
  /// Minimal index sets with empty flat.
  std::vector<IndexSet> minimal_empty_flats() const;

 private:
  MatroidData(CircuitSet c, std::vector<bool> flats) : circuits_(std::move(c)), flat_nonempty_(std::move(flats)) {}

  CircuitSet circuits_;
  std::vector<bool> flat_nonempty_;
};

/// Circuit support minus its largest element, deduplicated, graded-lex order.
std::vector<IndexSet> broken_circuits(const CircuitSet& c, const HyperplaneOrdering& ord);

/// NBC sets by grade: grade k lists the k-element sets with nonempty flat
/// that contain no broken circuit.
std::vector<std::vector<IndexSet>> nbc_sets(const MatroidData& m, const HyperplaneOrdering& ord);

GradedCounts poincare_from_nbc(const MatroidData& m, const HyperplaneOrdering& ord);

}  // namespace arrgr

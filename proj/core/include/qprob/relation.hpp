#ifndef QPROB_RELATION_HPP
#define QPROB_RELATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "qprob/event_algebra.hpp"
#include "qprob/report.hpp"

namespace qprob {

class ProbabilityStructure;

using EventPair = std::pair<Event, Event>;

// Declared comparative probability data over a family: strict pairs A > B
// and equivalence pairs A ~ B. Pairs are canonicalized (equiv stored with
// the smaller event first), deduplicated and sorted. Checks and
// constructions all work on the closure, not the raw pairs.
class ComparativeRelation {
 public:
  // Throws Error when a pair references an event outside the family or a
  // pair appears both as strict (either direction) and equiv.
  ComparativeRelation(EventFamily family, std::vector<EventPair> strict,
                      std::vector<EventPair> equiv);

  const EventFamily& family() const { return family_; }
  const std::vector<EventPair>& strict_pairs() const { return strict_; }
  const std::vector<EventPair>& equiv_pairs() const { return equiv_; }

 private:
  EventFamily family_;
  std::vector<EventPair> strict_;
  std::vector<EventPair> equiv_;
};

// The relation's closure: equivalence classes of family events, and the
// transitive closure of the strict pairs lifted to those classes. The
// closure tolerates cycles so that failing relations can still be checked.
struct RelationClosure {
  const EventFamily* family = nullptr;
  std::vector<int> class_of;               // family event index -> class id
  std::vector<std::vector<int>> classes;   // class id -> member event indices
  std::vector<std::vector<bool>> strict;   // closure on classes

  bool strict_holds(int event_a, int event_b) const {
    return strict[class_of[event_a]][class_of[event_b]];
  }
  bool equiv_holds(int event_a, int event_b) const {
    return class_of[event_a] == class_of[event_b];
  }
  // strict, same class, or same event
  bool nonstrict_holds(int event_a, int event_b) const {
    return equiv_holds(event_a, event_b) || strict_holds(event_a, event_b);
  }
  bool has_cycle() const;
};

RelationClosure closure_of(const ComparativeRelation& r);

// True iff no equivalence class is strictly above itself in the closure.
bool is_acyclic(const ComparativeRelation& r);

// WOA, NTA, NNA, AA, in that order. AA is a biconditional over all triples
// (A, B, C) of family events with A∩C = B∩C = ∅ whose unions are in the
// family; when the family is not union-closed the AA report carries an
// Error verdict and the other axioms are still reported.
std::vector<AxiomReport> check_de_finetti(const ComparativeRelation& r);

// ASA, STA, non-strict transitivity, MA, IMA.
std::vector<AxiomReport> check_derived(const ComparativeRelation& r);

// Congruence of the equivalence with disjoint unions: A ~ B and
// A∩C = B∩C = ∅ imply A∪C ~ B∪C in the closure (when the unions are
// family events). This is the reading of "an equivalence relation
// correlated with the relations" under which every de Finetti-consistent
// relation quotients to a structure passing PNA/ICA/PAA; without it that
// implication has finite counterexamples.
AxiomReport check_congruence(const ComparativeRelation& r);

// Quotient construction: scale classes are the equivalence classes of
// events, the strict order is the lifted closure, and each event maps to
// its class. Throws CycleDetected when the raw strict pairs already
// contain a cycle, CongruenceViolation when a cycle appears only after
// lifting through the equivalence.
ProbabilityStructure structure_from_relation(const ComparativeRelation& r);

}  // namespace qprob

#endif  // QPROB_RELATION_HPP

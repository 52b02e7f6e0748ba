#ifndef QPROB_STRUCTURE_HPP
#define QPROB_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qprob/event_algebra.hpp"
#include "qprob/relation.hpp"
#include "qprob/report.hpp"
#include "qprob/scale.hpp"

namespace qprob {

// The central object P: F -> X, a total assignment of scale labels to the
// events of a family.
class ProbabilityStructure {
 public:
  // assignment[i] is the label for family.at(i). Throws Error when a label
  // is unknown or the assignment is not total.
  ProbabilityStructure(EventFamily family, Scale scale, std::vector<std::string> assignment);

  const EventFamily& family() const { return family_; }
  const Scale& scale() const { return scale_; }
  const std::vector<std::string>& assignment() const { return assignment_; }

  int class_of_event(int family_index) const { return class_of_event_[family_index]; }
  const std::string& label_of_event(int family_index) const { return assignment_[family_index]; }

  bool strict(int family_a, int family_b) const {
    return scale_.class_strict(class_of_event_[family_a], class_of_event_[family_b]);
  }
  bool equal_class(int family_a, int family_b) const {
    return class_of_event_[family_a] == class_of_event_[family_b];
  }
  bool nonstrict(int family_a, int family_b) const {
    return equal_class(family_a, family_b) || strict(family_a, family_b);
  }

  // Distinct classes hit by the assignment, ascending.
  std::vector<int> image_classes() const;

 private:
  EventFamily family_;
  Scale scale_;
  std::vector<std::string> assignment_;
  std::vector<int> class_of_event_;
};

// PNA, ICA, PAA and (optionally) ECA, in that order. PAA/ECA are
// biconditionals over triples with A∩C = B∩C = ∅ and both unions in the
// family; reports degrade to Error verdicts when the family lacks the
// events an axiom needs instead of throwing.
std::vector<AxiomReport> check_structure_axioms(const ProbabilityStructure& p, bool include_eca);

struct StructureClass {
  bool rigid = false;
  bool complete = false;
  bool total = false;
  // Unset when the family lacks singletons; the note says why.
  std::optional<bool> elementary;
  std::string elementary_note;
};

StructureClass classify(const ProbabilityStructure& p);

// A > B iff P(A) above P(B) in the scale; A ~ B iff same class.
ComparativeRelation induced_relation(const ProbabilityStructure& p);

enum class SubstructureMode { Plain, Robust };

// Plain: the strict-comparison biconditional over all event pairs of
// p.family. Robust: q assigns every event of p.family the same class as p.
// Requires p.family ⊆ q.family and literally equal scales; throws
// PreconditionError otherwise.
AxiomReport substructure_check(const ProbabilityStructure& p, const ProbabilityStructure& q,
                               SubstructureMode mode);

// Robust restriction of q to a subfamily: same scale, same assignment.
ProbabilityStructure restrict_structure(const ProbabilityStructure& q, const EventFamily& sub);

// Consequence checks: Prop. 2.1 (U dominates), Lemma 2.1 (union/intersection
// monotonicity), ASA, IMA, the rigid non-strict biconditional (only when ECA
// holds), PCTA (only when complete), and inclusion monotonicity as an order
// homomorphism.
std::vector<AxiomReport> verify_consequences(const ProbabilityStructure& p);

// PCA experiment: scans for a pair with P(A) > P(B) and P(U\A) > P(U\B).
// Requires a complement-closed family (throws PreconditionError). Pass
// means "holds on this instance"; Fail carries the counterexample pair.
AxiomReport check_pca(const ProbabilityStructure& p);

}  // namespace qprob

#endif  // QPROB_STRUCTURE_HPP

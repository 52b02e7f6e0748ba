#ifndef QPROB_REPRESENTATION_HPP
#define QPROB_REPRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qprob/numeric.hpp"
#include "qprob/relation.hpp"
#include "qprob/report.hpp"
#include "qprob/scale.hpp"
#include "qprob/structure.hpp"

namespace qprob {

// A total map between scale classes.
struct ScaleMap {
  Scale source;
  Scale target;
  std::vector<int> class_map;  // source class id -> target class id

  int apply(int source_class) const { return class_map.at(source_class); }
};

enum class MapRequirement { Homomorphism, Monomorphism };

// Homomorphism: a > b in the source implies f(a) > f(b) in the target.
// Monomorphism: additionally injective on classes.
AxiomReport check_scale_map(const ScaleMap& f, MapRequirement require);

// Diagram commutativity f(P(e)) = Q(e) over every event; faithful
// additionally requires f to be a monomorphism. Throws PreconditionError
// on family or scale mismatch.
AxiomReport check_representation(const ProbabilityStructure& p, const ProbabilityStructure& q,
                                 const ScaleMap& f, bool faithful);

struct RepresentationResult {
  NumericProbability target;
  ScaleMap map;
  // Recomputed, never asserted: Kolmogorov on the target, homomorphism
  // (and, where claimed, monomorphism) of the map, diagram commutativity.
  std::vector<AxiomReport> verification;
};

// Q(A) = P(A)/k with k = P(U); the map divides scale values by k. Requires
// n to pass check_inflated (PreconditionError) and k > 0
// (DeflationUndefined).
RepresentationResult deflate(const NumericProbability& n);

enum class ElementaryScaling { Standard, Doubled };

// The elementary representation: linearly extend the singleton classes,
// split U into U_0 (singletons sharing the class of the empty event) and
// U_1..U_r in extension order, weight class i by i/n with n = sum i*n_i
// (Standard) or 2i/m with m = sum 2i*n_i (Doubled), extend additively, and
// map each scale class to the common value of its events. Throws NotTotal
// / NotElementary (precondition), DegenerateScale (n = 0), IllDefinedMap
// (a scale class with two different sums).
RepresentationResult represent_elementary(const ProbabilityStructure& p,
                                          ElementaryScaling scaling);

struct RepresentabilityDecision {
  bool representable = false;
  // Classical probability over the power set whose induced relation
  // extends the input closure; re-verified before being returned.
  std::optional<NumericProbability> witness;
  // On not_representable: the name of a failing de Finetti axiom when one
  // exists, else "lp-infeasible".
  std::string certificate;
};

// Decides existence of singleton weights p >= 0, sum 1, whose additive
// extension induces a relation extending closure(r): exact max-slack
// linear feasibility, representable iff the optimal slack is positive.
RepresentabilityDecision decide_representability(const ComparativeRelation& r);

}  // namespace qprob

#endif  // QPROB_REPRESENTATION_HPP

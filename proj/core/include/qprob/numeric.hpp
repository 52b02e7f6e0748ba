#ifndef QPROB_NUMERIC_HPP
#define QPROB_NUMERIC_HPP

#include <vector>

#include "qprob/event_algebra.hpp"
#include "qprob/rational.hpp"
#include "qprob/report.hpp"
#include "qprob/structure.hpp"

namespace qprob {

// An exact-rational probability function on a family, classical or
// inflated. The bound m is the declared upper normalization (m = 1 for
// classical mode); axioms are checked by the functions below, never
// assumed.
class NumericProbability {
 public:
  // values[i] belongs to family.at(i). Throws Error when the value table
  // is not total or the bound is not a positive integer.
  NumericProbability(EventFamily family, std::vector<Rational> values, long bound = 1);

  const EventFamily& family() const { return family_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value_at(int family_index) const { return values_[family_index]; }
  // Throws Error when the event is not in the family.
  const Rational& value(const Event& e) const;
  long bound() const { return bound_; }

 private:
  EventFamily family_;
  std::vector<Rational> values_;
  long bound_;
};

// K1 (non-negativity), K2 (P(U) = 1, exact), K3 (additivity over all
// disjoint pairs whose union is in the family, exact).
std::vector<AxiomReport> check_kolmogorov(const NumericProbability& n);

// AS (family is a set algebra with U), UP (0 <= P(U) <= m), LP (P(empty)
// = 0), FA (additivity), NONNEG (all values >= 0, reported separately for
// diagnosis).
std::vector<AxiomReport> check_inflated(const NumericProbability& n);

// Scale = one label per distinct value (labels are the canonical value
// strings, ordered as a chain by the rational order); each event maps to
// its value's label.
ProbabilityStructure as_structure(const NumericProbability& n);

enum class WeightMode { Raw, Normalize };

// Additive extension of per-element weights over the power set. Normalize
// divides by the (positive) total so P(U) = 1 and sets bound 1; Raw keeps
// the sums and sets the bound to the smallest positive integer >= total.
NumericProbability from_weights(const UniversePtr& u, const std::vector<Rational>& weights,
                                WeightMode mode);

}  // namespace qprob

#endif  // QPROB_NUMERIC_HPP

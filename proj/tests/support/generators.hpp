#ifndef QPROB_TESTS_GENERATORS_HPP
#define QPROB_TESTS_GENERATORS_HPP

#include <optional>
#include <vector>

#include "qprob/numeric.hpp"
#include "qprob/relation.hpp"
#include "qprob/structure.hpp"
#include "testutil.hpp"

namespace qprob::testing {

// Random non-negative weights; at least one positive. zero_percent controls
// how often an element gets weight zero (creates value ties and P = P({})
// singletons downstream).
std::vector<Rational> random_weights(Rng& rng, int n, int zero_percent = 20);

// A sub-field of 2^U generated by a few random seed events (always
// contains {} and U). With percent_full chance returns the power set.
EventFamily random_subfield(Rng& rng, const UniversePtr& u, int percent_full = 50);

// Classical probability on a random sub-field: additive extension of
// random weights, normalized so P(U) = 1.
NumericProbability random_classical(Rng& rng, int n);

// Inflated probability with P(U) = m exactly on a random sub-field.
NumericProbability random_inflated(Rng& rng, int n, long m);

// Total structure over 2^U that classifies as elementary: each event's
// scale class is the multiset of its members' tiers (tier 0 merges with
// the empty event), ordered by multiset dominance.
ProbabilityStructure random_elementary_structure(Rng& rng, int n);

// Acyclic relation over 2^U whose equivalence part is congruent with
// disjoint unions; the strict part is random between distinct classes.
ComparativeRelation random_congruent_relation(Rng& rng, int n);

}  // namespace qprob::testing

#endif  // QPROB_TESTS_GENERATORS_HPP

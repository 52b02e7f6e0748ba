#ifndef QPROB_TESTS_SWEEPS_HPP
#define QPROB_TESTS_SWEEPS_HPP

#include <cstdint>
#include <vector>

#include "qprob/relation.hpp"

namespace qprob::testing {

struct U2SweepResult {
  long valid = 0;          // pair sets respecting the strict/equiv exclusivity invariant
  long acyclic = 0;
  long congruent = 0;      // acyclic and ~-congruent with disjoint unions
  long definetti_pass = 0; // congruent relations passing WOA/NTA/NNA/AA
  long roundtrip_failures = 0;  // induced_relation(structure_from_relation(r)) != closure(r)
  long axiom_failures = 0;      // de Finetti passed but PNA/ICA/PAA did not
};

// Exhaustive sweep over every relation on the power set of a 2-element
// universe: all 2^12 strict pair sets x 2^6 equivalence pair sets.
U2SweepResult exhaustive_u2_sweep();

// Ordered partitions (classes of event masks, lowest class first) of the
// power set of an n-element universe that are subset-monotone, have U
// strictly above {}, and satisfy the additivity biconditional. These are
// exactly the complete de Finetti-consistent weak orders.
std::vector<std::vector<std::vector<std::uint32_t>>> consistent_weak_orders(int n);

// Relation declaring each class as a chain of equivalences and one strict
// pair between consecutive classes; its closure is the full weak order.
ComparativeRelation relation_from_weak_order(
    const EventFamily& family, const std::vector<std::vector<std::uint32_t>>& classes);

}  // namespace qprob::testing

#endif  // QPROB_TESTS_SWEEPS_HPP

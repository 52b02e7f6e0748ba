#ifndef QPROB_TESTS_KPS_HPP
#define QPROB_TESTS_KPS_HPP

#include <optional>
#include <vector>

#include "qprob/relation.hpp"

namespace qprob::testing {

// Guided search for an additively non-representable complete comparative
// probability order on a 5-element universe: take a base measure with many
// subset-sum ties, enumerate the tie-breaking linearizations that keep the
// additivity biconditional, and test each with the exact feasibility
// oracle until one is infeasible. With the default weights (1,2,3,4,6)
// this reconstructs the classic counterexample family.
struct KpsSearchResult {
  ComparativeRelation relation;
  std::vector<std::uint32_t> order;  // event masks, least probable first
  long candidates_tested = 0;        // consistent linearizations fed to the oracle
};

std::optional<KpsSearchResult> find_nonrepresentable_order(
    const std::vector<long>& weights = {1, 2, 3, 4, 6});

}  // namespace qprob::testing

#endif  // QPROB_TESTS_KPS_HPP

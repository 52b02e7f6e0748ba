#ifndef QPROB_SRC_FAMILY_TRIPLES_HPP
#define QPROB_SRC_FAMILY_TRIPLES_HPP

#include "qprob/event_algebra.hpp"

namespace qprob::detail {

// Enumerates triples (A, B, C) of family events with A∩C = B∩C = ∅ in
// canonical order and calls fn(ia, ib, ic, i_ac, i_bc) with family indices
// of A, B, C, A∪C, B∪C. Returns false (aborting) when a needed union is
// missing from the family.
template <typename Fn>
bool for_each_disjoint_triple(const EventFamily& f, Fn&& fn) {
  const int n = static_cast<int>(f.size());
  for (int ia = 0; ia < n; ++ia) {
    const std::uint32_t a = f.at(ia).mask();
    for (int ib = 0; ib < n; ++ib) {
      const std::uint32_t b = f.at(ib).mask();
      for (int ic = 0; ic < n; ++ic) {
        const std::uint32_t c = f.at(ic).mask();
        if ((a & c) != 0 || (b & c) != 0) continue;
        const int iac = f.index_of_mask(a | c);
        const int ibc = f.index_of_mask(b | c);
        if (iac < 0 || ibc < 0) return false;
        fn(ia, ib, ic, iac, ibc);
      }
    }
  }
  return true;
}

}  // namespace qprob::detail

#endif  // QPROB_SRC_FAMILY_TRIPLES_HPP

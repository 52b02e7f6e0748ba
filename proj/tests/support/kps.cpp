#include "kps.hpp"

#include <algorithm>
#include <map>

#include "qprob/representation.hpp"
#include "testutil.hpp"

namespace qprob::testing {

namespace {

struct Search {
  int n = 0;
  std::uint32_t full = 0;
  std::vector<long> sum_of;                       // mask -> base measure
  std::vector<std::vector<std::uint32_t>> ties;   // multi-member tie classes, ascending sum
  std::vector<std::uint32_t> fixed_prefix_order;  // all masks sorted by (sum, mask)
  const EventFamily* family = nullptr;
  long candidates = 0;
  std::optional<KpsSearchResult> found;

  // rank within its tie class for every mask, filled during the DFS
  std::vector<int> tie_rank;

  bool above(std::uint32_t a, std::uint32_t b) const {
    if (sum_of[a] != sum_of[b]) return sum_of[a] > sum_of[b];
    return tie_rank[a] > tie_rank[b];
  }

  // additivity biconditional restricted to tie pairs: orientation must be
  // invariant under union with a disjoint C (non-tie pairs follow the base
  // measure on both sides automatically)
  bool consistent() const {
    for (const auto& cls : ties) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          const std::uint32_t a = cls[i], b = cls[j];
          const bool ab = above(a, b);
          const std::uint32_t free = full & ~(a | b);
          for (std::uint32_t c = free; c != 0; c = (c - 1) & free) {
            if (above(a | c, b | c) != ab) return false;
          }
        }
      }
    }
    return true;
  }

  void try_candidate() {
    if (!consistent()) return;
    ++candidates;
    std::vector<std::uint32_t> order = fixed_prefix_order;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (sum_of[a] != sum_of[b]) return sum_of[a] < sum_of[b];
      return tie_rank[a] < tie_rank[b];
    });
    std::vector<EventPair> strict;
    for (std::size_t i = 1; i < order.size(); ++i) {
      strict.emplace_back(family->at(family->index_of_mask(order[i])),
                          family->at(family->index_of_mask(order[i - 1])));
    }
    ComparativeRelation r(*family, std::move(strict), {});
    if (!decide_representability(r).representable) {
      found = KpsSearchResult{std::move(r), std::move(order), candidates};
    }
  }

  void dfs(std::size_t class_index) {
    if (found) return;
    if (class_index == ties.size()) {
      try_candidate();
      return;
    }
    std::vector<std::uint32_t> perm = ties[class_index];  // ascending masks
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) tie_rank[perm[i]] = static_cast<int>(i);
      dfs(class_index + 1);
      if (found) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

}  // namespace

std::optional<KpsSearchResult> find_nonrepresentable_order(const std::vector<long>& weights) {
  Search s;
  s.n = static_cast<int>(weights.size());
  s.full = (1u << s.n) - 1;
  s.sum_of.assign(std::size_t{1} << s.n, 0);
  for (std::uint32_t m = 0; m <= s.full; ++m) {
    long sum = 0;
    for (int i = 0; i < s.n; ++i) {
      if ((m >> i) & 1u) sum += weights[i];
    }
    s.sum_of[m] = sum;
  }

  std::map<long, std::vector<std::uint32_t>> by_sum;
  for (std::uint32_t m = 0; m <= s.full; ++m) by_sum[s.sum_of[m]].push_back(m);
  for (const auto& [sum, masks] : by_sum) {
    if (masks.size() > 1) s.ties.push_back(masks);
  }

  for (std::uint32_t m = 0; m <= s.full; ++m) s.fixed_prefix_order.push_back(m);
  std::stable_sort(s.fixed_prefix_order.begin(), s.fixed_prefix_order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return s.sum_of[a] < s.sum_of[b]; });

  const UniversePtr u = letters_universe(s.n);
  const EventFamily family = power_set(u);
  s.family = &family;
  s.tie_rank.assign(std::size_t{1} << s.n, 0);

  s.dfs(0);
  return s.found;
}

}  // namespace qprob::testing

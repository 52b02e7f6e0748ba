#include "sweeps.hpp"

#include <algorithm>

#include "qprob/structure.hpp"
#include "testutil.hpp"

namespace qprob::testing {

U2SweepResult exhaustive_u2_sweep() {
  U2SweepResult res;
  const UniversePtr u = letters_universe(2);
  const EventFamily family = power_set(u);
  const int n = 4;

  std::vector<std::pair<int, int>> spairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) spairs.emplace_back(a, b);
    }
  }
  std::vector<std::pair<int, int>> epairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) epairs.emplace_back(a, b);
  }

  for (std::uint32_t smask = 0; smask < (1u << spairs.size()); ++smask) {
    for (std::uint32_t emask = 0; emask < (1u << epairs.size()); ++emask) {
      // the exclusivity invariant, tested without constructing
      bool overlap = false;
      for (std::size_t e = 0; e < epairs.size() && !overlap; ++e) {
        if (!((emask >> e) & 1u)) continue;
        for (std::size_t s = 0; s < spairs.size(); ++s) {
          if (!((smask >> s) & 1u)) continue;
          const auto [sa, sb] = spairs[s];
          const auto [ea, eb] = epairs[e];
          if ((sa == ea && sb == eb) || (sa == eb && sb == ea)) {
            overlap = true;
            break;
          }
        }
      }
      if (overlap) continue;
      ++res.valid;

      std::vector<EventPair> strict, equiv;
      for (std::size_t s = 0; s < spairs.size(); ++s) {
        if ((smask >> s) & 1u) strict.emplace_back(family.at(spairs[s].first), family.at(spairs[s].second));
      }
      for (std::size_t e = 0; e < epairs.size(); ++e) {
        if ((emask >> e) & 1u) equiv.emplace_back(family.at(epairs[e].first), family.at(epairs[e].second));
      }
      const ComparativeRelation r(family, std::move(strict), std::move(equiv));
      if (!is_acyclic(r)) continue;
      ++res.acyclic;
      if (!check_congruence(r).passed()) continue;
      ++res.congruent;

      const ProbabilityStructure p = structure_from_relation(r);
      const RelationClosure before = closure_of(r);
      const RelationClosure after = closure_of(induced_relation(p));
      if (before.class_of != after.class_of || before.strict != after.strict) {
        ++res.roundtrip_failures;
      }

      if (all_pass(check_de_finetti(r))) {
        ++res.definetti_pass;
        const std::vector<AxiomReport> axioms = check_structure_axioms(p, /*include_eca=*/false);
        if (!all_pass(axioms)) ++res.axiom_failures;
      }
    }
  }
  return res;
}

namespace {

struct WeakOrderEnum {
  int n = 0;
  std::uint32_t full = 0;
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::vector<std::vector<std::uint32_t>>> out;

  bool placement_ok(std::uint32_t m, int position, int inserted_at) const {
    // subset-monotonicity against everything already placed
    for (int j = 0; j < static_cast<int>(classes.size()); ++j) {
      const int level = j < inserted_at ? j : j + 1;  // shift for a pending gap insert
      for (std::uint32_t x : classes[j]) {
        if ((x & m) == x && x != m && level > position) return false;
        if ((x & m) == m && x != m && level < position) return false;
      }
    }
    return true;
  }

  void recurse(std::uint32_t m) {
    if (m > full) {
      finish();
      return;
    }
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
      if (placement_ok(m, i, static_cast<int>(classes.size()))) {
        classes[i].push_back(m);
        recurse(m + 1);
        classes[i].pop_back();
      }
    }
    for (int i = 0; i <= static_cast<int>(classes.size()); ++i) {
      if (placement_ok(m, i, i)) {
        classes.insert(classes.begin() + i, {m});
        recurse(m + 1);
        classes.erase(classes.begin() + i);
      }
    }
  }

  void finish() {
    std::vector<int> level(full + 1);
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
      for (std::uint32_t m : classes[i]) level[m] = i;
    }
    if (level[full] <= level[0]) return;  // U must sit strictly above {}
    // additivity biconditional over all disjoint triples
    for (std::uint32_t a = 0; a <= full; ++a) {
      for (std::uint32_t b = 0; b <= full; ++b) {
        const std::uint32_t free = full & ~(a | b);
        for (std::uint32_t c = free;; c = (c - 1) & free) {
          if ((level[a] > level[b]) != (level[a | c] > level[b | c])) return;
          if (c == 0) break;
        }
      }
    }
    out.push_back(classes);
  }
};

}  // namespace

std::vector<std::vector<std::vector<std::uint32_t>>> consistent_weak_orders(int n) {
  WeakOrderEnum e;
  e.n = n;
  e.full = (1u << n) - 1;
  e.recurse(0);
  return e.out;
}

ComparativeRelation relation_from_weak_order(
    const EventFamily& family, const std::vector<std::vector<std::uint32_t>>& classes) {
  std::vector<EventPair> strict, equiv;
  const auto ev = [&](std::uint32_t m) { return family.at(family.index_of_mask(m)); };
  for (const auto& cls : classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      equiv.emplace_back(ev(cls[i - 1]), ev(cls[i]));
    }
  }
  for (std::size_t i = 1; i < classes.size(); ++i) {
    strict.emplace_back(ev(classes[i].front()), ev(classes[i - 1].front()));
  }
  return ComparativeRelation(family, std::move(strict), std::move(equiv));
}

}  // namespace qprob::testing

#include "generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qprob::testing {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<Rational> random_weights(Rng& rng, int n, int zero_percent) {
  std::vector<Rational> weights;
  weights.reserve(n);
  bool any_positive = false;
  for (int i = 0; i < n; ++i) {
    if (rng.chance(zero_percent)) {
      weights.emplace_back(0);
    } else {
      weights.push_back(Rational(rng.uniform(1, 8), rng.uniform(1, 6)));
      any_positive = true;
    }
  }
  if (!any_positive && n > 0) {
    weights[n - 1] = Rational(rng.uniform(1, 8), rng.uniform(1, 6));
  }
  return weights;
}

EventFamily random_subfield(Rng& rng, const UniversePtr& u, int percent_full) {
  if (rng.chance(percent_full)) return power_set(u);
  const std::uint32_t full = u->full_mask();
  std::vector<Event> seed;
  seed.emplace_back(u, full);
  const int k = rng.uniform(1, 3);
  for (int i = 0; i < k; ++i) {
    seed.emplace_back(u, static_cast<std::uint32_t>(rng.next()) & full);
  }
  return close_family(EventFamily(u, std::move(seed)), ClosureMode::Field);
}

namespace {

NumericProbability scaled_on_subfield(Rng& rng, int n, const Rational& target_total, long bound) {
  const UniversePtr u = letters_universe(n);
  std::vector<Rational> weights = random_weights(rng, n);
  Rational total = 0;
  for (const auto& w : weights) total += w;
  // total > 0 by construction; rescale so the weights sum to target_total
  const Rational factor = target_total / total;
  for (auto& w : weights) w *= factor;

  EventFamily family = random_subfield(rng, u);
  std::vector<Rational> values;
  values.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    Rational sum = 0;
    for (int m : family.at(i).members()) sum += weights[m];
    values.push_back(sum);
  }
  return NumericProbability(std::move(family), std::move(values), bound);
}

}  // namespace

NumericProbability random_classical(Rng& rng, int n) {
  return scaled_on_subfield(rng, n, Rational(1), 1);
}

NumericProbability random_inflated(Rng& rng, int n, long m) {
  return scaled_on_subfield(rng, n, Rational(m), m);
}

ProbabilityStructure random_elementary_structure(Rng& rng, int n) {
  const UniversePtr u = letters_universe(n);
  const int top_tier = rng.uniform(1, std::min(n, 4));
  std::vector<int> tier(n);
  bool any_positive = false;
  for (int i = 0; i < n; ++i) {
    tier[i] = rng.uniform(0, top_tier);
    if (tier[i] > 0) any_positive = true;
  }
  if (!any_positive) tier[n - 1] = rng.uniform(1, top_tier);

  // value of an event = descending multiset of its members' nonzero tiers
  const auto value_of = [&](std::uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i) {
      if (((mask >> i) & 1u) && tier[i] > 0) v.push_back(tier[i]);
    }
    std::sort(v.rbegin(), v.rend());
    return v;
  };
  const auto label_of = [](const std::vector<int>& v) {
    std::string s = "v";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "." : "") + std::to_string(v[i]);
    }
    return s;
  };
  // strict dominance after padding the shorter vector with zeros
  const auto dominates = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return false;
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
      const int x = i < a.size() ? a[i] : 0;
      const int y = i < b.size() ? b[i] : 0;
      if (x < y) return false;
    }
    return true;
  };

  EventFamily family = power_set(u);
  std::map<std::vector<int>, std::string> values;
  std::vector<std::string> assignment;
  assignment.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::vector<int> v = value_of(family.at(i).mask());
    auto [it, inserted] = values.emplace(v, label_of(v));
    assignment.push_back(it->second);
  }

  std::vector<std::string> labels;
  labels.reserve(values.size());
  for (const auto& [v, label] : values) labels.push_back(label);
  std::vector<std::pair<std::string, std::string>> strict;
  for (const auto& [va, la] : values) {
    for (const auto& [vb, lb] : values) {
      if (dominates(va, vb)) strict.emplace_back(la, lb);
    }
  }
  Scale scale = build_scale(labels, strict, {});
  return ProbabilityStructure(std::move(family), std::move(scale), std::move(assignment));
}

ComparativeRelation random_congruent_relation(Rng& rng, int n) {
  const UniversePtr u = letters_universe(n);
  EventFamily family = power_set(u);
  const int count = static_cast<int>(family.size());

  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  const int equiv_seeds = rng.uniform(0, 2);
  for (int s = 0; s < equiv_seeds; ++s) {
    const int i = rng.uniform(0, count - 1);
    const int j = rng.uniform(0, count - 1);
    const int ri = uf_find(parent, i), rj = uf_find(parent, j);
    if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
  }
  // saturate: A ~ B implies A∪C ~ B∪C for disjoint C
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        if (uf_find(parent, i) != uf_find(parent, j)) continue;
        const std::uint32_t a = family.at(i).mask(), b = family.at(j).mask();
        for (int c = 0; c < count; ++c) {
          const std::uint32_t cm = family.at(c).mask();
          if ((a & cm) != 0 || (b & cm) != 0) continue;
          const int iac = family.index_of_mask(a | cm);
          const int ibc = family.index_of_mask(b | cm);
          const int r1 = uf_find(parent, iac), r2 = uf_find(parent, ibc);
          if (r1 != r2) {
            parent[std::max(r1, r2)] = std::min(r1, r2);
            changed = true;
          }
        }
      }
    }
  }

  std::vector<int> root_of(count);
  for (int i = 0; i < count; ++i) root_of[i] = uf_find(parent, i);

  // strict seeds between distinct classes, rejecting cycle-closing edges
  std::vector<std::pair<int, int>> class_edges;
  const auto reaches = [&](int from, int to) {
    std::vector<int> stack{from};
    std::vector<bool> seen(count, false);
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      if (cur == to) return true;
      if (seen[cur]) continue;
      seen[cur] = true;
      for (const auto& [x, y] : class_edges) {
        if (x == cur && !seen[y]) stack.push_back(y);
      }
    }
    return false;
  };
  std::vector<EventPair> strict_pairs;
  const int strict_seeds = rng.uniform(0, 6);
  for (int s = 0; s < strict_seeds; ++s) {
    const int i = rng.uniform(0, count - 1);
    const int j = rng.uniform(0, count - 1);
    const int ci = root_of[i], cj = root_of[j];
    if (ci == cj || reaches(cj, ci)) continue;
    class_edges.emplace_back(ci, cj);
    strict_pairs.emplace_back(family.at(i), family.at(j));
  }

  // declared equivalences: chain the members of each class
  std::vector<EventPair> equiv_pairs;
  std::vector<std::vector<int>> members(count);
  for (int i = 0; i < count; ++i) members[root_of[i]].push_back(i);
  for (const auto& cls : members) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      equiv_pairs.emplace_back(family.at(cls[i - 1]), family.at(cls[i]));
    }
  }
  return ComparativeRelation(std::move(family), std::move(strict_pairs), std::move(equiv_pairs));
}

}  // namespace qprob::testing

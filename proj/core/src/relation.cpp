#include "qprob/relation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qprob/errors.hpp"
#include "qprob/scale.hpp"
#include "qprob/structure.hpp"

#include "family_triples.hpp"

namespace qprob {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
  a = uf_find(parent, a);
  b = uf_find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

void close_transitively(std::vector<std::vector<bool>>& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) m[i][j] = true;
      }
    }
  }
}

bool pair_less(const EventPair& a, const EventPair& b) {
  if (a.first < b.first) return true;
  if (b.first < a.first) return false;
  return a.second < b.second;
}

bool pair_eq(const EventPair& a, const EventPair& b) {
  return a.first.mask() == b.first.mask() && a.second.mask() == b.second.mask();
}

}  // namespace

ComparativeRelation::ComparativeRelation(EventFamily family, std::vector<EventPair> strict,
                                         std::vector<EventPair> equiv)
    : family_(std::move(family)), strict_(std::move(strict)), equiv_(std::move(equiv)) {
  for (const auto& [a, b] : strict_) {
    if (!family_.contains(a) || !family_.contains(b)) {
      throw Error("strict pair references an event outside the family");
    }
  }
  for (auto& [a, b] : equiv_) {
    if (!family_.contains(a) || !family_.contains(b)) {
      throw Error("equivalence pair references an event outside the family");
    }
    if (b < a) std::swap(a, b);
  }
  // drop trivial A ~ A declarations
  equiv_.erase(std::remove_if(equiv_.begin(), equiv_.end(),
                              [](const EventPair& p) { return p.first.mask() == p.second.mask(); }),
               equiv_.end());
  std::sort(strict_.begin(), strict_.end(), pair_less);
  strict_.erase(std::unique(strict_.begin(), strict_.end(), pair_eq), strict_.end());
  std::sort(equiv_.begin(), equiv_.end(), pair_less);
  equiv_.erase(std::unique(equiv_.begin(), equiv_.end(), pair_eq), equiv_.end());

  for (const auto& [a, b] : strict_) {
    const EventPair key = b < a ? EventPair{b, a} : EventPair{a, b};
    if (std::binary_search(equiv_.begin(), equiv_.end(), key, pair_less)) {
      throw Error("pair (" + a.to_string() + ", " + b.to_string() +
                  ") appears as both strict and equivalent");
    }
  }
}

bool RelationClosure::has_cycle() const {
  for (std::size_t i = 0; i < strict.size(); ++i) {
    if (strict[i][i]) return true;
  }
  return false;
}

RelationClosure closure_of(const ComparativeRelation& r) {
  const EventFamily& f = r.family();
  const int n = static_cast<int>(f.size());

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : r.equiv_pairs()) {
    uf_union(parent, f.index_of_mask(a.mask()), f.index_of_mask(b.mask()));
  }

  RelationClosure c;
  c.family = &f;
  c.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf_find(parent, i);
    if (c.class_of[root] < 0) {
      c.class_of[root] = static_cast<int>(c.classes.size());
      c.classes.emplace_back();
    }
    c.class_of[i] = c.class_of[root];
    c.classes[c.class_of[i]].push_back(i);
  }

  const std::size_t k = c.classes.size();
  c.strict.assign(k, std::vector<bool>(k, false));
  for (const auto& [a, b] : r.strict_pairs()) {
    c.strict[c.class_of[f.index_of_mask(a.mask())]][c.class_of[f.index_of_mask(b.mask())]] = true;
  }
  close_transitively(c.strict);
  return c;
}

bool is_acyclic(const ComparativeRelation& r) { return !closure_of(r).has_cycle(); }

namespace {

const Event& least_event(const RelationClosure& c, int class_id) {
  return c.family->at(c.classes[class_id].front());
}

AxiomReport check_woa(const RelationClosure& c) {
  std::vector<Witness> ws;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.strict[i][i]) {
      ws.push_back({{least_event(c, static_cast<int>(i)).to_string()},
                    "strictly above itself"});
      continue;
    }
    for (std::size_t j = i + 1; j < c.classes.size(); ++j) {
      if (c.strict[i][j] && c.strict[j][i]) {
        ws.push_back({{least_event(c, static_cast<int>(i)).to_string(),
                       least_event(c, static_cast<int>(j)).to_string()},
                      "asymmetry violated"});
      }
    }
  }
  return report_from_witnesses("WOA", std::move(ws));
}

AxiomReport check_nta(const RelationClosure& c) {
  const EventFamily& f = *c.family;
  if (f.universe()->size() == 0) return pass_report("NTA");
  if (!f.contains_universe() || !f.contains_empty()) {
    return error_report("NTA", "family lacks U or the empty event");
  }
  const int iu = f.index_of_mask(f.universe()->full_mask());
  const int ie = f.index_of_mask(0);
  if (c.strict_holds(iu, ie)) return pass_report("NTA");
  return report_from_witnesses(
      "NTA", {{{f.at(iu).to_string(), f.at(ie).to_string()}, "U > {} not derivable"}});
}

AxiomReport check_nna(const RelationClosure& c) {
  const EventFamily& f = *c.family;
  if (!f.contains_empty()) return error_report("NNA", "family lacks the empty event");
  const int ie = f.index_of_mask(0);
  std::vector<Witness> ws;
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (i == ie) continue;
    if (!c.nonstrict_holds(i, ie)) {
      ws.push_back({{f.at(i).to_string()}, "A >= {} not derivable"});
    }
  }
  return report_from_witnesses("NNA", std::move(ws));
}

AxiomReport check_aa(const RelationClosure& c) {
  const EventFamily& f = *c.family;
  std::vector<Witness> ws;
  const bool closed = detail::for_each_disjoint_triple(f, [&](int ia, int ib, int ic, int iac, int ibc) {
    const bool lhs = c.strict_holds(ia, ib);
    const bool rhs = c.strict_holds(iac, ibc);
    if (lhs && !rhs) {
      ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                    "A > B but not A∪C > B∪C"});
    } else if (!lhs && rhs) {
      ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                    "A∪C > B∪C but not A > B"});
    }
  });
  if (!closed) return error_report("AA", "family is not union-closed; AA skipped");
  return report_from_witnesses("AA", std::move(ws));
}

}  // namespace

std::vector<AxiomReport> check_de_finetti(const ComparativeRelation& r) {
  const RelationClosure c = closure_of(r);
  return {check_woa(c), check_nta(c), check_nna(c), check_aa(c)};
}

std::vector<AxiomReport> check_derived(const ComparativeRelation& r) {
  const RelationClosure c = closure_of(r);
  const EventFamily& f = *c.family;
  const std::size_t k = c.classes.size();

  std::vector<Witness> asa;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && c.strict[i][j] && c.strict[j][i]) {
        if (i < j) {
          asa.push_back({{least_event(c, static_cast<int>(i)).to_string(),
                          least_event(c, static_cast<int>(j)).to_string()},
                         "both A > B and B > A"});
        }
      }
    }
    if (c.strict[i][i]) {
      asa.push_back({{least_event(c, static_cast<int>(i)).to_string()}, "A > A"});
    }
  }

  std::vector<Witness> sta;
  std::vector<Witness> nst;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (c.strict[i][j] && c.strict[j][l] && !c.strict[i][l]) {
          sta.push_back({{least_event(c, static_cast<int>(i)).to_string(),
                          least_event(c, static_cast<int>(j)).to_string(),
                          least_event(c, static_cast<int>(l)).to_string()},
                         "strict transitivity broken"});
        }
        const bool ij = i == j || c.strict[i][j];
        const bool jl = j == l || c.strict[j][l];
        const bool il = i == l || c.strict[i][l];
        if (ij && jl && !il) {
          nst.push_back({{least_event(c, static_cast<int>(i)).to_string(),
                          least_event(c, static_cast<int>(j)).to_string(),
                          least_event(c, static_cast<int>(l)).to_string()},
                         "non-strict transitivity broken"});
        }
      }
    }
  }

  std::vector<Witness> ma;
  const int n = static_cast<int>(f.size());
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      if (ia == ib) continue;
      const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask();
      if ((a & b) == b && !c.nonstrict_holds(ia, ib)) {
        ma.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "A ⊇ B but not A >= B"});
      }
    }
  }

  std::vector<Witness> ima;
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      for (int ic = 0; ic < n; ++ic) {
        const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask(), cc = f.at(ic).mask();
        const bool branch1 = ((a & b) == b) && c.nonstrict_holds(ib, ic);
        const bool branch2 = ((b & cc) == cc) && c.nonstrict_holds(ia, ib);
        if ((branch1 || branch2) && !c.nonstrict_holds(ia, ic)) {
          ima.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                         branch1 ? "A ⊇ B and B >= C" : "B ⊇ C and A >= B"});
        }
      }
    }
  }

  return {report_from_witnesses("ASA", std::move(asa)),
          report_from_witnesses("STA", std::move(sta)),
          report_from_witnesses("NST", std::move(nst)),
          report_from_witnesses("MA", std::move(ma)),
          report_from_witnesses("IMA", std::move(ima))};
}

AxiomReport check_congruence(const ComparativeRelation& r) {
  const RelationClosure c = closure_of(r);
  const EventFamily& f = *c.family;
  std::vector<Witness> ws;
  const int n = static_cast<int>(f.size());
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = ia + 1; ib < n; ++ib) {
      if (c.class_of[ia] != c.class_of[ib]) continue;
      const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask();
      for (int ic = 0; ic < n; ++ic) {
        const std::uint32_t cm = f.at(ic).mask();
        if ((a & cm) != 0 || (b & cm) != 0) continue;
        const int iac = f.index_of_mask(a | cm);
        const int ibc = f.index_of_mask(b | cm);
        if (iac < 0 || ibc < 0) continue;
        if (c.class_of[iac] != c.class_of[ibc]) {
          ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(iac).to_string(),
                         f.at(ibc).to_string()},
                        "A ~ B but A∪C !~ B∪C"});
        }
      }
    }
  }
  return report_from_witnesses("CONGRUENCE", std::move(ws));
}

namespace {

// Raw strict pairs form a cycle even before lifting through equivalences?
bool raw_strict_cyclic(const ComparativeRelation& r) {
  const EventFamily& f = r.family();
  const int n = static_cast<int>(f.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : r.strict_pairs()) {
    m[f.index_of_mask(a.mask())][f.index_of_mask(b.mask())] = true;
  }
  close_transitively(m);
  for (int i = 0; i < n; ++i) {
    if (m[i][i]) return true;
  }
  return false;
}

// A cycle exists only through equivalence lifting: produce a witnessing
// quadruple (A, B, A', B') with A > B declared, B ~ B', B' > ... back to A.
std::vector<std::string> lifted_cycle_quadruple(const ComparativeRelation& r,
                                                const RelationClosure& c) {
  for (const auto& [a, b] : r.strict_pairs()) {
    const int ca = c.class_of[c.family->index_of_mask(a.mask())];
    const int cb = c.class_of[c.family->index_of_mask(b.mask())];
    if (!c.strict[cb][ca]) continue;  // this edge does not close a cycle
    // find a declared pair leaving cb on the way back
    for (const auto& [a2, b2] : r.strict_pairs()) {
      const int ca2 = c.class_of[c.family->index_of_mask(a2.mask())];
      const int cb2 = c.class_of[c.family->index_of_mask(b2.mask())];
      if (ca2 == cb && (cb2 == ca || c.strict[cb2][ca])) {
        return {a.to_string(), b.to_string(), a2.to_string(), b2.to_string()};
      }
    }
  }
  return {};
}

}  // namespace

ProbabilityStructure structure_from_relation(const ComparativeRelation& r) {
  const RelationClosure c = closure_of(r);
  if (c.has_cycle()) {
    if (raw_strict_cyclic(r)) {
      throw CycleDetected("strict pairs contain a cycle");
    }
    throw CongruenceViolation(
        "strict pairs form a cycle when lifted through the equivalence classes",
        lifted_cycle_quadruple(r, c));
  }

  const EventFamily& f = r.family();
  std::vector<std::string> labels;
  labels.reserve(c.classes.size());
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    labels.push_back(least_event(c, static_cast<int>(i)).to_string());
  }
  std::vector<std::pair<std::string, std::string>> strict_pairs;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    for (std::size_t j = 0; j < c.classes.size(); ++j) {
      if (c.strict[i][j]) strict_pairs.emplace_back(labels[i], labels[j]);
    }
  }
  Scale scale = build_scale(labels, strict_pairs, {});

  std::vector<std::string> assignment;
  assignment.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    assignment.push_back(labels[c.class_of[i]]);
  }
  return ProbabilityStructure(f, std::move(scale), std::move(assignment));
}

}  // namespace qprob

#include "qprob/structure.hpp"

#include <algorithm>
#include <bit>

#include "family_triples.hpp"
#include "qprob/errors.hpp"

namespace qprob {

ProbabilityStructure::ProbabilityStructure(EventFamily family, Scale scale,
                                           std::vector<std::string> assignment)
    : family_(std::move(family)), scale_(std::move(scale)), assignment_(std::move(assignment)) {
  if (assignment_.size() != family_.size()) {
    throw Error("assignment must map every family event to a scale label");
  }
  class_of_event_.reserve(assignment_.size());
  for (const auto& label : assignment_) {
    class_of_event_.push_back(scale_.class_of_label(label));  // throws UnknownLabel
  }
}

std::vector<int> ProbabilityStructure::image_classes() const {
  std::vector<int> ids = class_of_event_;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

namespace {

AxiomReport check_pna(const ProbabilityStructure& p) {
  const EventFamily& f = p.family();
  if (f.universe()->size() == 0) return pass_report("PNA");
  if (!f.contains_universe() || !f.contains_empty()) {
    return error_report("PNA", "family lacks U or the empty event");
  }
  const int iu = f.index_of_mask(f.universe()->full_mask());
  const int ie = f.index_of_mask(0);
  if (p.strict(iu, ie)) return pass_report("PNA");
  return report_from_witnesses(
      "PNA", {{{f.at(iu).to_string(), f.at(ie).to_string()}, "P(U) > P({}) does not hold"}});
}

AxiomReport check_ica(const ProbabilityStructure& p) {
  const EventFamily& f = p.family();
  const int n = static_cast<int>(f.size());
  std::vector<Witness> ws;
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      if (ia == ib) continue;
      const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask();
      if ((a & b) == b && !p.nonstrict(ia, ib)) {
        ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "A ⊇ B but not P(A) >= P(B)"});
      }
    }
  }
  return report_from_witnesses("ICA", std::move(ws));
}

AxiomReport check_paa(const ProbabilityStructure& p) {
  const EventFamily& f = p.family();
  std::vector<Witness> ws;
  const bool closed = detail::for_each_disjoint_triple(f, [&](int ia, int ib, int ic, int iac, int ibc) {
    const bool lhs = p.strict(ia, ib);
    const bool rhs = p.strict(iac, ibc);
    if (lhs && !rhs) {
      ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                    "P(A) > P(B) but not P(A∪C) > P(B∪C)"});
    } else if (!lhs && rhs) {
      ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                    "P(A∪C) > P(B∪C) but not P(A) > P(B)"});
    }
  });
  if (!closed) return error_report("PAA", "family is not union-closed; PAA skipped");
  return report_from_witnesses("PAA", std::move(ws));
}

AxiomReport check_eca(const ProbabilityStructure& p) {
  const EventFamily& f = p.family();
  std::vector<Witness> ws;
  const bool closed = detail::for_each_disjoint_triple(f, [&](int ia, int ib, int ic, int iac, int ibc) {
    const bool lhs = p.equal_class(ia, ib);
    const bool rhs = p.equal_class(iac, ibc);
    if (lhs && !rhs) {
      ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                    "P(A) = P(B) but not P(A∪C) = P(B∪C)"});
    } else if (!lhs && rhs) {
      ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                    "P(A∪C) = P(B∪C) but not P(A) = P(B)"});
    }
  });
  if (!closed) return error_report("ECA", "family is not union-closed; ECA skipped");
  return report_from_witnesses("ECA", std::move(ws));
}

}  // namespace

std::vector<AxiomReport> check_structure_axioms(const ProbabilityStructure& p, bool include_eca) {
  std::vector<AxiomReport> out = {check_pna(p), check_ica(p), check_paa(p)};
  if (include_eca) out.push_back(check_eca(p));
  return out;
}

namespace {

// Does a bijection A -> B exist with P({u}) >= P({v}) componentwise and at
// least one strict? cls_a/cls_b are the singleton classes of the members.
bool dominating_pairing_exists(const Scale& scale, std::vector<int> cls_a, std::vector<int> cls_b,
                               const std::vector<int>& chain_pos) {
  if (cls_a.size() != cls_b.size()) return false;
  if (!chain_pos.empty()) {
    // Singleton classes form a chain: sort by position and compare pointwise.
    auto pos_less = [&](int x, int y) { return chain_pos[x] < chain_pos[y]; };
    std::sort(cls_a.begin(), cls_a.end(), pos_less);
    std::sort(cls_b.begin(), cls_b.end(), pos_less);
    bool one_strict = false;
    for (std::size_t i = 0; i < cls_a.size(); ++i) {
      if (cls_a[i] == cls_b[i]) continue;
      if (!scale.class_strict(cls_a[i], cls_b[i])) return false;
      one_strict = true;
    }
    return one_strict;
  }
  // General poset: search over pairings.
  std::sort(cls_b.begin(), cls_b.end());
  do {
    bool ok = true, one_strict = false;
    for (std::size_t i = 0; i < cls_a.size(); ++i) {
      if (cls_a[i] == cls_b[i]) continue;
      if (!scale.class_strict(cls_a[i], cls_b[i])) {
        ok = false;
        break;
      }
      one_strict = true;
    }
    if (ok && one_strict) return true;
  } while (std::next_permutation(cls_b.begin(), cls_b.end()));
  return false;
}

}  // namespace

StructureClass classify(const ProbabilityStructure& p) {
  StructureClass out;
  out.rigid = check_eca(p).passed();
  out.complete = p.scale().is_total_on_classes(p.image_classes());
  out.total = p.family().is_power_set();

  const EventFamily& f = p.family();
  const auto& u = f.universe();
  const int n = static_cast<int>(u->size());

  std::vector<int> singleton_class(n, -1);
  for (int i = 0; i < n; ++i) {
    const int idx = f.index_of_mask(std::uint32_t{1} << i);
    if (idx < 0) {
      out.elementary_note = "family lacks the singleton " +
                            Event(u, std::uint32_t{1} << i).to_string() +
                            "; elementary flag undetermined";
      return out;
    }
    singleton_class[i] = p.class_of_event(idx);
  }

  std::vector<int> distinct = singleton_class;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // chain_pos[class] = position along the singleton chain, or empty when the
  // singleton classes are not totally ordered (then pairing search runs).
  std::vector<int> chain_pos;
  if (p.scale().is_total_on_classes(distinct)) {
    chain_pos.assign(p.scale().class_count(), -1);
    std::vector<int> ext = p.scale().linear_extension_of(distinct);
    for (std::size_t i = 0; i < ext.size(); ++i) chain_pos[ext[i]] = static_cast<int>(i);
  }

  bool elementary = true;
  const int fam_n = static_cast<int>(f.size());
  for (int ia = 0; ia < fam_n && elementary; ++ia) {
    for (int ib = 0; ib < fam_n && elementary; ++ib) {
      if (ia == ib) continue;
      const Event& a = f.at(ia);
      const Event& b = f.at(ib);
      if (a.size() != b.size()) continue;  // the axiom constrains equal-size pairs
      std::vector<int> cls_a, cls_b;
      for (int m : a.members()) cls_a.push_back(singleton_class[m]);
      for (int m : b.members()) cls_b.push_back(singleton_class[m]);
      const bool lhs = p.strict(ia, ib);
      const bool rhs = dominating_pairing_exists(p.scale(), cls_a, cls_b, chain_pos);
      if (lhs != rhs) elementary = false;
    }
  }
  out.elementary = elementary;
  return out;
}

ComparativeRelation induced_relation(const ProbabilityStructure& p) {
  const EventFamily& f = p.family();
  const int n = static_cast<int>(f.size());
  std::vector<EventPair> strict, equiv;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (p.strict(i, j)) strict.emplace_back(f.at(i), f.at(j));
      if (i < j && p.equal_class(i, j)) equiv.emplace_back(f.at(i), f.at(j));
    }
  }
  return ComparativeRelation(f, std::move(strict), std::move(equiv));
}

AxiomReport substructure_check(const ProbabilityStructure& p, const ProbabilityStructure& q,
                               SubstructureMode mode) {
  if (!p.family().subset_of(q.family())) {
    throw PreconditionError("substructure check requires p.family ⊆ q.family");
  }
  if (!(p.scale() == q.scale())) {
    throw PreconditionError("substructure check requires identical scales");
  }
  const EventFamily& pf = p.family();
  const EventFamily& qf = q.family();
  const int n = static_cast<int>(pf.size());
  std::vector<Witness> ws;
  if (mode == SubstructureMode::Robust) {
    for (int i = 0; i < n; ++i) {
      const int qi = qf.index_of_mask(pf.at(i).mask());
      if (p.class_of_event(i) != q.class_of_event(qi)) {
        ws.push_back({{pf.at(i).to_string(), p.label_of_event(i), q.label_of_event(qi)},
                      "Q(m(e)) = P(e) violated"});
      }
    }
    return report_from_witnesses("SUBSTRUCTURE-ROBUST", std::move(ws));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int qi = qf.index_of_mask(pf.at(i).mask());
      const int qj = qf.index_of_mask(pf.at(j).mask());
      const bool lhs = p.strict(i, j);
      const bool rhs = q.strict(qi, qj);
      if (lhs != rhs) {
        ws.push_back({{pf.at(i).to_string(), pf.at(j).to_string()},
                      lhs ? "P(e) > P(h) but not Q(e) > Q(h)" : "Q(e) > Q(h) but not P(e) > P(h)"});
      }
    }
  }
  return report_from_witnesses("SUBSTRUCTURE", std::move(ws));
}

ProbabilityStructure restrict_structure(const ProbabilityStructure& q, const EventFamily& sub) {
  if (!sub.subset_of(q.family())) {
    throw PreconditionError("restriction requires a subfamily");
  }
  std::vector<std::string> assignment;
  assignment.reserve(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    assignment.push_back(q.label_of_event(q.family().index_of_mask(sub.at(i).mask())));
  }
  return ProbabilityStructure(sub, q.scale(), std::move(assignment));
}

std::vector<AxiomReport> verify_consequences(const ProbabilityStructure& p) {
  const EventFamily& f = p.family();
  const int n = static_cast<int>(f.size());
  std::vector<AxiomReport> out;

  // P(U) >= P(A) for every permissible A
  if (!f.contains_universe()) {
    out.push_back(error_report("UDOM", "family lacks U"));
  } else {
    const int iu = f.index_of_mask(f.universe()->full_mask());
    std::vector<Witness> ws;
    for (int i = 0; i < n; ++i) {
      if (i != iu && !p.nonstrict(iu, i)) {
        ws.push_back({{f.at(i).to_string()}, "P(U) >= P(A) does not hold"});
      }
    }
    out.push_back(report_from_witnesses("UDOM", std::move(ws)));
  }

  // P(A∪B) >= P(A) and P(A) >= P(A∩B), over combos present in the family
  {
    std::vector<Witness> ws;
    for (int ia = 0; ia < n; ++ia) {
      for (int ib = 0; ib < n; ++ib) {
        const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask();
        const int iu2 = f.index_of_mask(a | b);
        if (iu2 >= 0 && !p.nonstrict(iu2, ia)) {
          ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "P(A∪B) >= P(A) fails"});
        }
        const int ii = f.index_of_mask(a & b);
        if (ii >= 0 && !p.nonstrict(ia, ii)) {
          ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "P(A) >= P(A∩B) fails"});
        }
      }
    }
    out.push_back(report_from_witnesses("UNION-MONO", std::move(ws)));
  }

  // asymmetry of the strict comparison
  {
    std::vector<Witness> ws;
    for (int ia = 0; ia < n; ++ia) {
      for (int ib = ia + 1; ib < n; ++ib) {
        if (p.strict(ia, ib) && p.strict(ib, ia)) {
          ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "both P(A) > P(B) and P(B) > P(A)"});
        }
      }
    }
    out.push_back(report_from_witnesses("ASA", std::move(ws)));
  }

  // inclusion monotonicity through a middle event
  {
    std::vector<Witness> ws;
    for (int ia = 0; ia < n; ++ia) {
      for (int ib = 0; ib < n; ++ib) {
        for (int ic = 0; ic < n; ++ic) {
          const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask(), c = f.at(ic).mask();
          const bool branch1 = ((a & b) == b) && p.nonstrict(ib, ic);
          const bool branch2 = ((b & c) == c) && p.nonstrict(ia, ib);
          if ((branch1 || branch2) && !p.nonstrict(ia, ic)) {
            ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                          branch1 ? "A ⊇ B and P(B) >= P(C)" : "B ⊇ C and P(A) >= P(B)"});
          }
        }
      }
    }
    out.push_back(report_from_witnesses("IMA", std::move(ws)));
  }

  const StructureClass cls = classify(p);

  // non-strict additivity biconditional, meaningful only on rigid structures
  if (!cls.rigid) {
    AxiomReport r = pass_report("NONSTRICT-PAA");
    r.diagnostic = "not applicable: structure is not rigid";
    out.push_back(std::move(r));
  } else {
    std::vector<Witness> ws;
    detail::for_each_disjoint_triple(f, [&](int ia, int ib, int ic, int iac, int ibc) {
      const bool lhs = p.nonstrict(ia, ib);
      const bool rhs = p.nonstrict(iac, ibc);
      if (lhs != rhs) {
        ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string(), f.at(ic).to_string()},
                      lhs ? "P(A) >= P(B) but not P(A∪C) >= P(B∪C)"
                          : "P(A∪C) >= P(B∪C) but not P(A) >= P(B)"});
      }
    });
    out.push_back(report_from_witnesses("NONSTRICT-PAA", std::move(ws)));
  }

  // every pair comparable, meaningful only on complete structures
  if (!cls.complete) {
    AxiomReport r = pass_report("PCTA");
    r.diagnostic = "not applicable: structure is not complete";
    out.push_back(std::move(r));
  } else {
    std::vector<Witness> ws;
    for (int ia = 0; ia < n; ++ia) {
      for (int ib = ia + 1; ib < n; ++ib) {
        if (!p.nonstrict(ia, ib) && !p.nonstrict(ib, ia)) {
          ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "incomparable pair"});
        }
      }
    }
    out.push_back(report_from_witnesses("PCTA", std::move(ws)));
  }

  // P as an order homomorphism from (F, ⊆): inclusion monotonicity
  {
    std::vector<Witness> ws;
    for (int ia = 0; ia < n; ++ia) {
      for (int ib = 0; ib < n; ++ib) {
        if (ia == ib) continue;
        const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask();
        if ((a & b) == b && a != b && !p.nonstrict(ia, ib)) {
          ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "⊆-monotonicity fails"});
        }
      }
    }
    out.push_back(report_from_witnesses("INCLUSION-HOM", std::move(ws)));
  }

  return out;
}

AxiomReport check_pca(const ProbabilityStructure& p) {
  const EventFamily& f = p.family();
  const int n = static_cast<int>(f.size());
  std::vector<int> comp_index(n, -1);
  for (int i = 0; i < n; ++i) {
    const std::uint32_t c = f.universe()->full_mask() & ~f.at(i).mask();
    comp_index[i] = f.index_of_mask(c);
    if (comp_index[i] < 0) {
      throw PreconditionError("PCA requires a complement-closed family; complement of " +
                              f.at(i).to_string() + " is missing");
    }
  }
  std::vector<Witness> ws;
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      if (ia == ib) continue;
      if (p.strict(ia, ib) && p.strict(comp_index[ia], comp_index[ib])) {
        ws.push_back({{f.at(ia).to_string(), f.at(ib).to_string()},
                      "P(A) > P(B) and P(U\\A) > P(U\\B)"});
      }
    }
  }
  return report_from_witnesses("PCA", std::move(ws));
}

}  // namespace qprob

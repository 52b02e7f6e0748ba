#include "qprob/representation.hpp"

#include <algorithm>
#include <map>

#include "qprob/errors.hpp"
#include "qprob/simplex.hpp"

namespace qprob {

AxiomReport check_scale_map(const ScaleMap& f, MapRequirement require) {
  const std::size_t sc = f.source.class_count();
  if (f.class_map.size() != sc) {
    throw PreconditionError("scale map must be total on source classes");
  }
  std::vector<Witness> ws;
  for (std::size_t a = 0; a < sc; ++a) {
    for (std::size_t b = 0; b < sc; ++b) {
      if (a == b) continue;
      if (f.source.class_strict(static_cast<int>(a), static_cast<int>(b)) &&
          !f.target.class_strict(f.class_map[a], f.class_map[b])) {
        ws.push_back({{f.source.class_label(static_cast<int>(a)),
                       f.source.class_label(static_cast<int>(b))},
                      "a > b but not f(a) > f(b)"});
      }
    }
  }
  if (require == MapRequirement::Monomorphism) {
    for (std::size_t a = 0; a < sc; ++a) {
      for (std::size_t b = a + 1; b < sc; ++b) {
        if (f.class_map[a] == f.class_map[b]) {
          ws.push_back({{f.source.class_label(static_cast<int>(a)),
                         f.source.class_label(static_cast<int>(b))},
                        "not injective"});
        }
      }
    }
  }
  return report_from_witnesses(
      require == MapRequirement::Monomorphism ? "MONO" : "HOM", std::move(ws));
}

namespace {

AxiomReport commutes_report(const ProbabilityStructure& p, const ProbabilityStructure& q,
                            const ScaleMap& f) {
  const EventFamily& fam = p.family();
  std::vector<Witness> ws;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const int qi = q.family().index_of_mask(fam.at(i).mask());
    if (f.apply(p.class_of_event(static_cast<int>(i))) != q.class_of_event(qi)) {
      ws.push_back({{fam.at(i).to_string(), p.label_of_event(static_cast<int>(i)),
                     q.label_of_event(qi)},
                    "f(P(e)) != Q(e)"});
    }
  }
  return report_from_witnesses("COMMUTES", std::move(ws));
}

}  // namespace

AxiomReport check_representation(const ProbabilityStructure& p, const ProbabilityStructure& q,
                                 const ScaleMap& f, bool faithful) {
  if (!(p.family() == q.family())) {
    throw PreconditionError("representation requires equal families");
  }
  if (!(f.source == p.scale()) || !(f.target == q.scale())) {
    throw PreconditionError("scale map endpoints must match the structures' scales");
  }
  AxiomReport hom = check_scale_map(
      f, faithful ? MapRequirement::Monomorphism : MapRequirement::Homomorphism);
  AxiomReport com = commutes_report(p, q, f);
  std::vector<Witness> ws = std::move(hom.witnesses);
  ws.insert(ws.end(), com.witnesses.begin(), com.witnesses.end());
  return report_from_witnesses(faithful ? "REPRESENTATION-FAITHFUL" : "REPRESENTATION",
                               std::move(ws));
}

RepresentationResult deflate(const NumericProbability& n) {
  const std::vector<AxiomReport> pre = check_inflated(n);
  for (const auto& r : pre) {
    if (!r.passed()) {
      throw PreconditionError("deflate requires an inflated probability; axiom " + r.axiom +
                              " does not hold");
    }
  }
  const EventFamily& fam = n.family();
  const Rational k = n.value_at(fam.index_of_mask(fam.universe()->full_mask()));
  if (k == 0) {
    throw DeflationUndefined("P(U) = 0: deflation would divide by zero");
  }

  std::vector<Rational> values;
  values.reserve(fam.size());
  for (const auto& v : n.values()) values.push_back(v / k);
  NumericProbability target(fam, std::move(values), 1);

  ProbabilityStructure src = as_structure(n);
  ProbabilityStructure dst = as_structure(target);

  ScaleMap map{src.scale(), dst.scale(), {}};
  map.class_map.assign(src.scale().class_count(), 0);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    map.class_map[src.class_of_event(static_cast<int>(i))] =
        dst.class_of_event(static_cast<int>(i));
  }

  std::vector<AxiomReport> verification = check_kolmogorov(target);
  verification.push_back(check_scale_map(map, MapRequirement::Homomorphism));
  verification.push_back(check_scale_map(map, MapRequirement::Monomorphism));
  verification.push_back(commutes_report(src, dst, map));
  return {std::move(target), std::move(map), std::move(verification)};
}

RepresentationResult represent_elementary(const ProbabilityStructure& p,
                                          ElementaryScaling scaling) {
  const StructureClass cls = classify(p);
  if (!cls.total) throw NotTotal("elementary representation requires a total structure");
  if (!cls.elementary.has_value() || !*cls.elementary) {
    throw NotElementary("elementary representation requires an elementary structure");
  }

  const EventFamily& fam = p.family();
  const auto& u = fam.universe();
  const int n = static_cast<int>(u->size());
  const int empty_class = p.class_of_event(fam.index_of_mask(0));

  // Partition the elements: class of the empty event first (weight 0), the
  // remaining singleton classes in linear extension order.
  std::vector<int> singleton_class(n);
  std::vector<int> nonzero_classes;
  for (int i = 0; i < n; ++i) {
    singleton_class[i] = p.class_of_event(fam.index_of_mask(std::uint32_t{1} << i));
    if (singleton_class[i] != empty_class) nonzero_classes.push_back(singleton_class[i]);
  }
  std::sort(nonzero_classes.begin(), nonzero_classes.end());
  nonzero_classes.erase(std::unique(nonzero_classes.begin(), nonzero_classes.end()),
                        nonzero_classes.end());
  const std::vector<int> ext = p.scale().linear_extension_of(nonzero_classes);

  std::vector<int> tier_of_class(p.scale().class_count(), 0);  // 0 = weight zero
  for (std::size_t i = 0; i < ext.size(); ++i) tier_of_class[ext[i]] = static_cast<int>(i) + 1;

  long normalizer = 0;
  std::vector<long> tier_count(ext.size() + 1, 0);
  for (int i = 0; i < n; ++i) ++tier_count[tier_of_class[singleton_class[i]]];
  for (std::size_t t = 1; t < tier_count.size(); ++t) {
    normalizer += static_cast<long>(t) * tier_count[t];
  }
  if (scaling == ElementaryScaling::Doubled) normalizer *= 2;
  if (normalizer == 0) {
    throw DegenerateScale("every singleton shares the class of the empty event");
  }

  std::vector<Rational> weight(n);
  for (int i = 0; i < n; ++i) {
    const long t = tier_of_class[singleton_class[i]];
    const long num = scaling == ElementaryScaling::Doubled ? 2 * t : t;
    weight[i] = Rational(num, normalizer);
  }

  std::vector<Rational> values;
  values.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Rational sum = 0;
    for (int m : fam.at(i).members()) sum += weight[m];
    values.push_back(sum);
  }
  NumericProbability target(fam, std::move(values), 1);
  ProbabilityStructure dst = as_structure(target);

  // f maps each scale class to the common value of its events; two events
  // in one class with different sums make the map ill-defined.
  ScaleMap map{p.scale(), dst.scale(), {}};
  map.class_map.assign(p.scale().class_count(), 0);
  std::vector<int> first_event(p.scale().class_count(), -1);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const int c = p.class_of_event(static_cast<int>(i));
    const int target_class = dst.class_of_event(static_cast<int>(i));
    if (first_event[c] < 0) {
      first_event[c] = static_cast<int>(i);
      map.class_map[c] = target_class;
    } else if (map.class_map[c] != target_class) {
      throw IllDefinedMap("scale class '" + p.scale().class_label(c) +
                              "' receives two different numeric values",
                          fam.at(first_event[c]).to_string(), fam.at(i).to_string());
    }
  }

  std::vector<AxiomReport> verification = check_kolmogorov(target);
  verification.push_back(check_scale_map(map, MapRequirement::Homomorphism));
  verification.push_back(commutes_report(p, dst, map));
  return {std::move(target), std::move(map), std::move(verification)};
}

namespace {

// Hasse edges (transitive reduction) of the closure's class order.
std::vector<std::pair<int, int>> covering_edges(const RelationClosure& c) {
  const int k = static_cast<int>(c.classes.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !c.strict[i][j]) continue;
      bool covering = true;
      for (int m = 0; m < k; ++m) {
        if (m != i && m != j && c.strict[i][m] && c.strict[m][j]) {
          covering = false;
          break;
        }
      }
      if (covering) out.emplace_back(i, j);
    }
  }
  return out;
}

Rational event_weight_sum(const Event& e, const std::vector<Rational>& weights) {
  Rational sum = 0;
  for (int m : e.members()) sum += weights[m];
  return sum;
}

}  // namespace

RepresentabilityDecision decide_representability(const ComparativeRelation& r) {
  RepresentabilityDecision out;

  std::string failing_axiom;
  for (const auto& rep : check_de_finetti(r)) {
    if (rep.failed() && failing_axiom.empty()) failing_axiom = rep.axiom;
  }

  const RelationClosure c = closure_of(r);
  if (c.has_cycle()) {
    out.representable = false;
    out.certificate = failing_axiom.empty() ? "lp-infeasible" : failing_axiom;
    return out;
  }

  const EventFamily& fam = r.family();
  const auto& u = fam.universe();
  const std::size_t n = u->size();
  const std::size_t delta = n;  // slack variable index

  LinearProgram lp;
  lp.num_vars = n + 1;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[delta] = 1;

  auto event_row = [&](int family_index, const Rational& sign, LinearConstraint& con) {
    for (int m : fam.at(family_index).members()) con.coeffs[m] += sign;
  };

  {
    LinearConstraint total;
    total.coeffs.assign(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) total.coeffs[i] = 1;
    total.rel = RowRel::Eq;
    total.rhs = 1;
    lp.constraints.push_back(std::move(total));
  }
  {
    LinearConstraint cap;
    cap.coeffs.assign(n + 1, Rational(0));
    cap.coeffs[delta] = 1;
    cap.rel = RowRel::Le;
    cap.rhs = 1;
    lp.constraints.push_back(std::move(cap));
  }
  for (const auto& members : c.classes) {
    for (std::size_t i = 1; i < members.size(); ++i) {
      LinearConstraint eq;
      eq.coeffs.assign(n + 1, Rational(0));
      event_row(members[0], 1, eq);
      event_row(members[i], -1, eq);
      eq.rel = RowRel::Eq;
      eq.rhs = 0;
      lp.constraints.push_back(std::move(eq));
    }
  }
  for (const auto& [above, below] : covering_edges(c)) {
    LinearConstraint ge;
    ge.coeffs.assign(n + 1, Rational(0));
    event_row(c.classes[above].front(), 1, ge);
    event_row(c.classes[below].front(), -1, ge);
    ge.coeffs[delta] = -1;
    ge.rel = RowRel::Ge;
    ge.rhs = 0;
    lp.constraints.push_back(std::move(ge));
  }

  const LpResult lpres = solve_lp(lp);
  if (lpres.status != LpStatus::Optimal || lpres.objective == 0) {
    out.representable = false;
    out.certificate = failing_axiom.empty() ? "lp-infeasible" : failing_axiom;
    return out;
  }

  std::vector<Rational> weights(lpres.solution.begin(), lpres.solution.begin() + n);
  NumericProbability witness = from_weights(u, weights, WeightMode::Normalize);

  // Re-verify: the witness's induced relation must extend the closure.
  for (std::size_t ia = 0; ia < fam.size(); ++ia) {
    for (std::size_t ib = 0; ib < fam.size(); ++ib) {
      if (ia == ib) continue;
      const Rational va = event_weight_sum(fam.at(ia), weights);
      const Rational vb = event_weight_sum(fam.at(ib), weights);
      if (c.strict_holds(static_cast<int>(ia), static_cast<int>(ib)) && !(va > vb)) {
        throw Error("internal: witness does not extend the strict closure");
      }
      if (c.equiv_holds(static_cast<int>(ia), static_cast<int>(ib)) && va != vb) {
        throw Error("internal: witness does not respect an equivalence");
      }
    }
  }

  out.representable = true;
  out.witness = std::move(witness);
  return out;
}

}  // namespace qprob

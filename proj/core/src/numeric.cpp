#include "qprob/numeric.hpp"

#include <algorithm>
#include <map>

#include "qprob/errors.hpp"

namespace qprob {

NumericProbability::NumericProbability(EventFamily family, std::vector<Rational> values,
                                       long bound)
    : family_(std::move(family)), values_(std::move(values)), bound_(bound) {
  if (values_.size() != family_.size()) {
    throw Error("value table must cover every family event");
  }
  if (bound_ < 1) throw Error("bound m must be a positive integer");
}

const Rational& NumericProbability::value(const Event& e) const {
  const int idx = family_.index_of_mask(e.mask());
  if (idx < 0 || !(*e.universe() == *family_.universe())) {
    throw Error("event " + e.to_string() + " is not in the family");
  }
  return values_[idx];
}

std::vector<AxiomReport> check_kolmogorov(const NumericProbability& n) {
  const EventFamily& f = n.family();
  const int count = static_cast<int>(f.size());

  std::vector<Witness> k1;
  for (int i = 0; i < count; ++i) {
    if (n.value_at(i) < 0) {
      k1.push_back({{f.at(i).to_string(), format_rational(n.value_at(i))}, "P(A) < 0"});
    }
  }

  AxiomReport k2 = [&] {
    if (!f.contains_universe()) return error_report("K2", "family lacks U");
    const int iu = f.index_of_mask(f.universe()->full_mask());
    if (n.value_at(iu) == 1) return pass_report("K2");
    return report_from_witnesses(
        "K2", {{{f.at(iu).to_string(), format_rational(n.value_at(iu))}, "P(U) != 1"}});
  }();

  std::vector<Witness> k3;
  for (int ia = 0; ia < count; ++ia) {
    for (int ib = ia; ib < count; ++ib) {
      const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask();
      if ((a & b) != 0) continue;
      const int iu2 = f.index_of_mask(a | b);
      if (iu2 < 0) continue;
      if (n.value_at(iu2) != n.value_at(ia) + n.value_at(ib)) {
        k3.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "P(A∪B) != P(A) + P(B)"});
      }
    }
  }

  return {report_from_witnesses("K1", std::move(k1)), std::move(k2),
          report_from_witnesses("K3", std::move(k3))};
}

std::vector<AxiomReport> check_inflated(const NumericProbability& n) {
  const EventFamily& f = n.family();
  const int count = static_cast<int>(f.size());

  AxiomReport as = check_family(f, FamilyAxiom::SIP2);
  as.axiom = "AS";

  AxiomReport up = [&] {
    if (!f.contains_universe()) return error_report("UP", "family lacks U");
    const int iu = f.index_of_mask(f.universe()->full_mask());
    const Rational& pu = n.value_at(iu);
    if (pu >= 0 && pu <= Rational(n.bound())) return pass_report("UP");
    return report_from_witnesses(
        "UP", {{{f.at(iu).to_string(), format_rational(pu), std::to_string(n.bound())},
                "P(U) outside [0, m]"}});
  }();

  AxiomReport lp = [&] {
    if (!f.contains_empty()) return error_report("LP", "family lacks the empty event");
    const int ie = f.index_of_mask(0);
    if (n.value_at(ie) == 0) return pass_report("LP");
    return report_from_witnesses(
        "LP", {{{f.at(ie).to_string(), format_rational(n.value_at(ie))}, "P({}) != 0"}});
  }();

  std::vector<Witness> fa;
  for (int ia = 0; ia < count; ++ia) {
    for (int ib = ia; ib < count; ++ib) {
      const std::uint32_t a = f.at(ia).mask(), b = f.at(ib).mask();
      if ((a & b) != 0) continue;
      const int iu2 = f.index_of_mask(a | b);
      if (iu2 < 0) continue;
      if (n.value_at(iu2) != n.value_at(ia) + n.value_at(ib)) {
        fa.push_back({{f.at(ia).to_string(), f.at(ib).to_string()}, "P(A∪B) != P(A) + P(B)"});
      }
    }
  }

  // non-negativity of every value, reported separately for diagnosis
  std::vector<Witness> nn;
  for (int i = 0; i < count; ++i) {
    if (n.value_at(i) < 0) {
      nn.push_back({{f.at(i).to_string(), format_rational(n.value_at(i))}, "P(A) < 0"});
    }
  }

  return {std::move(as), std::move(up), std::move(lp),
          report_from_witnesses("FA", std::move(fa)),
          report_from_witnesses("NONNEG", std::move(nn))};
}

ProbabilityStructure as_structure(const NumericProbability& n) {
  const EventFamily& f = n.family();

  // one label per distinct value, ordered as a chain by the rational order
  std::map<Rational, std::string> labels_by_value;
  for (const auto& v : n.values()) labels_by_value.emplace(v, format_rational(v));

  std::vector<std::string> labels;
  labels.reserve(labels_by_value.size());
  for (const auto& [v, label] : labels_by_value) labels.push_back(label);

  std::vector<std::pair<std::string, std::string>> strict;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    strict.emplace_back(labels[i], labels[i - 1]);
  }
  Scale scale = build_scale(labels, strict, {});

  std::vector<std::string> assignment;
  assignment.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    assignment.push_back(labels_by_value.at(n.value_at(i)));
  }
  return ProbabilityStructure(f, std::move(scale), std::move(assignment));
}

NumericProbability from_weights(const UniversePtr& u, const std::vector<Rational>& weights,
                                WeightMode mode) {
  if (weights.size() != u->size()) {
    throw Error("from_weights needs one weight per universe element");
  }
  for (const auto& w : weights) {
    if (w < 0) throw Error("weights must be non-negative");
  }
  Rational total = 0;
  for (const auto& w : weights) total += w;
  if (mode == WeightMode::Normalize && total == 0) {
    throw Error("normalize mode requires a positive weight total");
  }

  EventFamily family = power_set(u);
  std::vector<Rational> values;
  values.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    Rational sum = 0;
    for (int m : family.at(i).members()) sum += weights[m];
    if (mode == WeightMode::Normalize) sum /= total;
    values.push_back(sum);
  }

  long bound = 1;
  if (mode == WeightMode::Raw) {
    // smallest positive integer >= total
    mpz_class q = total.get_num() / total.get_den();
    if (q * total.get_den() < total.get_num()) q += 1;
    if (q < 1) q = 1;
    if (!q.fits_slong_p()) throw Error("weight total too large for a declared bound");
    bound = q.get_si();
  }
  return NumericProbability(std::move(family), std::move(values), bound);
}

}  // namespace qprob

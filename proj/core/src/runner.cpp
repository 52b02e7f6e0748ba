#include "qprob/runner.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qprob/document.hpp"
#include "qprob/errors.hpp"
#include "qprob/numeric.hpp"
#include "qprob/relation.hpp"
#include "qprob/representation.hpp"
#include "qprob/structure.hpp"

namespace qprob {

namespace {

constexpr std::size_t kMaxHumanWitnesses = 5;

void render_report(const AxiomReport& r, bool porcelain, std::ostream& out) {
  if (porcelain) {
    switch (r.verdict) {
      case Verdict::Pass:
        out << "PASS\t" << r.axiom << '\n';
        break;
      case Verdict::Error:
        out << "ERROR\t" << r.axiom << '\t' << r.diagnostic << '\n';
        break;
      case Verdict::Fail:
        for (const auto& w : r.witnesses) {
          out << "FAIL\t" << r.axiom << '\t';
          for (std::size_t i = 0; i < w.parts.size(); ++i) {
            out << (i ? "|" : "") << w.parts[i];
          }
          out << '\t' << w.clause << '\n';
        }
        break;
    }
    return;
  }
  switch (r.verdict) {
    case Verdict::Pass:
      out << "PASS " << r.axiom << '\n';
      break;
    case Verdict::Error:
      out << "ERROR " << r.axiom << ": " << r.diagnostic << '\n';
      break;
    case Verdict::Fail: {
      out << "FAIL " << r.axiom << ": " << r.witnesses.size()
          << (r.witnesses.size() == 1 ? " witness" : " witnesses") << '\n';
      const std::size_t shown = std::min(r.witnesses.size(), kMaxHumanWitnesses);
      for (std::size_t i = 0; i < shown; ++i) {
        const auto& w = r.witnesses[i];
        out << "  [";
        for (std::size_t j = 0; j < w.parts.size(); ++j) {
          out << (j ? ", " : "") << w.parts[j];
        }
        out << "] " << w.clause << '\n';
      }
      if (shown < r.witnesses.size()) {
        out << "  (+" << (r.witnesses.size() - shown) << " more)\n";
      }
      break;
    }
  }
}

int render_reports(const std::vector<AxiomReport>& reports, bool porcelain, std::ostream& out) {
  bool any_fail = false, any_error = false;
  for (const auto& r : reports) {
    render_report(r, porcelain, out);
    any_fail |= r.failed();
    any_error |= r.verdict == Verdict::Error;
  }
  if (any_error) return 2;
  return any_fail ? 1 : 0;
}

int emit_error(const std::string& context, const std::string& what, bool porcelain,
               std::ostream& out) {
  if (porcelain) {
    out << "ERROR\t" << context << '\t' << what << '\n';
  } else {
    out << "ERROR " << context << ": " << what << '\n';
  }
  return 2;
}

NumericProbability numeric_from(const Document& d) {
  if (!d.has_assignment()) throw PreconditionError("document has no assign section");
  EventFamily family = d.resolve_family();
  std::vector<Rational> values(family.size());
  std::vector<bool> present(family.size(), false);
  for (const auto& [e, v] : d.assignments) {
    const int idx = family.index_of_mask(e.mask());
    if (idx < 0) throw PreconditionError("assigned event " + e.to_string() + " outside family");
    values[idx] = v;
    present[idx] = true;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!present[i]) {
      throw PreconditionError("event " + family.at(i).to_string() + " has no assigned value");
    }
  }
  return NumericProbability(std::move(family), std::move(values), d.bound.value_or(1));
}

ProbabilityStructure structure_from(const Document& d) {
  if (d.has_scale()) {
    std::vector<std::pair<std::string, std::string>> strict, equiv;
    for (const auto& o : d.orders) {
      if (o.kind == Document::OrderKind::Strict) {
        strict.emplace_back(d.scale_labels[o.b], d.scale_labels[o.a]);  // "a < b": b above a
      } else {
        equiv.emplace_back(d.scale_labels[o.a], d.scale_labels[o.b]);
      }
    }
    Scale scale = build_scale(d.scale_labels, strict, equiv);
    EventFamily family = d.resolve_family();
    std::vector<std::string> assignment(family.size());
    std::vector<bool> present(family.size(), false);
    for (const auto& [e, label] : d.maps) {
      const int idx = family.index_of_mask(e.mask());
      if (idx < 0) throw PreconditionError("mapped event " + e.to_string() + " outside family");
      assignment[idx] = label;
      present[idx] = true;
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!present[i]) {
        throw PreconditionError("event " + family.at(i).to_string() + " has no scale label");
      }
    }
    return ProbabilityStructure(std::move(family), std::move(scale), std::move(assignment));
  }
  if (d.has_assignment()) return as_structure(numeric_from(d));
  throw PreconditionError("document carries neither a scale mapping nor an assignment");
}

ComparativeRelation relation_from(const Document& d) {
  if (!d.has_relation()) throw PreconditionError("document has no rel section");
  return ComparativeRelation(d.resolve_family(), d.rel_strict, d.rel_equiv);
}

Document document_for_numeric(const Document& input, const NumericProbability& n) {
  Document out;
  out.universe = input.universe;
  out.family_decl = input.family_decl;
  out.family_events = input.family_events;
  const EventFamily& fam = n.family();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    out.assignments.emplace_back(fam.at(i), n.value_at(i));
  }
  if (n.bound() != 1) out.bound = n.bound();
  return out;
}

void print_scale_map(const ScaleMap& map, std::ostream& out) {
  for (std::size_t c = 0; c < map.source.class_count(); ++c) {
    out << "f: " << map.source.class_label(static_cast<int>(c)) << " -> "
        << map.target.class_label(map.class_map[c]) << '\n';
  }
}

int run_check(const Document& d, const Invocation& inv, std::ostream& out) {
  if (inv.suite == "family") {
    return render_reports(check_family_all(d.resolve_family()), inv.porcelain, out);
  }
  if (inv.suite == "definetti") {
    return render_reports(check_de_finetti(relation_from(d)), inv.porcelain, out);
  }
  if (inv.suite == "structure") {
    return render_reports(check_structure_axioms(structure_from(d), /*include_eca=*/true),
                          inv.porcelain, out);
  }
  if (inv.suite == "kolmogorov") {
    return render_reports(check_kolmogorov(numeric_from(d)), inv.porcelain, out);
  }
  if (inv.suite == "inflated") {
    return render_reports(check_inflated(numeric_from(d)), inv.porcelain, out);
  }
  throw PreconditionError("unknown suite '" + inv.suite + "'");
}

int run_classify(const Document& d, const Invocation& inv, std::ostream& out) {
  const StructureClass c = classify(structure_from(d));
  const auto flag = [](bool v) { return v ? "true" : "false"; };
  out << "rigid: " << flag(c.rigid) << '\n';
  out << "complete: " << flag(c.complete) << '\n';
  out << "total: " << flag(c.total) << '\n';
  if (c.elementary.has_value()) {
    out << "elementary: " << flag(*c.elementary) << '\n';
  } else {
    out << "elementary: undetermined (" << c.elementary_note << ")\n";
  }
  return 0;
}

int run_induce(const Document& d, const Invocation&, std::ostream& out) {
  const ProbabilityStructure p = structure_from(d);
  const ComparativeRelation rel = induced_relation(p);
  Document res;
  res.universe = d.universe;
  res.family_decl = d.family_decl;
  res.family_events = d.family_events;
  res.rel_strict = rel.strict_pairs();
  for (const auto& [a, b] : rel.equiv_pairs()) res.rel_equiv.emplace_back(a, b);
  out << serialize_document(res);
  return 0;
}

int run_decide(const Document& d, const Invocation&, std::ostream& out) {
  const RepresentabilityDecision dec = decide_representability(relation_from(d));
  if (dec.representable) {
    out << "REPRESENTABLE\n";
    out << serialize_document(document_for_numeric(d, *dec.witness));
    return 0;
  }
  out << "NOT REPRESENTABLE\n";
  out << "certificate: " << dec.certificate << '\n';
  return 1;
}

int run_represent(const Document& d, const Invocation& inv, std::ostream& out) {
  if (inv.method == "deflate") {
    const RepresentationResult res = deflate(numeric_from(d));
    out << serialize_document(document_for_numeric(d, res.target));
    print_scale_map(res.map, out);
    return render_reports(res.verification, inv.porcelain, out);
  }
  if (inv.method == "elementary") {
    ElementaryScaling scaling = ElementaryScaling::Standard;
    if (inv.scaling == "doubled") {
      scaling = ElementaryScaling::Doubled;
    } else if (inv.scaling != "standard") {
      throw PreconditionError("unknown scaling '" + inv.scaling + "'");
    }
    const RepresentationResult res = represent_elementary(structure_from(d), scaling);
    out << serialize_document(document_for_numeric(d, res.target));
    print_scale_map(res.map, out);
    return render_reports(res.verification, inv.porcelain, out);
  }
  if (inv.method == "lp") {
    const ComparativeRelation rel = relation_from(d);
    const RepresentabilityDecision dec = decide_representability(rel);
    if (!dec.representable) {
      out << "NOT REPRESENTABLE\n";
      out << "certificate: " << dec.certificate << '\n';
      return 1;
    }
    out << "REPRESENTABLE\n";
    const NumericProbability& witness = *dec.witness;
    // Restrict the witness to the relation's family for the printed target.
    const EventFamily& fam = rel.family();
    std::vector<Rational> values;
    values.reserve(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      values.push_back(witness.value(fam.at(i)));
    }
    NumericProbability target(fam, std::move(values), 1);
    out << serialize_document(document_for_numeric(d, target));

    const ProbabilityStructure src = structure_from_relation(rel);
    const ProbabilityStructure dst = as_structure(target);
    ScaleMap map{src.scale(), dst.scale(), {}};
    map.class_map.assign(src.scale().class_count(), 0);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      map.class_map[src.class_of_event(static_cast<int>(i))] =
          dst.class_of_event(static_cast<int>(i));
    }
    print_scale_map(map, out);
    std::vector<AxiomReport> verification = check_kolmogorov(target);
    verification.push_back(check_scale_map(map, MapRequirement::Homomorphism));
    verification.push_back(check_representation(src, dst, map, /*faithful=*/false));
    return render_reports(verification, inv.porcelain, out);
  }
  throw PreconditionError("unknown method '" + inv.method + "'");
}

int run_pca(const Document& d, const Invocation& inv, std::ostream& out) {
  return render_reports({check_pca(structure_from(d))}, inv.porcelain, out);
}

}  // namespace

int run_command(const Invocation& inv, std::string_view input, std::ostream& out) {
  Document d;
  try {
    d = parse_document(input);
  } catch (const ParseError& e) {
    return emit_error("parse", e.what(), inv.porcelain, out);
  }
  try {
    if (inv.command == "check") return run_check(d, inv, out);
    if (inv.command == "classify") return run_classify(d, inv, out);
    if (inv.command == "induce") return run_induce(d, inv, out);
    if (inv.command == "represent") return run_represent(d, inv, out);
    if (inv.command == "decide") return run_decide(d, inv, out);
    if (inv.command == "pca") return run_pca(d, inv, out);
    return emit_error("usage", "unknown command '" + inv.command + "'", inv.porcelain, out);
  } catch (const Error& e) {
    return emit_error(inv.command, e.what(), inv.porcelain, out);
  }
}

int run_command_on_file(const Invocation& inv, const std::string& path, std::ostream& out) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) {
      return emit_error("input", "cannot open '" + path + "'", inv.porcelain, out);
    }
    buffer << file.rdbuf();
  }
  return run_command(inv, buffer.str(), out);
}

}  // namespace qprob

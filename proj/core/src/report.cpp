#include "qprob/report.hpp"

#include <algorithm>

namespace qprob {

AxiomReport pass_report(std::string axiom) {
  AxiomReport r;
  r.axiom = std::move(axiom);
  r.verdict = Verdict::Pass;
  return r;
}

AxiomReport error_report(std::string axiom, std::string diagnostic) {
  AxiomReport r;
  r.axiom = std::move(axiom);
  r.verdict = Verdict::Error;
  r.diagnostic = std::move(diagnostic);
  return r;
}

AxiomReport report_from_witnesses(std::string axiom, std::vector<Witness> witnesses) {
  AxiomReport r;
  r.axiom = std::move(axiom);
  r.verdict = witnesses.empty() ? Verdict::Pass : Verdict::Fail;
  r.witnesses = std::move(witnesses);
  return r;
}

bool all_pass(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.passed(); });
}

}  // namespace qprob

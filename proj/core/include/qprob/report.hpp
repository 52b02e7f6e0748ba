#ifndef QPROB_REPORT_HPP
#define QPROB_REPORT_HPP

#include <string>
#include <vector>

namespace qprob {

enum class Verdict { Pass, Fail, Error };

// One counterexample to an axiom: the participating events / scale labels
// in canonical text form, plus which clause of the axiom broke.
struct Witness {
  std::vector<std::string> parts;
  std::string clause;

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.parts == b.parts && a.clause == b.clause;
  }
};

struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;  // non-empty iff verdict == Fail
  std::string diagnostic;          // reason for Error, or informational note

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }
};

AxiomReport pass_report(std::string axiom);
AxiomReport error_report(std::string axiom, std::string diagnostic);
// Fail when witnesses is non-empty, pass otherwise. Witnesses are already
// expected in deterministic (enumeration) order; this does not re-sort.
AxiomReport report_from_witnesses(std::string axiom, std::vector<Witness> witnesses);

// True iff every report passed.
bool all_pass(const std::vector<AxiomReport>& reports);

}  // namespace qprob

#endif  // QPROB_REPORT_HPP

#ifndef QPROB_SIMPLEX_HPP
#define QPROB_SIMPLEX_HPP

#include <vector>

#include "qprob/rational.hpp"

namespace qprob {

enum class RowRel { Eq, Ge, Le };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  RowRel rel = RowRel::Eq;
  Rational rhs = 0;
};

// max objective·x subject to the constraints and x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective = 0;
  std::vector<Rational> solution;  // num_vars entries when Optimal
};

// Two-phase dense simplex over exact rationals with Bland's rule, so it
// terminates on every input. Intended for the small systems this library
// produces (tens of rows); no scaling or sparsity tricks.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace qprob

#endif  // QPROB_SIMPLEX_HPP

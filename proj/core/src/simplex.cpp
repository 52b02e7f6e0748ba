#include "qprob/simplex.hpp"

#include <algorithm>

#include "qprob/errors.hpp"

namespace qprob {

namespace {

using Row = std::vector<Rational>;

struct Tableau {
  std::vector<Row> rows;  // m x (ncols + 1), last column = rhs
  Row obj;                // 1 x (ncols + 1), maximization row-0 form
  std::vector<int> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    if (obj[c] != 0) {
      const Rational factor = obj[c];
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= factor * rows[r][j];
    }
    basis[r] = static_cast<int>(c);
  }

  // Bland's rule; allowed[j] marks columns eligible to enter. Returns false
  // when the problem is unbounded.
  bool run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (allowed[j] && obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;  // optimal
      std::size_t leave = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        if (leave == rows.size()) {
          leave = i;
          continue;
        }
        const Rational cur = rows[i][ncols] / rows[i][enter];
        const Rational best = rows[leave][ncols] / rows[leave][enter];
        if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
      }
      if (leave == rows.size()) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) throw Error("objective size mismatch");

  // Normalize to b >= 0, then attach one slack/surplus per inequality and
  // one artificial per row without a natural basic column.
  struct NormRow {
    Row a;
    RowRel rel;
    Rational b;
  };
  std::vector<NormRow> norm;
  norm.reserve(lp.constraints.size());
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) throw Error("constraint size mismatch");
    NormRow r{c.coeffs, c.rel, c.rhs};
    if (r.b < 0) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      if (r.rel == RowRel::Ge) {
        r.rel = RowRel::Le;
      } else if (r.rel == RowRel::Le) {
        r.rel = RowRel::Ge;
      }
    }
    norm.push_back(std::move(r));
  }

  const std::size_t m = norm.size();
  std::size_t nslack = 0;
  for (const auto& r : norm) {
    if (r.rel != RowRel::Eq) ++nslack;
  }
  std::size_t nart = 0;
  for (const auto& r : norm) {
    if (r.rel != RowRel::Le) ++nart;  // Ge and Eq rows need artificials
  }

  Tableau t;
  t.ncols = n + nslack + nart;
  t.rows.assign(m, Row(t.ncols + 1, Rational(0)));
  t.basis.assign(m, -1);

  std::size_t slack_at = n;
  std::size_t art_at = n + nslack;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = norm[i].a[j];
    t.rows[i][t.ncols] = norm[i].b;
    if (norm[i].rel == RowRel::Le) {
      t.rows[i][slack_at] = 1;
      t.basis[i] = static_cast<int>(slack_at++);
    } else if (norm[i].rel == RowRel::Ge) {
      t.rows[i][slack_at] = -1;
      ++slack_at;
      t.rows[i][art_at] = 1;
      t.basis[i] = static_cast<int>(art_at++);
    } else {
      t.rows[i][art_at] = 1;
      t.basis[i] = static_cast<int>(art_at++);
    }
  }

  std::vector<bool> allow_all(t.ncols, true);
  std::vector<bool> allow_real(t.ncols, true);
  for (std::size_t j = n + nslack; j < t.ncols; ++j) allow_real[j] = false;

  LpResult out;

  if (nart > 0) {
    // Phase 1: maximize -(sum of artificials).
    t.obj.assign(t.ncols + 1, Rational(0));
    for (std::size_t j = n + nslack; j < t.ncols; ++j) t.obj[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= static_cast<int>(n + nslack)) {
        for (std::size_t j = 0; j <= t.ncols; ++j) t.obj[j] -= t.rows[i][j];
      }
    }
    t.run(allow_all);  // bounded below by 0, cannot be unbounded
    if (t.obj[t.ncols] != 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Pivot surviving artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < static_cast<int>(n + nslack)) {
        ++i;
        continue;
      }
      std::size_t c = t.ncols;
      for (std::size_t j = 0; j < n + nslack; ++j) {
        if (t.rows[i][j] != 0) {
          c = j;
          break;
        }
      }
      if (c == t.ncols) {
        t.rows.erase(t.rows.begin() + static_cast<long>(i));
        t.basis.erase(t.basis.begin() + static_cast<long>(i));
      } else {
        t.pivot(i, c);
        ++i;
      }
    }
  }

  // Phase 2: the real objective.
  t.obj.assign(t.ncols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) t.obj[j] = -lp.objective[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const int b = t.basis[i];
    if (t.obj[b] != 0) {
      const Rational factor = t.obj[b];
      for (std::size_t j = 0; j <= t.ncols; ++j) t.obj[j] -= factor * t.rows[i][j];
    }
  }
  if (!t.run(allow_real)) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.objective = t.obj[t.ncols];
  out.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] >= 0 && t.basis[i] < static_cast<int>(n)) {
      out.solution[t.basis[i]] = t.rows[i][t.ncols];
    }
  }
  return out;
}

}  // namespace qprob

#include "memlearn/simplex.hpp"

#include <utility>

#include "memlearn/errors.hpp"

namespace memlearn {

namespace {

// Dictionary layout: rows 0..m-1 are constraints, row m the objective, row
// m+1 the phase-one objective. Column n holds the artificial variable
// (id -1) and column n+1 the right-hand side.
class Tableau {
 public:
  Tableau(const LinearProgram& lp)
      : m_(static_cast<int>(lp.b.size())),
        n_(static_cast<int>(lp.c.size())),
        nonbasic_(n_ + 1),
        basic_(m_),
        d_(m_ + 2, std::vector<Rational>(n_ + 2)) {
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(lp.a[i].size()) != n_) throw ValidationError("LP row width mismatch");
      for (int j = 0; j < n_; ++j) d_[i][j] = lp.a[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = -1;
      d_[i][n_ + 1] = lp.b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -lp.c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  LpResult solve() {
    LpResult out;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < 0) {
      pivot(r, n_);
      if (!run(2) || d_[m_ + 1][n_ + 1] < 0) {
        out.status = LpStatus::Infeasible;
        return out;
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (d_[i][j] != 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
        }
        if (s != -1) pivot(i, s);
      }
    }
    if (!run(1)) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.solution.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < n_) out.solution[basic_[i]] = d_[i][n_ + 1];
    }
    out.objective = d_[m_][n_ + 1];
    return out;
  }

 private:
  void pivot(int r, int s) {
    const Rational inv = 1 / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s] == 0) continue;
      const Rational factor = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j) {
        if (d_[r][j] != 0) d_[i][j] -= d_[r][j] * factor;
      }
      d_[i][s] = d_[r][s] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) d_[r][j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_[i][s] *= -inv;
    }
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland's rule: entering = lowest variable id with negative reduced cost,
  // leaving = minimum ratio with ties to the lowest basic id.
  bool run(int phase) {
    const int x = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (d_[x][j] < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= 0) continue;
        Rational ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_, n_;
  std::vector<int> nonbasic_, basic_;
  std::vector<std::vector<Rational>> d_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  if (lp.a.size() != lp.b.size()) throw ValidationError("LP has mismatched A and b");
  Tableau t(lp);
  return t.solve();
}

}  // namespace memlearn

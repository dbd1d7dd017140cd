#include "polyscribe/simplex.hpp"

#include <algorithm>

#include "polyscribe/errors.hpp"

namespace polyscribe::lp {

int Problem::add_var(const Rational& obj_coef, bool free_var) {
  objective.push_back(obj_coef);
  is_free.push_back(free_var);
  return num_vars++;
}

namespace {

// Dense exact tableau over the rationals.  Columns are: the standard-form
// variables first, then slacks, then artificials; the last column is the rhs.
struct Tableau {
  int m = 0, n = 0;  // rows, non-rhs columns
  std::vector<std::vector<Rational>> a;  // m x (n+1)
  std::vector<Rational> z;               // objective row, size n+1
  std::vector<int> basis;                // size m

  void pivot(int r, int c) {
    Rational piv = a[r][c];
    for (auto& e : a[r]) e /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      Rational f = a[i][c];
      if (f == 0) continue;
      for (int j = 0; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    Rational f = z[c];
    if (f != 0)
      for (int j = 0; j <= n; ++j) z[j] -= f * a[r][j];
    basis[r] = c;
  }

  void set_objective(const std::vector<Rational>& cost) {
    // z_j = sum_i cost[basis_i] * a[i][j] - cost_j;  z[n] = current value.
    z.assign(n + 1, Rational(0));
    for (int j = 0; j < n; ++j) z[j] = -cost[j];
    for (int i = 0; i < m; ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= n; ++j) z[j] += cb * a[i][j];
    }
  }

  // Maximize with Bland's rule; `allowed` masks columns that may enter.
  // Returns false when unbounded.
  bool iterate(const std::vector<char>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && z[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = a[i][n] / a[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Solution solve(const Problem& p) {
  const int nv = p.num_vars;
  if (static_cast<int>(p.objective.size()) != nv || static_cast<int>(p.is_free.size()) != nv)
    throw InputError("simplex: inconsistent problem arrays");

  // Standard-form column layout: each variable gets one nonneg column, free
  // variables get a second (negated) column.
  std::vector<int> pos_col(nv), neg_col(nv, -1);
  int ncols = 0;
  for (int v = 0; v < nv; ++v) {
    pos_col[v] = ncols++;
    if (p.is_free[v]) neg_col[v] = ncols++;
  }
  const int nstruct = ncols;

  const int m = static_cast<int>(p.rows.size());
  // Count slacks.
  int nslack = 0;
  for (const auto& row : p.rows)
    if (row.sense != Sense::EQ) ++nslack;

  Tableau t;
  t.m = m;
  t.n = nstruct + nslack + m;  // reserve one artificial per row (unused ones stay zero)
  t.a.assign(m, std::vector<Rational>(t.n + 1, Rational(0)));
  t.basis.assign(m, -1);

  std::vector<char> is_artificial(t.n, 0);
  int slack_at = nstruct;
  int art_at = nstruct + nslack;
  std::vector<int> art_cols;

  for (int i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    auto& a = t.a[i];
    for (const auto& [v, coef] : row.terms) {
      if (v < 0 || v >= nv) throw InputError("simplex: variable index out of range");
      a[pos_col[v]] += coef;
      if (neg_col[v] >= 0) a[neg_col[v]] -= coef;
    }
    a[t.n] = row.rhs;
    Rational slack_sign = 0;
    if (row.sense == Sense::LE) slack_sign = 1;
    if (row.sense == Sense::GE) slack_sign = -1;
    int scol = -1;
    if (slack_sign != 0) {
      scol = slack_at++;
      a[scol] = slack_sign;
    }
    if (a[t.n] < 0)
      for (auto& e : a) e = -e;
    // Basic column: the slack if it survived the sign flip with +1.
    if (scol >= 0 && a[scol] == 1) {
      t.basis[i] = scol;
    } else {
      int acol = art_at++;
      is_artificial[acol] = 1;
      a[acol] = 1;
      t.basis[i] = acol;
      art_cols.push_back(acol);
    }
  }

  std::vector<char> allowed(t.n, 1);

  // Phase 1: maximize -(sum of artificials).
  if (!art_cols.empty()) {
    std::vector<Rational> cost(t.n, Rational(0));
    for (int c : art_cols) cost[c] = -1;
    t.set_objective(cost);
    t.iterate(allowed);  // bounded by construction (objective <= 0)
    if (t.z[t.n] != 0) return {Status::Infeasible, {}, 0};
    // Pivot remaining artificials out of the basis, dropping redundant rows.
    for (int i = 0; i < t.m; ++i) {
      if (!is_artificial[t.basis[i]]) continue;
      int c = -1;
      for (int j = 0; j < t.n && c < 0; ++j)
        if (!is_artificial[j] && t.a[i][j] != 0) c = j;
      if (c >= 0) {
        t.pivot(i, c);
      } else {
        t.a.erase(t.a.begin() + i);
        t.basis.erase(t.basis.begin() + i);
        --t.m;
        --i;
      }
    }
    for (int c : art_cols) allowed[c] = 0;
  }

  // Phase 2.
  {
    std::vector<Rational> cost(t.n, Rational(0));
    for (int v = 0; v < nv; ++v) {
      Rational c = p.maximize ? p.objective[v] : -p.objective[v];
      cost[pos_col[v]] = c;
      if (neg_col[v] >= 0) cost[neg_col[v]] = -c;
    }
    t.set_objective(cost);
    if (!t.iterate(allowed)) return {Status::Unbounded, {}, 0};
  }

  std::vector<Rational> raw(t.n, Rational(0));
  for (int i = 0; i < t.m; ++i) raw[t.basis[i]] = t.a[i][t.n];
  Solution s;
  s.status = Status::Optimal;
  s.x.resize(nv);
  for (int v = 0; v < nv; ++v) {
    s.x[v] = raw[pos_col[v]];
    if (neg_col[v] >= 0) s.x[v] -= raw[neg_col[v]];
  }
  s.objective = p.maximize ? t.z[t.n] : -t.z[t.n];
  return s;
}

}  // namespace polyscribe::lp

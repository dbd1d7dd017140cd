#pragma once

#include <utility>
#include <vector>

#include "polyscribe/rational.hpp"

namespace polyscribe::lp {

enum class Sense { LE, EQ, GE };

struct Constraint {
  std::vector<std::pair<int, Rational>> terms;  // (variable index, coefficient)
  Sense sense = Sense::LE;
  Rational rhs = 0;
};

struct Problem {
  int num_vars = 0;
  bool maximize = true;
  std::vector<Rational> objective;   // size num_vars
  std::vector<bool> is_free;         // default: all variables >= 0
  std::vector<Constraint> rows;

  int add_var(const Rational& obj_coef = 0, bool free_var = false);
  void add_row(Constraint c) { rows.push_back(std::move(c)); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective = 0;
};

/// Exact two-phase dense tableau simplex with Bland's rule (no cycling).
Solution solve(const Problem& p);

}  // namespace polyscribe::lp

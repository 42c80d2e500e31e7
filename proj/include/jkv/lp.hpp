#pragma once

// Exact two-phase primal simplex over Q with Bland's rule. Dense tableau;
// meant for the small systems that weight polytopes produce.

#include "jkv/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace jkv {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// Variables are free unless flagged in `nonnegative`.
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<bool> nonnegative;
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> objective;
  Sense sense = Sense::Maximize;

  explicit LinearProgram(std::size_t n = 0) : variables(n), nonnegative(n, false), objective(n, Rational(0)) {}

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    if (coefficients.size() != variables) throw Error("constraint has wrong number of coefficients");
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;
  std::vector<Rational> point;
};

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(std::size_t rows, std::size_t cols) : a_(rows, std::vector<Rational>(cols + 1, Rational(0))), basis_(rows), cols_(cols) {}

  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rational& rhs(std::size_t i) { return a_[i][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t& basic(std::size_t i) { return basis_[i]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a_[r][c];
    for (auto& x : a_[r]) x *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  /// Maximizes cost over columns [0, allowed). Returns false if unbounded.
  bool maximize(const std::vector<Rational>& cost, std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < a_.size(); ++i)
          if (a_[i][j] != 0) reduced -= cost[basis_[i]] * a_[i][j];
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][c] <= 0) continue;
        const Rational ratio = a_[i][cols_] / a_[i][c];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, c);
    }
  }

  Rational value(const std::vector<Rational>& cost) {
    Rational v = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) v += cost[basis_[i]] * a_[i][cols_];
    return v;
  }

  std::vector<Rational> solution() {
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t i = 0; i < a_.size(); ++i) x[basis_[i]] = a_[i][cols_];
    return x;
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace detail

/// Exact optimum with a vertex witness, or an infeasible/unbounded verdict.
/// Deterministic for a given constraint order.
inline LpResult lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables;
  if (lp.objective.size() != n || lp.nonnegative.size() != n) throw Error("malformed linear program");

  // structural columns: one per nonnegative variable, two (x+, x-) per free one
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = structural++;
    if (!lp.nonnegative[j]) minus_col[j] = structural++;
  }
  const std::size_t m = lp.constraints.size();
  std::size_t slacks = 0, artificials = 0;
  for (const auto& c : lp.constraints) {
    const bool flip = c.rhs < 0;
    Relation rel = c.relation;
    if (flip && rel != Relation::Equal) rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    if (rel != Relation::Equal) ++slacks;
    if (rel != Relation::LessEqual) ++artificials;
  }
  const std::size_t first_artificial = structural + slacks;
  const std::size_t cols = first_artificial + artificials;

  detail::SimplexTableau t(m, cols);
  std::size_t next_slack = structural, next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    const bool flip = c.rhs < 0;
    const Rational sign = flip ? -1 : 1;
    Relation rel = c.relation;
    if (flip && rel != Relation::Equal) rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, plus_col[j]) = sign * c.coefficients[j];
      if (minus_col[j] != SIZE_MAX) t.at(i, minus_col[j]) = -sign * c.coefficients[j];
    }
    t.rhs(i) = sign * c.rhs;
    if (rel == Relation::LessEqual) {
      t.at(i, next_slack) = 1;
      t.basic(i) = next_slack++;
    } else {
      if (rel == Relation::GreaterEqual) t.at(i, next_slack++) = -1;
      t.at(i, next_artificial) = 1;
      t.basic(i) = next_artificial++;
    }
  }

  // phase 1: drive the artificial variables to zero
  if (artificials > 0) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.maximize(phase1, cols);
    if (t.value(phase1) < 0) return {LpStatus::Infeasible, Rational(0), {}};
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basic(i) < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> replacement;
      for (std::size_t j = 0; j < first_artificial && !replacement; ++j)
        if (t.at(i, j) != 0) replacement = j;
      if (replacement) {
        t.pivot(i, *replacement);
        ++i;
      } else {
        t.erase_row(i);  // redundant equality
      }
    }
  }

  std::vector<Rational> cost(cols, Rational(0));
  const Rational direction = lp.sense == Sense::Maximize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    cost[plus_col[j]] = direction * lp.objective[j];
    if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -direction * lp.objective[j];
  }
  if (!t.maximize(cost, first_artificial)) return {LpStatus::Unbounded, Rational(0), {}};

  const auto raw = t.solution();
  LpResult result{LpStatus::Optimal, direction * t.value(cost), std::vector<Rational>(n, Rational(0))};
  for (std::size_t j = 0; j < n; ++j) {
    result.point[j] = raw[plus_col[j]];
    if (minus_col[j] != SIZE_MAX) result.point[j] -= raw[minus_col[j]];
  }
  return result;
}

/// Feasibility only: some point satisfying every constraint.
inline std::optional<std::vector<Rational>> lp_feasible_point(LinearProgram lp) {
  std::fill(lp.objective.begin(), lp.objective.end(), Rational(0));
  auto r = lp_solve(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.point;
}

}  // namespace jkv

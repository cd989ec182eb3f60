#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cisgraphs/rational.hpp"

namespace cisgraphs {

/// Standard-form program: rows · x = rhs, x ≥ 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  /// Optimal vertex (status == optimal).
  std::vector<Rational> point;
  /// Farkas multipliers over the original rows (status == infeasible):
  /// rowsᵀ·y ≤ 0 componentwise and rhsᵀ·y > 0.
  std::vector<Rational> farkas;
};

/// Exact two-phase simplex. The equality system is brought to reduced row
/// echelon form once at construction; each optimize() call then runs a
/// Bland's-rule simplex on at most num_vars rows.
class EqualityLp {
 public:
  explicit EqualityLp(LinearProgram lp);

  const LinearProgram& program() const { return lp_; }
  /// Independent rows of the reduced system and the pivot column of each.
  const std::vector<std::vector<Rational>>& reduced_rows() const { return rows_; }
  const std::vector<Rational>& reduced_rhs() const { return rhs_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  /// False when the equalities alone are contradictory.
  bool consistent() const { return consistent_; }

  LpResult optimize(Sense sense, std::span<const Rational> objective) const;
  LpResult feasible_point() const;

 private:
  std::vector<Rational> farkas_from_reduced(const std::vector<Rational>& y_reduced) const;

  LinearProgram lp_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> pivots_;
  bool consistent_ = true;
  std::vector<Rational> inconsistency_farkas_;
};

LpResult lp_optimize(const LinearProgram& lp, Sense sense, std::span<const Rational> objective);

/// Checks the Farkas conditions directly against the program.
bool verify_farkas(const LinearProgram& lp, std::span<const Rational> y);

/// Checks rows · x = rhs and x ≥ 0 exactly.
bool is_feasible_point(const LinearProgram& lp, std::span<const Rational> x);

}  // namespace cisgraphs

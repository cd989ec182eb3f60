#include "cisgraphs/lp.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty() || s.find_first_not_of("0123456789/-+") != std::string::npos) {
    throw ParseError("bad rational '" + s + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw ParseError("bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

struct Echelon {
  Matrix rows;  // [A | b], first `rank` rows independent
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::optional<std::size_t> inconsistent_row;
  Matrix transform;  // rows = transform · original, when tracked
};

void axpy(std::vector<Rational>& target, const Rational& factor, const std::vector<Rational>& row) {
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (sgn(row[j]) != 0) target[j] -= factor * row[j];
  }
}

Echelon echelon(const LinearProgram& lp, bool track) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.num_vars;
  Echelon e;
  e.rows.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rows[i].size() != n) throw std::invalid_argument("LP row width mismatch");
    e.rows[i] = lp.rows[i];
    e.rows[i].push_back(lp.rhs[i]);
  }
  if (track) {
    e.transform.assign(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) e.transform[i][i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pick = r;
    while (pick < m && sgn(e.rows[pick][col]) == 0) ++pick;
    if (pick == m) continue;
    std::swap(e.rows[pick], e.rows[r]);
    if (track) std::swap(e.transform[pick], e.transform[r]);
    const Rational inv = 1 / e.rows[r][col];
    for (auto& x : e.rows[r]) x *= inv;
    if (track) {
      for (auto& x : e.transform[r]) x *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(e.rows[i][col]) == 0) continue;
      const Rational f = e.rows[i][col];
      axpy(e.rows[i], f, e.rows[r]);
      if (track) axpy(e.transform[i], f, e.transform[r]);
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.rank = r;
  for (std::size_t i = r; i < m; ++i) {
    if (sgn(e.rows[i][n]) != 0) {
      e.inconsistent_row = i;
      break;
    }
  }
  return e;
}

// Dense simplex tableau over the reduced rows plus one artificial column per
// row. Column layout: [0, n) structural, [n, n+m) artificial, n+m rhs.
class Tableau {
 public:
  Tableau(const Matrix& rows, const std::vector<Rational>& rhs, std::size_t n)
      : n_(n), m_(rows.size()), t_(m_, std::vector<Rational>(n + m_ + 1)), cost_(n + m_ + 1),
        basis_(m_), sign_(m_, 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = sgn(rhs[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n; ++j) t_[i][j] = sign_[i] * rows[i][j];
      t_[i][n + i] = 1;
      t_[i][n + m_] = sign_[i] * rhs[i];
      basis_[i] = n + i;
    }
  }

  /// Phase 1: minimize the sum of artificials. Returns the optimum.
  Rational phase_one() {
    std::fill(cost_.begin(), cost_.end(), Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost_[j] -= t_[i][j];
      cost_[n_ + m_] -= t_[i][n_ + m_];
    }
    const bool bounded = iterate(n_ + m_);
    if (!bounded) throw InternalVerificationError("phase one reported unbounded");
    return -cost_[n_ + m_];
  }

  /// Duals of the phase-one optimum, in the caller's (unflipped) row signs.
  std::vector<Rational> phase_one_duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = sign_[i] * (1 - cost_[n_ + i]);
    return y;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(t_[r][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == n_) throw InternalVerificationError("dependent row survived reduction");
      pivot(r, col);
    }
  }

  /// Phase 2 on structural columns only; false when unbounded.
  bool phase_two(std::span<const Rational> c) {
    std::fill(cost_.begin(), cost_.end(), Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) cost_[j] -= cb * t_[i][j];
      cost_[n_ + m_] -= cb * t_[i][n_ + m_];
    }
    return iterate(n_);
  }

  Rational objective() const { return -cost_[n_ + m_]; }

  std::vector<Rational> point() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_[i][n_ + m_];
    }
    return x;
  }

 private:
  // Bland's rule: lowest-index improving column, ties in the ratio test
  // broken by lowest basic index.
  bool iterate(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = t_[i][n_ + m_] / t_[i][enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      axpy(t_[i], f, t_[r]);
    }
    if (sgn(cost_[c]) != 0) {
      const Rational f = cost_[c];
      axpy(cost_, f, t_[r]);
    }
    basis_[r] = c;
  }

  std::size_t n_;
  std::size_t m_;
  Matrix t_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
};

}  // namespace

EqualityLp::EqualityLp(LinearProgram lp) : lp_(std::move(lp)) {
  if (lp_.rhs.size() != lp_.rows.size()) throw std::invalid_argument("LP rhs size mismatch");
  Echelon e = echelon(lp_, false);
  if (e.inconsistent_row) {
    consistent_ = false;
    Echelon tracked = echelon(lp_, true);
    const std::size_t r = *tracked.inconsistent_row;
    const Rational c = tracked.rows[r][lp_.num_vars];
    inconsistency_farkas_ = tracked.transform[r];
    for (auto& y : inconsistency_farkas_) y /= c;
    return;
  }
  for (std::size_t i = 0; i < e.rank; ++i) {
    rhs_.push_back(e.rows[i].back());
    e.rows[i].pop_back();
    rows_.push_back(std::move(e.rows[i]));
  }
  pivots_ = std::move(e.pivots);
}

std::vector<Rational> EqualityLp::farkas_from_reduced(const std::vector<Rational>& y_reduced) const {
  const Echelon tracked = echelon(lp_, true);
  std::vector<Rational> y(lp_.rows.size());
  for (std::size_t i = 0; i < y_reduced.size(); ++i) {
    if (sgn(y_reduced[i]) == 0) continue;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += y_reduced[i] * tracked.transform[i][k];
  }
  return y;
}

LpResult EqualityLp::optimize(Sense sense, std::span<const Rational> objective) const {
  if (objective.size() != lp_.num_vars) throw std::invalid_argument("objective size mismatch");
  LpResult result;
  if (!consistent_) {
    result.status = LpStatus::infeasible;
    result.farkas = inconsistency_farkas_;
    return result;
  }
  Tableau tab(rows_, rhs_, lp_.num_vars);
  if (sgn(tab.phase_one()) > 0) {
    result.status = LpStatus::infeasible;
    result.farkas = farkas_from_reduced(tab.phase_one_duals());
    if (!verify_farkas(lp_, result.farkas)) {
      throw InternalVerificationError("phase-one duals are not a Farkas certificate");
    }
    return result;
  }
  tab.drive_out_artificials();
  std::vector<Rational> c(objective.begin(), objective.end());
  if (sense == Sense::maximize) {
    for (auto& x : c) x = -x;
  }
  if (!tab.phase_two(c)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.point = tab.point();
  result.value = sense == Sense::maximize ? -tab.objective() : tab.objective();
  return result;
}

LpResult EqualityLp::feasible_point() const {
  const std::vector<Rational> zero(lp_.num_vars);
  return optimize(Sense::minimize, zero);
}

LpResult lp_optimize(const LinearProgram& lp, Sense sense, std::span<const Rational> objective) {
  return EqualityLp(lp).optimize(sense, objective);
}

bool verify_farkas(const LinearProgram& lp, std::span<const Rational> y) {
  if (y.size() != lp.rows.size()) return false;
  Rational by = 0;
  for (std::size_t i = 0; i < y.size(); ++i) by += lp.rhs[i] * y[i];
  if (sgn(by) <= 0) return false;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < y.size(); ++i) col += lp.rows[i][j] * y[i];
    if (sgn(col) > 0) return false;
  }
  return true;
}

bool is_feasible_point(const LinearProgram& lp, std::span<const Rational> x) {
  if (x.size() != lp.num_vars) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) s += lp.rows[i][j] * x[j];
    if (s != lp.rhs[i]) return false;
  }
  return true;
}

}  // namespace cisgraphs

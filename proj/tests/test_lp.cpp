#include <random>

#include "doctest.h"

#include "cisgraphs/equistable.hpp"
#include "cisgraphs/gallery.hpp"
#include "cisgraphs/lp.hpp"

using namespace cisgraphs;

namespace {

LinearProgram make_lp(std::size_t vars, std::vector<std::vector<long>> rows, std::vector<long> rhs) {
  LinearProgram lp;
  lp.num_vars = vars;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long a : r) row.emplace_back(a);
    lp.rows.push_back(row);
  }
  for (long b : rhs) lp.rhs.emplace_back(b);
  return lp;
}

/// Solves a square system by Gaussian elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = 0; k < m; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < m; ++c) b[c] /= a[c][c];
  return b;
}

/// Optimum over every basic feasible solution. Assumes full row rank and a
/// bounded feasible region.
std::optional<Rational> best_vertex(const LinearProgram& lp, Sense sense, const std::vector<Rational>& obj) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.num_vars;
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1U) cols.push_back(j);
    }
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t k = 0; k < m; ++k) a[r][k] = lp.rows[r][cols[k]];
    }
    const auto sol = solve_square(a, lp.rhs);
    if (!sol) continue;
    if (std::any_of(sol->begin(), sol->end(), [](const Rational& v) { return v < 0; })) continue;
    Rational value = 0;
    for (std::size_t k = 0; k < m; ++k) value += obj[cols[k]] * (*sol)[k];
    if (!best || (sense == Sense::maximize ? value > *best : value < *best)) best = value;
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("lp");

TEST_CASE("small optimum") {
  // x1 + x2 + x3 = 4, x1 - x2 + x4 = 2; max 3x1 + x2 at (3, 1).
  const LinearProgram lp = make_lp(4, {{1, 1, 1, 0}, {1, -1, 0, 1}}, {4, 2});
  const std::vector<Rational> obj{3, 1, 0, 0};
  const LpResult r = lp_optimize(lp, Sense::maximize, obj);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 10);
  CHECK(r.point[0] == 3);
  CHECK(r.point[1] == 1);
  CHECK(is_feasible_point(lp, r.point));
  CHECK(lp_optimize(lp, Sense::minimize, obj).value == 0);
}

TEST_CASE("infeasible systems carry a Farkas certificate") {
  const LinearProgram negative = make_lp(2, {{1, 1}}, {-1});
  const LpResult a = lp_optimize(negative, Sense::minimize, std::vector<Rational>{0, 0});
  REQUIRE(a.status == LpStatus::infeasible);
  CHECK(verify_farkas(negative, a.farkas));

  const LinearProgram contradictory = make_lp(2, {{1, 1}, {1, 1}}, {1, 2});
  EqualityLp solver(contradictory);
  CHECK_FALSE(solver.consistent());
  const LpResult b = solver.feasible_point();
  REQUIRE(b.status == LpStatus::infeasible);
  CHECK(verify_farkas(contradictory, b.farkas));

  const LinearProgram sign = make_lp(3, {{1, -1, 0}, {0, 1, 1}}, {3, -1});
  const LpResult c = EqualityLp(sign).feasible_point();
  REQUIRE(c.status == LpStatus::infeasible);
  CHECK(verify_farkas(sign, c.farkas));
  CHECK_FALSE(verify_farkas(sign, std::vector<Rational>{0, 0}));
}

TEST_CASE("unbounded direction") {
  const LinearProgram lp = make_lp(2, {{1, -1}}, {0});
  CHECK(lp_optimize(lp, Sense::maximize, std::vector<Rational>{1, 0}).status == LpStatus::unbounded);
  CHECK(lp_optimize(lp, Sense::minimize, std::vector<Rational>{1, 0}).value == 0);
}

TEST_CASE("redundant rows") {
  const LinearProgram lp = make_lp(3, {{1, 1, 1}, {2, 2, 2}, {1, 0, 0}}, {1, 2, 0});
  EqualityLp solver(lp);
  CHECK(solver.consistent());
  CHECK(solver.reduced_rows().size() == 2);
  const LpResult r = solver.optimize(Sense::maximize, std::vector<Rational>{0, 1, 0});
  CHECK(r.value == 1);
}

TEST_CASE("random programs agree with basis enumeration") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t m = 1 + iter % 3;
    const std::size_t n = m + 1 + iter % 4;
    LinearProgram lp;
    lp.num_vars = n;
    // A positive all-ones row keeps the region bounded.
    lp.rows.emplace_back(n, Rational(1));
    lp.rhs.emplace_back(1 + iter % 5);
    for (std::size_t r = 1; r < m; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) row.emplace_back(coef(rng));
      lp.rows.push_back(row);
      lp.rhs.emplace_back(coef(rng));
    }
    std::vector<Rational> obj;
    for (std::size_t j = 0; j < n; ++j) obj.emplace_back(coef(rng));

    EqualityLp solver(lp);
    if (solver.reduced_rows().size() != m) continue;  // rank-deficient draw
    for (Sense sense : {Sense::minimize, Sense::maximize}) {
      const LpResult r = solver.optimize(sense, obj);
      const auto expected = best_vertex(lp, sense, obj);
      if (!expected) {
        CHECK(r.status == LpStatus::infeasible);
        CHECK(verify_farkas(lp, r.farkas));
      } else {
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(r.value == *expected);
        CHECK(is_feasible_point(lp, r.point));
      }
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("weight polytopes") {
  // K3: each vertex is a maximal stable set, so φ ≡ 1 is the only point.
  const WeightPolytope k3(Graph::complete(3));
  const LinearProgram p = k3.program();
  for (std::size_t v = 0; v < 3; ++v) {
    std::vector<Rational> e(3, Rational(0));
    e[v] = 1;
    CHECK(lp_optimize(p, Sense::minimize, e).value == 1);
    CHECK(lp_optimize(p, Sense::maximize, e).value == 1);
  }
  // P4 0-1-2-3: stables {0,2}, {0,3}, {1,3} give a segment with φ(0) ∈ [0, 1].
  const WeightPolytope p4(gallery(GalleryId::P4));
  std::vector<Rational> e0{1, 0, 0, 0};
  CHECK(lp_optimize(p4.program(), Sense::maximize, e0).value == 1);
  CHECK(lp_optimize(p4.program(), Sense::minimize, e0).value == 0);
}

TEST_SUITE_END();

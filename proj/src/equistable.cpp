#include "cisgraphs/equistable.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

void check_order(const Graph& g) {
  if (g.order() > kEquistableMaxOrder) {
    throw UnsupportedSize("equistability supports at most " + std::to_string(kEquistableMaxOrder) +
                          " vertices");
  }
}

mpz_class lcm_of_denominators(const std::vector<Rational>& xs) {
  mpz_class l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

std::vector<mpz_class> scale_to_integers(const std::vector<Rational>& xs, const mpz_class& factor) {
  std::vector<mpz_class> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    Rational scaled = x * factor;
    out.push_back(scaled.get_num());
  }
  return out;
}

/// Null space basis of `rows` (n columns), each vector scaled to coprime
/// integers.
std::vector<std::vector<long long>> integer_null_space(Matrix rows, std::size_t n) {
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t pick = r;
    while (pick < rows.size() && sgn(rows[pick][col]) == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][col]) == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  std::vector<std::vector<long long>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i) v[pivot_of_row[i]] = -rows[i][free];
    const std::vector<mpz_class> ints = scale_to_integers(v, lcm_of_denominators(v));
    mpz_class g = 0;
    for (const auto& x : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<long long> out;
    for (const auto& x : ints) {
      const mpz_class q = x / g;
      if (!q.fits_slong_p() || abs(q) > (mpz_class(1) << 40)) {
        throw InternalVerificationError("null-space entry out of range");
      }
      out.push_back(q.get_si());
    }
    basis.push_back(std::move(out));
  }
  return basis;
}

/// Every nonempty subset in canonical order: by size, then by bitmask.
std::vector<std::uint32_t> canonical_subsets(int n) {
  std::vector<std::uint32_t> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (int k = 1; k <= n; ++k) {
    std::uint32_t t = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (t < limit) {
      out.push_back(t);
      const std::uint32_t c = t & (~t + 1);
      const std::uint32_t r = t + c;
      t = (((r ^ t) >> 2) / c) | r;
    }
  }
  return out;
}

std::vector<char> maximal_stable_marks(const Structure& s) {
  std::vector<char> marks(std::size_t{1} << s.graph.order(), 0);
  for (const auto& st : s.stables) marks[st.bits()] = 1;
  return marks;
}

template <typename Int>
Int subset_sum(const std::vector<Int>& values, std::uint32_t t) {
  Int sum = 0;
  for (int v : VertexSet(t)) sum += values[static_cast<std::size_t>(v)];
  return sum;
}

std::vector<Rational> weighted_point(const std::vector<Rational>& center, const std::vector<mpz_class>& d,
                                     const Rational& eps) {
  std::vector<Rational> phi(center.size());
  for (std::size_t v = 0; v < center.size(); ++v) {
    phi[v] = center[v] + eps * d[v];
    phi[v].canonicalize();
  }
  return phi;
}

/// A weight function in the polytope that is 1 only on maximal stable sets,
/// given that no forced subset has value 1.
std::vector<Rational> build_witness(const Structure& s, const PolytopeAnalysis& a) {
  const int n = s.graph.order();
  const auto marks = maximal_stable_marks(s);
  const mpz_class scale = lcm_of_denominators(a.center);
  const std::vector<mpz_class> c = scale_to_integers(a.center, scale);

  // Subsets that the center itself puts at weight 1.
  std::vector<std::uint32_t> bad;
  std::vector<mpz_class> sums(std::size_t{1} << n);
  for (std::uint32_t t = 1; t < (std::uint32_t{1} << n); ++t) {
    sums[t] = sums[t & (t - 1)] + c[static_cast<std::size_t>(std::countr_zero(t))];
    if (!marks[t] && sums[t] == scale) bad.push_back(t);
  }
  if (bad.empty()) {
    if (!verify_equistable_weights(s, a.center)) throw InternalVerificationError("center fails re-verification");
    return a.center;
  }
  if (a.directions.empty()) throw InternalVerificationError("weight-1 subset on a single-point polytope");

  // d = Σ_j t^j b_j is nonzero on every bad subset for all but finitely
  // many t, since no bad subset is orthogonal to all b_j.
  const std::size_t k = a.directions.size();
  std::vector<mpz_class> d;
  bool found = false;
  for (unsigned long t = 1; t <= bad.size() * k + 1 && !found; ++t) {
    d.assign(static_cast<std::size_t>(n), 0);
    mpz_class power = 1;
    for (const auto& b : a.directions) {
      power *= t;
      for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)] += power * static_cast<long>(b[static_cast<std::size_t>(v)]);
    }
    found = std::all_of(bad.begin(), bad.end(), [&](std::uint32_t sub) { return subset_sum(d, sub) != 0; });
  }
  if (!found) throw InternalVerificationError("no separating direction found");

  // Largest step keeping φ ≥ 0; positive coordinates of the center stay
  // positive for any smaller step.
  std::optional<Rational> eps_max;
  for (int v = 0; v < n; ++v) {
    const auto& dv = d[static_cast<std::size_t>(v)];
    if (sgn(dv) >= 0) continue;
    Rational bound = a.center[static_cast<std::size_t>(v)] / Rational(-dv);
    if (!eps_max || bound < *eps_max) eps_max = bound;
  }
  const Rational base = eps_max.value_or(Rational(1));
  constexpr int kMaxRetries = 1000;
  for (int r = 2; r < 2 + kMaxRetries; ++r) {
    const Rational eps = base / r;
    std::vector<Rational> phi = weighted_point(a.center, d, eps);
    if (verify_equistable_weights(s, phi)) return phi;
  }
  throw InternalVerificationError("perturbation retries exhausted");
}

}  // namespace

WeightPolytope::WeightPolytope(const Structure& s) : graph(s.graph), stables(s.stables) {}

WeightPolytope::WeightPolytope(const Graph& g) : graph(g), stables(maximal_stable_sets(g)) {}

LinearProgram WeightPolytope::program() const {
  LinearProgram lp;
  lp.num_vars = static_cast<std::size_t>(graph.order());
  for (const auto& st : stables) {
    std::vector<Rational> row(lp.num_vars);
    for (int v : st) row[static_cast<std::size_t>(v)] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(1);
  }
  return lp;
}

PolytopeAnalysis analyze_polytope(const Structure& s) {
  check_order(s.graph);
  const int n = s.graph.order();
  const std::size_t nv = static_cast<std::size_t>(n);
  const WeightPolytope polytope(s);
  const EqualityLp lp(polytope.program());
  PolytopeAnalysis a;

  LpResult first = lp.feasible_point();
  if (first.status == LpStatus::infeasible) {
    a.farkas = std::move(first.farkas);
    return a;
  }
  a.feasible = true;

  std::vector<std::vector<Rational>> points{first.point};
  VertexSet positive;
  auto absorb = [&](const std::vector<Rational>& p) {
    for (int v = 0; v < n; ++v) {
      if (sgn(p[static_cast<std::size_t>(v)]) > 0) positive.insert(v);
    }
  };
  absorb(first.point);
  for (int v = 0; v < n; ++v) {
    if (positive.contains(v)) continue;
    std::vector<Rational> objective(nv);
    objective[static_cast<std::size_t>(v)] = 1;
    LpResult r = lp.optimize(Sense::maximize, objective);
    if (r.status != LpStatus::optimal) throw InternalVerificationError("weight polytope is unbounded");
    if (sgn(r.value) > 0) {
      absorb(r.point);
      points.push_back(std::move(r.point));
    } else {
      a.zero_vertices.insert(v);
    }
  }
  a.center.assign(nv, 0);
  for (const auto& p : points) {
    for (std::size_t v = 0; v < nv; ++v) a.center[v] += p[v];
  }
  for (auto& x : a.center) {
    x /= static_cast<long>(points.size());
    x.canonicalize();
  }

  Matrix hull = lp.reduced_rows();
  for (int z : a.zero_vertices) {
    std::vector<Rational> row(nv);
    row[static_cast<std::size_t>(z)] = 1;
    hull.push_back(std::move(row));
  }
  a.directions = integer_null_space(std::move(hull), nv);

  // forced[t] stays set while every direction sums to zero over t.
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> forced(total, 1);
  std::vector<long long> sums(total, 0);
  for (const auto& d : a.directions) {
    for (std::size_t t = 1; t < total; ++t) {
      sums[t] = sums[t & (t - 1)] + d[static_cast<std::size_t>(std::countr_zero(t))];
      if (sums[t] != 0) forced[t] = 0;
    }
  }

  const auto marks = maximal_stable_marks(s);
  const mpz_class scale = lcm_of_denominators(a.center);
  const std::vector<mpz_class> c = scale_to_integers(a.center, scale);
  for (std::uint32_t t : canonical_subsets(n)) {
    if (!forced[t] || marks[t]) continue;
    const mpz_class value = subset_sum(c, t);
    if (value > scale) continue;
    Rational q(value, scale);
    q.canonicalize();
    a.low_forced.push_back(ForcedSubset{VertexSet(t), std::move(q)});
  }
  return a;
}

Verdict EquistableCertificate::to_verdict() const {
  switch (kind) {
    case EquistableOutcome::witness:
      return Verdict{verdict, WeightWitness{weights}};
    case EquistableOutcome::forced_subset:
      return Verdict{verdict, forced};
    case EquistableOutcome::infeasible:
      return Verdict{verdict, InfeasibleSystem{stables, farkas}};
  }
  return Verdict{verdict, {}};
}

namespace {

EquistableCertificate decide(const Structure& s, bool strong) {
  const PolytopeAnalysis a = analyze_polytope(s);
  EquistableCertificate cert;
  if (!a.feasible) {
    cert.kind = EquistableOutcome::infeasible;
    cert.stables = s.stables.sets;
    cert.farkas = a.farkas;
    return cert;
  }
  for (const auto& f : a.low_forced) {
    if (strong || f.value == 1) {
      cert.kind = EquistableOutcome::forced_subset;
      cert.forced = f;
      return cert;
    }
  }
  cert.verdict = true;
  cert.kind = EquistableOutcome::witness;
  cert.weights = build_witness(s, a);
  return cert;
}

}  // namespace

EquistableCertificate is_equistable(const Structure& s) { return decide(s, false); }
EquistableCertificate is_equistable(const Graph& g) {
  check_order(g);
  return decide(Structure(g), false);
}
EquistableCertificate is_strongly_equistable(const Structure& s) { return decide(s, true); }
EquistableCertificate is_strongly_equistable(const Graph& g) {
  check_order(g);
  return decide(Structure(g), true);
}

std::optional<std::pair<Rational, Rational>> subset_value_range(const WeightPolytope& p, VertexSet t) {
  const EqualityLp lp(p.program());
  std::vector<Rational> objective(static_cast<std::size_t>(p.graph.order()));
  for (int v : t) objective[static_cast<std::size_t>(v)] = 1;
  const LpResult lo = lp.optimize(Sense::minimize, objective);
  if (lo.status == LpStatus::infeasible) return std::nullopt;
  const LpResult hi = lp.optimize(Sense::maximize, objective);
  if (lo.status != LpStatus::optimal || hi.status != LpStatus::optimal) {
    throw InternalVerificationError("weight polytope is unbounded");
  }
  return std::make_pair(lo.value, hi.value);
}

bool verify_equistable_weights(const Structure& s, const std::vector<Rational>& weights) {
  const int n = s.graph.order();
  check_order(s.graph);
  if (weights.size() != static_cast<std::size_t>(n)) return false;
  if (std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return sgn(w) < 0; })) return false;
  const auto marks = maximal_stable_marks(s);
  const mpz_class scale = lcm_of_denominators(weights);
  const std::vector<mpz_class> w = scale_to_integers(weights, scale);
  std::vector<mpz_class> sums(std::size_t{1} << n);
  for (std::uint32_t t = 1; t < (std::uint32_t{1} << n); ++t) {
    sums[t] = sums[t & (t - 1)] + w[static_cast<std::size_t>(std::countr_zero(t))];
    if ((sums[t] == scale) != static_cast<bool>(marks[t])) return false;
  }
  return true;
}

bool verify_equistable_certificate(const Structure& s, const EquistableCertificate& cert, bool strong) {
  switch (cert.kind) {
    case EquistableOutcome::witness:
      return cert.verdict && verify_equistable_weights(s, cert.weights);
    case EquistableOutcome::infeasible: {
      if (cert.verdict || cert.stables != s.stables.sets) return false;
      return verify_farkas(WeightPolytope(s).program(), cert.farkas);
    }
    case EquistableOutcome::forced_subset: {
      const VertexSet t = cert.forced.subset;
      if (cert.verdict || t.empty() || !t.subset_of(s.graph.vertices()) || s.stables.contains(t)) return false;
      if (strong ? cert.forced.value > 1 : cert.forced.value != 1) return false;
      const auto range = subset_value_range(WeightPolytope(s), t);
      return range && range->first == cert.forced.value && range->second == cert.forced.value;
    }
  }
  return false;
}

VertexSet verify_forced_subset(const Graph& g, const std::vector<SignedSet>& combination) {
  std::vector<int> coefficient(static_cast<std::size_t>(g.order()), 0);
  for (const auto& term : combination) {
    if (!g.is_maximal_stable(term.set)) {
      throw std::invalid_argument("{" + term.set.to_string() + "} is not a maximal stable set");
    }
    for (int v : term.set) coefficient[static_cast<std::size_t>(v)] += term.sign;
  }
  VertexSet t;
  for (int v = 0; v < g.order(); ++v) {
    const int c = coefficient[static_cast<std::size_t>(v)];
    if (c != 0 && c != 1) throw std::invalid_argument("combination is not 0/1-valued");
    if (c == 1) t.insert(v);
  }
  return t;
}

}  // namespace cisgraphs

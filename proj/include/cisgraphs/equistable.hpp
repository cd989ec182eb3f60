#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cisgraphs/certificate.hpp"
#include "cisgraphs/enumerate.hpp"
#include "cisgraphs/lp.hpp"

namespace cisgraphs {

inline constexpr int kEquistableMaxOrder = 16;

/// {φ ≥ 0 : φ(S) = 1 for every maximal stable set S}.
struct WeightPolytope {
  Graph graph;
  SetFamily stables;

  explicit WeightPolytope(const Structure& s);
  explicit WeightPolytope(const Graph& g);

  /// One equality row per maximal stable set, in family order.
  LinearProgram program() const;
};

/// Exact description of the weight polytope's affine hull.
///
/// A linear function is constant on a convex set iff it is constant on its
/// affine hull, so φ(T) is forced (min = max) exactly when the indicator of
/// T is orthogonal to every direction of the hull. The hull is cut out by
/// the stable-set equalities plus φ(v) = 0 for the vertices that vanish on
/// the whole polytope; its directions are the null space of that system.
struct PolytopeAnalysis {
  bool feasible = false;
  /// Farkas multipliers over the stable-set rows (infeasible only).
  std::vector<Rational> farkas;
  /// A relative-interior point: positive off `zero_vertices`.
  std::vector<Rational> center;
  VertexSet zero_vertices;
  /// Integer basis of the hull's direction space.
  std::vector<std::vector<long long>> directions;
  /// Forced subsets T (nonempty, not a maximal stable set) whose forced
  /// value is at most 1, ordered by size then bitmask.
  std::vector<ForcedSubset> low_forced;
};

PolytopeAnalysis analyze_polytope(const Structure& s);

enum class EquistableOutcome { witness, infeasible, forced_subset };

struct EquistableCertificate {
  bool verdict = false;
  EquistableOutcome kind = EquistableOutcome::infeasible;
  /// kind == witness: φ with φ(T) = 1 exactly on maximal stable sets.
  std::vector<Rational> weights;
  /// kind == forced_subset.
  ForcedSubset forced;
  /// kind == infeasible: rows and their Farkas multipliers.
  std::vector<VertexSet> stables;
  std::vector<Rational> farkas;

  Verdict to_verdict() const;
};

/// Throws UnsupportedSize beyond 16 vertices.
EquistableCertificate is_equistable(const Structure& s);
EquistableCertificate is_equistable(const Graph& g);
EquistableCertificate is_strongly_equistable(const Structure& s);
EquistableCertificate is_strongly_equistable(const Graph& g);

/// Exact (min, max) of φ(T) over the polytope by two LP solves; nullopt if
/// the polytope is empty.
std::optional<std::pair<Rational, Rational>> subset_value_range(const WeightPolytope& p, VertexSet t);

/// Direct evaluation over all 2ⁿ − 1 nonempty subsets.
bool verify_equistable_weights(const Structure& s, const std::vector<Rational>& weights);

/// Re-checks a certificate against the graph. Forced subsets are confirmed
/// with two LP solves; Farkas multipliers are checked row by row.
bool verify_equistable_certificate(const Structure& s, const EquistableCertificate& cert, bool strong);

struct SignedSet {
  VertexSet set;
  int sign = 1;
};

/// Sum of sign · x(set) over a combination of maximal stable sets of `g`.
/// Every φ in the polytope gives the resulting subset the value Σ sign.
/// Throws std::invalid_argument if a set is not a maximal stable set of `g`
/// or if the combination is not 0/1-valued.
VertexSet verify_forced_subset(const Graph& g, const std::vector<SignedSet>& combination);

}  // namespace cisgraphs

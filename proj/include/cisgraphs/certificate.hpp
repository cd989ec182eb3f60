#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cisgraphs/rational.hpp"
#include "cisgraphs/vertex_set.hpp"

namespace cisgraphs {

/// A maximal clique and a maximal stable set that do not meet.
struct DisjointPair {
  VertexSet clique;
  VertexSet stable;
};

/// Number of disjoint (maximal clique, maximal stable set) pairs.
struct PairCount {
  std::size_t count = 0;
};

struct SplitPartition {
  VertexSet clique;
  VertexSet stable;
};

/// An edge (or non-edge, depending on the property) that no admissible set
/// covers.
struct UncoveredPair {
  int u = 0;
  int v = 0;
};

struct CoveringFamily {
  std::vector<VertexSet> sets;
};

/// Maximal stable set `stable` and edge uv outside it whose ends have no
/// common neighbor in `stable`.
struct TriangleViolation {
  VertexSet stable;
  int u = 0;
  int v = 0;
};

/// An induced forbidden pattern, vertices listed in path/cycle order.
/// pattern ∈ {"P4", "C4", "2K2", "odd-hole", "odd-antihole"}.
struct InducedPattern {
  std::string pattern;
  std::vector<int> vertices;
};

struct BadP4 {
  std::array<int, 4> path{};
  VertexSet stable;
};

/// Cross-intersecting clique and stable-set families.
struct CrossFamilies {
  std::vector<VertexSet> cliques;
  std::vector<VertexSet> stables;
};

/// An equistable weight function.
struct WeightWitness {
  std::vector<Rational> weights;
};

/// A non-maximal-stable subset whose weight is the same for every feasible
/// weight function.
struct ForcedSubset {
  VertexSet subset;
  Rational value;
};

/// Farkas multipliers over the maximal stable sets: no nonnegative weight
/// function gives every maximal stable set weight 1.
struct InfeasibleSystem {
  std::vector<VertexSet> stables;
  std::vector<Rational> multipliers;
};

using Certificate = std::variant<std::monostate, DisjointPair, PairCount, SplitPartition, UncoveredPair,
                                 CoveringFamily, TriangleViolation, InducedPattern, BadP4, CrossFamilies,
                                 WeightWitness, ForcedSubset, InfeasibleSystem>;

struct Verdict {
  bool holds = false;
  Certificate certificate;

  explicit operator bool() const { return holds; }
};

}  // namespace cisgraphs

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "cisgraphs/certificate.hpp"
#include "cisgraphs/enumerate.hpp"
#include "cisgraphs/graph.hpp"

namespace cisgraphs {

enum class Base {
  threshold,
  cograph,
  split,
  edge_simplicial,
  cis,
  almost_cis,
  quasi_cis,
  semi_weakly_cis,
  weakly_cis,
  triangle,
  weakly_triangle,
  normal,
  perfect,
  equistable,
  strongly_equistable,
};

inline constexpr std::array<Base, 15> kAllBases = {
    Base::threshold,       Base::cograph,         Base::split,      Base::edge_simplicial,
    Base::cis,             Base::almost_cis,      Base::quasi_cis,  Base::semi_weakly_cis,
    Base::weakly_cis,      Base::triangle,        Base::weakly_triangle, Base::normal,
    Base::perfect,         Base::equistable,      Base::strongly_equistable,
};

enum class Modifier { plain, co, cap, cup };

/// Short stable name: "threshold", "cograph", "split", "es", "CIS", "aCIS",
/// "qCIS", "swCIS", "wCIS", "triangle", "wtriangle", "normal", "perfect",
/// "eq", "seq".
std::string_view base_name(Base b);
std::optional<Base> parse_base(std::string_view name);
/// Properties backed by the exact LP (limited to 16 vertices).
bool needs_lp(Base b);

/// (base property, modifier): co-P(G) = P(complement G), cap = P ∧ co-P,
/// cup = P ∨ co-P.
struct PropertyId {
  Base base = Base::cis;
  Modifier modifier = Modifier::plain;

  auto operator<=>(const PropertyId&) const = default;
  /// "CIS", "co-triangle", "cap-es", "cup-seq".
  std::string name() const;
  static PropertyId parse(std::string_view text);
};

// ---------------------------------------------------------------- predicates
//
// Degenerate inputs follow the definitions literally: edgeless graphs are
// edge simplicial, semi-weakly CIS and triangle (no edge to check), and K1
// is CIS.

Verdict is_cis(const Structure& s);
Verdict is_cis(const Graph& g);

/// Exactly one disjoint (maximal clique, maximal stable set) pair. The pair
/// count is cross-checked against the unique-split-partition
/// characterization; disagreement raises InternalVerificationError.
Verdict is_almost_cis(const Structure& s);
Verdict is_almost_cis(const Graph& g);
Verdict is_quasi_cis(const Structure& s);
Verdict is_quasi_cis(const Graph& g);

/// Number of disjoint (maximal clique, maximal stable set) pairs.
std::size_t disjoint_pair_count(const Structure& s);

Verdict is_split(const Structure& s);
Verdict is_split(const Graph& g);
/// Number of split partitions (C, S); C or S may be empty.
std::size_t split_partition_count(const Structure& s);

Verdict is_threshold(const Graph& g);
Verdict is_cograph(const Graph& g);

Verdict is_edge_simplicial(const Graph& g);

/// Every edge lies in some strong maximal clique. Enough to look at maximal
/// cliques: a superset of a clique meeting every maximal stable set still
/// meets every one of them.
Verdict is_semi_weakly_cis(const Structure& s);
Verdict is_semi_weakly_cis(const Graph& g);

Verdict is_triangle(const Structure& s);
Verdict is_triangle(const Graph& g);

/// Per-set triangle property of one maximal stable set.
bool has_triangle_property(const Graph& g, VertexSet stable);

/// The triangle property is a condition on single stable sets, so the
/// family of all admissible maximal stable sets is the largest candidate;
/// the graph is weakly triangle iff that family covers every non-edge.
Verdict is_weakly_triangle(const Structure& s);
Verdict is_weakly_triangle(const Graph& g);

Verdict has_bad_p4(const Structure& s);
Verdict has_bad_p4(const Graph& g);

/// No induced odd hole or odd antihole (length ≥ 5). Exhaustive induced
/// cycle search, limited to 16 vertices (UnsupportedSize beyond).
Verdict is_perfect(const Graph& g);
inline constexpr int kPerfectMaxOrder = 16;

// ---------------------------------------------------------- big graphs

bool is_edge_simplicial(const BigGraph& g);
/// Triangle condition of the complement: for every maximal clique C and
/// non-adjacent u, v outside C there is a vertex of C adjacent to neither.
bool is_co_triangle(const BigGraph& g);

}  // namespace cisgraphs

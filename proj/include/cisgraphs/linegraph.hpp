#pragma once

#include <optional>
#include <vector>

#include "cisgraphs/graph.hpp"
#include "cisgraphs/matching.hpp"

namespace cisgraphs {

/// Line graph with vertex i standing for edges()[i] of `h` (lexicographic
/// edge order). Throws CapacityError beyond 64 edges.
Graph line_graph(const Graph& h);

enum class RootKind { not_line_graph, unique, ambiguous };

struct RootResult {
  RootKind kind = RootKind::not_line_graph;
  /// A root H with line_graph(H) ≅ g. For an ambiguous input (some
  /// component is K3) the K3 reading is used here.
  std::optional<Graph> root;
  /// Edge of `root` standing for each vertex of g.
  std::vector<Edge> edge_of_vertex;
  /// Number of K3 components, each of which could also come from K_{1,3}.
  int ambiguous_components = 0;

  bool is_line_graph() const { return kind != RootKind::not_line_graph; }
};

/// Root reconstruction by backtracking over Krausz partitions (edge
/// partitions into cliques, every vertex in at most two parts), component
/// by component. The returned map is checked edge by edge before returning.
RootResult root_graph(const Graph& g);

/// h plus one private pendant neighbor n + i for every vertex i.
Graph tilde(const Graph& h);

struct LineRootFailure {
  enum class Kind { bull, matching };
  Kind kind = Kind::bull;
  /// Kind::bull: triangle a, b, c, then d adjacent to a and e adjacent to b.
  std::vector<int> bull;
  /// Kind::matching: vertex x and a matching covering N(x) with ≥ 2 edges
  /// that avoids x.
  int x = -1;
  std::vector<Edge> matching;
};

struct LineRootVerdict {
  bool holds = false;
  std::optional<LineRootFailure> failure;
  MatchingBackend backend = MatchingBackend::blossom;
};

/// Bull (as a not necessarily induced subgraph): triangle abc plus edges ad,
/// be with d ≠ e outside the triangle.
std::optional<std::vector<int>> find_bull_subgraph(const Graph& h);

/// Decides whether line_graph(h) is CIS from h alone: no bull subgraph, and
/// for each x of degree ≥ 3 or non-simplicial of degree 2 the weighted
/// graph H(x) has no matching of weight deg(x). H(x) holds the edges with
/// an end in N(x) and no end at x; edges inside N(x) weigh 2, others 1.
LineRootVerdict is_cis_line_root(const Graph& h, MatchingBackend backend = MatchingBackend::blossom);

/// Bull-freeness plus the maximal-matching condition by enumerating every
/// maximal matching. Exponential; oracle use only.
bool check_condition_vii(const Graph& h);

}  // namespace cisgraphs

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cisgraphs/vertex_set.hpp"

namespace cisgraphs {

using Edge = std::pair<int, int>;

/// Undirected simple graph on 1..64 vertices with one adjacency word per
/// vertex. Loops are rejected; symmetry is maintained by every mutator.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int a, int b);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_clique(VertexSet s) const;
  bool is_stable(VertexSet s) const;
  /// Inclusion-maximal checks: no outside vertex extends the set.
  bool is_maximal_clique(VertexSet c) const;
  bool is_maximal_stable(VertexSet s) const;

  /// Subgraph induced on `s`, relabelled 0..|s|-1 in increasing order.
  Graph induced(VertexSet s) const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);
/// Vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
/// Adds a new vertex adjacent to both ends of every edge.
Graph glue_triangles(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// graph6 and edge-list text formats.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);
/// One "u v" pair per line; a line holding a single integer declares the
/// vertex count (for isolated vertices). '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);
/// graph6 when the trimmed text is a single token, edge list otherwise.
Graph parse_graph(std::string_view text);
/// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_list(std::string_view text);

/// Backtracking search for an adjacency-preserving bijection, pruned by
/// degree and by adjacency to already-mapped vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

/// Isomorphism-invariant code of a graph with at most 11 vertices: the
/// minimum upper-triangle adjacency word over all labelings that order
/// vertices by a refined degree invariant. Equal codes ⟺ isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Adjacency-list-free graph with arbitrary order, used for the few gallery
/// members beyond 64 vertices.
class BigGraph {
 public:
  using Row = boost::dynamic_bitset<std::uint64_t>;

  explicit BigGraph(std::size_t n);
  explicit BigGraph(const Graph& g);

  std::size_t order() const { return rows_.size(); }
  const Row& neighbors(std::size_t v) const { return rows_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  void add_edge(std::size_t u, std::size_t v);
  std::size_t edge_count() const;
  Row empty_row() const { return Row(order()); }

 private:
  std::vector<Row> rows_;
};

BigGraph complement(const BigGraph& g);
BigGraph disjoint_union(const BigGraph& a, const BigGraph& b);
BigGraph glue_triangles(const BigGraph& g);
/// graph6 with the 18-bit order header where needed (n < 258048).
std::string encode_graph6(const BigGraph& g);

}  // namespace cisgraphs

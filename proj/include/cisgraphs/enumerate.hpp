#pragma once

#include <cstddef>
#include <vector>

#include "cisgraphs/graph.hpp"

namespace cisgraphs {

inline constexpr std::size_t kDefaultFamilyCap = std::size_t{1} << 20;

enum class FamilyKind { cliques, stable_sets };

/// Maximal cliques or maximal stable sets of one graph, sorted by bitmask.
struct SetFamily {
  FamilyKind kind = FamilyKind::cliques;
  std::vector<VertexSet> sets;

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
  auto begin() const { return sets.begin(); }
  auto end() const { return sets.end(); }
  const VertexSet& operator[](std::size_t i) const { return sets[i]; }
  /// Binary search; requires the canonical (sorted) order.
  bool contains(VertexSet s) const;
};

/// Bron–Kerbosch with a max-|P ∩ N(u)| pivot. Throws FamilyCapExceeded
/// once more than `cap` cliques have been produced.
SetFamily maximal_cliques(const Graph& g, std::size_t cap = kDefaultFamilyCap);
SetFamily maximal_stable_sets(const Graph& g, std::size_t cap = kDefaultFamilyCap);

/// A graph together with both of its maximal families. Most recognizers
/// take this so that families are enumerated once per graph.
struct Structure {
  Graph graph;
  SetFamily cliques;
  SetFamily stables;

  explicit Structure(Graph g, std::size_t cap = kDefaultFamilyCap);
  Structure(Graph g, SetFamily cliques, SetFamily stables);

  /// The complement's structure: graph complemented, families swapped.
  Structure complement() const;
};

/// `c` must be a clique; true iff it meets every maximal stable set.
bool is_strong_clique(const Graph& g, VertexSet c);
bool is_strong_clique(const Structure& s, VertexSet c);

/// All distinct closed neighborhoods N[v] that are cliques.
SetFamily simplicial_cliques(const Graph& g);

bool covers_edges(const Graph& g, const std::vector<VertexSet>& family);
bool covers_nonedges(const Graph& g, const std::vector<VertexSet>& family);
bool covers_vertices(const Graph& g, const std::vector<VertexSet>& family);

/// Maximal cliques of a graph beyond 64 vertices, as sorted vertex lists.
std::vector<std::vector<std::size_t>> maximal_cliques(const BigGraph& g,
                                                      std::size_t cap = kDefaultFamilyCap);

}  // namespace cisgraphs

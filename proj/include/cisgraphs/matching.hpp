#pragma once

#include <string_view>
#include <vector>

#include "cisgraphs/graph.hpp"

namespace cisgraphs {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  long weight = 0;
};

enum class MatchingBackend { blossom, exhaustive };

std::string_view backend_name(MatchingBackend b);

struct Matching {
  std::vector<Edge> edges;  // (u, v) with u < v, sorted
  long weight = 0;
  MatchingBackend backend = MatchingBackend::blossom;
};

/// Exact maximum-weight matching on vertices 0..n-1. The blossom backend is
/// the primal-dual algorithm from Boost.Graph; the exhaustive backend is a
/// branch-and-bound over edges (testing oracle, fine up to a few dozen
/// edges).
Matching max_weight_matching(int n, const std::vector<WeightedEdge>& edges,
                             MatchingBackend backend = MatchingBackend::blossom);

/// Every maximal matching of `g`, each sorted. Exponential; oracle use only.
std::vector<std::vector<Edge>> maximal_matchings(const Graph& g);

}  // namespace cisgraphs

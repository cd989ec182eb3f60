#include "cisgraphs/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

namespace cisgraphs {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_weight_t, long>>;

Matching blossom(int n, const std::vector<WeightedEdge>& edges) {
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    if (e.weight > 0) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), e.weight, bg);
  }
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(static_cast<std::size_t>(n));
  boost::maximum_weighted_matching(bg, &mate[0]);
  Matching m;
  m.backend = MatchingBackend::blossom;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    const auto w = mate[v];
    if (w == boost::graph_traits<BoostGraph>::null_vertex() || w < v) continue;
    m.edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
    m.weight += boost::get(boost::edge_weight, bg, boost::edge(v, w, bg).first);
  }
  return m;
}

class BranchAndBound {
 public:
  BranchAndBound(int n, std::vector<WeightedEdge> edges) : edges_(std::move(edges)), used_(n, false) {
    std::erase_if(edges_, [](const WeightedEdge& e) { return e.weight <= 0; });
    suffix_.assign(edges_.size() + 1, 0);
    for (std::size_t i = edges_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + edges_[i].weight;
  }

  Matching run() {
    go(0, 0);
    Matching m;
    m.backend = MatchingBackend::exhaustive;
    m.weight = best_;
    for (std::size_t i : best_set_) m.edges.emplace_back(edges_[i].u, edges_[i].v);
    return m;
  }

 private:
  void go(std::size_t i, long weight) {
    if (weight > best_) {
      best_ = weight;
      best_set_ = chosen_;
    }
    if (i == edges_.size() || weight + suffix_[i] <= best_) return;
    const auto& e = edges_[i];
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (!used_[u] && !used_[v]) {
      used_[u] = used_[v] = true;
      chosen_.push_back(i);
      go(i + 1, weight + e.weight);
      chosen_.pop_back();
      used_[u] = used_[v] = false;
    }
    go(i + 1, weight);
  }

  std::vector<WeightedEdge> edges_;
  std::vector<bool> used_;
  std::vector<long> suffix_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_set_;
  long best_ = 0;
};

void enumerate_maximal(const Graph& g, const std::vector<Edge>& edges, std::size_t i, VertexSet covered,
                       std::vector<Edge>& current, std::vector<std::vector<Edge>>& out) {
  if (i == edges.size()) {
    // Maximal: no edge has both ends uncovered.
    for (const auto& [u, v] : edges) {
      if (!covered.contains(u) && !covered.contains(v)) return;
    }
    out.push_back(current);
    return;
  }
  const auto [u, v] = edges[i];
  if (!covered.contains(u) && !covered.contains(v)) {
    current.emplace_back(u, v);
    enumerate_maximal(g, edges, i + 1, covered.with(u).with(v), current, out);
    current.pop_back();
  }
  enumerate_maximal(g, edges, i + 1, covered, current, out);
}

}  // namespace

std::string_view backend_name(MatchingBackend b) {
  return b == MatchingBackend::blossom ? "blossom" : "exhaustive";
}

Matching max_weight_matching(int n, const std::vector<WeightedEdge>& edges, MatchingBackend backend) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw std::invalid_argument("matching edge out of range");
    }
  }
  Matching m = backend == MatchingBackend::blossom ? blossom(n, edges) : BranchAndBound(n, edges).run();
  for (auto& [u, v] : m.edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::vector<std::vector<Edge>> maximal_matchings(const Graph& g) {
  const auto edges = g.edges();
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> current;
  enumerate_maximal(g, edges, 0, VertexSet{}, current, out);
  return out;
}

}  // namespace cisgraphs

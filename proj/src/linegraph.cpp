#include "cisgraphs/linegraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

Graph line_graph(const Graph& h) {
  const auto edges = h.edges();
  if (edges.empty()) throw std::invalid_argument("edgeless graph has an empty line graph");
  if (edges.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw CapacityError("line graph would have " + std::to_string(edges.size()) + " vertices");
  }
  const int m = static_cast<int>(edges.size());
  Graph l(m);
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = edges[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      const auto [c, d] = edges[static_cast<std::size_t>(j)];
      if (a == c || a == d || b == c || b == d) l.add_edge(i, j);
    }
  }
  return l;
}

namespace {

struct KrauszState {
  std::array<int, kMaxVertices> count{};
  std::array<VertexSet, kMaxVertices> uncovered{};
  std::vector<VertexSet> cliques;

  bool add_clique(VertexSet k) {
    for (int w : k) {
      const auto wi = static_cast<std::size_t>(w);
      if (++count[wi] > 2) return false;
      if (!k.without(w).subset_of(uncovered[wi])) return false;
    }
    for (int w : k) uncovered[static_cast<std::size_t>(w)] -= k;
    cliques.push_back(k);
    return true;
  }
};

class KrauszSearch {
 public:
  KrauszSearch(const Graph& g, VertexSet component) : g_(g), component_(component) {}

  std::optional<std::vector<VertexSet>> run() {
    KrauszState s;
    for (int v : component_) s.uncovered[static_cast<std::size_t>(v)] = g_.neighbors(v);
    if (!solve(s)) return std::nullopt;
    return result_;
  }

 private:
  bool solve(const KrauszState& s) {
    int u = -1;
    for (int v : component_) {
      const auto vi = static_cast<std::size_t>(v);
      if (s.uncovered[vi].empty()) continue;
      if (s.count[vi] >= 1) {
        u = v;
        break;
      }
      if (u < 0) u = v;
    }
    if (u < 0) {
      result_ = s.cliques;
      return true;
    }
    const auto ui = static_cast<std::size_t>(u);
    const VertexSet open = s.uncovered[ui];
    if (s.count[ui] == 2) return false;
    if (s.count[ui] == 1) {
      const VertexSet k = open.with(u);
      if (!g_.is_clique(k)) return false;
      KrauszState next = s;
      return next.add_clique(k) && solve(next);
    }
    // Split the open neighbors into at most two cliques: the non-adjacency
    // graph on them must be bipartite, and each of its components can be
    // placed either way round.
    std::vector<std::pair<VertexSet, VertexSet>> sides;
    VertexSet left = open;
    while (!left.empty()) {
      const int start = left.first();
      VertexSet x = VertexSet::singleton(start);
      VertexSet y;
      std::vector<int> queue{start};
      left.erase(start);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int a = queue[qi];
        const bool in_x = x.contains(a);
        const VertexSet non_nbrs = open - g_.neighbors(a) - VertexSet::singleton(a);
        for (int b : non_nbrs) {
          if ((in_x && x.contains(b)) || (!in_x && y.contains(b))) return false;
          if (!left.contains(b)) continue;
          (in_x ? y : x).insert(b);
          left.erase(b);
          queue.push_back(b);
        }
      }
      sides.emplace_back(x, y);
    }
    const std::size_t choices = std::size_t{1} << (sides.size() - 1);
    for (std::size_t mask = 0; mask < choices; ++mask) {
      VertexSet a = sides[0].first;
      for (std::size_t i = 1; i < sides.size(); ++i) {
        a |= ((mask >> (i - 1)) & 1U) ? sides[i].second : sides[i].first;
      }
      const VertexSet b = open - a;
      KrauszState next = s;
      if (!next.add_clique(a.with(u))) continue;
      if (!b.empty() && !next.add_clique(b.with(u))) continue;
      if (solve(next)) return true;
    }
    return false;
  }

  const Graph& g_;
  VertexSet component_;
  std::vector<VertexSet> result_;
};

}  // namespace

RootResult root_graph(const Graph& g) {
  RootResult result;
  std::vector<Edge> edge_of(static_cast<std::size_t>(g.order()));
  std::vector<Edge> root_edges;
  int next_vertex = 0;
  for (VertexSet comp : connected_components(g)) {
    if (comp.size() == 3 && g.is_clique(comp)) {
      ++result.ambiguous_components;
      const auto vs = comp.to_vector();
      const int a = next_vertex;
      next_vertex += 3;
      edge_of[static_cast<std::size_t>(vs[0])] = {a, a + 1};
      edge_of[static_cast<std::size_t>(vs[1])] = {a, a + 2};
      edge_of[static_cast<std::size_t>(vs[2])] = {a + 1, a + 2};
      continue;
    }
    auto cliques = KrauszSearch(g, comp).run();
    if (!cliques) return RootResult{};
    const int base = next_vertex;
    next_vertex += static_cast<int>(cliques->size());
    for (int v : comp) {
      std::vector<int> ends;
      for (std::size_t i = 0; i < cliques->size(); ++i) {
        if ((*cliques)[i].contains(v)) ends.push_back(base + static_cast<int>(i));
      }
      while (ends.size() < 2) ends.push_back(next_vertex++);
      edge_of[static_cast<std::size_t>(v)] = {std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
    }
  }
  if (next_vertex > kMaxVertices) {
    throw CapacityError("root graph would have " + std::to_string(next_vertex) + " vertices");
  }
  Graph root(next_vertex);
  for (const auto& [a, b] : edge_of) root.add_edge(a, b);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const auto [a, b] = edge_of[static_cast<std::size_t>(u)];
      const auto [c, d] = edge_of[static_cast<std::size_t>(v)];
      const bool share = a == c || a == d || b == c || b == d;
      if (share != g.adjacent(u, v) || edge_of[static_cast<std::size_t>(u)] == edge_of[static_cast<std::size_t>(v)]) {
        throw InternalVerificationError("reconstructed root does not reproduce the input");
      }
    }
  }
  result.kind = result.ambiguous_components > 0 ? RootKind::ambiguous : RootKind::unique;
  result.root = std::move(root);
  result.edge_of_vertex = std::move(edge_of);
  return result;
}

Graph tilde(const Graph& h) {
  const int n = h.order();
  if (2 * n > kMaxVertices) throw CapacityError("tilde graph would exceed 64 vertices");
  Graph t(2 * n);
  for (const auto& [u, v] : h.edges()) t.add_edge(u, v);
  for (int i = 0; i < n; ++i) t.add_edge(i, n + i);
  return t;
}

std::optional<std::vector<int>> find_bull_subgraph(const Graph& h) {
  for (const auto& [a, b] : h.edges()) {
    for (int c : h.neighbors(a) & h.neighbors(b)) {
      if (c < b) continue;
      const VertexSet tri{a, b, c};
      const std::array<int, 3> t = {a, b, c};
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          const int p = t[i];
          const int q = t[j];
          const int r = t[3 - i - j];
          const VertexSet at_p = h.neighbors(p) - tri;
          const VertexSet at_q = h.neighbors(q) - tri;
          for (int d : at_p) {
            const VertexSet es = at_q.without(d);
            if (!es.empty()) return std::vector<int>{p, q, r, d, es.first()};
          }
        }
      }
    }
  }
  return std::nullopt;
}

LineRootVerdict is_cis_line_root(const Graph& h, MatchingBackend backend) {
  LineRootVerdict verdict;
  verdict.backend = backend;
  if (auto bull = find_bull_subgraph(h)) {
    verdict.failure = LineRootFailure{LineRootFailure::Kind::bull, std::move(*bull), -1, {}};
    return verdict;
  }
  const auto edges = h.edges();
  for (int x = 0; x < h.order(); ++x) {
    const VertexSet nx = h.neighbors(x);
    const int deg = nx.size();
    if (deg <= 1 || (deg == 2 && h.is_clique(nx))) continue;
    std::vector<WeightedEdge> hx;
    for (const auto& [a, b] : edges) {
      if (a == x || b == x) continue;
      const int ends_in_nx = static_cast<int>(nx.contains(a)) + static_cast<int>(nx.contains(b));
      if (ends_in_nx > 0) hx.push_back(WeightedEdge{a, b, ends_in_nx});
    }
    Matching m = max_weight_matching(h.order(), hx, backend);
    if (m.weight > deg) throw InternalVerificationError("matching weight exceeds degree");
    if (m.weight == deg) {
      if (m.edges.size() < 2) throw InternalVerificationError("covering matching has a single edge");
      verdict.failure = LineRootFailure{LineRootFailure::Kind::matching, {}, x, std::move(m.edges)};
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

bool check_condition_vii(const Graph& h) {
  if (find_bull_subgraph(h)) return false;
  for (const auto& m : maximal_matchings(h)) {
    VertexSet covered;
    for (const auto& [u, v] : m) covered |= VertexSet{u, v};
    for (int x : h.vertices() - covered) {
      const VertexSet nx = h.neighbors(x);
      if (nx.empty()) continue;
      const bool inside = std::any_of(m.begin(), m.end(), [&](const Edge& e) {
        return nx.subset_of(VertexSet{e.first, e.second});
      });
      if (!inside) return false;
    }
  }
  return true;
}

}  // namespace cisgraphs

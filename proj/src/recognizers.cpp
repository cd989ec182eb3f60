#include "cisgraphs/recognizers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

namespace {

struct BaseInfo {
  Base base;
  std::string_view name;
};

constexpr std::array<BaseInfo, 15> kBaseInfo = {{
    {Base::threshold, "threshold"},
    {Base::cograph, "cograph"},
    {Base::split, "split"},
    {Base::edge_simplicial, "es"},
    {Base::cis, "CIS"},
    {Base::almost_cis, "aCIS"},
    {Base::quasi_cis, "qCIS"},
    {Base::semi_weakly_cis, "swCIS"},
    {Base::weakly_cis, "wCIS"},
    {Base::triangle, "triangle"},
    {Base::weakly_triangle, "wtriangle"},
    {Base::normal, "normal"},
    {Base::perfect, "perfect"},
    {Base::equistable, "eq"},
    {Base::strongly_equistable, "seq"},
}};

Verdict yes(Certificate c = {}) { return Verdict{true, std::move(c)}; }
Verdict no(Certificate c = {}) { return Verdict{false, std::move(c)}; }

std::optional<InducedPattern> find_induced_p4(const Graph& g) {
  for (const auto& [b, c] : g.edges()) {
    const VertexSet ends_b = g.neighbors(b) - g.closed_neighborhood(c);
    const VertexSet ends_c = g.neighbors(c) - g.closed_neighborhood(b);
    for (int a : ends_b) {
      const VertexSet d = ends_c - g.neighbors(a);
      if (!d.empty()) return InducedPattern{"P4", {a, b, c, d.first()}};
    }
  }
  return std::nullopt;
}

std::optional<InducedPattern> find_induced_c4(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      const VertexSet common = g.neighbors(a) & g.neighbors(c);
      for (int b : common) {
        const VertexSet d = common - g.closed_neighborhood(b);
        if (!d.empty()) return InducedPattern{"C4", {a, b, c, d.first()}};
      }
    }
  }
  return std::nullopt;
}

std::optional<InducedPattern> find_induced_2k2(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    const VertexSet blocked = g.closed_neighborhood(a) | g.closed_neighborhood(b);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      if (!blocked.contains(c) && !blocked.contains(d)) return InducedPattern{"2K2", {a, b, c, d}};
    }
  }
  return std::nullopt;
}

// Induced cycles of length ≥ 5 with odd length; the smallest vertex of the
// cycle is the start of the path.
class OddHoleSearch {
 public:
  explicit OddHoleSearch(const Graph& g) : g_(g) {}

  std::optional<std::vector<int>> run() {
    for (int v0 = 0; v0 < g_.order(); ++v0) {
      path_ = {v0};
      for (int v1 : g_.neighbors(v0)) {
        if (v1 < v0) continue;
        path_.push_back(v1);
        if (extend(VertexSet::singleton(v0))) return path_;
        path_.pop_back();
      }
    }
    return std::nullopt;
  }

 private:
  // `blocked` holds v0 and the closed neighborhoods of the interior path
  // vertices; the last vertex is path_.back().
  bool extend(VertexSet blocked) {
    const int v0 = path_.front();
    const int last = path_.back();
    const VertexSet next = g_.neighbors(last) - blocked - VertexSet::singleton(last);
    const VertexSet inner_blocked = path_.size() >= 2 ? blocked | g_.closed_neighborhood(last) : blocked;
    for (int w : next) {
      if (w < v0) continue;
      if (g_.adjacent(w, v0)) {
        const std::size_t length = path_.size() + 1;
        if (path_.size() >= 3 && length >= 5 && length % 2 == 1) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      path_.push_back(w);
      if (extend(inner_blocked)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> path_;
};

}  // namespace

std::string_view base_name(Base b) {
  for (const auto& info : kBaseInfo) {
    if (info.base == b) return info.name;
  }
  throw std::invalid_argument("unknown base property");
}

std::optional<Base> parse_base(std::string_view name) {
  for (const auto& info : kBaseInfo) {
    if (info.name == name) return info.base;
  }
  return std::nullopt;
}

bool needs_lp(Base b) { return b == Base::equistable || b == Base::strongly_equistable; }

std::string PropertyId::name() const {
  std::string prefix;
  switch (modifier) {
    case Modifier::plain:
      break;
    case Modifier::co:
      prefix = "co-";
      break;
    case Modifier::cap:
      prefix = "cap-";
      break;
    case Modifier::cup:
      prefix = "cup-";
      break;
  }
  return prefix + std::string(base_name(base));
}

PropertyId PropertyId::parse(std::string_view text) {
  PropertyId id;
  const std::array<std::pair<std::string_view, Modifier>, 3> prefixes = {{
      {"co-", Modifier::co},
      {"cap-", Modifier::cap},
      {"cup-", Modifier::cup},
  }};
  std::string_view rest = text;
  for (const auto& [prefix, modifier] : prefixes) {
    if (rest.starts_with(prefix)) {
      id.modifier = modifier;
      rest.remove_prefix(prefix.size());
      break;
    }
  }
  const auto base = parse_base(rest);
  if (!base) throw ParseError("unknown property '" + std::string(text) + "'");
  id.base = *base;
  return id;
}

// ------------------------------------------------------------ CIS family

std::size_t disjoint_pair_count(const Structure& s) {
  std::size_t count = 0;
  for (const auto& c : s.cliques) {
    for (const auto& st : s.stables) {
      if (!c.intersects(st)) ++count;
    }
  }
  return count;
}

Verdict is_cis(const Structure& s) {
  for (const auto& c : s.cliques) {
    for (const auto& st : s.stables) {
      if (!c.intersects(st)) return no(DisjointPair{c, st});
    }
  }
  return yes();
}

Verdict is_cis(const Graph& g) { return is_cis(Structure(g)); }

std::size_t split_partition_count(const Structure& s) {
  const VertexSet all = s.graph.vertices();
  std::set<VertexSet> clique_parts;
  for (const auto& c : s.cliques) {
    const VertexSet rest = all - c;
    if (!s.graph.is_stable(rest)) continue;
    clique_parts.insert(c);
    for (int v : c) {
      if (!s.graph.neighbors(v).intersects(rest)) clique_parts.insert(c.without(v));
    }
  }
  return clique_parts.size();
}

Verdict is_split(const Structure& s) {
  const VertexSet all = s.graph.vertices();
  for (const auto& c : s.cliques) {
    if (s.graph.is_stable(all - c)) return yes(SplitPartition{c, all - c});
  }
  if (auto p = find_induced_2k2(s.graph)) return no(std::move(*p));
  if (auto p = find_induced_c4(s.graph)) return no(std::move(*p));
  // The remaining obstruction is an induced C5.
  if (auto hole = OddHoleSearch(s.graph).run(); hole && hole->size() == 5) {
    return no(InducedPattern{"odd-hole", *hole});
  }
  throw InternalVerificationError("non-split graph without 2K2, C4 or C5");
}

Verdict is_split(const Graph& g) { return is_split(Structure(g)); }

Verdict is_almost_cis(const Structure& s) {
  const std::size_t pairs = disjoint_pair_count(s);
  const bool by_pairs = pairs == 1;
  const bool by_partition = is_split(s).holds && split_partition_count(s) == 1;
  if (by_pairs != by_partition) {
    throw InternalVerificationError("almost-CIS pair count disagrees with split partition count");
  }
  if (!by_pairs) return no(PairCount{pairs});
  for (const auto& c : s.cliques) {
    for (const auto& st : s.stables) {
      if (!c.intersects(st)) return yes(DisjointPair{c, st});
    }
  }
  throw InternalVerificationError("disjoint pair vanished");
}

Verdict is_almost_cis(const Graph& g) { return is_almost_cis(Structure(g)); }

Verdict is_quasi_cis(const Structure& s) {
  const std::size_t pairs = disjoint_pair_count(s);
  if (pairs <= 1) return yes(PairCount{pairs});
  return no(PairCount{pairs});
}

Verdict is_quasi_cis(const Graph& g) { return is_quasi_cis(Structure(g)); }

// ------------------------------------------------------- forbidden patterns

Verdict is_threshold(const Graph& g) {
  if (auto p = find_induced_p4(g)) return no(std::move(*p));
  if (auto p = find_induced_c4(g)) return no(std::move(*p));
  if (auto p = find_induced_2k2(g)) return no(std::move(*p));
  return yes();
}

Verdict is_cograph(const Graph& g) {
  if (auto p = find_induced_p4(g)) return no(std::move(*p));
  return yes();
}

Verdict is_perfect(const Graph& g) {
  if (g.order() > kPerfectMaxOrder) {
    throw UnsupportedSize("perfection test supports at most " + std::to_string(kPerfectMaxOrder) +
                          " vertices");
  }
  if (auto hole = OddHoleSearch(g).run()) return no(InducedPattern{"odd-hole", *hole});
  if (auto hole = OddHoleSearch(complement(g)).run()) return no(InducedPattern{"odd-antihole", *hole});
  return yes();
}

// ------------------------------------------------------- edge coverings

Verdict is_edge_simplicial(const Graph& g) {
  const SetFamily simplicial = simplicial_cliques(g);
  for (const auto& [u, v] : g.edges()) {
    const VertexSet e{u, v};
    const bool covered =
        std::any_of(simplicial.begin(), simplicial.end(), [&](VertexSet c) { return e.subset_of(c); });
    if (!covered) return no(UncoveredPair{u, v});
  }
  return yes(CoveringFamily{simplicial.sets});
}

// If c ⊆ c′ are cliques and c meets every maximal stable set, so does c′;
// hence an edge lies in a strong clique iff it lies in a strong maximal
// clique, and checking maximal cliques is exact.
Verdict is_semi_weakly_cis(const Structure& s) {
  std::vector<VertexSet> strong;
  for (const auto& c : s.cliques) {
    if (is_strong_clique(s, c)) strong.push_back(c);
  }
  for (const auto& [u, v] : s.graph.edges()) {
    const VertexSet e{u, v};
    const bool covered = std::any_of(strong.begin(), strong.end(), [&](VertexSet c) { return e.subset_of(c); });
    if (!covered) return no(UncoveredPair{u, v});
  }
  return yes(CoveringFamily{std::move(strong)});
}

Verdict is_semi_weakly_cis(const Graph& g) { return is_semi_weakly_cis(Structure(g)); }

// ------------------------------------------------------- triangle family

namespace {

std::optional<Edge> triangle_violation(const Graph& g, VertexSet stable) {
  const VertexSet outside = g.vertices() - stable;
  for (int u : outside) {
    for (int v : g.neighbors(u) & outside) {
      if (v <= u) continue;
      if (!(g.neighbors(u) & g.neighbors(v)).intersects(stable)) return Edge{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_triangle_property(const Graph& g, VertexSet stable) { return !triangle_violation(g, stable); }

Verdict is_triangle(const Structure& s) {
  for (const auto& st : s.stables) {
    if (auto e = triangle_violation(s.graph, st)) return no(TriangleViolation{st, e->first, e->second});
  }
  return yes();
}

Verdict is_triangle(const Graph& g) { return is_triangle(Structure(g)); }

Verdict is_weakly_triangle(const Structure& s) {
  std::vector<VertexSet> admissible;
  for (const auto& st : s.stables) {
    if (has_triangle_property(s.graph, st)) admissible.push_back(st);
  }
  const Graph& g = s.graph;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const VertexSet pair{u, v};
      const bool covered =
          std::any_of(admissible.begin(), admissible.end(), [&](VertexSet st) { return pair.subset_of(st); });
      if (!covered) return no(UncoveredPair{u, v});
    }
  }
  return yes(CoveringFamily{std::move(admissible)});
}

Verdict is_weakly_triangle(const Graph& g) { return is_weakly_triangle(Structure(g)); }

Verdict has_bad_p4(const Structure& s) {
  const Graph& g = s.graph;
  for (const auto& [b, c] : g.edges()) {
    const VertexSet common = g.neighbors(b) & g.neighbors(c);
    for (int a : g.neighbors(b) - g.closed_neighborhood(c)) {
      for (int d : g.neighbors(c) - g.closed_neighborhood(b) - g.neighbors(a)) {
        const VertexSet ends{a, d};
        for (const auto& st : s.stables) {
          if (ends.subset_of(st) && !common.intersects(st)) return yes(BadP4{{a, b, c, d}, st});
        }
      }
    }
  }
  return no();
}

Verdict has_bad_p4(const Graph& g) { return has_bad_p4(Structure(g)); }

// ------------------------------------------------------------ big graphs

bool is_edge_simplicial(const BigGraph& g) {
  const std::size_t n = g.order();
  BigGraph::Row simplicial = g.empty_row();
  for (std::size_t w = 0; w < n; ++w) {
    const auto& nb = g.neighbors(w);
    bool clique = true;
    for (std::size_t u = nb.find_first(); clique && u != BigGraph::Row::npos; u = nb.find_next(u)) {
      BigGraph::Row rest = nb;
      rest.reset(u);
      if (!rest.is_subset_of(g.neighbors(u))) clique = false;
    }
    if (clique) simplicial.set(w);
  }
  for (std::size_t u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (std::size_t v = nu.find_next(u); v != BigGraph::Row::npos; v = nu.find_next(v)) {
      BigGraph::Row closed_u = nu;
      closed_u.set(u);
      BigGraph::Row closed_v = g.neighbors(v);
      closed_v.set(v);
      if (!(closed_u & closed_v).intersects(simplicial)) return false;
    }
  }
  return true;
}

bool is_co_triangle(const BigGraph& g) {
  const std::size_t n = g.order();
  for (const auto& clique : maximal_cliques(g)) {
    BigGraph::Row in_clique = g.empty_row();
    for (std::size_t c : clique) in_clique.set(c);
    for (std::size_t u = 0; u < n; ++u) {
      if (in_clique.test(u)) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (in_clique.test(v) || g.adjacent(u, v)) continue;
        const BigGraph::Row hit = (g.neighbors(u) | g.neighbors(v)) & in_clique;
        if (hit == in_clique) return false;
      }
    }
  }
  return true;
}

}  // namespace cisgraphs

#include "cisgraphs/gallery.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <random>
#include <stdexcept>

#include "cisgraphs/errors.hpp"
#include "cisgraphs/linegraph.hpp"

namespace cisgraphs {

namespace {

struct GalleryInfo {
  GalleryId id;
  std::string_view name;
};

constexpr std::array<GalleryInfo, 18> kInfo = {{
    {GalleryId::K1, "K1"},     {GalleryId::P4, "P4"},         {GalleryId::C4, "C4"},
    {GalleryId::TwoK2, "2K2"}, {GalleryId::Bull, "bull"},     {GalleryId::Net, "net"},
    {GalleryId::S3, "S3"},     {GalleryId::SK, "SK"},         {GalleryId::CK, "CK"},
    {GalleryId::C5Star, "C5star"}, {GalleryId::C9, "C9"},     {GalleryId::Cir9, "Cir9"},
    {GalleryId::F, "F"},       {GalleryId::FK, "FK"},         {GalleryId::G12, "G12"},
    {GalleryId::LK33, "LK33"}, {GalleryId::L, "L"},           {GalleryId::LLbar, "LLbar"},
}};

// 1-based lists as printed for the families.
std::vector<VertexSet> from_one_based(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<VertexSet> out;
  for (const auto& s : sets) {
    VertexSet v;
    for (int x : s) v.insert(x - 1);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph from_edge_pairs(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::vector<Edge>(edges));
}

Graph fano() {
  Graph g = Graph::complete(7);
  Graph f(14);
  for (const auto& [u, v] : g.edges()) f.add_edge(u, v);
  for (int j = 0; j < 7; ++j) {
    for (int offset : {0, 1, 3}) f.add_edge((j + offset) % 7, 7 + j);
  }
  return f;
}

Graph s3() { return from_edge_pairs(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}}); }

}  // namespace

std::string_view gallery_name(GalleryId id) {
  for (const auto& info : kInfo) {
    if (info.id == id) return info.name;
  }
  throw std::invalid_argument("unknown gallery id");
}

std::optional<GalleryId> parse_gallery_id(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
  };
  const std::string wanted = lower(name);
  for (const auto& info : kInfo) {
    if (lower(info.name) == wanted) return info.id;
  }
  return std::nullopt;
}

bool is_big(GalleryId id) { return id == GalleryId::L || id == GalleryId::LLbar; }

std::vector<VertexSet> g12_cliques() {
  return from_one_based({{1, 4, 7},
                         {2, 4, 5, 6},
                         {2, 4, 6, 7},
                         {2, 4, 6, 9},
                         {2, 4, 9, 12},
                         {2, 5, 8},
                         {2, 6, 7, 11},
                         {2, 11, 12},
                         {3, 6, 9},
                         {4, 5, 6, 10},
                         {4, 10, 12},
                         {6, 10, 11},
                         {10, 11, 12}});
}

std::vector<VertexSet> g12_stables() {
  return from_one_based({{1, 2, 3, 10},
                         {1, 3, 5, 11},
                         {1, 3, 5, 12},
                         {1, 3, 8, 10},
                         {1, 3, 8, 11},
                         {1, 3, 8, 12},
                         {1, 5, 9, 11},
                         {1, 6, 8, 12},
                         {1, 8, 9, 10},
                         {1, 8, 9, 11},
                         {3, 4, 8, 11},
                         {3, 5, 7, 12},
                         {3, 7, 8, 10},
                         {3, 7, 8, 12},
                         {5, 7, 9},
                         {7, 8, 9, 10}});
}

std::vector<VertexSet> g12_certificate_cliques() {
  return from_one_based({{1, 4, 7}, {2, 4, 9, 12}, {2, 5, 8}, {2, 6, 7, 11}, {3, 6, 9}, {4, 5, 6, 10}, {10, 11, 12}});
}

std::vector<VertexSet> g12_certificate_stables() {
  return from_one_based(
      {{1, 2, 3, 10}, {1, 5, 9, 11}, {1, 6, 8, 12}, {3, 4, 8, 11}, {3, 5, 7, 12}, {7, 8, 9, 10}});
}

std::vector<VertexSet> cir9_stables() {
  return from_one_based({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {3, 6, 9}});
}

Graph gallery(GalleryId id) {
  switch (id) {
    case GalleryId::K1:
      return Graph(1);
    case GalleryId::P4:
      return Graph::path(4);
    case GalleryId::C4:
      return Graph::cycle(4);
    case GalleryId::TwoK2:
      return from_edge_pairs(4, {{0, 1}, {2, 3}});
    case GalleryId::Bull:
      return from_edge_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
    case GalleryId::Net:
      return from_edge_pairs(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
    case GalleryId::S3:
      return s3();
    case GalleryId::SK:
      return disjoint_union(s3(), Graph::complete(2));
    case GalleryId::CK:
      return disjoint_union(Graph::cycle(4), Graph::complete(2));
    case GalleryId::C5Star:
      return glue_triangles(Graph::cycle(5));
    case GalleryId::C9:
      return Graph::cycle(9);
    case GalleryId::Cir9: {
      const auto stables = cir9_stables();
      Graph g(9);
      for (int u = 0; u < 9; ++u) {
        for (int v = u + 1; v < 9; ++v) {
          const VertexSet pair{u, v};
          if (std::none_of(stables.begin(), stables.end(), [&](VertexSet s) { return pair.subset_of(s); })) {
            g.add_edge(u, v);
          }
        }
      }
      return g;
    }
    case GalleryId::F:
      return fano();
    case GalleryId::FK:
      return disjoint_union(fano(), Graph::complete(2));
    case GalleryId::G12: {
      Graph g(12);
      for (VertexSet c : g12_cliques()) {
        for (int u : c) {
          for (int v : c) {
            if (u < v) g.add_edge(u, v);
          }
        }
      }
      return g;
    }
    case GalleryId::LK33:
      return line_graph(Graph::complete_bipartite(3, 3));
    case GalleryId::L:
    case GalleryId::LLbar:
      throw CapacityError(std::string(gallery_name(id)) + " has more than 64 vertices");
  }
  throw std::invalid_argument("unknown gallery id");
}

BigGraph graph_l() { return glue_triangles(BigGraph(line_graph(Graph::complete_bipartite(5, 6)))); }

BigGraph gallery_big(GalleryId id) {
  if (id == GalleryId::L) return graph_l();
  if (id == GalleryId::LLbar) {
    const BigGraph l = graph_l();
    return disjoint_union(l, complement(l));
  }
  return BigGraph(gallery(id));
}

Graph projective_split(int q) {
  if (q != 2 && q != 3 && q != 5) throw std::invalid_argument("projective_split supports q in {2, 3, 5}");
  // Normalized representatives of the 1-dimensional subspaces of GF(q)^3:
  // first nonzero coordinate equal to 1.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const std::array<int, 3> v{a, b, c};
        const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (lead != v.end() && *lead == 1) reps.push_back(v);
      }
    }
  }
  const int m = static_cast<int>(reps.size());
  Graph g(2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  }
  for (int p = 0; p < m; ++p) {
    for (int l = 0; l < m; ++l) {
      const auto& x = reps[static_cast<std::size_t>(p)];
      const auto& y = reps[static_cast<std::size_t>(l)];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) g.add_edge(p, m + l);
    }
  }
  return g;
}

namespace {

template <class G>
G build_random_split(int k, int l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  G g(k + l);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  for (int c = 0; c < k; ++c) {
    for (int s = k; s < k + l; ++s) {
      if (rng() & 1U) g.add_edge(c, s);
    }
  }
  return g;
}

}  // namespace

Graph random_split(int k, int l, std::uint64_t seed) {
  if (k < 1 || l < 1) throw std::invalid_argument("random_split needs k, l >= 1");
  if (k + l > kMaxVertices) throw CapacityError("random_split exceeds 64 vertices");
  return build_random_split<Graph>(k, l, seed);
}

BigGraph random_split_big(int k, int l, std::uint64_t seed) {
  if (k < 1 || l < 1) throw std::invalid_argument("random_split needs k, l >= 1");
  return build_random_split<BigGraph>(k, l, seed);
}

RandomSplitProperties random_split_properties(const BigGraph& g, int k) {
  const std::size_t n = g.order();
  const auto kk = static_cast<std::size_t>(k);
  BigGraph::Row clique = g.empty_row();
  for (std::size_t v = 0; v < kk; ++v) clique.set(v);
  const BigGraph::Row stable = ~clique;
  RandomSplitProperties p{true, true, true, true};
  for (std::size_t v = 0; v < n; ++v) {
    const BigGraph::Row& nv = g.neighbors(v);
    if (v < kk) {
      if ((nv & clique).count() != kk - 1) p.clique_maximal = false;
      // A clique vertex with no stable neighbor would extend the stable side.
      if (!nv.intersects(stable)) p.stable_maximal = false;
    } else {
      if (nv.intersects(stable)) p.stable_maximal = false;
      if (clique.is_subset_of(nv)) p.clique_maximal = false;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (b < kk) {
        if (!(g.neighbors(a) & g.neighbors(b)).intersects(stable)) p.clique_pairs_covered = false;
      } else if (a >= kk) {
        if ((clique - (g.neighbors(a) | g.neighbors(b))).none()) p.stable_pairs_separated = false;
      }
    }
  }
  return p;
}

RandomSplitProperties random_split_properties(const Graph& g, int k) {
  return random_split_properties(BigGraph(g), k);
}

}  // namespace cisgraphs

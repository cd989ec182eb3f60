#include "doctest.h"
#include "oracles.hpp"

#include "cisgraphs/classify.hpp"
#include "cisgraphs/gallery.hpp"
#include "cisgraphs/hasse.hpp"
#include "cisgraphs/linegraph.hpp"

using namespace cisgraphs;

namespace {

bool triangle_free(const Graph& h) {
  for (auto [u, v] : h.edges()) {
    if (h.neighbors(u).intersects(h.neighbors(v))) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("linegraph");

TEST_CASE("line graphs of small roots") {
  CHECK(line_graph(Graph::complete_bipartite(1, 3)) == Graph::complete(3));
  CHECK(line_graph(Graph::path(5)) == Graph::path(4));
  CHECK(is_isomorphic(line_graph(Graph::complete_bipartite(3, 3)), gallery(GalleryId::LK33)));
  CHECK_THROWS_AS(line_graph(Graph(3)), std::invalid_argument);
}

TEST_CASE("root reconstruction") {
  const RootResult p4 = root_graph(Graph::path(4));
  REQUIRE(p4.kind == RootKind::unique);
  CHECK(is_isomorphic(*p4.root, Graph::path(5)));

  const RootResult k3 = root_graph(Graph::complete(3));
  CHECK(k3.kind == RootKind::ambiguous);
  CHECK(k3.ambiguous_components == 1);
  CHECK(line_graph(*k3.root) == Graph::complete(3));

  CHECK(root_graph(Graph::complete_bipartite(1, 3)).kind == RootKind::not_line_graph);
  const RootResult lk33 = root_graph(gallery(GalleryId::LK33));
  REQUIRE(lk33.kind == RootKind::unique);
  CHECK(is_isomorphic(*lk33.root, Graph::complete_bipartite(3, 3)));
}

TEST_CASE("root maps re-check edge by edge") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& h : all_graphs(n)) {
      if (!is_connected(h) || h.edge_count() > 12) continue;
      const Graph g = line_graph(h);
      const RootResult r = root_graph(g);
      REQUIRE(r.is_line_graph());
      CHECK(is_isomorphic(line_graph(*r.root), g));
      REQUIRE(r.edge_of_vertex.size() == static_cast<std::size_t>(g.order()));
      for (int a = 0; a < g.order(); ++a) {
        for (int b = a + 1; b < g.order(); ++b) {
          const Edge ea = r.edge_of_vertex[static_cast<std::size_t>(a)];
          const Edge eb = r.edge_of_vertex[static_cast<std::size_t>(b)];
          const bool share = ea.first == eb.first || ea.first == eb.second || ea.second == eb.first ||
                             ea.second == eb.second;
          CHECK(share == g.adjacent(a, b));
        }
      }
      // Whitney: the root is unique up to isomorphism except for K3 / K_{1,3}.
      if (r.kind == RootKind::unique) CHECK(is_isomorphic(*r.root, h));
    }
  }
}

TEST_CASE("non-line graphs") {
  // Beineke's forbidden graphs include the claw and K5 minus an edge.
  Graph k5e = Graph::complete(5);
  Graph minus(5);
  for (auto [u, v] : k5e.edges()) {
    if (!(u == 0 && v == 1)) minus.add_edge(u, v);
  }
  CHECK_FALSE(root_graph(minus).is_line_graph());
  CHECK_FALSE(root_graph(Graph::complete_bipartite(1, 3)).is_line_graph());
}

TEST_CASE("tilde") {
  CHECK(tilde(Graph(1)) == Graph::complete(2));
  CHECK(is_isomorphic(tilde(Graph::complete(2)), Graph::path(4)));
}

TEST_CASE("root conditions on small examples") {
  const LineRootVerdict bull = is_cis_line_root(gallery(GalleryId::Bull));
  CHECK_FALSE(bull.holds);
  REQUIRE(bull.failure);
  CHECK(bull.failure->kind == LineRootFailure::Kind::bull);
  CHECK(find_bull_subgraph(gallery(GalleryId::Bull)).has_value());

  const LineRootVerdict p5 = is_cis_line_root(Graph::path(5));
  CHECK_FALSE(p5.holds);
  REQUIRE(p5.failure);
  CHECK(p5.failure->kind == LineRootFailure::Kind::matching);
  CHECK(p5.failure->x == 2);
  CHECK(p5.failure->matching == std::vector<Edge>{{0, 1}, {3, 4}});

  CHECK(is_cis_line_root(Graph::complete_bipartite(1, 3)).holds);
  CHECK(is_cis_line_root(Graph::complete_bipartite(3, 3)).holds);
  CHECK_FALSE(check_condition_vii(Graph::path(5)));
  CHECK(check_condition_vii(Graph::complete_bipartite(1, 3)));
  CHECK_FALSE(check_condition_vii(gallery(GalleryId::Bull)));
}

TEST_CASE("four characterizations agree on connected roots up to 6 vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& h : all_graphs(n)) {
      if (!is_connected(h)) continue;
      INFO(encode_graph6(h));
      const Graph g = line_graph(h);
      const bool cis = oracle::is_cis(g);
      CHECK(is_cis_line_root(h).holds == cis);
      CHECK(is_cis_line_root(h, MatchingBackend::exhaustive).holds == cis);
      CHECK(check_condition_vii(h) == cis);
      Classifier c(g);
      CHECK(c.holds(PropertyId{Base::triangle, Modifier::cap}) == cis);
    }
  }
}

TEST_CASE("line graphs of tilde roots are CIS") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& h : all_graphs(n)) {
      if (!triangle_free(h)) continue;
      INFO(encode_graph6(h));
      const Graph g = line_graph(tilde(h));
      if (g.order() > 16) continue;
      CHECK(oracle::is_cis(g));
      CHECK(is_cis_line_root(tilde(h)).holds);
    }
  }
}

TEST_SUITE_END();

#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cisgraphs/classify.hpp"
#include "cisgraphs/errors.hpp"
#include "cisgraphs/gallery.hpp"
#include "cisgraphs/hasse.hpp"
#include "cisgraphs/recognizers.hpp"

using namespace cisgraphs;

namespace {

bool oracle_edge_simplicial(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (int w = 0; w < g.order() && !found; ++w) {
      const VertexSet nw = g.closed_neighborhood(w);
      found = nw.contains(u) && nw.contains(v) && oracle::is_clique(g, nw);
    }
    if (!found) return false;
  }
  return true;
}

// Any clique (not only maximal) that meets every maximal stable set.
bool oracle_semi_weakly_cis(const Graph& g) {
  const auto stables = oracle::maximal_stables(g);
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (VertexSet c : oracle::all_subsets(g.order())) {
      if (!c.contains(u) || !c.contains(v) || !oracle::is_clique(g, c)) continue;
      if (std::all_of(stables.begin(), stables.end(), [&](VertexSet s) { return s.intersects(c); })) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool triangle_ok(const Graph& g, VertexSet s) {
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) || s.contains(v)) continue;
    if ((g.neighbors(u) & g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

bool oracle_triangle(const Graph& g) {
  const auto stables = oracle::maximal_stables(g);
  return std::all_of(stables.begin(), stables.end(), [&](VertexSet s) { return triangle_ok(g, s); });
}

// Some subfamily of maximal stable sets, each with the triangle property,
// covers every non-edge.
bool oracle_weakly_triangle(const Graph& g) {
  const auto stables = oracle::maximal_stables(g);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << stables.size()); ++m) {
    bool ok = true;
    std::vector<VertexSet> fam;
    for (std::size_t i = 0; i < stables.size() && ok; ++i) {
      if (!((m >> i) & 1U)) continue;
      ok = triangle_ok(g, stables[i]);
      fam.push_back(stables[i]);
    }
    if (ok && covers_nonedges(g, fam)) return true;
  }
  return false;
}

bool oracle_bad_p4(const Graph& g) {
  const auto stables = oracle::maximal_stables(g);
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (VertexSet{a, b, c, d}.size() != 4) continue;
          if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d)) continue;
          if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, d)) continue;
          for (VertexSet s : stables) {
            if (s.contains(a) && s.contains(d) && (g.neighbors(b) & g.neighbors(c) & s).empty()) return true;
          }
        }
      }
    }
  }
  return false;
}

std::size_t oracle_split_partitions(const Graph& g) {
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    const VertexSet c(m);
    if (oracle::is_clique(g, c) && oracle::is_stable(g, g.vertices() - c)) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("recognizers");

TEST_CASE("property names") {
  CHECK(PropertyId{Base::triangle, Modifier::co}.name() == "co-triangle");
  CHECK(PropertyId::parse("cap-es") == PropertyId{Base::edge_simplicial, Modifier::cap});
  CHECK(PropertyId::parse("cup-seq") == PropertyId{Base::strongly_equistable, Modifier::cup});
  for (Base b : kAllBases) {
    for (Modifier m : {Modifier::plain, Modifier::co, Modifier::cap, Modifier::cup}) {
      CHECK(PropertyId::parse(PropertyId{b, m}.name()) == PropertyId{b, m});
    }
  }
  CHECK_THROWS(PropertyId::parse("bogus"));
}

TEST_CASE("CIS") {
  CHECK(is_cis(gallery(GalleryId::Bull)).holds);
  CHECK_FALSE(is_cis(gallery(GalleryId::F)).holds);
  const Verdict p4 = is_cis(gallery(GalleryId::P4));
  REQUIRE_FALSE(p4.holds);
  const auto& pair = std::get<DisjointPair>(p4.certificate);
  CHECK(pair.clique == VertexSet{1, 2});
  CHECK(pair.stable == VertexSet{0, 3});
  CHECK(is_cis(Graph(1)).holds);
}

TEST_CASE("almost CIS and quasi CIS") {
  CHECK(is_almost_cis(gallery(GalleryId::P4)).holds);
  CHECK_FALSE(is_almost_cis(Graph(1)).holds);
  CHECK_FALSE(is_almost_cis(gallery(GalleryId::C4)).holds);
  CHECK_FALSE(is_quasi_cis(gallery(GalleryId::SK)).holds);
  CHECK_FALSE(is_quasi_cis(gallery(GalleryId::FK)).holds);
  CHECK(is_quasi_cis(gallery(GalleryId::F)).holds);
}

TEST_CASE("split") {
  const Verdict p4 = is_split(gallery(GalleryId::P4));
  REQUIRE(p4.holds);
  CHECK(std::get<SplitPartition>(p4.certificate).clique == VertexSet{1, 2});
  CHECK_FALSE(is_split(gallery(GalleryId::C4)).holds);
  CHECK(is_split(gallery(GalleryId::F)).holds);
}

TEST_CASE("threshold and cograph") {
  CHECK_FALSE(is_threshold(gallery(GalleryId::Bull)).holds);
  CHECK(is_threshold(Graph(1)).holds);
  CHECK(is_threshold(Graph::complete_bipartite(1, 3)).holds);
  CHECK(is_cograph(gallery(GalleryId::C4)).holds);
  CHECK_FALSE(is_cograph(gallery(GalleryId::P4)).holds);
  CHECK(is_cograph(gallery(GalleryId::CK)).holds);
}

TEST_CASE("edge simplicial and semi-weakly CIS") {
  CHECK(is_edge_simplicial(gallery(GalleryId::S3)).holds);
  CHECK_FALSE(is_edge_simplicial(gallery(GalleryId::C4)).holds);
  CHECK(is_edge_simplicial(gallery(GalleryId::C5Star)).holds);
  CHECK(is_semi_weakly_cis(gallery(GalleryId::S3)).holds);
  CHECK_FALSE(is_semi_weakly_cis(gallery(GalleryId::Net)).holds);
  const Verdict g12 = is_semi_weakly_cis(gallery(GalleryId::G12));
  CHECK_FALSE(g12.holds);
}

TEST_CASE("G12 has no strong clique through edge 10-11") {
  const Structure s(gallery(GalleryId::G12));
  for (VertexSet c : s.cliques) {
    if (VertexSet{9, 10}.subset_of(c)) CHECK_FALSE(is_strong_clique(s, c));
  }
}

TEST_CASE("triangle") {
  CHECK_FALSE(is_triangle(gallery(GalleryId::Net)).holds);
  CHECK(is_triangle(gallery(GalleryId::Cir9)).holds);
  for (int n = 1; n <= 6; ++n) CHECK(is_triangle(Graph::complete(n)).holds);
}

TEST_CASE("G12 triangle failures") {
  const Graph g = gallery(GalleryId::G12);
  // S = {5,7,9} and edge {10,11} in 1-based labels.
  const VertexSet s{4, 6, 8};
  CHECK(g.is_maximal_stable(s));
  CHECK(g.adjacent(9, 10));
  CHECK((g.neighbors(9) & g.neighbors(10) & s).empty());
  CHECK_FALSE(has_triangle_property(g, s));
  // C = {4,10,12} and non-edge {5,9}.
  const Graph co = complement(g);
  const VertexSet c{3, 9, 11};
  CHECK(g.is_maximal_clique(c));
  CHECK_FALSE(g.adjacent(4, 8));
  CHECK((co.neighbors(4) & co.neighbors(8) & c).empty());
  CHECK_FALSE(has_triangle_property(co, c));
  CHECK_FALSE(is_triangle(g).holds);
  CHECK_FALSE(is_triangle(co).holds);
}

TEST_CASE("weakly triangle") {
  CHECK_FALSE(is_weakly_triangle(gallery(GalleryId::P4)).holds);
  CHECK(is_weakly_triangle(gallery(GalleryId::G12)).holds);
  CHECK(is_weakly_triangle(gallery(GalleryId::Cir9)).holds);
  CHECK_FALSE(is_weakly_triangle(complement(gallery(GalleryId::Cir9))).holds);
}

TEST_CASE("bad P4") {
  CHECK(has_bad_p4(gallery(GalleryId::P4)).holds);
  CHECK_FALSE(has_bad_p4(gallery(GalleryId::C4)).holds);
  CHECK_FALSE(has_bad_p4(gallery(GalleryId::Cir9)).holds);
}

TEST_CASE("perfect") {
  CHECK_FALSE(is_perfect(gallery(GalleryId::C5Star)).holds);
  CHECK_FALSE(is_perfect(gallery(GalleryId::C9)).holds);
  CHECK(is_perfect(gallery(GalleryId::F)).holds);
  CHECK(is_perfect(gallery(GalleryId::P4)).holds);
  CHECK_THROWS_AS(is_perfect(Graph::cycle(17)), UnsupportedSize);
}

TEST_CASE("modifiers") {
  CHECK(apply_modifier(PropertyId{Base::edge_simplicial, Modifier::cap}, gallery(GalleryId::F)));
  CHECK_FALSE(apply_modifier(PropertyId{Base::triangle, Modifier::cup}, gallery(GalleryId::G12)));
  CHECK_FALSE(apply_modifier(PropertyId{Base::weakly_triangle, Modifier::co}, gallery(GalleryId::Cir9)));
  // co applied twice is plain.
  for (const Graph& g : all_graphs(5)) {
    for (Base b : kAllBases) {
      if (needs_lp(b)) continue;
      Classifier c(g);
      Classifier cc(complement(g));
      CHECK(c.holds(PropertyId{b, Modifier::plain}) == cc.holds(PropertyId{b, Modifier::co}));
    }
  }
}

TEST_CASE("oracle agreement on every graph up to 6 vertices") {
  const Graph p4 = Graph::path(4);
  const Graph c4 = Graph::cycle(4);
  const Graph two_k2 = complement(c4);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const Structure s(g);
      CAPTURE(encode_graph6(g));
      CHECK(is_cis(s).holds == oracle::is_cis(g));
      CHECK(disjoint_pair_count(s) == oracle::disjoint_pairs(g));
      CHECK(is_almost_cis(s).holds == (oracle::disjoint_pairs(g) == 1));
      CHECK(is_almost_cis(s).holds == (oracle::is_split(g) && oracle_split_partitions(g) == 1));
      CHECK(split_partition_count(s) == oracle_split_partitions(g));
      CHECK(is_quasi_cis(s).holds == (oracle::disjoint_pairs(g) <= 1));
      CHECK(is_split(s).holds == oracle::is_split(g));
      CHECK(is_perfect(g).holds == oracle::is_perfect(g));
      const int p4s = oracle::count_induced(g, p4);
      CHECK(is_cograph(g).holds == (p4s == 0));
      CHECK(is_threshold(g).holds ==
            (p4s == 0 && oracle::count_induced(g, c4) == 0 && oracle::count_induced(g, two_k2) == 0));
      CHECK(is_edge_simplicial(g).holds == oracle_edge_simplicial(g));
      CHECK(is_semi_weakly_cis(s).holds == oracle_semi_weakly_cis(g));
      CHECK(is_triangle(s).holds == oracle_triangle(g));
      CHECK(is_weakly_triangle(s).holds == oracle_weakly_triangle(g));
      CHECK(has_bad_p4(s).holds == oracle_bad_p4(g));
    }
  }
}

TEST_CASE("certificates re-verify for every graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const ClassReport r = classify(g, encode_graph6(g), ClassifierOptions{n <= 5});
      CHECK(verify_report(r));
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  const Graph p4 = gallery(GalleryId::P4);
  CHECK(verify_certificate(p4, Base::cis, Verdict{false, DisjointPair{VertexSet{1, 2}, VertexSet{0, 3}}}));
  CHECK_FALSE(verify_certificate(p4, Base::cis, Verdict{false, DisjointPair{VertexSet{0, 1}, VertexSet{0, 3}}}));
  CHECK_FALSE(verify_certificate(p4, Base::split, Verdict{true, SplitPartition{VertexSet{0, 1}, VertexSet{2, 3}}}));
  CHECK_FALSE(verify_certificate(p4, Base::cograph, Verdict{false, InducedPattern{"P4", {0, 2, 1, 3}}}));
  CHECK_FALSE(verify_certificate(p4, Base::triangle, Verdict{false, TriangleViolation{VertexSet{0, 2}, 1, 2}}));
}

TEST_CASE("triangle and semi-weakly CIS are closed under union and join") {
  std::mt19937_64 rng(21);
  int triangle_pairs = 0;
  int swcis_pairs = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph a = oracle::random_graph(1 + static_cast<int>(rng() % 6), 0.6, rng);
    const Graph b = oracle::random_graph(1 + static_cast<int>(rng() % 6), 0.6, rng);
    if (is_triangle(a).holds && is_triangle(b).holds) {
      ++triangle_pairs;
      CHECK(is_triangle(disjoint_union(a, b)).holds);
      CHECK(is_triangle(join(a, b)).holds);
    }
    if (is_semi_weakly_cis(a).holds && is_semi_weakly_cis(b).holds) {
      ++swcis_pairs;
      CHECK(is_semi_weakly_cis(disjoint_union(a, b)).holds);
      CHECK(is_semi_weakly_cis(join(a, b)).holds);
    }
  }
  CHECK(triangle_pairs > 20);
  CHECK(swcis_pairs > 20);
}

TEST_CASE("big-graph predicates agree with the small ones") {
  for (const Graph& g : all_graphs(6)) {
    const BigGraph big(g);
    CHECK(is_edge_simplicial(big) == is_edge_simplicial(g).holds);
    CHECK(is_co_triangle(big) == is_triangle(complement(g)).holds);
  }
}

TEST_SUITE_END();

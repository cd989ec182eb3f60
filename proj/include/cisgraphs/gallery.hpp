#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cisgraphs/graph.hpp"

namespace cisgraphs {

/// Named graphs. Vertex numbering (0-based):
///  - P4: path 0-1-2-3; C4, C9: cycles in index order; 2K2: edges 01, 23.
///  - bull: a..e = 0..4, edges ab, bc, cd, be, ce.
///  - net: clique x1..x3 = 0..2, pendant y_i = 3..5 on x_i.
///  - S3: clique v1, v2, v3 = 0..2, then v12, v13, v23 = 3..5.
///  - SK = S3 + K2 (6, 7); CK = C4 + K2 (4, 5); FK = F + K2 (14, 15).
///  - C5star: cycle 0..4, one apex per cycle edge from 5 on, in
///    Graph::edges() order.
///  - Cir9, G12: labels 1..9 / 1..12 shifted down by one.
///  - F: Fano points 0..6, lines 7..13, line j = {j, j+1, j+3} mod 7.
///  - LK33: line graph of K_{3,3} (edge order of Graph::edges()).
///  - L: line graph of K_{5,6} (30 vertices) with a triangle apex glued on
///    every edge; LLbar = L + complement(L). Both exceed 64 vertices and
///    are only available through gallery_big.
enum class GalleryId { K1, P4, C4, TwoK2, Bull, Net, S3, SK, CK, C5Star, C9, Cir9, F, FK, G12, LK33, L, LLbar };

inline constexpr std::array<GalleryId, 18> kGalleryIds = {
    GalleryId::K1,  GalleryId::P4,     GalleryId::C4, GalleryId::TwoK2, GalleryId::Bull, GalleryId::Net,
    GalleryId::S3,  GalleryId::SK,     GalleryId::CK, GalleryId::C5Star, GalleryId::C9,  GalleryId::Cir9,
    GalleryId::F,   GalleryId::FK,     GalleryId::G12, GalleryId::LK33, GalleryId::L,    GalleryId::LLbar,
};

/// Stable ids: "K1", "P4", "C4", "2K2", "bull", "net", "S3", "SK", "CK",
/// "C5star", "C9", "Cir9", "F", "FK", "G12", "LK33", "L", "LLbar".
std::string_view gallery_name(GalleryId id);
/// Case-insensitive.
std::optional<GalleryId> parse_gallery_id(std::string_view name);
bool is_big(GalleryId id);

/// Throws CapacityError for L and LLbar.
Graph gallery(GalleryId id);
BigGraph gallery_big(GalleryId id);

/// L(K_{5,6}) with glued triangles, as a BigGraph; vertices 0..29 are the
/// line-graph vertices.
BigGraph graph_l();

/// Reference families for G12 and Cir9 (0-based), and the weakly-CIS
/// certificate families of G12.
std::vector<VertexSet> g12_cliques();
std::vector<VertexSet> g12_stables();
std::vector<VertexSet> g12_certificate_cliques();
std::vector<VertexSet> g12_certificate_stables();
std::vector<VertexSet> cir9_stables();

/// Split incidence graph of the projective plane over GF(q), q ∈ {2, 3, 5}:
/// points 0..q²+q, then lines. Throws std::invalid_argument otherwise.
Graph projective_split(int q);

/// Clique 0..k-1, stable set k..k+l-1; cross pairs drawn in the order
/// (c, s) for c ascending then s ascending, one std::mt19937_64 draw each
/// (edge iff the low bit is set).
Graph random_split(int k, int l, std::uint64_t seed);
/// Same draws as random_split, without the 64-vertex limit.
BigGraph random_split_big(int k, int l, std::uint64_t seed);

/// Properties (1)-(4) for a graph with clique side 0..k-1 and stable side
/// the rest: the stable side is a maximal stable set, the clique side a
/// maximal clique, every two clique vertices have a common neighbor in the
/// stable side, every two stable vertices have a common non-neighbor in
/// the clique side.
struct RandomSplitProperties {
  bool stable_maximal = false;
  bool clique_maximal = false;
  bool clique_pairs_covered = false;
  bool stable_pairs_separated = false;

  bool all() const { return stable_maximal && clique_maximal && clique_pairs_covered && stable_pairs_separated; }
};

RandomSplitProperties random_split_properties(const BigGraph& g, int k);
RandomSplitProperties random_split_properties(const Graph& g, int k);

}  // namespace cisgraphs

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cisgraphs/certificate.hpp"
#include "cisgraphs/enumerate.hpp"

namespace cisgraphs {

enum class CoverTarget { edges, nonedges, vertices };

/// Candidate maximal cliques and stable sets of one graph with the coverage
/// each chosen subfamily must achieve.
struct CrossIntersectingInstance {
  Graph graph;
  SetFamily cliques;
  SetFamily stables;
  CoverTarget clique_target = CoverTarget::edges;
  CoverTarget stable_target = CoverTarget::nonedges;

  CrossIntersectingInstance(const Structure& s, CoverTarget clique_target, CoverTarget stable_target);
};

inline constexpr std::size_t kDefaultBacktrackCap = 2'000'000;

/// Subfamilies 𝒞′ ⊆ cliques, 𝒮′ ⊆ stables, every member of 𝒞′ meeting every
/// member of 𝒮′, with the requested coverage. nullopt means no such pair
/// exists; SearchUndecided is thrown once `backtrack_cap` is exceeded.
///
/// Restricting to maximal members loses nothing: enlarging a clique or a
/// stable set keeps every intersection and every covered pair.
std::optional<CrossFamilies> exists_cross_intersecting(const CrossIntersectingInstance& instance,
                                                       std::size_t backtrack_cap = kDefaultBacktrackCap);

/// Independent check: members are maximal cliques / maximal stable sets,
/// pairwise cross-intersecting, and cover the targets.
bool verify_cross_families(const Graph& g, const CrossFamilies& families, CoverTarget clique_target,
                           CoverTarget stable_target);

/// Edge-covering maximal cliques and non-edge-covering maximal stable sets.
Verdict is_weakly_cis(const Structure& s);
Verdict is_weakly_cis(const Graph& g);
/// Vertex-covering cliques and vertex-covering stable sets.
Verdict is_normal(const Structure& s);
Verdict is_normal(const Graph& g);

}  // namespace cisgraphs

#include "cisgraphs/search.hpp"

#include <algorithm>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

namespace {

std::vector<VertexSet> targets(const Graph& g, CoverTarget t) {
  std::vector<VertexSet> out;
  const int n = g.order();
  switch (t) {
    case CoverTarget::vertices:
      for (int v = 0; v < n; ++v) out.push_back(VertexSet::singleton(v));
      break;
    case CoverTarget::edges:
    case CoverTarget::nonedges:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v) == (t == CoverTarget::edges)) out.push_back(VertexSet{u, v});
        }
      }
      break;
  }
  return out;
}

bool covers(const std::vector<VertexSet>& family, const std::vector<VertexSet>& required) {
  return std::all_of(required.begin(), required.end(), [&](VertexSet r) {
    return std::any_of(family.begin(), family.end(), [&](VertexSet m) { return r.subset_of(m); });
  });
}

// Variables 0..a-1 are the candidate cliques, a..a+b-1 the candidate
// stable sets. Coverage clauses are positive disjunctions; exclusions are
// binary "not both" constraints applied eagerly on assignment.
class CoverSearch {
 public:
  CoverSearch(const CrossIntersectingInstance& inst, std::size_t cap) : cap_(cap) {
    for (const auto& c : inst.cliques) sets_.push_back(c);
    for (const auto& s : inst.stables) sets_.push_back(s);
    const std::size_t a = inst.cliques.size();
    conflicts_.resize(sets_.size());
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = a; j < sets_.size(); ++j) {
        if (!sets_[i].intersects(sets_[j])) {
          conflicts_[i].push_back(j);
          conflicts_[j].push_back(i);
        }
      }
    }
    auto add_clauses = [&](const std::vector<VertexSet>& required, std::size_t lo, std::size_t hi) {
      for (VertexSet r : required) {
        std::vector<std::size_t> clause;
        for (std::size_t i = lo; i < hi; ++i) {
          if (r.subset_of(sets_[i])) clause.push_back(i);
        }
        clauses_.push_back(std::move(clause));
      }
    };
    add_clauses(targets(inst.graph, inst.clique_target), 0, a);
    add_clauses(targets(inst.graph, inst.stable_target), a, sets_.size());
    cliques_ = a;
  }

  std::optional<CrossFamilies> run() {
    std::vector<signed char> value(sets_.size(), -1);
    if (!solve(value)) return std::nullopt;
    CrossFamilies out;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (value[i] != 1) continue;
      (i < cliques_ ? out.cliques : out.stables).push_back(sets_[i]);
    }
    return out;
  }

 private:
  bool assign_true(std::vector<signed char>& value, std::size_t var) const {
    if (value[var] == 0) return false;
    value[var] = 1;
    for (std::size_t other : conflicts_[var]) {
      if (value[other] == 1) return false;
      value[other] = 0;
    }
    return true;
  }

  // Unit propagation to a fixpoint; false on conflict.
  bool propagate(std::vector<signed char>& value) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        std::size_t open = 0;
        std::size_t last = 0;
        bool satisfied = false;
        for (std::size_t var : clause) {
          if (value[var] == 1) {
            satisfied = true;
            break;
          }
          if (value[var] == -1) {
            ++open;
            last = var;
          }
        }
        if (satisfied) continue;
        if (open == 0) return false;
        if (open == 1) {
          if (!assign_true(value, last)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool solve(std::vector<signed char>& value) {
    if (!propagate(value)) return false;
    const std::vector<std::size_t>* branch = nullptr;
    std::size_t fewest = 0;
    for (const auto& clause : clauses_) {
      std::size_t open = 0;
      bool satisfied = false;
      for (std::size_t var : clause) {
        if (value[var] == 1) {
          satisfied = true;
          break;
        }
        if (value[var] == -1) ++open;
      }
      if (satisfied) continue;
      if (branch == nullptr || open < fewest) {
        branch = &clause;
        fewest = open;
      }
    }
    if (branch == nullptr) return true;
    const auto var = *std::find_if(branch->begin(), branch->end(), [&](std::size_t v) { return value[v] == -1; });
    std::vector<signed char> trial = value;
    if (assign_true(trial, var) && solve(trial)) {
      value = std::move(trial);
      return true;
    }
    if (++backtracks_ > cap_) throw SearchUndecided("backtrack cap exceeded");
    value[var] = 0;
    return solve(value);
  }

  std::size_t cap_;
  std::size_t backtracks_ = 0;
  std::size_t cliques_ = 0;
  std::vector<VertexSet> sets_;
  std::vector<std::vector<std::size_t>> conflicts_;
  std::vector<std::vector<std::size_t>> clauses_;
};

}  // namespace

CrossIntersectingInstance::CrossIntersectingInstance(const Structure& s, CoverTarget ct, CoverTarget st)
    : graph(s.graph), cliques(s.cliques), stables(s.stables), clique_target(ct), stable_target(st) {}

std::optional<CrossFamilies> exists_cross_intersecting(const CrossIntersectingInstance& instance,
                                                       std::size_t backtrack_cap) {
  return CoverSearch(instance, backtrack_cap).run();
}

bool verify_cross_families(const Graph& g, const CrossFamilies& f, CoverTarget clique_target,
                           CoverTarget stable_target) {
  for (VertexSet c : f.cliques) {
    if (!c.subset_of(g.vertices()) || !g.is_maximal_clique(c)) return false;
  }
  for (VertexSet s : f.stables) {
    if (!s.subset_of(g.vertices()) || !g.is_maximal_stable(s)) return false;
  }
  for (VertexSet c : f.cliques) {
    for (VertexSet s : f.stables) {
      if (!c.intersects(s)) return false;
    }
  }
  return covers(f.cliques, targets(g, clique_target)) && covers(f.stables, targets(g, stable_target));
}

Verdict is_weakly_cis(const Structure& s) {
  auto found = exists_cross_intersecting(CrossIntersectingInstance(s, CoverTarget::edges, CoverTarget::nonedges));
  if (!found) return Verdict{false, {}};
  return Verdict{true, std::move(*found)};
}

Verdict is_weakly_cis(const Graph& g) { return is_weakly_cis(Structure(g)); }

Verdict is_normal(const Structure& s) {
  auto found =
      exists_cross_intersecting(CrossIntersectingInstance(s, CoverTarget::vertices, CoverTarget::vertices));
  if (!found) return Verdict{false, {}};
  return Verdict{true, std::move(*found)};
}

Verdict is_normal(const Graph& g) { return is_normal(Structure(g)); }

}  // namespace cisgraphs

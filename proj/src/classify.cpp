#include "cisgraphs/classify.hpp"

#include <algorithm>

#include "cisgraphs/equistable.hpp"
#include "cisgraphs/errors.hpp"
#include "cisgraphs/search.hpp"

namespace cisgraphs {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::unsupported:
      return "unsupported";
    case Status::undecided:
      return "undecided";
  }
  return "unknown";
}

Classifier::Classifier(Graph g, ClassifierOptions options)
    : options_(options), structure_(std::move(g), options.family_cap), co_structure_(structure_.complement()) {}

const Verdict& Classifier::base(Base b, bool complemented) {
  const auto key = std::make_pair(b, complemented);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, compute(b, complemented)).first;
  return it->second;
}

Verdict Classifier::compute(Base b, bool complemented) {
  const Structure& s = complemented ? co_structure_ : structure_;
  switch (b) {
    case Base::threshold:
      return is_threshold(s.graph);
    case Base::cograph:
      return is_cograph(s.graph);
    case Base::split:
      return is_split(s);
    case Base::edge_simplicial:
      return is_edge_simplicial(s.graph);
    case Base::cis:
      return is_cis(s);
    case Base::almost_cis:
      return is_almost_cis(s);
    case Base::quasi_cis:
      return is_quasi_cis(s);
    case Base::semi_weakly_cis:
      return is_semi_weakly_cis(s);
    case Base::weakly_cis:
      return is_weakly_cis(s);
    case Base::triangle:
      return is_triangle(s);
    case Base::weakly_triangle:
      return is_weakly_triangle(s);
    case Base::normal:
      return is_normal(s);
    case Base::perfect:
      return is_perfect(s.graph);
    case Base::equistable:
      return is_equistable(s).to_verdict();
    case Base::strongly_equistable:
      return is_strongly_equistable(s).to_verdict();
  }
  throw std::invalid_argument("unknown base property");
}

PropertyResult Classifier::evaluate(PropertyId id) {
  PropertyResult r;
  r.id = id;
  auto take = [&](const Verdict& v, bool on_complement) {
    r.status = v.holds ? Status::holds : Status::fails;
    r.certificate = v.certificate;
    r.on_complement = on_complement;
  };
  switch (id.modifier) {
    case Modifier::plain:
      take(base(id.base, false), false);
      break;
    case Modifier::co:
      take(base(id.base, true), true);
      break;
    case Modifier::cap: {
      const Verdict& a = base(id.base, false);
      if (!a.holds) {
        take(a, false);
        break;
      }
      const Verdict& c = base(id.base, true);
      if (c.holds) {
        take(a, false);
      } else {
        take(c, true);
      }
      break;
    }
    case Modifier::cup: {
      const Verdict& a = base(id.base, false);
      if (a.holds) {
        take(a, false);
        break;
      }
      const Verdict& c = base(id.base, true);
      if (c.holds) {
        take(c, true);
      } else {
        take(a, false);
      }
      break;
    }
  }
  return r;
}

bool apply_modifier(PropertyId id, const Graph& g) { return Classifier(g).holds(id); }

const PropertyResult* ClassReport::find(PropertyId id) const {
  const auto it = std::find_if(results.begin(), results.end(), [&](const PropertyResult& r) { return r.id == id; });
  return it == results.end() ? nullptr : &*it;
}

ClassReport classify(const Graph& g, std::string graph_id, ClassifierOptions options) {
  ClassReport report{std::move(graph_id), g, {}};
  Classifier c(g, options);
  for (Base b : kAllBases) {
    if (needs_lp(b) && !options.include_lp) continue;
    for (Modifier m : {Modifier::plain, Modifier::co, Modifier::cap, Modifier::cup}) {
      const PropertyId id{b, m};
      try {
        report.results.push_back(c.evaluate(id));
      } catch (const UnsupportedSize& e) {
        report.results.push_back(PropertyResult{id, Status::unsupported, {}, false, e.what()});
      } catch (const SearchUndecided& e) {
        report.results.push_back(PropertyResult{id, Status::undecided, {}, false, e.what()});
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ verification

namespace {

bool is_induced_path(const Graph& g, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j] || g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (c[i] == c[j] || g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  }
  return true;
}

bool in_range(const Graph& g, const std::vector<int>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](int v) { return v >= 0 && v < g.order(); });
}

bool verify_pattern(const Graph& g, const InducedPattern& p) {
  if (!in_range(g, p.vertices)) return false;
  const auto& v = p.vertices;
  if (p.pattern == "P4") return v.size() == 4 && is_induced_path(g, v);
  if (p.pattern == "C4") return v.size() == 4 && is_induced_cycle(g, v);
  if (p.pattern == "2K2") {
    return v.size() == 4 && is_induced_path(g, {v[0], v[1]}) && is_induced_path(g, {v[2], v[3]}) &&
           !g.adjacent(v[0], v[2]) && !g.adjacent(v[0], v[3]) && !g.adjacent(v[1], v[2]) &&
           !g.adjacent(v[1], v[3]) && v[0] != v[2] && v[0] != v[3] && v[1] != v[2] && v[1] != v[3];
  }
  if (p.pattern == "odd-hole") return v.size() >= 5 && v.size() % 2 == 1 && is_induced_cycle(g, v);
  if (p.pattern == "odd-antihole") {
    return v.size() >= 5 && v.size() % 2 == 1 && is_induced_cycle(complement(g), v);
  }
  return false;
}

bool covers_pairs(const std::vector<VertexSet>& family, VertexSet pair) {
  return std::any_of(family.begin(), family.end(), [&](VertexSet s) { return pair.subset_of(s); });
}

bool is_simplicial_clique(const Graph& g, VertexSet c) {
  if (!c.subset_of(g.vertices()) || !g.is_clique(c)) return false;
  for (int v : c) {
    if (g.closed_neighborhood(v) == c) return true;
  }
  return false;
}

template <typename T>
const T* get(const Verdict& v) {
  return std::get_if<T>(&v.certificate);
}

bool verify_equistable(const Graph& g, bool strong, const Verdict& v) {
  if (g.order() > kEquistableMaxOrder) return false;
  const Structure s(g);
  EquistableCertificate cert;
  cert.verdict = v.holds;
  if (const auto* w = get<WeightWitness>(v)) {
    cert.kind = EquistableOutcome::witness;
    cert.weights = w->weights;
  } else if (const auto* f = get<ForcedSubset>(v)) {
    cert.kind = EquistableOutcome::forced_subset;
    cert.forced = *f;
  } else if (const auto* i = get<InfeasibleSystem>(v)) {
    cert.kind = EquistableOutcome::infeasible;
    cert.stables = i->stables;
    cert.farkas = i->multipliers;
  } else {
    return false;
  }
  return verify_equistable_certificate(s, cert, strong);
}

}  // namespace

bool verify_certificate(const Graph& g, Base b, const Verdict& v) {
  if (std::holds_alternative<std::monostate>(v.certificate)) return true;
  const VertexSet all = g.vertices();

  if (const auto* p = get<DisjointPair>(v)) {
    const bool pair_ok = p->clique.subset_of(all) && p->stable.subset_of(all) && g.is_maximal_clique(p->clique) &&
                         g.is_maximal_stable(p->stable) && !p->clique.intersects(p->stable);
    if (!pair_ok) return false;
    if (b == Base::cis) return !v.holds;
    if (b == Base::almost_cis) return v.holds && disjoint_pair_count(Structure(g)) == 1;
    return false;
  }
  if (const auto* p = get<PairCount>(v)) {
    if (disjoint_pair_count(Structure(g)) != p->count) return false;
    if (b == Base::almost_cis) return !v.holds && p->count != 1;
    if (b == Base::quasi_cis) return v.holds == (p->count <= 1);
    return false;
  }
  if (const auto* p = get<SplitPartition>(v)) {
    return b == Base::split && v.holds && g.is_clique(p->clique) && g.is_stable(p->stable) &&
           (p->clique | p->stable) == all && !p->clique.intersects(p->stable);
  }
  if (const auto* p = get<InducedPattern>(v)) {
    if (v.holds || !verify_pattern(g, *p)) return false;
    switch (b) {
      case Base::threshold:
        return p->pattern == "P4" || p->pattern == "C4" || p->pattern == "2K2";
      case Base::cograph:
        return p->pattern == "P4";
      case Base::split:
        return p->pattern == "C4" || p->pattern == "2K2" || (p->pattern == "odd-hole" && p->vertices.size() == 5);
      case Base::perfect:
        return p->pattern == "odd-hole" || p->pattern == "odd-antihole";
      default:
        return false;
    }
  }
  if (const auto* p = get<UncoveredPair>(v)) {
    if (v.holds || p->u == p->v || !in_range(g, {p->u, p->v})) return false;
    const VertexSet pair{p->u, p->v};
    if (b == Base::edge_simplicial) {
      if (!g.adjacent(p->u, p->v)) return false;
      return !covers_pairs(simplicial_cliques(g).sets, pair);
    }
    if (b == Base::semi_weakly_cis) {
      if (!g.adjacent(p->u, p->v)) return false;
      const Structure s(g);
      return std::none_of(s.cliques.begin(), s.cliques.end(),
                          [&](VertexSet c) { return pair.subset_of(c) && is_strong_clique(s, c); });
    }
    if (b == Base::weakly_triangle) {
      if (g.adjacent(p->u, p->v)) return false;
      const Structure s(g);
      return std::none_of(s.stables.begin(), s.stables.end(),
                          [&](VertexSet st) { return pair.subset_of(st) && has_triangle_property(g, st); });
    }
    return false;
  }
  if (const auto* p = get<CoveringFamily>(v)) {
    if (!v.holds) return false;
    for (VertexSet m : p->sets) {
      if (!m.subset_of(all)) return false;
    }
    if (b == Base::edge_simplicial) {
      return std::all_of(p->sets.begin(), p->sets.end(), [&](VertexSet c) { return is_simplicial_clique(g, c); }) &&
             covers_edges(g, p->sets);
    }
    if (b == Base::semi_weakly_cis) {
      return std::all_of(p->sets.begin(), p->sets.end(),
                         [&](VertexSet c) { return g.is_clique(c) && is_strong_clique(g, c); }) &&
             covers_edges(g, p->sets);
    }
    if (b == Base::weakly_triangle) {
      return std::all_of(p->sets.begin(), p->sets.end(),
                         [&](VertexSet s) { return g.is_maximal_stable(s) && has_triangle_property(g, s); }) &&
             covers_nonedges(g, p->sets);
    }
    return false;
  }
  if (const auto* p = get<TriangleViolation>(v)) {
    if (b != Base::triangle || v.holds || !in_range(g, {p->u, p->v}) || !p->stable.subset_of(all)) return false;
    return g.is_maximal_stable(p->stable) && g.adjacent(p->u, p->v) && !p->stable.contains(p->u) &&
           !p->stable.contains(p->v) && !(g.neighbors(p->u) & g.neighbors(p->v)).intersects(p->stable);
  }
  if (const auto* p = get<CrossFamilies>(v)) {
    if (!v.holds) return false;
    if (b == Base::weakly_cis) return verify_cross_families(g, *p, CoverTarget::edges, CoverTarget::nonedges);
    if (b == Base::normal) return verify_cross_families(g, *p, CoverTarget::vertices, CoverTarget::vertices);
    return false;
  }
  if (b == Base::equistable || b == Base::strongly_equistable) {
    return verify_equistable(g, b == Base::strongly_equistable, v);
  }
  return false;
}

bool verify_report(const ClassReport& report) {
  const Graph co = complement(report.graph);
  for (const auto& r : report.results) {
    if (r.status != Status::holds && r.status != Status::fails) continue;
    // In every cap/cup case the deciding side's verdict equals the combined
    // status, so the certificate is checked against that side alone.
    const Verdict side{r.status == Status::holds, r.certificate};
    if (!verify_certificate(r.on_complement ? co : report.graph, r.id.base, side)) return false;
  }
  return true;
}

}  // namespace cisgraphs

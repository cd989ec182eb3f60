#include "cisgraphs/enumerate.hpp"

#include <algorithm>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

bool SetFamily::contains(VertexSet s) const {
  return std::binary_search(sets.begin(), sets.end(), s);
}

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<VertexSet> run() {
    expand(VertexSet{}, g_.vertices(), VertexSet{});
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) {
        if (out_.size() >= cap_) {
          throw FamilyCapExceeded("more than " + std::to_string(cap_) + " maximal sets");
        }
        out_.push_back(r);
      }
      return;
    }
    int pivot = -1;
    int best = -1;
    for (int u : p | x) {
      const int score = (p & g_.neighbors(u)).size();
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (int v : p - g_.neighbors(pivot)) {
      expand(r.with(v), p & g_.neighbors(v), x & g_.neighbors(v));
      p.erase(v);
      x.insert(v);
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<VertexSet> out_;
};

}  // namespace

SetFamily maximal_cliques(const Graph& g, std::size_t cap) {
  return SetFamily{FamilyKind::cliques, BronKerbosch(g, cap).run()};
}

SetFamily maximal_stable_sets(const Graph& g, std::size_t cap) {
  const Graph h = complement(g);
  return SetFamily{FamilyKind::stable_sets, BronKerbosch(h, cap).run()};
}

Structure::Structure(Graph g, std::size_t cap)
    : graph(std::move(g)), cliques(maximal_cliques(graph, cap)), stables(maximal_stable_sets(graph, cap)) {}

Structure::Structure(Graph g, SetFamily c, SetFamily s)
    : graph(std::move(g)), cliques(std::move(c)), stables(std::move(s)) {}

Structure Structure::complement() const {
  SetFamily c{FamilyKind::cliques, stables.sets};
  SetFamily s{FamilyKind::stable_sets, cliques.sets};
  return Structure(cisgraphs::complement(graph), std::move(c), std::move(s));
}

bool is_strong_clique(const Structure& s, VertexSet c) {
  if (!s.graph.is_clique(c)) throw std::invalid_argument("is_strong_clique: not a clique");
  return std::all_of(s.stables.begin(), s.stables.end(),
                     [c](VertexSet st) { return st.intersects(c); });
}

bool is_strong_clique(const Graph& g, VertexSet c) {
  if (!g.is_clique(c)) throw std::invalid_argument("is_strong_clique: not a clique");
  const SetFamily stables = maximal_stable_sets(g);
  return std::all_of(stables.begin(), stables.end(), [c](VertexSet st) { return st.intersects(c); });
}

SetFamily simplicial_cliques(const Graph& g) {
  SetFamily out{FamilyKind::cliques, {}};
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nv = g.closed_neighborhood(v);
    if (g.is_clique(nv)) out.sets.push_back(nv);
  }
  std::sort(out.sets.begin(), out.sets.end());
  out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());
  return out;
}

namespace {

// Union, over family members containing u, of the member; used to test
// pair coverage in one pass per vertex.
VertexSet reach(int u, const std::vector<VertexSet>& family) {
  VertexSet r;
  for (VertexSet s : family) {
    if (s.contains(u)) r |= s;
  }
  return r;
}

}  // namespace

bool covers_edges(const Graph& g, const std::vector<VertexSet>& family) {
  for (int u = 0; u < g.order(); ++u) {
    if (!g.neighbors(u).subset_of(reach(u, family))) return false;
  }
  return true;
}

bool covers_nonedges(const Graph& g, const std::vector<VertexSet>& family) {
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet non = g.vertices() - g.closed_neighborhood(u);
    if (!non.subset_of(reach(u, family))) return false;
  }
  return true;
}

bool covers_vertices(const Graph& g, const std::vector<VertexSet>& family) {
  VertexSet all;
  for (VertexSet s : family) all |= s;
  return g.vertices().subset_of(all);
}

// ------------------------------------------------------------ big graphs

namespace {

class BigBronKerbosch {
 public:
  using Row = BigGraph::Row;

  BigBronKerbosch(const BigGraph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<std::vector<std::size_t>> run() {
    Row p = g_.empty_row();
    p.set();
    std::vector<std::size_t> r;
    expand(r, p, g_.empty_row());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(std::vector<std::size_t>& r, Row p, Row x) {
    if (p.none()) {
      if (x.none()) {
        if (out_.size() >= cap_) {
          throw FamilyCapExceeded("more than " + std::to_string(cap_) + " maximal cliques");
        }
        out_.push_back(r);
        std::sort(out_.back().begin(), out_.back().end());
      }
      return;
    }
    const Row px = p | x;
    std::size_t pivot = Row::npos;
    std::size_t best = 0;
    for (std::size_t u = px.find_first(); u != Row::npos; u = px.find_next(u)) {
      const std::size_t score = (p & g_.neighbors(u)).count();
      if (pivot == Row::npos || score > best) {
        pivot = u;
        best = score;
      }
    }
    const Row candidates = p - g_.neighbors(pivot);
    for (std::size_t v = candidates.find_first(); v != Row::npos; v = candidates.find_next(v)) {
      r.push_back(v);
      expand(r, p & g_.neighbors(v), x & g_.neighbors(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const BigGraph& g_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const BigGraph& g, std::size_t cap) {
  return BigBronKerbosch(g, cap).run();
}

}  // namespace cisgraphs

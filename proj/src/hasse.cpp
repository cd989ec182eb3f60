#include "cisgraphs/hasse.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

namespace {

constexpr PropertyId P(Base b, Modifier m = Modifier::plain) { return PropertyId{b, m}; }

// One string per row, one token per column: "=" diagonal, "S" inclusion,
// "?" unknown, otherwise the name of a graph in row \ column.
constexpr std::array<std::string_view, 17> kTableRows = {
    "= P4 S P4 S P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4",
    "K1 = S F S S S S S S S S S S S S S",
    "K1 P4 = P4 S P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4",
    "K1 C4 C4 = S S S S S S S CK S S S S S",
    "K1 C4 C4 P4 = P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4",
    "K1 C4 C4 F FK = S S S S S CK S S S S S",
    "K1 C4 C4 F G12 G12 = G12 G12 G12 S LK33 G12 G12 G12 G12 S",
    "K1 C4 C4 F FL G12 ? = S S S LK33 ? S S S S",
    "K1 C4 C4 F FL G12 ? ? = S S LK33 ? ? S S S",
    "K1 C4 C4 F FL LLbar ? LLbar LLbar = S LK33 LLbar LLbar LLbar S S",
    "K1 C4 C4 F FL LLbar ? LLbar LLbar G12 = LK33 LLbar LLbar LLbar G12 S",
    "K1 C4 C4 S3 SK S3 S S3 S3 S3 S = S S S S S",
    "K1 C4 C4 S3 SK S3 S S3 S3 S3 S LK33 = S S S S",
    "K1 C4 C4 S3 SK S3 ? S3 S3 S3 ? LK33 G22 = S S S",
    "K1 C4 C4 S3 SK S3 ? S3 S3 S3 ? LK33 G22 G14 = S S",
    "K1 C4 C4 S3 SK S3 Cir9 S3 S3 S3 Cir9 LK33 Cir9 Cir9 Cir9 = S",
    "K1 C4 C4 S3 SK S3 Cir9 S3 S3 S3 Cir9 LK33 Cir9 Cir9 Cir9 G12 =",
};

TableCell parse_cell(std::string_view token) {
  TableCell c;
  if (token == "=") {
    c.kind = CellKind::equal;
  } else if (token == "S") {
    c.kind = CellKind::subset;
  } else if (token == "?") {
    c.kind = CellKind::unknown;
  } else if (auto id = parse_gallery_id(token)) {
    c.kind = CellKind::witness;
    c.witness = *id;
  } else {
    c.kind = CellKind::skipped;
    c.skipped_witness = std::string(token);
  }
  return c;
}

bool uses_lp(PropertyId id) { return needs_lp(id.base); }

}  // namespace

const std::array<PropertyId, 17>& table_properties() {
  using B = Base;
  constexpr auto cap = Modifier::cap;
  constexpr auto cup = Modifier::cup;
  static const std::array<PropertyId, 17> props = {
      P(B::almost_cis),          P(B::edge_simplicial, cap), P(B::split),
      P(B::cis),                 P(B::quasi_cis),            P(B::semi_weakly_cis, cap),
      P(B::weakly_cis),          P(B::strongly_equistable, cap), P(B::equistable, cap),
      P(B::triangle, cap),       P(B::weakly_triangle, cap), P(B::edge_simplicial, cup),
      P(B::semi_weakly_cis, cup), P(B::strongly_equistable, cup), P(B::equistable, cup),
      P(B::triangle, cup),       P(B::weakly_triangle, cup),
  };
  return props;
}

std::string table_label(PropertyId id) { return id.name(); }

const std::array<std::array<TableCell, 17>, 17>& relation_table() {
  static const auto table = [] {
    std::array<std::array<TableCell, 17>, 17> t{};
    for (std::size_t r = 0; r < kTableRows.size(); ++r) {
      std::istringstream in{std::string(kTableRows[r])};
      std::string token;
      std::size_t c = 0;
      while (in >> token) {
        if (c >= 17) throw InternalVerificationError("relation table row too long");
        t[r][c++] = parse_cell(token);
      }
      if (c != 17) throw InternalVerificationError("relation table row too short");
    }
    return t;
  }();
  return table;
}

std::string_view outcome_name(CellOutcome o) {
  switch (o) {
    case CellOutcome::pass:
      return "pass";
    case CellOutcome::fail:
      return "fail";
    case CellOutcome::decomposed_pass:
      return "decomposed-pass";
    case CellOutcome::skipped:
      return "skipped";
    case CellOutcome::not_applicable:
      return "n/a";
  }
  return "?";
}

LLbarChecks llbar_checks() {
  LLbarChecks out;
  const BigGraph l = graph_l();
  out.l_edge_simplicial = is_edge_simplicial(l);
  out.l_co_triangle = is_co_triangle(l);

  const auto cliques = maximal_cliques(l);
  out.maximal_cliques_of_l = cliques.size();
  constexpr std::size_t kLineVertices = 30;
  auto partitions = [&](std::size_t size, std::size_t expected) {
    std::vector<int> hits(kLineVertices, 0);
    std::size_t count = 0;
    for (const auto& c : cliques) {
      if (c.size() != size) continue;
      if (c.back() >= kLineVertices) return false;
      ++count;
      for (std::size_t v : c) ++hits[v];
    }
    return count == expected && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  };
  out.clique_partitions = partitions(5, 6) && partitions(6, 5);
  return out;
}

std::vector<CellResult> verify_table(const std::function<void(const CellResult&)>& progress) {
  const auto& props = table_properties();
  const auto& table = relation_table();
  std::vector<CellResult> results;
  std::map<GalleryId, Classifier> classifiers;
  std::optional<LLbarChecks> llbar;

  for (std::size_t r = 0; r < 17; ++r) {
    for (std::size_t c = 0; c < 17; ++c) {
      CellResult res{r, c, table[r][c], CellOutcome::not_applicable, {}};
      if (res.cell.kind == CellKind::skipped) {
        res.outcome = CellOutcome::skipped;
        res.detail = res.cell.skipped_witness + " is not reproducible from its description";
      } else if (res.cell.kind == CellKind::witness) {
        if (progress) progress(res);
        const GalleryId id = *res.cell.witness;
        if (id == GalleryId::LLbar) {
          if (!llbar) llbar = llbar_checks();
          res.outcome = llbar->all() ? CellOutcome::decomposed_pass : CellOutcome::fail;
          res.detail = "L edge simplicial, L co-triangle, clique partitions of L(K5,6)";
        } else {
          auto it = classifiers.find(id);
          if (it == classifiers.end()) {
            it = classifiers.emplace(id, Classifier(gallery(id), ClassifierOptions{true})).first;
          }
          const bool in_x = it->second.holds(props[r]);
          const bool in_y = it->second.holds(props[c]);
          res.outcome = in_x && !in_y ? CellOutcome::pass : CellOutcome::fail;
          res.detail = std::string(gallery_name(id)) + (in_x ? " in " : " not in ") + props[r].name() +
                       (in_y ? ", in " : ", not in ") + props[c].name();
        }
      }
      results.push_back(std::move(res));
    }
  }
  return results;
}

// ------------------------------------------------------------------ scan

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all_graphs supports 1..8 vertices");
  static std::map<int, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1);
  } else {
    std::map<std::uint64_t, Graph> seen;
    for (const Graph& base : all_graphs(n - 1)) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u) {
          if ((mask >> u) & 1U) g.add_edge(u, n - 1);
        }
        seen.emplace(canonical_code(g), std::move(g));
      }
    }
    for (auto& [code, g] : seen) out.push_back(std::move(g));
  }
  cache.emplace(n, out);
  return out;
}

std::vector<Arrow> hasse_arrows() {
  using B = Base;
  using M = Modifier;
  std::vector<Arrow> arrows;
  auto add = [&](PropertyId x, PropertyId y) {
    arrows.push_back({x.name() + " => " + y.name(), [x](Classifier& c) { return c.holds(x); },
                      [y](Classifier& c) { return c.holds(y); }, uses_lp(x) || uses_lp(y)});
  };
  add(P(B::threshold), P(B::edge_simplicial, M::cap));
  add(P(B::threshold), P(B::cograph));
  add(P(B::cograph), P(B::cis));
  add(P(B::cograph), P(B::perfect));
  add(P(B::edge_simplicial, M::cap), P(B::split));
  add(P(B::edge_simplicial, M::cap), P(B::semi_weakly_cis, M::cap));
  add(P(B::cis), P(B::semi_weakly_cis, M::cap));
  add(P(B::cis), P(B::quasi_cis));
  add(P(B::almost_cis), P(B::split));
  add(P(B::split), P(B::quasi_cis));
  add(P(B::split), P(B::perfect));
  add(P(B::edge_simplicial), P(B::semi_weakly_cis));
  add(P(B::semi_weakly_cis), P(B::strongly_equistable));
  add(P(B::strongly_equistable), P(B::equistable));
  add(P(B::equistable), P(B::triangle));
  add(P(B::triangle), P(B::weakly_triangle));
  add(P(B::cis), P(B::semi_weakly_cis));
  add(P(B::semi_weakly_cis), P(B::weakly_cis));
  add(P(B::weakly_cis), P(B::normal));
  add(P(B::weakly_cis), P(B::weakly_triangle, M::cap));
  add(P(B::perfect), P(B::normal));
  add(P(B::quasi_cis), P(B::normal));
  add(P(B::semi_weakly_cis, M::cup), P(B::weakly_cis));
  for (M m : {M::cap, M::cup}) {
    add(P(B::edge_simplicial, m), P(B::semi_weakly_cis, m));
    add(P(B::semi_weakly_cis, m), P(B::strongly_equistable, m));
    add(P(B::strongly_equistable, m), P(B::equistable, m));
    add(P(B::equistable, m), P(B::triangle, m));
    add(P(B::triangle, m), P(B::weakly_triangle, m));
  }
  arrows.push_back({"eq => no bad P4", [](Classifier& c) { return c.holds(P(B::equistable)); },
                    [](Classifier& c) { return !has_bad_p4(c.structure()).holds; },
                    true});

  const auto& props = table_properties();
  const auto& table = relation_table();
  for (std::size_t r = 0; r < 17; ++r) {
    for (std::size_t c = 0; c < 17; ++c) {
      if (table[r][c].kind != CellKind::subset) continue;
      const std::string label = props[r].name() + " => " + props[c].name();
      if (std::any_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.label == label; })) continue;
      add(props[r], props[c]);
    }
  }
  return arrows;
}

std::size_t ScanReport::total_violations() const {
  std::size_t total = split_characterization.violations;
  for (const auto& a : arrows) total += a.violations;
  for (const auto& a : self_complementary) total += a.violations;
  return total;
}

namespace {

constexpr std::size_t kMaxExamples = 5;

void record(ArrowResult& r, bool premise, bool conclusion, const Graph& g) {
  ++r.checked;
  if (!premise) return;
  ++r.premise_held;
  if (conclusion) return;
  ++r.violations;
  if (r.examples.size() < kMaxExamples) r.examples.push_back(encode_graph6(g));
}

std::vector<Graph> scan_range(const ScanOptions& options) {
  if (!options.graphs.empty()) return options.graphs;
  std::vector<Graph> out;
  for (int n = 1; n <= options.max_n; ++n) {
    auto level = all_graphs(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace

ScanReport scan(const ScanOptions& options) {
  ScanReport report;
  const auto graphs = scan_range(options);
  const auto arrows = hasse_arrows();
  report.arrows.resize(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) report.arrows[i].label = arrows[i].label;

  // Table properties plus classes known to be self-complementary; each is
  // checked against an independent classifier of the complement.
  std::vector<PropertyId> symmetric(table_properties().begin(), table_properties().end());
  for (Base b : {Base::threshold, Base::cograph, Base::perfect, Base::normal}) symmetric.push_back(P(b));
  for (PropertyId id : symmetric) report.self_complementary.push_back({id.name() + " = co-" + id.name(), 0, 0, 0, {}});
  report.split_characterization.label = "split <=> aCIS or cap-es";
  report.open_cap_wtriangle_not_wcis.label = "cap-wtriangle \\ wCIS";
  report.open_cap_seq_not_cap_swcis.label = "cap-seq \\ cap-swCIS";

  for (const Graph& g : graphs) {
    const int n = g.order();
    if (n >= static_cast<int>(report.graphs_per_order.size())) report.graphs_per_order.resize(static_cast<std::size_t>(n) + 1, 0);
    ++report.graphs_per_order[static_cast<std::size_t>(n)];
    report.max_n = std::max(report.max_n, n);
    const bool lp = n <= options.lp_max_n;
    Classifier c(g, ClassifierOptions{lp});

    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i].needs_lp && !lp) continue;
      const bool premise = arrows[i].premise(c);
      record(report.arrows[i], premise, !premise || arrows[i].conclusion(c), g);
    }
    Classifier co(complement(g), ClassifierOptions{lp});
    for (std::size_t i = 0; i < symmetric.size(); ++i) {
      if (uses_lp(symmetric[i]) && !lp) continue;
      record(report.self_complementary[i], true, c.holds(symmetric[i]) == co.holds(symmetric[i]), g);
    }
    const bool split = c.holds(P(Base::split));
    const bool rhs = c.holds(P(Base::almost_cis)) || c.holds(P(Base::edge_simplicial, Modifier::cap));
    record(report.split_characterization, true, split == rhs, g);

    const bool cap_wtri = c.holds(P(Base::weakly_triangle, Modifier::cap));
    record(report.open_cap_wtriangle_not_wcis, cap_wtri, !cap_wtri || c.holds(P(Base::weakly_cis)), g);
    if (lp) {
      const bool cap_seq = c.holds(P(Base::strongly_equistable, Modifier::cap));
      record(report.open_cap_seq_not_cap_swcis, cap_seq, !cap_seq || c.holds(P(Base::semi_weakly_cis, Modifier::cap)),
             g);
    }
  }
  return report;
}

std::vector<Graph> find_separators(PropertyId x, PropertyId y, int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : all_graphs(n)) {
      Classifier c(g, ClassifierOptions{uses_lp(x) || uses_lp(y)});
      if (c.holds(x) && !c.holds(y)) out.push_back(g);
    }
  }
  return out;
}

}  // namespace cisgraphs

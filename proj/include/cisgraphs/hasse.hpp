#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cisgraphs/classify.hpp"
#include "cisgraphs/gallery.hpp"

namespace cisgraphs {

// ----------------------------------------------------------------- table

/// The 17 self-complementary properties of the relation table, in table
/// order: aCIS, cap-es, split, CIS, qCIS, cap-swCIS, wCIS, cap-seq, cap-eq,
/// cap-triangle, cap-wtriangle, cup-es, cup-swCIS, cup-seq, cup-eq,
/// cup-triangle, cup-wtriangle.
const std::array<PropertyId, 17>& table_properties();
/// Short label used in rendered tables ("∩-es" style, ASCII: "cap-es").
std::string table_label(PropertyId id);

enum class CellKind { equal, subset, witness, unknown, skipped };

struct TableCell {
  CellKind kind = CellKind::unknown;
  /// kind == witness.
  std::optional<GalleryId> witness;
  /// kind == skipped: the undefined or out-of-range witness ("FL", "G14",
  /// "G22").
  std::string skipped_witness;
};

/// Row X, column Y: X ⊆ Y, or a graph in X \ Y, or unknown.
const std::array<std::array<TableCell, 17>, 17>& relation_table();

enum class CellOutcome { pass, fail, decomposed_pass, skipped, not_applicable };
std::string_view outcome_name(CellOutcome o);

struct CellResult {
  std::size_t row = 0;
  std::size_t col = 0;
  TableCell cell;
  CellOutcome outcome = CellOutcome::not_applicable;
  std::string detail;
};

/// Checks for the 330-vertex LLbar that stand in for a full decision.
struct LLbarChecks {
  bool l_edge_simplicial = false;
  bool l_co_triangle = false;
  /// Six pairwise-disjoint maximal 5-cliques and five pairwise-disjoint
  /// maximal 6-cliques of L, each family partitioning the 30 line-graph
  /// vertices.
  bool clique_partitions = false;
  std::size_t maximal_cliques_of_l = 0;

  bool all() const { return l_edge_simplicial && l_co_triangle && clique_partitions; }
};

LLbarChecks llbar_checks();

/// Every witness cell: membership(X) ∧ ¬membership(Y) on the gallery graph.
/// LLbar cells use llbar_checks(); FL/G14/G22 cells are skipped.
/// `progress` (optional) is called before each witness cell.
std::vector<CellResult> verify_table(const std::function<void(const CellResult&)>& progress = {});

// ------------------------------------------------------------------ scan

/// All graphs on exactly n vertices up to isomorphism (1 ≤ n ≤ 8), ordered
/// by canonical code; built by adding one vertex at a time with canonical
/// deduplication.
std::vector<Graph> all_graphs(int n);

struct Arrow {
  std::string label;
  std::function<bool(Classifier&)> premise;
  std::function<bool(Classifier&)> conclusion;
  bool needs_lp = false;
};

/// Inclusion arrows of the Hasse diagram among implemented classes plus
/// every "⊆" cell of the relation table.
std::vector<Arrow> hasse_arrows();

struct ArrowResult {
  std::string label;
  std::size_t checked = 0;
  std::size_t premise_held = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // graph6, at most a few
};

struct ScanOptions {
  int max_n = 6;
  /// LP-backed properties only on graphs with at most this many vertices.
  int lp_max_n = 6;
  /// Replaces the built-in generation when non-empty (e.g. a graph6 list).
  std::vector<Graph> graphs;
};

struct ScanReport {
  int max_n = 0;
  std::vector<std::size_t> graphs_per_order;  // index = n
  std::vector<ArrowResult> arrows;
  /// verdict(g) = verdict(complement g) for the 17 table properties and
  /// for threshold, cograph, perfect and normal.
  std::vector<ArrowResult> self_complementary;
  ArrowResult split_characterization;
  /// Open questions, logged and not asserted: graphs in cap-wtriangle
  /// minus wCIS, and in cap-seq minus cap-swCIS.
  ArrowResult open_cap_wtriangle_not_wcis;
  ArrowResult open_cap_seq_not_cap_swcis;

  std::size_t total_violations() const;
};

ScanReport scan(const ScanOptions& options);

/// Graphs of the scan range in X \ Y. An empty result is not a proof.
std::vector<Graph> find_separators(PropertyId x, PropertyId y, int max_n);

}  // namespace cisgraphs

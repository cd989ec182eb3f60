#include "doctest.h"

#include "cisgraphs/hasse.hpp"

using namespace cisgraphs;

namespace {

std::size_t index_of(std::string_view name) {
  const auto& props = table_properties();
  const PropertyId id = PropertyId::parse(name);
  return static_cast<std::size_t>(std::find(props.begin(), props.end(), id) - props.begin());
}

const CellResult& result_at(const std::vector<CellResult>& results, std::string_view row, std::string_view col) {
  const std::size_t r = index_of(row);
  const std::size_t c = index_of(col);
  const auto it = std::find_if(results.begin(), results.end(),
                               [&](const CellResult& x) { return x.row == r && x.col == c; });
  REQUIRE(it != results.end());
  return *it;
}

bool contains_iso(const std::vector<Graph>& gs, const Graph& g) {
  return std::any_of(gs.begin(), gs.end(), [&](const Graph& h) { return is_isomorphic(g, h); });
}

}  // namespace

TEST_SUITE_BEGIN("hasse");

TEST_CASE("table shape") {
  const auto& t = relation_table();
  for (std::size_t i = 0; i < 17; ++i) CHECK(t[i][i].kind == CellKind::equal);
  CHECK(t[index_of("CIS")][index_of("cap-es")].witness == GalleryId::C4);
  CHECK(t[index_of("aCIS")][index_of("cup-wtriangle")].witness == GalleryId::P4);
  CHECK(t[index_of("wCIS")][index_of("cup-es")].witness == GalleryId::LK33);
  CHECK(t[index_of("wCIS")][index_of("cap-seq")].witness == GalleryId::G12);
  CHECK(t[index_of("cap-es")][index_of("split")].kind == CellKind::subset);
  CHECK(table_label(PropertyId::parse("cap-es")) == "cap-es");
}

TEST_CASE("named witness cells") {
  const auto results = verify_table();
  CHECK(result_at(results, "CIS", "cap-es").outcome == CellOutcome::pass);
  CHECK(result_at(results, "aCIS", "cup-wtriangle").outcome == CellOutcome::pass);
  CHECK(result_at(results, "wCIS", "cup-es").outcome == CellOutcome::pass);
  CHECK(result_at(results, "wCIS", "cap-seq").outcome == CellOutcome::pass);
  for (const CellResult& r : results) {
    if (r.cell.kind == CellKind::skipped) CHECK(r.outcome == CellOutcome::skipped);
    if (r.cell.witness == GalleryId::LLbar) CHECK(r.outcome == CellOutcome::decomposed_pass);
  }
}

TEST_CASE("graph counts") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(all_graphs(n).size() == expected[static_cast<std::size_t>(n - 1)]);
  for (const Graph& g : all_graphs(5)) {
    CHECK(g.order() == 5);
  }
}

TEST_CASE("scan up to 5 vertices") {
  const ScanReport r = scan({.max_n = 5, .lp_max_n = 5});
  CHECK(r.total_violations() == 0);
  CHECK(r.graphs_per_order[4] == 11);
  CHECK(r.split_characterization.violations == 0);
  CHECK(r.self_complementary.size() == 21);
  const auto chain = std::find_if(r.arrows.begin(), r.arrows.end(),
                                  [](const ArrowResult& a) { return a.label.find("eq") != std::string::npos; });
  REQUIRE(chain != r.arrows.end());
  CHECK(chain->checked > 0);
}

TEST_CASE("scan of an explicit list") {
  ScanOptions opts;
  opts.max_n = 9;
  opts.lp_max_n = 9;
  opts.graphs = {gallery(GalleryId::Cir9), gallery(GalleryId::LK33)};
  const ScanReport r = scan(opts);
  CHECK(r.total_violations() == 0);
  for (const ArrowResult& a : r.arrows) CHECK(a.checked == 2);
}

TEST_CASE("separators") {
  CHECK(contains_iso(find_separators(PropertyId::parse("split"), PropertyId::parse("CIS"), 4), Graph::path(4)));
  CHECK(contains_iso(find_separators(PropertyId::parse("CIS"), PropertyId::parse("split"), 4), Graph::cycle(4)));
  CHECK(find_separators(PropertyId::parse("threshold"), PropertyId::parse("CIS"), 7).empty());
}

TEST_CASE("LLbar structure") {
  const LLbarChecks c = llbar_checks();
  CHECK(c.l_edge_simplicial);
  CHECK(c.l_co_triangle);
  CHECK(c.clique_partitions);
  CHECK(c.all());
}

TEST_SUITE_END();

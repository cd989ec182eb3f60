// cisgraphs: command-line front end.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cisgraphs/classify.hpp"
#include "cisgraphs/equistable.hpp"
#include "cisgraphs/errors.hpp"
#include "cisgraphs/gallery.hpp"
#include "cisgraphs/hasse.hpp"
#include "cisgraphs/json_io.hpp"
#include "cisgraphs/linegraph.hpp"

using namespace cisgraphs;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string format = "text";
  int max_n = 6;
  std::uint64_t seed = 1;
  bool include_lp = false;
  bool verify = false;
  bool strong = false;
  std::string as = "auto";
  std::string gallery_id;
};

/// Raised for malformed user input; mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& source) {
  if (source == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + source);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw InputError("bad " + what + ": " + text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("bad " + what + ": " + text);
  }
}

struct LoadedGraph {
  std::string id;
  Graph graph{1};
};

LoadedGraph load_graph(const Options& o) {
  if (o.input.empty()) throw InputError("missing --input");
  const std::string& in = o.input;
  if (in.starts_with("gallery:")) {
    const auto id = parse_gallery_id(in.substr(8));
    if (!id) throw InputError("unknown gallery id: " + in.substr(8));
    if (is_big(*id)) throw CapacityError(std::string(gallery_name(*id)) + " exceeds 64 vertices");
    return {std::string(gallery_name(*id)), gallery(*id)};
  }
  if (in.starts_with("projective:")) {
    return {in, projective_split(parse_int(in.substr(11), "projective order"))};
  }
  if (in.starts_with("random-split:")) {
    const std::string args = in.substr(13);
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw InputError("random-split expects K,L");
    const int k = parse_int(args.substr(0, comma), "K");
    const int l = parse_int(args.substr(comma + 1), "L");
    return {in + "@" + std::to_string(o.seed), random_split(k, l, o.seed)};
  }
  return {in == "-" ? "stdin" : in, parse_graph(read_source(in))};
}

void check_format(const Options& o) {
  if (o.format != "json" && o.format != "csv" && o.format != "text") {
    throw InputError("--format must be json, csv or text");
  }
}

std::string set_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string certificate_text(const Certificate& c) {
  const json j = certificate_to_json(c);
  return j.is_null() ? "" : j.dump();
}

// --------------------------------------------------------------- classify

int verify_report_or_fail(const ClassReport& report) {
  const ClassReport back = report_from_json(report_to_json(report));
  if (!verify_report(back)) {
    std::cerr << "verify: certificate check failed\n";
    return kExitVerify;
  }
  std::cerr << "verify: " << back.results.size() << " results re-checked\n";
  return kExitOk;
}

int cmd_classify(const Options& o) {
  check_format(o);
  if (o.verify && o.input != "-" && !o.input.starts_with("gallery:")) {
    const std::string text = o.input.find(':') == std::string::npos ? read_source(o.input) : "";
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw InputError(e.what());
      }
      return verify_report_or_fail(report_from_json(j));
    }
  }
  const LoadedGraph in = load_graph(o);
  const ClassReport report = classify(in.graph, in.id, ClassifierOptions{o.include_lp});
  if (o.format == "json") {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "property,status,on_complement,certificate\n";
    for (const auto& r : report.results) {
      std::string cert = certificate_text(r.certificate);
      std::string quoted;
      for (char ch : cert) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      std::cout << r.id.name() << "," << status_name(r.status) << "," << (r.on_complement ? "true" : "false")
                << ",\"" << quoted << "\"\n";
    }
  } else {
    std::cout << "graph " << report.graph_id << " order " << report.graph.order() << " graph6 "
              << encode_graph6(report.graph) << "\n";
    for (const auto& r : report.results) {
      std::cout << std::left << std::setw(20) << r.id.name() << status_name(r.status);
      const std::string cert = certificate_text(r.certificate);
      if (!cert.empty()) std::cout << "  " << (r.on_complement ? "[complement] " : "") << cert;
      if (!r.note.empty()) std::cout << "  (" << r.note << ")";
      std::cout << "\n";
    }
  }
  return o.verify ? verify_report_or_fail(report) : kExitOk;
}

// ------------------------------------------------------------ equistable

std::string_view outcome_kind(EquistableOutcome k) {
  switch (k) {
    case EquistableOutcome::witness:
      return "witness";
    case EquistableOutcome::infeasible:
      return "infeasible";
    case EquistableOutcome::forced_subset:
      return "forced_subset";
  }
  return "?";
}

int cmd_equistable(const Options& o) {
  check_format(o);
  const LoadedGraph in = load_graph(o);
  const Structure s(in.graph);
  const EquistableCertificate cert = o.strong ? is_strongly_equistable(s) : is_equistable(s);
  const std::string property = o.strong ? "seq" : "eq";
  const json cj = certificate_to_json(cert.to_verdict().certificate);
  if (o.format == "json") {
    json j;
    j["graph"] = {{"id", in.id}, {"order", in.graph.order()}, {"graph6", encode_graph6(in.graph)}};
    j["property"] = property;
    j["holds"] = cert.verdict;
    j["kind"] = outcome_kind(cert.kind);
    j["certificate"] = cj;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "property,holds,kind\n" << property << "," << (cert.verdict ? "true" : "false") << ","
              << outcome_kind(cert.kind) << "\n";
  } else {
    std::cout << property << " " << (cert.verdict ? "holds" : "fails") << " (" << outcome_kind(cert.kind) << ")\n";
    switch (cert.kind) {
      case EquistableOutcome::witness:
        for (std::size_t v = 0; v < cert.weights.size(); ++v) {
          std::cout << "  w(" << v << ") = " << cert.weights[v].get_str() << "\n";
        }
        break;
      case EquistableOutcome::forced_subset:
        std::cout << "  T = " << set_text(cert.forced.subset) << " forced to " << cert.forced.value.get_str()
                  << "\n";
        break;
      case EquistableOutcome::infeasible:
        for (std::size_t i = 0; i < cert.stables.size(); ++i) {
          if (cert.farkas[i] == 0) continue;
          std::cout << "  " << cert.farkas[i].get_str() << " * " << set_text(cert.stables[i]) << "\n";
        }
        break;
    }
  }
  if (o.verify) {
    if (!verify_equistable_certificate(s, cert, o.strong)) {
      std::cerr << "verify: certificate check failed\n";
      return kExitVerify;
    }
    std::cerr << "verify: certificate re-checked\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------- cis-line

json edges_json(const Graph& g) {
  json out = json::array();
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

int cmd_cis_line(const Options& o) {
  check_format(o);
  if (o.as != "auto" && o.as != "root" && o.as != "line") throw InputError("--as must be auto, root or line");
  const LoadedGraph in = load_graph(o);

  std::string mode = o.as;
  Graph root = in.graph;
  std::string root_kind = "given";
  if (o.as != "root") {
    const RootResult r = root_graph(in.graph);
    if (r.is_line_graph()) {
      mode = "line";
      root = *r.root;
      root_kind = r.kind == RootKind::unique ? "unique" : "ambiguous";
    } else if (o.as == "line") {
      throw InputError("input is not a line graph");
    } else {
      mode = "root";
    }
  }
  if (root.edge_count() == 0) throw InputError("the root graph has no edges");

  const LineRootVerdict verdict = is_cis_line_root(root);
  std::vector<std::string> checked = {"bull subgraph"};
  if (!verdict.failure || verdict.failure->kind == LineRootFailure::Kind::matching) {
    checked.push_back("matching condition");
  }

  bool consistent = true;
  std::optional<bool> direct;
  if (o.verify) {
    const Graph lg = line_graph(root);
    direct = is_cis(lg).holds;
    consistent = *direct == verdict.holds;
    if (root.edge_count() <= 24) consistent = consistent && check_condition_vii(root) == verdict.holds;
  }

  if (o.format == "json") {
    json j;
    j["input"] = {{"id", in.id}, {"order", in.graph.order()}, {"graph6", encode_graph6(in.graph)}};
    j["mode"] = mode;
    j["root"] = {{"order", root.order()}, {"graph6", encode_graph6(root)}, {"edges", edges_json(root)},
                 {"kind", root_kind}};
    j["cis"] = verdict.holds;
    j["checked"] = checked;
    j["backend"] = backend_name(verdict.backend);
    if (verdict.failure) {
      const auto& f = *verdict.failure;
      if (f.kind == LineRootFailure::Kind::bull) {
        j["failure"] = {{"type", "bull"}, {"vertices", f.bull}};
      } else {
        json m = json::array();
        for (auto [u, v] : f.matching) m.push_back({u, v});
        j["failure"] = {{"type", "matching"}, {"x", f.x}, {"matching", m}};
      }
    } else {
      j["failure"] = nullptr;
    }
    if (direct) j["direct_cis"] = *direct;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "mode,root_graph6,root_kind,cis\n"
              << mode << "," << encode_graph6(root) << "," << root_kind << "," << (verdict.holds ? "true" : "false")
              << "\n";
  } else {
    std::cout << "mode " << mode << "\nroot " << encode_graph6(root) << " (" << root_kind << ") edges";
    for (auto [u, v] : root.edges()) std::cout << " " << u << "-" << v;
    std::cout << "\nCIS " << (verdict.holds ? "true" : "false") << "\nchecked";
    for (const auto& c : checked) std::cout << " [" << c << "]";
    std::cout << "\n";
    if (verdict.failure) {
      const auto& f = *verdict.failure;
      if (f.kind == LineRootFailure::Kind::bull) {
        std::cout << "failure bull";
        for (int v : f.bull) std::cout << " " << v;
      } else {
        std::cout << "failure matching at x=" << f.x << ":";
        for (auto [u, v] : f.matching) std::cout << " " << u << "-" << v;
      }
      std::cout << "\n";
    }
  }
  if (!consistent) {
    std::cerr << "verify: line-graph verdict disagrees with the direct check\n";
    return kExitVerify;
  }
  if (o.verify) std::cerr << "verify: direct CIS check agrees\n";
  return kExitOk;
}

// ------------------------------------------------------------------ table

std::string cell_token(const TableCell& c) {
  switch (c.kind) {
    case CellKind::equal:
      return "=";
    case CellKind::subset:
      return "<=";
    case CellKind::unknown:
      return "?";
    case CellKind::witness:
      return std::string(gallery_name(*c.witness));
    case CellKind::skipped:
      return c.skipped_witness;
  }
  return "";
}

int cmd_table(const Options& o) {
  check_format(o);
  const auto& props = table_properties();
  const auto results = verify_table();
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.outcome == CellOutcome::fail ? 1 : 0;

  if (o.format == "json") {
    json j;
    j["schema"] = "cisgraphs.table/1";
    json names = json::array();
    for (const auto& p : props) names.push_back(p.name());
    j["properties"] = names;
    json cells = json::array();
    for (const auto& r : results) {
      cells.push_back({{"row", props[r.row].name()},
                       {"column", props[r.col].name()},
                       {"cell", cell_token(r.cell)},
                       {"outcome", outcome_name(r.outcome)},
                       {"detail", r.detail}});
    }
    j["cells"] = cells;
    j["failed"] = failed;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "row,column,cell,outcome\n";
    for (const auto& r : results) {
      std::cout << props[r.row].name() << "," << props[r.col].name() << "," << cell_token(r.cell) << ","
                << outcome_name(r.outcome) << "\n";
    }
  } else {
    std::cout << std::left << std::setw(15) << "";
    for (std::size_t c = 0; c < props.size(); ++c) std::cout << std::setw(7) << ("c" + std::to_string(c + 1));
    std::cout << "\n";
    for (std::size_t r = 0; r < props.size(); ++r) {
      std::cout << std::setw(15) << ("c" + std::to_string(r + 1) + " " + props[r].name());
      for (std::size_t c = 0; c < props.size(); ++c) {
        const auto& res = results[r * props.size() + c];
        std::string tok = cell_token(res.cell);
        if (res.outcome == CellOutcome::fail) tok += "!";
        if (res.outcome == CellOutcome::skipped) tok += "~";
        std::cout << std::setw(7) << tok;
      }
      std::cout << "\n";
    }
    std::cout << "\n";
    std::size_t counts[5] = {0, 0, 0, 0, 0};
    for (const auto& r : results) {
      ++counts[static_cast<int>(r.outcome)];
      if (r.outcome == CellOutcome::not_applicable) continue;
      std::cout << std::setw(16) << props[r.row].name() << std::setw(16) << props[r.col].name() << std::setw(8)
                << cell_token(r.cell) << std::setw(16) << outcome_name(r.outcome) << r.detail << "\n";
    }
    std::cout << "\npass " << counts[0] << ", decomposed-pass " << counts[2] << ", fail " << counts[1]
              << ", skipped " << counts[3] << "\n";
  }
  return failed == 0 ? kExitOk : kExitVerify;
}

// ------------------------------------------------------------------- scan

json arrow_json(const ArrowResult& a) {
  return {{"label", a.label},
          {"checked", a.checked},
          {"premise_held", a.premise_held},
          {"violations", a.violations},
          {"examples", a.examples}};
}

int cmd_scan(const Options& o) {
  check_format(o);
  ScanOptions so;
  so.max_n = o.max_n;
  if (o.max_n < 1 || o.max_n > 8) throw InputError("--max-n must be in 1..8");
  so.lp_max_n = o.include_lp ? std::min(o.max_n, kEquistableMaxOrder) : 0;
  if (!o.input.empty()) {
    so.graphs = parse_graph6_list(read_source(o.input));
    if (o.include_lp) so.lp_max_n = kEquistableMaxOrder;
  }
  const ScanReport rep = scan(so);

  std::vector<const ArrowResult*> all;
  for (const auto& a : rep.arrows) all.push_back(&a);
  for (const auto& a : rep.self_complementary) all.push_back(&a);
  all.push_back(&rep.split_characterization);

  if (o.format == "json") {
    json j;
    j["schema"] = "cisgraphs.scan/1";
    j["max_n"] = rep.max_n;
    j["include_lp"] = o.include_lp;
    j["graphs_per_order"] = rep.graphs_per_order;
    json arr = json::array();
    for (const auto* a : all) arr.push_back(arrow_json(*a));
    j["checks"] = arr;
    j["open"] = {arrow_json(rep.open_cap_wtriangle_not_wcis), arrow_json(rep.open_cap_seq_not_cap_swcis)};
    j["violations"] = rep.total_violations();
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "check,checked,premise_held,violations\n";
    for (const auto* a : all) {
      std::cout << a->label << "," << a->checked << "," << a->premise_held << "," << a->violations << "\n";
    }
  } else {
    std::cout << "graphs per order:";
    for (std::size_t n = 1; n < rep.graphs_per_order.size(); ++n) std::cout << " " << n << ":" << rep.graphs_per_order[n];
    std::cout << "\n";
    for (const auto* a : all) {
      std::cout << std::left << std::setw(36) << a->label << " checked " << std::setw(6) << a->checked
                << " premise " << std::setw(6) << a->premise_held << " violations " << a->violations;
      for (const auto& e : a->examples) std::cout << " " << e;
      std::cout << "\n";
    }
    for (const auto* a : {&rep.open_cap_wtriangle_not_wcis, &rep.open_cap_seq_not_cap_swcis}) {
      std::cout << "open: " << a->label << " candidates " << a->violations << " of " << a->checked;
      for (const auto& e : a->examples) std::cout << " " << e;
      std::cout << "\n";
    }
    std::cout << "total violations " << rep.total_violations() << "\n";
  }
  return rep.total_violations() == 0 ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------- gallery

int cmd_gallery_list(const Options& o) {
  check_format(o);
  json arr = json::array();
  if (o.format == "csv") std::cout << "id,order\n";
  for (GalleryId id : kGalleryIds) {
    const std::size_t n = is_big(id) ? gallery_big(id).order() : static_cast<std::size_t>(gallery(id).order());
    if (o.format == "json") {
      arr.push_back({{"id", gallery_name(id)}, {"order", n}});
    } else if (o.format == "csv") {
      std::cout << gallery_name(id) << "," << n << "\n";
    } else {
      std::cout << std::left << std::setw(8) << gallery_name(id) << n << "\n";
    }
  }
  if (o.format == "json") std::cout << arr.dump(2) << "\n";
  return kExitOk;
}

int cmd_gallery_emit(const Options& o) {
  check_format(o);
  const auto id = parse_gallery_id(o.gallery_id);
  if (!id) throw InputError("unknown gallery id: " + o.gallery_id);
  std::string g6;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (is_big(*id)) {
    const BigGraph g = gallery_big(*id);
    g6 = encode_graph6(g);
    n = g.order();
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) edges.emplace_back(u, v);
      }
    }
  } else {
    const Graph g = gallery(*id);
    g6 = encode_graph6(g);
    n = static_cast<std::size_t>(g.order());
    for (auto [u, v] : g.edges()) edges.emplace_back(u, v);
  }
  if (o.format == "json") {
    json e = json::array();
    for (auto [u, v] : edges) e.push_back({u, v});
    std::cout << json{{"id", gallery_name(*id)}, {"order", n}, {"graph6", g6}, {"edges", e}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "u,v\n";
    for (auto [u, v] : edges) std::cout << u << "," << v << "\n";
  } else {
    std::cout << g6 << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognition of CIS, split, equistable and related graph classes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("-i,--input", o.input,
                      "graph source: path, '-', gallery:ID, projective:Q or random-split:K,L");
    }
    sub->add_option("--format", o.format, "json, csv or text")->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "membership of every property with certificates");
  add_common(classify_cmd, true);
  classify_cmd->add_flag("--include-lp", o.include_lp, "include the LP-backed equistability properties");
  classify_cmd->add_flag("--verify", o.verify, "re-check certificates (also accepts a saved JSON report)");
  classify_cmd->add_option("--seed", o.seed, "seed for random-split inputs");

  auto* eq_cmd = app.add_subcommand("equistable", "exact equistability decision");
  add_common(eq_cmd, true);
  eq_cmd->add_flag("--strong", o.strong, "decide strong equistability");
  eq_cmd->add_flag("--verify", o.verify, "re-check the certificate");
  eq_cmd->add_option("--seed", o.seed, "seed for random-split inputs");

  auto* line_cmd = app.add_subcommand("cis-line", "CIS test for line graphs through the root graph");
  add_common(line_cmd, true);
  line_cmd->add_option("--as", o.as, "auto, root or line")->capture_default_str();
  line_cmd->add_flag("--verify", o.verify, "compare with a direct CIS check of the line graph");

  auto* table_cmd = app.add_subcommand("table", "verify the relation table");
  add_common(table_cmd, false);

  auto* scan_cmd = app.add_subcommand("scan", "check inclusions over all small graphs");
  add_common(scan_cmd, true);
  scan_cmd->add_option("--max-n", o.max_n, "largest order to generate")->capture_default_str();
  scan_cmd->add_flag("--include-lp", o.include_lp, "include arrows involving equistability");

  auto* gallery_cmd = app.add_subcommand("gallery", "named graphs");
  gallery_cmd->require_subcommand(1);
  auto* list_cmd = gallery_cmd->add_subcommand("list", "list gallery ids");
  add_common(list_cmd, false);
  auto* emit_cmd = gallery_cmd->add_subcommand("emit", "print a gallery graph");
  add_common(emit_cmd, false);
  emit_cmd->add_option("id", o.gallery_id, "gallery id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*eq_cmd) return cmd_equistable(o);
    if (*line_cmd) return cmd_cis_line(o);
    if (*table_cmd) return cmd_table(o);
    if (*scan_cmd) return cmd_scan(o);
    if (*list_cmd) return cmd_gallery_list(o);
    if (*emit_cmd) return cmd_gallery_emit(o);
  } catch (const InternalVerificationError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

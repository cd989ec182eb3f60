#include "cisgraphs/json_io.hpp"

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

json sets(const std::vector<VertexSet>& xs) {
  json out = json::array();
  for (VertexSet s : xs) out.push_back(to_json(s));
  return out;
}

std::vector<VertexSet> sets_from(const json& j) {
  std::vector<VertexSet> out;
  for (const auto& x : j) out.push_back(vertex_set_from_json(x));
  return out;
}

struct CertificateWriter {
  json operator()(const std::monostate&) const { return nullptr; }
  json operator()(const DisjointPair& p) const {
    return {{"type", "disjoint_pair"}, {"clique", to_json(p.clique)}, {"stable", to_json(p.stable)}};
  }
  json operator()(const PairCount& p) const { return {{"type", "pair_count"}, {"count", p.count}}; }
  json operator()(const SplitPartition& p) const {
    return {{"type", "split_partition"}, {"clique", to_json(p.clique)}, {"stable", to_json(p.stable)}};
  }
  json operator()(const UncoveredPair& p) const { return {{"type", "uncovered_pair"}, {"pair", {p.u, p.v}}}; }
  json operator()(const CoveringFamily& p) const { return {{"type", "covering_family"}, {"sets", sets(p.sets)}}; }
  json operator()(const TriangleViolation& p) const {
    return {{"type", "triangle_violation"}, {"stable", to_json(p.stable)}, {"edge", {p.u, p.v}}};
  }
  json operator()(const InducedPattern& p) const {
    return {{"type", "induced_pattern"}, {"pattern", p.pattern}, {"vertices", p.vertices}};
  }
  json operator()(const BadP4& p) const {
    return {{"type", "bad_p4"}, {"path", p.path}, {"stable", to_json(p.stable)}};
  }
  json operator()(const CrossFamilies& p) const {
    return {{"type", "cross_families"}, {"cliques", sets(p.cliques)}, {"stables", sets(p.stables)}};
  }
  json operator()(const WeightWitness& p) const { return {{"type", "weights"}, {"weights", rationals(p.weights)}}; }
  json operator()(const ForcedSubset& p) const {
    return {{"type", "forced_subset"}, {"subset", to_json(p.subset)}, {"value", to_string(p.value)}};
  }
  json operator()(const InfeasibleSystem& p) const {
    return {{"type", "infeasible"}, {"stables", sets(p.stables)}, {"multipliers", rationals(p.multipliers)}};
  }
};

}  // namespace

json to_json(VertexSet s) { return s.to_vector(); }

VertexSet vertex_set_from_json(const json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw ParseError("vertex out of range in JSON");
    s.insert(x);
  }
  return s;
}

json certificate_to_json(const Certificate& c) { return std::visit(CertificateWriter{}, c); }

Certificate certificate_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "disjoint_pair") {
      return DisjointPair{vertex_set_from_json(j.at("clique")), vertex_set_from_json(j.at("stable"))};
    }
    if (type == "pair_count") return PairCount{j.at("count").get<std::size_t>()};
    if (type == "split_partition") {
      return SplitPartition{vertex_set_from_json(j.at("clique")), vertex_set_from_json(j.at("stable"))};
    }
    if (type == "uncovered_pair") return UncoveredPair{j.at("pair").at(0).get<int>(), j.at("pair").at(1).get<int>()};
    if (type == "covering_family") return CoveringFamily{sets_from(j.at("sets"))};
    if (type == "triangle_violation") {
      return TriangleViolation{vertex_set_from_json(j.at("stable")), j.at("edge").at(0).get<int>(),
                               j.at("edge").at(1).get<int>()};
    }
    if (type == "induced_pattern") {
      return InducedPattern{j.at("pattern").get<std::string>(), j.at("vertices").get<std::vector<int>>()};
    }
    if (type == "bad_p4") {
      return BadP4{j.at("path").get<std::array<int, 4>>(), vertex_set_from_json(j.at("stable"))};
    }
    if (type == "cross_families") return CrossFamilies{sets_from(j.at("cliques")), sets_from(j.at("stables"))};
    if (type == "weights") return WeightWitness{rationals_from(j.at("weights"))};
    if (type == "forced_subset") {
      return ForcedSubset{vertex_set_from_json(j.at("subset")), parse_rational(j.at("value").get<std::string>())};
    }
    if (type == "infeasible") return InfeasibleSystem{sets_from(j.at("stables")), rationals_from(j.at("multipliers"))};
    throw ParseError("unknown certificate type '" + type + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

json report_to_json(const ClassReport& report) {
  json props = json::array();
  for (const auto& r : report.results) {
    json entry = {{"property", r.id.name()},
                  {"status", status_name(r.status)},
                  {"certificate", certificate_to_json(r.certificate)},
                  {"on_complement", r.on_complement}};
    if (r.status == Status::holds || r.status == Status::fails) entry["holds"] = r.holds();
    if (!r.note.empty()) entry["note"] = r.note;
    props.push_back(std::move(entry));
  }
  return {{"schema", kReportSchema},
          {"graph", {{"id", report.graph_id}, {"order", report.graph.order()}, {"graph6", encode_graph6(report.graph)}}},
          {"properties", std::move(props)}};
}

ClassReport report_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) throw ParseError("unsupported report schema");
    const auto& g = j.at("graph");
    ClassReport report{g.at("id").get<std::string>(), parse_graph6(g.at("graph6").get<std::string>()), {}};
    for (const auto& e : j.at("properties")) {
      PropertyResult r;
      r.id = PropertyId::parse(e.at("property").get<std::string>());
      const std::string status = e.at("status").get<std::string>();
      if (status == "holds") {
        r.status = Status::holds;
      } else if (status == "fails") {
        r.status = Status::fails;
      } else if (status == "unsupported") {
        r.status = Status::unsupported;
      } else if (status == "undecided") {
        r.status = Status::undecided;
      } else {
        throw ParseError("unknown status '" + status + "'");
      }
      r.certificate = certificate_from_json(e.at("certificate"));
      r.on_complement = e.value("on_complement", false);
      r.note = e.value("note", std::string());
      report.results.push_back(std::move(r));
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cisgraphs

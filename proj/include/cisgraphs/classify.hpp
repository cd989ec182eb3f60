#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cisgraphs/recognizers.hpp"

namespace cisgraphs {

enum class Status { holds, fails, unsupported, undecided };

std::string_view status_name(Status s);

/// One property's outcome. For cap/cup properties the certificate is the
/// one of the deciding side; `on_complement` says whether it refers to the
/// complement of the classified graph.
struct PropertyResult {
  PropertyId id;
  Status status = Status::fails;
  Certificate certificate;
  bool on_complement = false;
  std::string note;

  bool holds() const { return status == Status::holds; }
};

struct ClassifierOptions {
  bool include_lp = false;
  std::size_t family_cap = kDefaultFamilyCap;
};

/// Evaluates properties of one graph, enumerating the maximal families of
/// the graph and of its complement once and memoizing every base verdict.
class Classifier {
 public:
  explicit Classifier(Graph g, ClassifierOptions options = {});

  const Graph& graph() const { return structure_.graph; }
  const Structure& structure() const { return structure_; }
  const Structure& co_structure() const { return co_structure_; }

  /// Base verdict on the graph (complemented = false) or its complement.
  /// Throws UnsupportedSize / SearchUndecided as the recognizers do.
  const Verdict& base(Base b, bool complemented);

  /// co = base(complement); cap = base ∧ co; cup = base ∨ co.
  PropertyResult evaluate(PropertyId id);
  bool holds(PropertyId id) { return evaluate(id).holds(); }

 private:
  Verdict compute(Base b, bool complemented);

  ClassifierOptions options_;
  Structure structure_;
  Structure co_structure_;
  std::map<std::pair<Base, bool>, Verdict> memo_;
};

/// co/cap/cup composition for a single property.
bool apply_modifier(PropertyId id, const Graph& g);

struct ClassReport {
  std::string graph_id;
  Graph graph;
  std::vector<PropertyResult> results;

  const PropertyResult* find(PropertyId id) const;
};

/// Every base × modifier, in (base, modifier) order. LP-backed properties
/// are included only with options.include_lp; unsupported sizes and
/// undecided searches are reported as such rather than thrown.
ClassReport classify(const Graph& g, std::string graph_id, ClassifierOptions options = {});

/// Re-checks a verdict's certificate against `g` (the graph the certificate
/// refers to). A missing certificate (monostate) is accepted.
bool verify_certificate(const Graph& g, Base b, const Verdict& v);

/// Checks every certificate of a report against its graph.
bool verify_report(const ClassReport& report);

}  // namespace cisgraphs

#include "cisgraphs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "cisgraphs/errors.hpp"

namespace cisgraphs {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside 1..64");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = VertexSet::range(n).without(v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                            std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)].erase(v);
  adj_[static_cast<std::size_t>(v)].erase(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!s.without(v).subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_stable(VertexSet s) const {
  for (int v : s) {
    if (neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool Graph::is_maximal_clique(VertexSet c) const {
  if (!c.subset_of(vertices()) || !is_clique(c)) return false;
  for (int v : vertices() - c) {
    if (c.subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_maximal_stable(VertexSet s) const {
  if (!s.subset_of(vertices()) || !is_stable(s)) return false;
  for (int v : vertices() - s) {
    if (!neighbors(v).intersects(s)) return false;
  }
  return true;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> keep = s.to_vector();
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v) {
    if (neighbors(v) != other.neighbors(v)) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  const VertexSet all = g.vertices();
  for (int u = 0; u < g.order(); ++u) {
    for (int v : all - g.closed_neighborhood(u)) {
      if (v > u) h.add_edge(u, v);
    }
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  if (shift + b.order() > kMaxVertices) {
    throw CapacityError("disjoint union exceeds 64 vertices");
  }
  Graph g(shift + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  }
  return g;
}

Graph glue_triangles(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.order() + static_cast<int>(edges.size());
  if (n > kMaxVertices) throw CapacityError("glue_triangles exceeds 64 vertices");
  Graph h(n);
  int apex = g.order();
  for (auto [u, v] : edges) {
    h.add_edge(u, v);
    h.add_edge(u, apex);
    h.add_edge(v, apex);
    ++apex;
  }
  return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// ---------------------------------------------------------------- graph6

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

int graph6_value(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) {
    throw ParseError(std::string("graph6: byte '") + c + "' outside the printable range 63..126");
  }
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      if (text.size() < 8) throw ParseError("graph6: truncated 36-bit order header");
      for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | graph6_value(text[i]);
      pos = 8;
    } else {
      if (text.size() < 4) throw ParseError("graph6: truncated 18-bit order header");
      for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | graph6_value(text[i]);
      pos = 4;
    }
  } else {
    n = graph6_value(text[0]);
    pos = 1;
  }
  if (n > kMaxVertices) throw CapacityError("graph6: order " + std::to_string(n) + " exceeds 64");
  if (n < 1) throw ParseError("graph6: the empty graph is not supported");

  const long long bit_count = n * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((bit_count + 5) / 6);
  const std::string_view payload = text.substr(pos);
  if (payload.size() < expected) throw ParseError("graph6: truncated adjacency payload");
  if (payload.size() > expected) throw ParseError("graph6: trailing bytes after adjacency payload");

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = graph6_value(payload[static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

template <class Adjacent>
std::string encode_graph6_impl(long long n, Adjacent adjacent) {
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      acc = (acc << 1) | (adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  return encode_graph6_impl(g.order(), [&](long long i, long long j) {
    return g.adjacent(static_cast<int>(i), static_cast<int>(j));
  });
}

std::string encode_graph6(const BigGraph& g) {
  return encode_graph6_impl(static_cast<long long>(g.order()), [&](long long i, long long j) {
    return g.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  });
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  int declared = 0;
  int max_vertex = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": bad token '" + token + "'");
      }
      values.push_back(value);
    }
    if (values.empty()) continue;
    if (values.size() == 1) {
      if (values[0] > kMaxVertices) throw CapacityError("edge list declares more than 64 vertices");
      declared = std::max(declared, static_cast<int>(values[0]));
      continue;
    }
    if (values.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (values[0] >= kMaxVertices || values[1] >= kMaxVertices) {
      throw CapacityError("edge list vertex index beyond 63");
    }
    if (values[0] == values[1]) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": loop");
    }
    edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    max_vertex = std::max({max_vertex, edges.back().first, edges.back().second});
  }
  const int n = std::max(declared, max_vertex + 1);
  if (n < 1) throw ParseError("edge list: no vertices");
  return Graph::from_edges(n, edges);
}

std::string encode_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty graph input");
  const bool single_token = t.find_first_of(" \t\r\n") == std::string_view::npos;
  const bool numeric = t.find_first_not_of("0123456789") == std::string_view::npos;
  if (single_token && !numeric) return parse_graph6(t);
  return parse_edge_list(t);
}

std::vector<Graph> parse_graph6_list(std::string_view text) {
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

// ---------------------------------------------------------- isomorphism

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> order;  // vertices of `a` in matching order
  std::vector<int> map;    // a-vertex -> b-vertex
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int w : b.vertices() - used) {
      if (b.degree(w) != a.degree(u)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int x = order[k];
        ok = a.adjacent(u, x) == b.adjacent(w, map[static_cast<std::size_t>(x)]);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(u)] = w;
      used.insert(w);
      if (extend(depth + 1)) return true;
      used.erase(w);
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  // Grow the order breadth-first so each new vertex has mapped neighbors.
  IsoSearch search{a, b, {}, std::vector<int>(static_cast<std::size_t>(a.order()), -1), {}};
  VertexSet placed;
  while (placed != a.vertices()) {
    int start = -1;
    for (int v : a.vertices() - placed) {
      if (start < 0 || a.degree(v) > a.degree(start)) start = v;
    }
    std::vector<int> queue{start};
    placed.insert(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int w : a.neighbors(queue[head]) - placed) {
        placed.insert(w);
        queue.push_back(w);
      }
    }
    search.order.insert(search.order.end(), queue.begin(), queue.end());
  }
  return search.extend(0);
}

namespace {

// Colour refinement: returns an isomorphism-invariant colour per vertex.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    if (r == classes) break;
    classes = r;
  }
  return colour;
}

struct CanonSearch {
  const Graph& g;
  std::vector<int> slot_colour;  // colour required at each position
  std::vector<int> colour;
  std::vector<int> placed;       // position -> vertex
  VertexSet used;
  int total_bits = 0;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  // Bits for column j occupy the next j positions below the previously
  // emitted columns, so earlier positions dominate the comparison.
  void run(int pos, std::uint64_t code, int emitted) {
    const int n = g.order();
    if (pos == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    for (int v : g.vertices() - used) {
      if (colour[static_cast<std::size_t>(v)] != slot_colour[static_cast<std::size_t>(pos)]) continue;
      std::uint64_t next = code;
      int e = emitted;
      for (int i = 0; i < pos; ++i, ++e) {
        if (g.adjacent(placed[static_cast<std::size_t>(i)], v)) {
          next |= std::uint64_t{1} << (total_bits - 1 - e);
        }
      }
      if (have_best && e > 0) {
        const int low = total_bits - e;
        const std::uint64_t mask = low >= 64 ? 0 : ~((std::uint64_t{1} << low) - 1);
        if ((next & mask) > (best & mask)) continue;
      }
      placed[static_cast<std::size_t>(pos)] = v;
      used.insert(v);
      run(pos + 1, next, e);
      used.erase(v);
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw CapacityError("canonical_code supports at most 11 vertices");
  CanonSearch search{g, {}, refined_colours(g), std::vector<int>(static_cast<std::size_t>(n)), {}};
  search.slot_colour = search.colour;
  std::sort(search.slot_colour.begin(), search.slot_colour.end());
  search.total_bits = n * (n - 1) / 2;
  search.run(0, 0, 0);
  // Prefix the order so graphs of different sizes never collide.
  return search.best | (static_cast<std::uint64_t>(n) << 56);
}

// --------------------------------------------------------------- BigGraph

BigGraph::BigGraph(std::size_t n) : rows_(n, Row(n)) {}

BigGraph::BigGraph(const Graph& g) : BigGraph(static_cast<std::size_t>(g.order())) {
  for (auto [u, v] : g.edges()) add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
}

void BigGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_.at(u).set(v);
  rows_.at(v).set(u);
}

std::size_t BigGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

BigGraph complement(const BigGraph& g) {
  BigGraph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

BigGraph disjoint_union(const BigGraph& a, const BigGraph& b) {
  BigGraph g(a.order() + b.order());
  for (std::size_t u = 0; u < a.order(); ++u) {
    for (std::size_t v = a.neighbors(u).find_next(u); v != BigGraph::Row::npos; v = a.neighbors(u).find_next(v)) {
      g.add_edge(u, v);
    }
  }
  const std::size_t shift = a.order();
  for (std::size_t u = 0; u < b.order(); ++u) {
    for (std::size_t v = b.neighbors(u).find_next(u); v != BigGraph::Row::npos; v = b.neighbors(u).find_next(v)) {
      g.add_edge(u + shift, v + shift);
    }
  }
  return g;
}

BigGraph glue_triangles(const BigGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = g.neighbors(u).find_next(u); v != BigGraph::Row::npos; v = g.neighbors(u).find_next(v)) {
      edges.emplace_back(u, v);
    }
  }
  BigGraph h(g.order() + edges.size());
  std::size_t apex = g.order();
  for (auto [u, v] : edges) {
    h.add_edge(u, v);
    h.add_edge(u, apex);
    h.add_edge(v, apex);
    ++apex;
  }
  return h;
}

}  // namespace cisgraphs

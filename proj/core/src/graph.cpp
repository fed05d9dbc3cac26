#include "tropmc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "tropmc/errors.hpp"

namespace tropmc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

struct Incidence {
  int to;
  int edge;
};

std::vector<std::vector<Incidence>> adjacency(const Graph& g) {
  std::vector<std::vector<Incidence>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_self_loop()) continue;
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  return adj;
}

// Component id per vertex with edge `skip` removed.
std::vector<int> components(const Graph& g, int skip = -1) {
  UnionFind uf(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == skip) continue;
    uf.unite(g.edges()[i].u, g.edges()[i].v);
  }
  std::vector<int> id(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) id[v] = uf.find(v);
  return id;
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<int> legs,
             std::optional<LegPair> special_legs)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      legs_(std::move(legs)),
      special_(special_legs) {
  if (vertex_count_ < 0) throw ContractError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_)
      throw ContractError("edge endpoint out of range");
  }
  for (int v : legs_) {
    if (v < 0 || v >= vertex_count_) throw ContractError("leg attached to invalid vertex");
  }
  if (special_) {
    auto [a, b] = *special_;
    if (a == b || a < 1 || b < 1 || a > leg_count() || b > leg_count())
      throw ContractError("special legs must be two distinct valid leg labels");
  }
}

Graph Graph::vertex(int k, bool beaded) {
  std::optional<LegPair> special;
  if (beaded) special = LegPair{1, 2};
  return Graph(1, {}, std::vector<int>(static_cast<std::size_t>(k), 0), special);
}

int Graph::leg_vertex(int label) const {
  if (label < 1 || label > leg_count()) throw ContractError("leg label out of range");
  return legs_[static_cast<std::size_t>(label - 1)];
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v : legs_) ++deg[v];
  return deg;
}

bool Graph::is_regular(int k) const {
  auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; });
}

MetricAssignment::MetricAssignment(const Graph& g, std::vector<double> coords)
    : coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(g.edge_count()))
    throw ContractError("metric assignment length differs from edge count");
  for (double x : coords_) {
    if (!(x > 0.0 && x <= 1.0)) throw ContractError("cubical coordinate outside (0,1]");
  }
}

int component_count(const Graph& g) {
  auto id = components(g);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) count += (id[v] == v);
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

int loop_number(const Graph& g) {
  return g.edge_count() - g.vertex_count() + component_count(g);
}

std::vector<int> bridges(const Graph& g) {
  const int n = g.vertex_count();
  auto adj = adjacency(g);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> result;
  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.vertex].size()) {
        Incidence inc = adj[f.vertex][f.next++];
        if (inc.edge == f.parent_edge) continue;
        if (disc[inc.to] < 0) {
          disc[inc.to] = low[inc.to] = timer++;
          stack.push_back({inc.to, inc.edge, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], disc[inc.to]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        int parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > disc[parent]) result.push_back(done.parent_edge);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_one_particle_irreducible(const Graph& g) {
  return is_connected(g) && bridges(g).empty();
}

bool is_beaded(const Graph& g) {
  if (!g.special_legs() || !is_connected(g)) return false;
  int s1 = g.leg_vertex(g.special_legs()->first);
  int s2 = g.leg_vertex(g.special_legs()->second);
  for (int b : bridges(g)) {
    auto id = components(g, b);
    if (id[s1] == id[s2]) return false;
  }
  return true;
}

Graph glue_special_legs(const Graph& g) {
  if (!g.special_legs()) throw ContractError("glue_special_legs needs a special leg pair");
  auto [s1, s2] = *g.special_legs();
  std::vector<Edge> edges = g.edges();
  edges.push_back({g.leg_vertex(s1), g.leg_vertex(s2)});
  std::vector<int> legs;
  legs.reserve(g.legs().size() - 2);
  for (int label = 1; label <= g.leg_count(); ++label) {
    if (label != s1 && label != s2) legs.push_back(g.leg_vertex(label));
  }
  return Graph(g.vertex_count(), std::move(edges), std::move(legs));
}

Graph concatenate_beaded(const Graph& a, const Graph& b, const std::vector<int>& subset) {
  if (a.leg_count() < 2) throw ContractError("head graph needs at least two legs");
  if (!b.special_legs()) throw ContractError("tail graph must be beaded");
  const int n = a.leg_count() + b.leg_count() - 2;
  const int head_plain = a.leg_count() - 2;
  if (static_cast<int>(subset.size()) != head_plain)
    throw ContractError("leg assignment has the wrong cardinality");
  std::vector<char> taken(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    int s = subset[i];
    if (s < 3 || s > n || taken[s] || (i > 0 && subset[i - 1] > s))
      throw ContractError("leg assignment must be sorted distinct labels in 3..n");
    taken[s] = 1;
  }

  const int offset = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  edges.reserve(a.edges().size() + b.edges().size() + 1);
  for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  auto [b1, b2] = *b.special_legs();
  edges.push_back({a.leg_vertex(2), b.leg_vertex(b1) + offset});

  std::vector<int> legs(static_cast<std::size_t>(n));
  legs[0] = a.leg_vertex(1);
  legs[1] = b.leg_vertex(b2) + offset;
  for (int i = 0; i < head_plain; ++i) legs[subset[i] - 1] = a.leg_vertex(i + 3);
  int label = 3;
  for (int bl = 1; bl <= b.leg_count(); ++bl) {
    if (bl == b1 || bl == b2) continue;
    while (taken[label]) ++label;
    legs[label - 1] = b.leg_vertex(bl) + offset;
    ++label;
  }
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges), std::move(legs),
               LegPair{1, 2});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int offset = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  std::vector<int> legs = a.legs();
  for (int v : b.legs()) legs.push_back(v + offset);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges), std::move(legs));
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << "V=" << g.vertex_count() << " E=";
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i) out << ',';
    out << g.edges()[i].u << ':' << g.edges()[i].v;
  }
  out << " LEGS=";
  for (int i = 0; i < g.leg_count(); ++i) {
    if (i) out << ',';
    out << g.legs()[i];
  }
  out << " SPECIAL=";
  if (g.special_legs())
    out << g.special_legs()->first << ',' << g.special_legs()->second;
  else
    out << "none";
  return out.str();
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw FormatError("bad integer '" + std::string(s) + "' in graph text");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) {
    throw FormatError("expected field '" + std::string(key) + "' in graph text");
  }
  return token.substr(key.size());
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> tokens;
  for (auto t : split(text, ' ')) {
    if (!t.empty()) tokens.push_back(t);
  }
  if (tokens.size() < 4) throw FormatError("graph text needs V=, E=, LEGS= and SPECIAL= fields");
  int vertex_count = parse_int(field(tokens[0], "V="));
  std::vector<Edge> edges;
  for (auto item : split(field(tokens[1], "E="), ',')) {
    auto ends = split(item, ':');
    if (ends.size() != 2) throw FormatError("edge must be written u:v");
    edges.push_back({parse_int(ends[0]), parse_int(ends[1])});
  }
  std::vector<int> legs;
  for (auto item : split(field(tokens[2], "LEGS="), ',')) legs.push_back(parse_int(item));
  std::optional<LegPair> special;
  auto sp = field(tokens[3], "SPECIAL=");
  if (sp != "none") {
    auto pair = split(sp, ',');
    if (pair.size() != 2) throw FormatError("SPECIAL must be i,j or none");
    special = LegPair{parse_int(pair[0]), parse_int(pair[1])};
  }
  try {
    return Graph(vertex_count, std::move(edges), std::move(legs), special);
  } catch (const ContractError& e) {
    throw FormatError(std::string("invalid graph text: ") + e.what());
  }
}

}  // namespace tropmc

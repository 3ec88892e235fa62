#include "rootfan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace rootfan {

namespace {

void check_node_count(int node_count) {
  if (node_count < 1 || node_count > kMaxNodes)
    throw std::invalid_argument("node count " + std::to_string(node_count) + " outside 1.." +
                                std::to_string(kMaxNodes));
}

NodeMask bit(int node) { return NodeMask{1} << (node - 1); }

// Nodes reachable from `start` inside `allowed`.
NodeMask reach(const Graph& graph, NodeMask start, NodeMask allowed) {
  NodeMask seen = start;
  NodeMask frontier = start;
  while (frontier != 0) {
    NodeMask next = 0;
    for (NodeMask f = frontier; f != 0; f &= f - 1) next |= graph.neighbors(std::countr_zero(f) + 1);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

NodeSubset NodeSubset::of(std::initializer_list<int> nodes) {
  return of(std::span<const int>(nodes.begin(), nodes.size()));
}

NodeSubset NodeSubset::of(std::span<const int> nodes) {
  NodeMask mask = 0;
  for (int node : nodes) {
    if (node < 1 || node > kMaxNodes) throw std::invalid_argument("node " + std::to_string(node) + " out of range");
    mask |= bit(node);
  }
  return NodeSubset(mask);
}

NodeSubset NodeSubset::full(int node_count) {
  check_node_count(node_count);
  return NodeSubset(node_count == 32 ? ~NodeMask{0} : (NodeMask{1} << node_count) - 1);
}

bool NodeSubset::contains(int node) const {
  return node >= 1 && node <= kMaxNodes && (mask_ & bit(node)) != 0;
}

std::vector<int> NodeSubset::nodes() const {
  std::vector<int> out;
  for (NodeMask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string NodeSubset::str() const {
  std::string out = "{";
  bool first = true;
  for (int node : nodes()) {
    if (!first) out += ',';
    out += std::to_string(node);
    first = false;
  }
  return out + "}";
}

Graph::Graph(int node_count, std::span<const Edge> edges) {
  check_node_count(node_count);
  adjacency_.assign(static_cast<std::size_t>(node_count), 0);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > node_count || e.v < 1 || e.v > node_count)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") references a node outside 1.." + std::to_string(node_count));
    if (e.u == e.v) throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    adjacency_[static_cast<std::size_t>(e.u - 1)] |= bit(e.v);
    adjacency_[static_cast<std::size_t>(e.v - 1)] |= bit(e.u);
  }
}

bool Graph::adjacent(int u, int v) const { return (neighbors(u) & bit(v)) != 0; }

int Graph::edge_count() const {
  int twice = 0;
  for (NodeMask m : adjacency_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= node_count(); ++u)
    for (int v = u + 1; v <= node_count(); ++v)
      if (adjacent(u, v)) out.push_back({u, v});
  return out;
}

NodeSubset Graph::boundary(NodeSubset set) const {
  NodeMask out = 0;
  for (int node : set.nodes()) out |= neighbors(node);
  return NodeSubset(out & ~set.mask());
}

bool Graph::is_connected() const { return is_connected_induced(*this, nodes()); }

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != node_count()) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> used(perm.size() + 1, false);
  for (int p : perm) {
    if (p < 1 || p > node_count() || used[static_cast<std::size_t>(p)])
      throw std::invalid_argument("not a permutation of the node labels");
    used[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Edge> mapped;
  for (const Edge& e : edges())
    mapped.push_back({perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)]});
  return Graph(node_count(), mapped);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int node_count = 0;
  std::vector<Edge> edges;

  auto parse_int = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    return value;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (node_count == 0) {
      if (tokens.size() != 1) throw ParseError(line_no, "expected the node count alone on the first line");
      node_count = parse_int(tokens[0]);
      if (node_count < 1 || node_count > kMaxNodes)
        throw ParseError(line_no, "node count must be in 1.." + std::to_string(kMaxNodes));
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
    const int u = parse_int(tokens[0]);
    const int v = parse_int(tokens[1]);
    if (u < 1 || u > node_count || v < 1 || v > node_count)
      throw ParseError(line_no, "node index outside 1.." + std::to_string(node_count));
    if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
    edges.push_back({u, v});
  }
  if (node_count == 0) throw ParseError(line_no, "empty graph description");
  return Graph(node_count, edges);
}

std::string format_graph(const Graph& graph) {
  std::string out = std::to_string(graph.node_count()) + "\n";
  for (const Edge& e : graph.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph cycle_graph(int node_count) {
  if (node_count < 3) throw std::invalid_argument("cycle graph needs at least 3 nodes");
  std::vector<Edge> edges;
  for (int i = 1; i < node_count; ++i) edges.push_back({i, i + 1});
  edges.push_back({node_count, 1});
  return Graph(node_count, edges);
}

Graph complete_graph(int node_count) {
  check_node_count(node_count);
  std::vector<Edge> edges;
  for (int u = 1; u <= node_count; ++u)
    for (int v = u + 1; v <= node_count; ++v) edges.push_back({u, v});
  return Graph(node_count, edges);
}

Graph path_graph(int node_count) {
  check_node_count(node_count);
  std::vector<Edge> edges;
  for (int i = 1; i < node_count; ++i) edges.push_back({i, i + 1});
  return Graph(node_count, edges);
}

Graph star_graph(int node_count) {
  check_node_count(node_count);
  std::vector<Edge> edges;
  for (int i = 2; i <= node_count; ++i) edges.push_back({1, i});
  return Graph(node_count, edges);
}

bool is_connected_induced(const Graph& graph, NodeSubset subset) {
  if (subset.empty()) throw std::invalid_argument("induced subgraph on the empty set");
  if (!subset.is_subset_of(graph.nodes())) throw std::invalid_argument("subset " + subset.str() + " not in V(G)");
  const NodeMask start = subset.mask() & (~subset.mask() + 1);
  return reach(graph, start, subset.mask()) == subset.mask();
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Depth-first search over node orderings. Position p contributes the bits
// adj(order[q], order[p]) for q < p, so every prefix of the ordering fixes a
// prefix of the key and branches that already exceed the best key are cut.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& graph)
      : graph_(graph), k_(graph.node_count()), order_(static_cast<std::size_t>(k_)) {
    best_.assign(static_cast<std::size_t>(k_ * (k_ - 1) / 2), '2');
    current_.reserve(best_.size());
  }

  std::string run() {
    descend(0, 0);
    return best_;
  }

private:
  void descend(int position, NodeMask used) {
    if (position == k_) {
      if (current_ < best_) best_ = current_;
      return;
    }
    for (int node = 1; node <= k_; ++node) {
      if (used & bit(node)) continue;
      const std::size_t mark = current_.size();
      for (int q = 0; q < position; ++q)
        current_.push_back(graph_.adjacent(order_[static_cast<std::size_t>(q)], node) ? '1' : '0');
      // best_ shrinks during the search, so compare against its current prefix.
      if (best_.compare(0, current_.size(), current_) >= 0) {
        order_[static_cast<std::size_t>(position)] = node;
        descend(position + 1, used | bit(node));
      }
      current_.resize(mark);
    }
  }

  const Graph& graph_;
  int k_;
  std::vector<int> order_;
  std::string best_;
  std::string current_;
};

}  // namespace

CanonicalKey canonical_form(const Graph& graph) {
  if (graph.node_count() > kMaxCanonicalNodes)
    throw std::invalid_argument("canonical form supports at most " + std::to_string(kMaxCanonicalNodes) + " nodes");
  return CanonicalKey(std::to_string(graph.node_count()) + ":" + CanonicalSearch(graph).run());
}

Graph graph_from_key(const CanonicalKey& key) {
  const std::string& s = key.str();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("malformed canonical key '" + s + "'");
  const int k = std::stoi(s.substr(0, colon));
  const std::string bits = s.substr(colon + 1);
  if (k < 1 || static_cast<int>(bits.size()) != k * (k - 1) / 2)
    throw std::invalid_argument("malformed canonical key '" + s + "'");
  std::vector<Edge> edges;
  std::size_t at = 0;
  for (int p = 1; p < k; ++p)
    for (int q = 0; q < p; ++q) {
      const char c = bits[at++];
      if (c == '1')
        edges.push_back({q + 1, p + 1});
      else if (c != '0')
        throw std::invalid_argument("malformed canonical key '" + s + "'");
    }
  return Graph(k, edges);
}

// ---------------------------------------------------------------------------
// Enumeration

std::string_view to_string(EnumerationMode mode) {
  return mode == EnumerationMode::labeled ? "labeled" : "up_to_iso";
}

int enumeration_cap(EnumerationMode mode) {
  return mode == EnumerationMode::labeled ? kMaxLabeledNodes : kMaxUpToIsoNodes;
}

namespace {

void enumerate_labeled(int k, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> slots;
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) slots.push_back({u, v});
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  const NodeMask all = NodeSubset::full(k).mask();

  std::vector<NodeMask> adjacency(static_cast<std::size_t>(k));
  std::vector<Edge> chosen;
  for (std::uint64_t edge_mask = 0; edge_mask < limit; ++edge_mask) {
    std::fill(adjacency.begin(), adjacency.end(), 0);
    for (std::uint64_t m = edge_mask; m != 0; m &= m - 1) {
      const Edge& e = slots[static_cast<std::size_t>(std::countr_zero(m))];
      adjacency[static_cast<std::size_t>(e.u - 1)] |= bit(e.v);
      adjacency[static_cast<std::size_t>(e.v - 1)] |= bit(e.u);
    }
    // Connectivity on raw masks before paying for a Graph.
    NodeMask seen = 1;
    NodeMask frontier = 1;
    while (frontier != 0) {
      NodeMask next = 0;
      for (NodeMask f = frontier; f != 0; f &= f - 1) next |= adjacency[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != all) continue;

    chosen.clear();
    for (std::uint64_t m = edge_mask; m != 0; m &= m - 1)
      chosen.push_back(slots[static_cast<std::size_t>(std::countr_zero(m))]);
    visit(Graph(k, chosen));
  }
}

// Isomorphism classes grown one edge at a time from the empty graph.
void enumerate_up_to_iso(int k, const std::function<void(const Graph&)>& visit) {
  std::set<CanonicalKey> layer{canonical_form(Graph(k))};
  std::set<CanonicalKey> connected;
  while (!layer.empty()) {
    std::set<CanonicalKey> next;
    for (const CanonicalKey& key : layer) {
      const Graph g = graph_from_key(key);
      if (g.is_connected()) connected.insert(key);
      std::vector<Edge> edges = g.edges();
      for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) {
          if (g.adjacent(u, v)) continue;
          edges.push_back({u, v});
          next.insert(canonical_form(Graph(k, edges)));
          edges.pop_back();
        }
    }
    layer = std::move(next);
  }
  for (const CanonicalKey& key : connected) visit(graph_from_key(key));
}

}  // namespace

void for_each_connected_graph(int node_count, EnumerationMode mode,
                              const std::function<void(const Graph&)>& visit) {
  const int cap = enumeration_cap(mode);
  if (node_count < 1 || node_count > cap)
    throw std::invalid_argument(std::string(to_string(mode)) + " enumeration supports 1.." + std::to_string(cap) +
                                " nodes, got " + std::to_string(node_count));
  if (mode == EnumerationMode::labeled)
    enumerate_labeled(node_count, visit);
  else
    enumerate_up_to_iso(node_count, visit);
}

std::vector<Graph> enumerate_connected_graphs(int node_count, EnumerationMode mode) {
  std::vector<Graph> out;
  for_each_connected_graph(node_count, mode, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace rootfan

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rootfan {

using NodeMask = std::uint32_t;

// Nodes are labeled 1..k; bit i-1 of a mask represents node i.
inline constexpr int kMaxNodes = 32;

// Node-count caps for exhaustive enumeration and canonicalization.
inline constexpr int kMaxLabeledNodes = 8;
inline constexpr int kMaxUpToIsoNodes = 7;
inline constexpr int kMaxCanonicalNodes = 8;

class NodeSubset {
public:
  constexpr NodeSubset() = default;
  constexpr explicit NodeSubset(NodeMask mask) : mask_(mask) {}

  static NodeSubset of(std::initializer_list<int> nodes);
  static NodeSubset of(std::span<const int> nodes);
  // [k] = {1, ..., k}
  static NodeSubset full(int node_count);
  static NodeSubset singleton(int node) { return of({node}); }

  constexpr NodeMask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  bool contains(int node) const;
  constexpr bool is_subset_of(NodeSubset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(NodeSubset other) const { return (mask_ & other.mask_) != 0; }

  // Nodes in ascending order.
  std::vector<int> nodes() const;
  // Renders as "{1,2,4}".
  std::string str() const;

  constexpr NodeSubset operator|(NodeSubset rhs) const { return NodeSubset(mask_ | rhs.mask_); }
  constexpr NodeSubset operator&(NodeSubset rhs) const { return NodeSubset(mask_ & rhs.mask_); }
  // Set difference.
  constexpr NodeSubset operator-(NodeSubset rhs) const { return NodeSubset(mask_ & ~rhs.mask_); }

  friend constexpr auto operator<=>(NodeSubset, NodeSubset) = default;

private:
  NodeMask mask_ = 0;
};

struct Edge {
  int u;
  int v;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on nodes 1..k, one neighbor mask per node.
// Immutable once constructed.
class Graph {
public:
  // Throws std::invalid_argument on a node out of range or a self-loop.
  // Duplicate edges are merged.
  Graph(int node_count, std::span<const Edge> edges);
  Graph(int node_count, std::initializer_list<Edge> edges)
      : Graph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}
  explicit Graph(int node_count) : Graph(node_count, std::span<const Edge>{}) {}

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  NodeSubset nodes() const { return NodeSubset::full(node_count()); }
  NodeMask neighbors(int node) const { return adjacency_.at(static_cast<std::size_t>(node - 1)); }
  bool adjacent(int u, int v) const;
  int degree(int node) const { return std::popcount(neighbors(node)); }
  int edge_count() const;
  // Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  // Neighbors of any node in `set`, outside `set`.
  NodeSubset boundary(NodeSubset set) const;
  bool is_connected() const;

  // The graph whose node perm[i-1] is adjacent to perm[j-1] iff i is adjacent to j here.
  // `perm` is a permutation of 1..k.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<NodeMask> adjacency_;
};

// Error in the textual graph format; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Text format: first non-comment line is the node count k, each further
// line is an edge "u v". Blank lines and lines starting with '#' are skipped.
Graph parse_graph(std::string_view text);
// Inverse of parse_graph for a normalized graph.
std::string format_graph(const Graph& graph);

Graph cycle_graph(int node_count);
Graph complete_graph(int node_count);
Graph path_graph(int node_count);
// Center is node 1.
Graph star_graph(int node_count);

// Whether the induced subgraph G|S is connected. Throws on empty S.
bool is_connected_induced(const Graph& graph, NodeSubset subset);

// Canonical isomorphism key: the lexicographically smallest upper-triangle
// adjacency string over all node orderings, prefixed by the node count, e.g.
// "3:011". Two graphs have equal keys iff they are isomorphic.
class CanonicalKey {
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string value) : value_(std::move(value)) {}
  const std::string& str() const { return value_; }
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
  std::string value_;
};

CanonicalKey canonical_form(const Graph& graph);
// The graph whose adjacency string is exactly the key.
Graph graph_from_key(const CanonicalKey& key);

enum class EnumerationMode { labeled, up_to_iso };

std::string_view to_string(EnumerationMode mode);

// Visits every connected graph on `node_count` nodes. Labeled mode goes by
// edge-set bitmask ascending (edge bit order (1,2),(1,3),...,(k-1,k));
// up_to_iso mode yields the canonical representative of each class, by key.
void for_each_connected_graph(int node_count, EnumerationMode mode,
                              const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_connected_graphs(int node_count, EnumerationMode mode);

int enumeration_cap(EnumerationMode mode);

}  // namespace rootfan

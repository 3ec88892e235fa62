#include "rootfan/buildset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace rootfan {

BuildingSet::BuildingSet(NodeSubset ground, std::vector<NodeSubset> members)
    : ground_(ground), members_(std::move(members)) {
  for (NodeSubset s : members_) {
    if (s.empty()) throw std::invalid_argument("the empty set is not a building-set member");
    if (!s.is_subset_of(ground_))
      throw std::invalid_argument("member " + s.str() + " is not a subset of " + ground_.str());
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool BuildingSet::contains(NodeSubset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool BuildingSet::is_well_formed() const {
  if (!contains(ground_)) return false;
  for (int node : ground_.nodes())
    if (!contains(NodeSubset::singleton(node))) return false;
  for (std::size_t a = 0; a < members_.size(); ++a)
    for (std::size_t b = a + 1; b < members_.size(); ++b)
      if (members_[a].intersects(members_[b]) && !contains(members_[a] | members_[b])) return false;
  return true;
}

BuildingSet building_set(const Graph& graph) {
  if (!graph.is_connected()) throw std::invalid_argument("building set of a disconnected graph");
  std::unordered_set<NodeMask> seen;
  std::vector<NodeSubset> stack;
  for (int node = 1; node <= graph.node_count(); ++node) {
    const NodeSubset s = NodeSubset::singleton(node);
    seen.insert(s.mask());
    stack.push_back(s);
  }
  std::vector<NodeSubset> members;
  while (!stack.empty()) {
    const NodeSubset current = stack.back();
    stack.pop_back();
    members.push_back(current);
    for (int node : graph.boundary(current).nodes()) {
      const NodeSubset grown = current | NodeSubset::singleton(node);
      if (seen.insert(grown.mask()).second) stack.push_back(grown);
    }
  }
  return BuildingSet(graph.nodes(), std::move(members));
}

bool complement_closed(const BuildingSet& set) {
  for (NodeSubset s : set.members())
    if (s != set.ground() && !set.contains(set.ground() - s)) return false;
  return true;
}

FacetVector::FacetVector(IntVector coords) : coords_(std::move(coords)) {
  int sign = 0;
  std::int64_t g = 0;
  for (std::int64_t c : coords_) {
    if (c < -1 || c > 1) throw std::invalid_argument("facet vector coordinate outside {-1,0,1}");
    if (c == 0) continue;
    if (sign != 0 && c != sign) throw std::invalid_argument("facet vector with mixed signs");
    sign = static_cast<int>(c);
    g = std::gcd(g, c);
  }
  if (sign == 0) throw std::invalid_argument("zero facet vector");
  if (g != 1) throw std::invalid_argument("facet vector is not primitive");
}

FacetVector facet_vector(NodeSubset subset, int node_count) {
  if (node_count < 2) throw std::invalid_argument("facet vectors need at least 2 nodes");
  const NodeSubset all = NodeSubset::full(node_count);
  if (subset.empty()) throw std::invalid_argument("facet vector of the empty set");
  if (!subset.is_subset_of(all)) throw std::invalid_argument("subset " + subset.str() + " outside V(G)");
  if (subset == all) throw std::invalid_argument("the full node set has no facet");

  // Σ_{i∈I} e_i with e_k = -Σ e_j equals the indicator of I when k ∉ I and
  // minus the indicator of the complement otherwise.
  const int n = node_count - 1;
  const bool has_last = subset.contains(node_count);
  const NodeSubset support = has_last ? all - subset : subset;
  IntVector coords(static_cast<std::size_t>(n), 0);
  for (int node : support.nodes()) coords[static_cast<std::size_t>(node - 1)] = has_last ? -1 : 1;
  return FacetVector(std::move(coords));
}

VectorSet facet_vectors(const BuildingSet& set) {
  const int k = set.node_count();
  if (k < 2) throw std::invalid_argument("facet vectors need at least 2 nodes");
  if (set.ground() != NodeSubset::full(k)) throw std::invalid_argument("ground set must be [k]");
  std::vector<IntVector> out;
  out.reserve(set.size());
  for (NodeSubset s : set.members())
    if (s != set.ground()) out.push_back(facet_vector(s, k).coords());
  return VectorSet(k - 1, std::move(out));
}

VectorSet facet_vectors(const Graph& graph) {
  if (graph.node_count() < 2) throw std::invalid_argument("facet vectors need at least 2 nodes");
  return facet_vectors(building_set(graph));
}

VectorSet facet_vectors_complete(int rank) {
  if (rank < 1 || rank >= 31) throw std::invalid_argument("rank out of range");
  std::vector<IntVector> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << rank); ++mask) {
    IntVector v(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1) v[static_cast<std::size_t>(i)] = 1;
    out.push_back(negate(v));
    out.push_back(std::move(v));
  }
  return VectorSet(rank, std::move(out));
}

VectorSet facet_vectors_cycle(int rank) {
  if (rank < 2) throw std::invalid_argument("cycle closed form needs rank >= 2");
  std::vector<IntVector> out;
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) {
      IntVector v(static_cast<std::size_t>(rank), 0);
      std::fill(v.begin() + i, v.begin() + j + 1, 1);
      out.push_back(negate(v));
      out.push_back(std::move(v));
    }
  return VectorSet(rank, std::move(out));
}

bool centrally_symmetric(const VectorSet& set) {
  return std::all_of(set.begin(), set.end(), [&](const IntVector& v) { return set.contains(negate(v)); });
}

nlohmann::json to_json(const BuildingSet& set) {
  nlohmann::json members = nlohmann::json::array();
  for (NodeSubset s : set.members()) members.push_back(s.nodes());
  return {{"ground", set.ground().nodes()}, {"members", members}};
}

}  // namespace rootfan

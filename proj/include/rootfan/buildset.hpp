#pragma once

#include <vector>

#include "rootfan/graph.hpp"
#include "rootfan/vector_set.hpp"

namespace rootfan {

// A family of nonempty node subsets of a ground set, sorted by mask.
//
// For a connected graph G the graphical building set B(G) holds every
// nonempty S with G|S connected. The constructor only checks that members
// are nonempty subsets of the ground set; is_well_formed() checks the full
// building-set axioms, so deliberately broken families stay representable.
class BuildingSet {
public:
  BuildingSet(NodeSubset ground, std::vector<NodeSubset> members);

  NodeSubset ground() const { return ground_; }
  int node_count() const { return ground_.size(); }
  const std::vector<NodeSubset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(NodeSubset s) const;

  // Singletons and the ground set present, and I ∪ J present whenever
  // I, J are members that intersect.
  bool is_well_formed() const;

  friend bool operator==(const BuildingSet&, const BuildingSet&) = default;

private:
  NodeSubset ground_;
  std::vector<NodeSubset> members_;
};

// Connected node subsets of G, grown from singletons by adding one boundary
// node at a time. Throws std::invalid_argument if G is disconnected.
BuildingSet building_set(const Graph& graph);

// Every member other than the ground set has its complement as a member.
bool complement_closed(const BuildingSet& set);

// Primitive inward facet normal in Z^n, n = k - 1. Coordinates lie in
// {-1, 0, 1} and all nonzero ones share a sign.
class FacetVector {
public:
  // Throws std::invalid_argument if the coordinates violate the invariants.
  explicit FacetVector(IntVector coords);
  const IntVector& coords() const { return coords_; }
  int dimension() const { return static_cast<int>(coords_.size()); }
  friend bool operator==(const FacetVector&, const FacetVector&) = default;

private:
  IntVector coords_;
};

// α_I = Σ_{i∈I} e_i, where e_k stands for -(e_1 + ... + e_{k-1}).
// Requires ∅ ≠ I ⊊ [k] and k ≥ 2.
FacetVector facet_vector(NodeSubset subset, int node_count);

// { α_I : I a member other than the ground set }.
VectorSet facet_vectors(const BuildingSet& set);
// Throws std::invalid_argument for a single node or a disconnected graph.
VectorSet facet_vectors(const Graph& graph);

// Closed form for the complete graph on n + 1 nodes: ±Σ_{i∈I} e_i over
// nonempty I ⊆ [n].
VectorSet facet_vectors_complete(int rank);
// Closed form for the cycle on n + 1 nodes: ±(e_i + ... + e_j), 1 ≤ i ≤ j ≤ n.
VectorSet facet_vectors_cycle(int rank);

// R == -R.
bool centrally_symmetric(const VectorSet& set);

nlohmann::json to_json(const BuildingSet& set);

}  // namespace rootfan

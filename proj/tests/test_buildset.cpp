#include <doctest.h>

#include "oracles.hpp"
#include "rootfan/buildset.hpp"

using namespace rootfan;

namespace {

std::vector<NodeSubset> subsets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<NodeSubset> out;
  for (auto l : lists) out.push_back(NodeSubset::of(l));
  return out;
}

VectorSet vectors(int n, std::vector<IntVector> v) { return VectorSet(n, std::move(v)); }

}  // namespace

TEST_CASE("building_set of small graphs") {
  const BuildingSet k3 = building_set(complete_graph(3));
  CHECK(k3.size() == 7);

  const BuildingSet p3 = building_set(path_graph(3));
  CHECK(p3.members() == subsets({{1}, {2}, {1, 2}, {3}, {2, 3}, {1, 2, 3}}));

  const BuildingSet c4 = building_set(cycle_graph(4));
  CHECK(c4.size() == 13);
  CHECK_FALSE(c4.contains(NodeSubset::of({1, 3})));
  CHECK_FALSE(c4.contains(NodeSubset::of({2, 4})));

  CHECK_THROWS_AS(building_set(Graph(3, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("building_set matches filtering every subset") {
  for (int k = 1; k <= 6; ++k)
    for_each_connected_graph(k, EnumerationMode::up_to_iso, [&](const Graph& g) {
      const BuildingSet b = building_set(g);
      std::vector<NodeMask> ours;
      for (NodeSubset s : b.members()) ours.push_back(s.mask());
      REQUIRE(ours == oracle::building_set_masks(g));
    });
}

TEST_CASE("building sets are closed under intersecting unions") {
  for (int k = 1; k <= 7; ++k)
    for_each_connected_graph(k, EnumerationMode::up_to_iso,
                             [&](const Graph& g) { REQUIRE(building_set(g).is_well_formed()); });
}

TEST_CASE("BuildingSet validation") {
  CHECK_THROWS_AS(BuildingSet(NodeSubset::full(3), {NodeSubset()}), std::invalid_argument);
  CHECK_THROWS_AS(BuildingSet(NodeSubset::full(3), {NodeSubset::of({4})}), std::invalid_argument);
  // Missing {1,2} ∪ {2,3}.
  const BuildingSet broken(NodeSubset::full(3), subsets({{1}, {2}, {3}, {1, 2}, {2, 3}}));
  CHECK_FALSE(broken.is_well_formed());
}

TEST_CASE("complement_closed") {
  CHECK(complement_closed(building_set(complete_graph(3))));
  CHECK_FALSE(complement_closed(building_set(path_graph(3))));
  CHECK(complement_closed(building_set(cycle_graph(4))));
  CHECK_FALSE(complement_closed(building_set(star_graph(4))));
}

TEST_CASE("facet_vector") {
  CHECK(facet_vector(NodeSubset::of({2}), 3).coords() == IntVector{0, 1});
  CHECK(facet_vector(NodeSubset::of({3}), 3).coords() == IntVector{-1, -1});
  CHECK(facet_vector(NodeSubset::of({2, 3}), 3).coords() == IntVector{-1, 0});
  CHECK(facet_vector(NodeSubset::of({1, 2}), 3).coords() == IntVector{1, 1});

  CHECK_THROWS_AS(facet_vector(NodeSubset(), 3), std::invalid_argument);
  CHECK_THROWS_AS(facet_vector(NodeSubset::full(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(facet_vector(NodeSubset::of({4}), 3), std::invalid_argument);
  CHECK_THROWS_AS(facet_vector(NodeSubset::of({1}), 1), std::invalid_argument);
}

TEST_CASE("facet_vector agrees with summing basis vectors and negates on complements") {
  for (int k = 2; k <= 8; ++k) {
    const NodeSubset all = NodeSubset::full(k);
    for (NodeMask m = 1; m < all.mask(); ++m) {
      const NodeSubset s(m);
      const IntVector v = facet_vector(s, k).coords();
      REQUIRE(v == oracle::facet_vector_by_sum(m, k));
      REQUIRE(facet_vector(all - s, k).coords() == negate(v));
    }
  }
}

TEST_CASE("FacetVector invariants") {
  CHECK_THROWS_AS(FacetVector({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FacetVector({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(FacetVector({2, 0}), std::invalid_argument);
  CHECK_NOTHROW(FacetVector({-1, 0, -1}));
}

TEST_CASE("facet_vectors of small graphs") {
  CHECK(facet_vectors(complete_graph(3)) == vectors(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}));
  CHECK(facet_vectors(path_graph(3)) == vectors(2, {{1, 0}, {-1, 0}, {0, 1}, {1, 1}, {-1, -1}}));
  CHECK(facet_vectors(cycle_graph(4)) == vectors(3, {{1, 0, 0},
                                                     {-1, 0, 0},
                                                     {0, 1, 0},
                                                     {0, -1, 0},
                                                     {0, 0, 1},
                                                     {0, 0, -1},
                                                     {1, 1, 0},
                                                     {-1, -1, 0},
                                                     {0, 1, 1},
                                                     {0, -1, -1},
                                                     {1, 1, 1},
                                                     {-1, -1, -1}}));
  CHECK(facet_vectors(complete_graph(2)) == vectors(1, {{1}, {-1}}));
  CHECK_THROWS_AS(facet_vectors(Graph(1)), std::invalid_argument);
}

TEST_CASE("|F(G)| = |B(G)| - 1") {
  for (int k = 2; k <= 6; ++k)
    for_each_connected_graph(k, EnumerationMode::up_to_iso,
                             [&](const Graph& g) { REQUIRE(facet_vectors(g).size() + 1 == building_set(g).size()); });
}

TEST_CASE("closed forms") {
  CHECK(facet_vectors_complete(2) == vectors(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}));
  CHECK(facet_vectors_cycle(3) == facet_vectors(cycle_graph(4)));
  for (int n = 1; n <= 10; ++n) CHECK(facet_vectors_complete(n).size() == (std::size_t{1} << (n + 1)) - 2);
  for (int n = 2; n <= 10; ++n) CHECK(facet_vectors_cycle(n).size() == static_cast<std::size_t>(n * (n + 1)));
  for (int n = 1; n <= 6; ++n) CHECK(facet_vectors_complete(n) == facet_vectors(complete_graph(n + 1)));
  for (int n = 2; n <= 7; ++n) CHECK(facet_vectors_cycle(n) == facet_vectors(cycle_graph(n + 1)));
  CHECK_THROWS_AS(facet_vectors_cycle(1), std::invalid_argument);
  CHECK_THROWS_AS(facet_vectors_complete(0), std::invalid_argument);
}

TEST_CASE("facet_vectors_complete is every single-signed 0/±1 vector") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<IntVector> expected;
    IntVector v(static_cast<std::size_t>(n), -1);
    while (true) {
      bool pos = false, neg = false;
      for (auto c : v) {
        pos = pos || c > 0;
        neg = neg || c < 0;
      }
      if (pos != neg) expected.push_back(v);
      std::size_t i = 0;
      while (i < v.size() && v[i] == 1) v[i++] = -1;
      if (i == v.size()) break;
      ++v[i];
    }
    CHECK(facet_vectors_complete(n) == VectorSet(n, expected));
  }
}

TEST_CASE("centrally_symmetric") {
  CHECK(centrally_symmetric(facet_vectors(complete_graph(3))));
  CHECK_FALSE(centrally_symmetric(facet_vectors(path_graph(3))));
  CHECK(centrally_symmetric(facet_vectors(cycle_graph(4))));
  CHECK(centrally_symmetric(VectorSet(2)));
}

TEST_CASE("central symmetry of F(G) is equivalent to complement closure of B(G)") {
  for (int k = 2; k <= 7; ++k)
    for_each_connected_graph(k, EnumerationMode::up_to_iso, [&](const Graph& g) {
      const BuildingSet b = building_set(g);
      REQUIRE(centrally_symmetric(facet_vectors(b)) == complement_closed(b));
    });
}

TEST_CASE("VectorSet ordering and serialization") {
  const VectorSet s(2, {{1, 0}, {-1, 0}, {0, 1}, {1, 0}});
  CHECK(s.size() == 3);
  CHECK(to_text(s) == "-1 0\n0 1\n1 0\n");
  CHECK(to_json(s).dump() == "[[-1,0],[0,1],[1,0]]");
  CHECK(vector_set_from_json(to_json(s), 2) == s);
  CHECK_THROWS_AS(VectorSet(2, {{1, 0, 0}}), std::invalid_argument);
}

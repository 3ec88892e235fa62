#include <doctest.h>

#include "oracles.hpp"
#include "rootfan/buildset.hpp"
#include "rootfan/rootsys.hpp"

using namespace rootfan;

namespace {

RationalVector rationals(std::initializer_list<std::int64_t> values) { return RationalVector(values.begin(), values.end()); }

void check_witness(const VectorSet& roots, const CorootFunctional& f) {
  CHECK(f(f.root) == Rational(2));
  for (const IntVector& beta : roots) {
    const Rational value = f(beta);
    REQUIRE(value.is_integer());
    const IntVector image = f.reflect(beta);
    REQUIRE(roots.contains(image));
    REQUIRE(f.reflect(image) == beta);
  }
}

}  // namespace

TEST_CASE("find_coroot examples") {
  const VectorSet k3 = facet_vectors(complete_graph(3));
  const auto f = find_coroot(k3, {1, 0});
  REQUIRE(f);
  CHECK(f->values == rationals({2, -1}));
  CHECK(oracle::integer_coroots(k3, {1, 0}, 3) == std::vector<IntVector>{{2, -1}});

  const VectorSet k4 = facet_vectors(complete_graph(4));
  CHECK_FALSE(find_coroot(k4, {1, 1, 1}));
  CHECK(oracle::integer_coroots(k4, {1, 1, 1}, 3).empty());

  const VectorSet c4 = facet_vectors(cycle_graph(4));
  const auto g = find_coroot(c4, {1, 0, 0});
  REQUIRE(g);
  CHECK(g->values == rationals({2, -1, 0}));
  CHECK(oracle::integer_coroots(c4, {1, 0, 0}, 3) == std::vector<IntVector>{{2, -1, 0}});

  CHECK_THROWS_AS(find_coroot(c4, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(find_coroot(VectorSet(2, {{1, 0}, {-1, 0}}), {1, 0}), std::invalid_argument);
}

TEST_CASE("find_coroot agrees with exhaustive integer search on facet sets") {
  // Every facet set contains e_1..e_n, so any coroot is integral; strings are
  // short enough that values stay within ±3.
  for (const VectorSet& r : {facet_vectors(cycle_graph(5)), facet_vectors(complete_graph(4)),
                             facet_vectors(cycle_graph(4)), facet_vectors(complete_graph(5))})
    for (const IntVector& alpha : r) {
      const auto ours = find_coroot(r, alpha);
      const auto theirs = oracle::integer_coroots(r, alpha, 3);
      REQUIRE(theirs.size() <= 1);
      REQUIRE(ours.has_value() == !theirs.empty());
      if (ours) {
        IntVector as_int;
        for (const Rational& v : ours->values) as_int.push_back(v.to_integer());
        CHECK(as_int == theirs.front());
      }
    }
}

TEST_CASE("is_root_system verdicts") {
  const auto c4 = is_root_system(facet_vectors(cycle_graph(4)));
  CHECK(c4.is_root_system);
  CHECK(c4.failure_reason == FailureReason::none);
  CHECK(c4.coroots.size() == 12);

  const auto k4 = is_root_system(facet_vectors(complete_graph(4)));
  CHECK_FALSE(k4.is_root_system);
  CHECK(k4.failure_reason == FailureReason::no_coroot);
  REQUIRE(k4.witness);
  CHECK(*k4.witness == IntVector{1, 1, 1});
  CHECK(k4.coroots.empty());

  const auto p3 = is_root_system(facet_vectors(path_graph(3)));
  CHECK(p3.failure_reason == FailureReason::not_centrally_symmetric);
  CHECK(*p3.witness == IntVector{0, 1});

  CHECK(is_root_system(facet_vectors(complete_graph(3))).is_root_system);

  CHECK(is_root_system(VectorSet(2, {{0, 0}, {1, 0}, {-1, 0}})).failure_reason == FailureReason::zero_vector);
  CHECK(is_root_system(VectorSet(2, {{1, 0}, {-1, 0}})).failure_reason == FailureReason::not_spanning);
  CHECK(is_root_system(VectorSet(1, {})).failure_reason == FailureReason::not_spanning);
  const auto bc1 = is_root_system(VectorSet(1, {{1}, {-1}, {2}, {-2}}));
  CHECK(bc1.failure_reason == FailureReason::non_reduced);
}

TEST_CASE("coroot witnesses hold on known root systems") {
  for (const VectorSet& r : {facet_vectors(cycle_graph(6)), oracle::root_system_B(3), oracle::root_system_C(3),
                             oracle::root_system_D(4), oracle::root_system_G2(), oracle::root_system_F4()}) {
    const auto verdict = is_root_system(r);
    REQUIRE(verdict.is_root_system);
    REQUIRE(verdict.coroots.size() == r.size());
    for (const auto& [alpha, f] : verdict.coroots) {
      CHECK(f.root == alpha);
      check_witness(r, f);
    }
  }
}

TEST_CASE("a symmetric spanning set without reflections fails on coroots") {
  // Three root pairs in rank 2 would have to form A_2, but (1,2) is no sum.
  const VectorSet r(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 2}, {-1, -2}});
  CHECK(is_root_system(r).failure_reason == FailureReason::no_coroot);
  for (const IntVector& alpha : r) CHECK(oracle::integer_coroots(r, alpha, 4).empty() == !find_coroot(r, alpha));

  // Adding ±(1,1) closes it up into B_2.
  const VectorSet b2(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, 2}, {-1, -2}});
  CHECK(is_root_system(b2).is_root_system);
}

TEST_CASE("positive_roots") {
  const VectorSet c4 = facet_vectors(cycle_graph(4));
  CHECK(positive_roots(c4) == VectorSet(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}}));
  CHECK(positive_roots(facet_vectors(complete_graph(3))) == VectorSet(2, {{1, 0}, {0, 1}, {1, 1}}));
  for (int k = 3; k <= 7; ++k) {
    const VectorSet r = facet_vectors(cycle_graph(k));
    CHECK(positive_roots(r).size() * 2 == r.size());
  }
  CHECK_THROWS_AS(positive_roots(facet_vectors(path_graph(3))), std::invalid_argument);
  CHECK_THROWS_AS(positive_roots(VectorSet(1, {{0}})), std::invalid_argument);
}

TEST_CASE("simple_roots") {
  CHECK(simple_roots(positive_roots(facet_vectors(cycle_graph(4)))) ==
        std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(simple_roots(positive_roots(facet_vectors(complete_graph(3)))) == std::vector<IntVector>{{0, 1}, {1, 0}});
}

TEST_CASE("cartan_matrix") {
  const VectorSet c4 = facet_vectors(cycle_graph(4));
  const auto verdict = is_root_system(c4);
  // Base in set order: e_3, e_2, e_1.
  const auto base = simple_roots(positive_roots(c4));
  CHECK(cartan_matrix(base, verdict.coroots).entries() ==
        std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  const std::vector<IntVector> ordered{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(cartan_matrix(ordered, verdict.coroots).entries() ==
        std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});

  const VectorSet k3 = facet_vectors(complete_graph(3));
  CHECK(cartan_matrix(simple_roots(positive_roots(k3)), is_root_system(k3).coroots).entries() ==
        std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  const VectorSet a1(1, {{1}, {-1}});
  CHECK(cartan_matrix({{1}}, is_root_system(a1).coroots).entries() == std::vector<std::vector<int>>{{2}});
  CHECK_THROWS_AS(cartan_matrix({{2}}, is_root_system(a1).coroots), std::invalid_argument);
}

TEST_CASE("CartanMatrix invariants") {
  CHECK_THROWS_AS(CartanMatrix({{2, -1}, {0, 2}}), std::logic_error);
  CHECK_THROWS_AS(CartanMatrix({{2, 1}, {1, 2}}), std::logic_error);
  CHECK_THROWS_AS(CartanMatrix(std::vector<std::vector<int>>{{1}}), std::logic_error);
  CHECK_THROWS_AS(CartanMatrix({{2, -2}, {-2, 2}}), std::logic_error);
  CHECK_NOTHROW(CartanMatrix({{2, -1}, {-3, 2}}));
}

TEST_CASE("irreducible_components") {
  const VectorSet c4 = facet_vectors(cycle_graph(4));
  const auto verdict = is_root_system(c4);
  const CartanMatrix a = cartan_matrix(simple_roots(positive_roots(c4)), verdict.coroots);
  CHECK(irreducible_components(a) == std::vector<std::vector<int>>{{0, 1, 2}});

  const VectorSet a1a1(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  const auto v = is_root_system(a1a1);
  REQUIRE(v.is_root_system);
  const CartanMatrix b = cartan_matrix(simple_roots(positive_roots(a1a1)), v.coroots);
  CHECK(b.entries() == std::vector<std::vector<int>>{{2, 0}, {0, 2}});
  CHECK(irreducible_components(b) == std::vector<std::vector<int>>{{0}, {1}});

  const CartanMatrix mixed({{2, 0, -1}, {0, 2, 0}, {-1, 0, 2}});
  const auto parts = irreducible_components(mixed);
  CHECK(parts == std::vector<std::vector<int>>{{0, 2}, {1}});
}

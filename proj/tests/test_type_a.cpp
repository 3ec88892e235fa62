#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "rootfan/buildset.hpp"
#include "rootfan/dynkin.hpp"
#include "rootfan/type_a.hpp"

using namespace rootfan;

TEST_CASE("standard_An") {
  CHECK(standard_An(1) == VectorSet(2, {{1, -1}, {-1, 1}}));
  for (int n = 1; n <= 8; ++n) {
    const VectorSet r = standard_An(n);
    CHECK(r.dimension() == n + 1);
    CHECK(r.size() == static_cast<std::size_t>(n * (n + 1)));
    for (const IntVector& v : r) CHECK(std::accumulate(v.begin(), v.end(), std::int64_t{0}) == 0);
  }
  CHECK_THROWS_AS(standard_An(0), std::invalid_argument);
}

TEST_CASE("cycle_to_An_map") {
  CHECK(cycle_to_An_map({1, 1}) == IntVector{1, 0, -1});
  CHECK(cycle_to_An_map({1, 0, 0}) == IntVector{1, -1, 0, 0});
  CHECK(cycle_to_An_map({0, 0}) == IntVector{0, 0, 0});
  CHECK(cycle_to_An_map({0, 1, 1}) == IntVector{0, 1, 0, -1});
}

TEST_CASE("cycle facets map bijectively onto A_n") {
  for (int n = 2; n <= 10; ++n) {
    const VectorSet f = facet_vectors_cycle(n);
    const VectorSet image = f.transformed(n + 1, cycle_to_An_map);
    CHECK(image.size() == f.size());
    CHECK(image == standard_An(n));
  }
}

TEST_CASE("classify(standard_An) = A_n") {
  for (int n = 1; n <= 6; ++n) {
    // Drop the last coordinate, which is determined by the others.
    const VectorSet r = standard_An(n).transformed(n, [](const IntVector& v) { return IntVector(v.begin(), v.end() - 1); });
    CHECK(classify(r) == RootSystemType({{Family::A, n}}));
  }
}

TEST_CASE("fundamental weights") {
  CHECK(fundamental_weight(1, 2) == RationalVector{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});
  CHECK(project_to_quotient(fundamental_weight(1, 2)) == RationalVector{Rational(1), Rational(0)});
  CHECK_THROWS_AS(fundamental_weight(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_weight(4, 3), std::invalid_argument);
}

TEST_CASE("permutation orbits have binomial size") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      CHECK(permutation_orbit(fundamental_weight(i, n)).size() == oracle::binomial(n + 1, i));
}

TEST_CASE("Weyl orbit of fundamental weights is F(K_{n+1})") {
  for (int n = 1; n <= 6; ++n) {
    const VectorSet orbit = weyl_orbit_fundamental_weights(n);
    CHECK(orbit == facet_vectors_complete(n));
    CHECK(orbit == facet_vectors(complete_graph(n + 1)));
  }
}

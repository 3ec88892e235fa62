#pragma once

#include <optional>
#include <vector>

#include "rootfan/rational.hpp"
#include "rootfan/vector_set.hpp"

namespace rootfan {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RationalVector to_rational(const IntVector& v);
Rational dot(const RationalVector& a, const IntVector& b);

// Rank over Q of the given rows.
int rank(const std::vector<IntVector>& rows);

// Indices of the greedy maximal independent prefix: row i is kept when it is
// independent of the rows kept before it.
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows);

// Inverse of a square matrix over Q, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace rootfan

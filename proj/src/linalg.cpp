#include "rootfan/linalg.hpp"

#include <stdexcept>

namespace rootfan {

RationalVector to_rational(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) sum += a[i] * Rational(b[i]);
  return sum;
}

namespace {

// Reduces `row` against the echelon rows; returns true if something is left.
bool reduce_into(std::vector<RationalVector>& echelon, std::vector<std::size_t>& pivots, RationalVector row) {
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    const std::size_t p = pivots[r];
    if (row[p].is_zero()) continue;
    const Rational factor = row[p] / echelon[r][p];
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!echelon[r][c].is_zero()) row[c] -= factor * echelon[r][c];
  }
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) {
      pivots.push_back(c);
      echelon.push_back(std::move(row));
      return true;
    }
  return false;
}

}  // namespace

std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows) {
  std::vector<RationalVector> echelon;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (reduce_into(echelon, pivots, to_rational(rows[i]))) kept.push_back(i);
  return kept;
}

int rank(const std::vector<IntVector>& rows) { return static_cast<int>(independent_rows(rows).size()); }

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("inverse: matrix is not square");

  RationalMatrix a = m;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= scale;
      inv[col][c] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace rootfan

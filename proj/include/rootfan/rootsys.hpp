#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "rootfan/linalg.hpp"
#include "rootfan/vector_set.hpp"

namespace rootfan {

// Linear functional f on Q^n that, together with its root α, witnesses the
// reflection s_α(β) = β - f(β)α:
//   f(α) = 2, and for every β in R, f(β) ∈ Z and β - f(β)α ∈ R.
struct CorootFunctional {
  IntVector root;
  RationalVector values;  // f(e_1), ..., f(e_n)

  Rational operator()(const IntVector& v) const { return dot(values, v); }
  // β - f(β)α; throws std::domain_error if f(β) is not an integer.
  IntVector reflect(const IntVector& v) const;
};

enum class FailureReason {
  none,
  zero_vector,
  not_spanning,
  non_reduced,
  not_centrally_symmetric,
  no_coroot,
};

std::string_view to_string(FailureReason reason);

struct RootSystemVerdict {
  bool is_root_system = false;
  FailureReason failure_reason = FailureReason::none;
  // The offending vector for non-reduced, not-centrally-symmetric and no-coroot.
  std::optional<IntVector> witness;
  std::map<IntVector, CorootFunctional> coroots;
};

// Searches for the reflection witness of α. Candidate values for f on each
// basis vector β_t are the integers c with β_t - cα ∈ R, tried in ascending
// order; the basis is the first maximal independent prefix of R.
// Throws std::invalid_argument if α ∉ R or R does not span Q^n.
std::optional<CorootFunctional> find_coroot(const VectorSet& roots, const IntVector& alpha);

// Crystallographic reduced root system test. Checks, in order: 0 ∉ R,
// R spans, R reduced, R = -R, then a coroot for every α.
RootSystemVerdict is_root_system(const VectorSet& roots);

// Elements whose first nonzero coordinate is positive.
// Throws std::invalid_argument unless R = -R and 0 ∉ R.
VectorSet positive_roots(const VectorSet& roots);

// Positive roots that are not the sum of two positive roots, in set order.
// Throws std::logic_error when their count differs from the rank.
std::vector<IntVector> simple_roots(const VectorSet& positives);

// A[i][j] = f_{α_j}(α_i) over a base α_1, ..., α_m.
class CartanMatrix {
public:
  // Throws std::logic_error unless the diagonal is 2, off-diagonal entries are
  // ≤ 0, zeros are symmetric and every A[i][j]·A[j][i] lies in {0,1,2,3}.
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  // Principal submatrix on the given indices, in that order.
  CartanMatrix restricted(const std::vector<int>& indices) const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
  std::vector<std::vector<int>> entries_;
};

CartanMatrix cartan_matrix(const std::vector<IntVector>& base,
                           const std::map<IntVector, CorootFunctional>& coroots);

// Connected components of the Dynkin graph (i ~ j iff A[i][j] ≠ 0), each
// sorted, ordered by smallest index.
std::vector<std::vector<int>> irreducible_components(const CartanMatrix& cartan);

}  // namespace rootfan

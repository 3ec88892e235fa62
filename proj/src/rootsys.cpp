#include "rootfan/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootfan {

IntVector CorootFunctional::reflect(const IntVector& v) const {
  return subtract(v, scale(root, (*this)(v).to_integer()));
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::none: return "none";
    case FailureReason::zero_vector: return "zero-vector";
    case FailureReason::not_spanning: return "not-spanning";
    case FailureReason::non_reduced: return "non-reduced";
    case FailureReason::not_centrally_symmetric: return "not-centrally-symmetric";
    case FailureReason::no_coroot: return "no-coroot";
  }
  return "unknown";
}

namespace {

// Shared state for the coroot searches over one set: the chosen basis and
// the inverse of its matrix, so that f = B^{-1} c for values c on the basis.
class CorootSearch {
public:
  explicit CorootSearch(const VectorSet& roots) : roots_(roots) {
    const auto idx = independent_rows(roots.elements());
    if (static_cast<int>(idx.size()) != roots.dimension())
      throw std::invalid_argument("root candidate set does not span its ambient space");
    RationalMatrix b;
    for (std::size_t i : idx) {
      basis_.push_back(roots[i]);
      b.push_back(to_rational(roots[i]));
    }
    basis_inverse_ = *inverse(b);
  }

  std::optional<CorootFunctional> find(const IntVector& alpha) const {
    if (!roots_.contains(alpha)) throw std::invalid_argument("vector " + format_vector(alpha) + " is not in R");
    std::vector<std::vector<std::int64_t>> candidates;
    for (const IntVector& beta : basis_) candidates.push_back(string_offsets(beta, alpha));
    std::vector<std::int64_t> chosen;
    return descend(alpha, candidates, chosen);
  }

private:
  // Integers c, ascending, with β - cα ∈ R.
  std::vector<std::int64_t> string_offsets(const IntVector& beta, const IntVector& alpha) const {
    const std::size_t pivot = static_cast<std::size_t>(
        std::find_if(alpha.begin(), alpha.end(), [](std::int64_t x) { return x != 0; }) - alpha.begin());
    std::vector<std::int64_t> out;
    for (const IntVector& gamma : roots_) {
      const IntVector diff = subtract(beta, gamma);
      if (diff[pivot] % alpha[pivot] != 0) continue;
      const std::int64_t c = diff[pivot] / alpha[pivot];
      if (diff == scale(alpha, c)) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<CorootFunctional> descend(const IntVector& alpha,
                                          const std::vector<std::vector<std::int64_t>>& candidates,
                                          std::vector<std::int64_t>& chosen) const {
    if (chosen.size() == candidates.size()) return verify(alpha, chosen);
    for (std::int64_t c : candidates[chosen.size()]) {
      chosen.push_back(c);
      auto found = descend(alpha, candidates, chosen);
      chosen.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<CorootFunctional> verify(const IntVector& alpha, const std::vector<std::int64_t>& values) const {
    const std::size_t n = basis_.size();
    CorootFunctional f{alpha, RationalVector(n)};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t)
        if (values[t] != 0) f.values[j] += basis_inverse_[j][t] * Rational(values[t]);

    if (f(alpha) != Rational(2)) return std::nullopt;
    for (const IntVector& beta : roots_) {
      const Rational value = f(beta);
      if (!value.is_integer()) return std::nullopt;
      if (!roots_.contains(subtract(beta, scale(alpha, value.num())))) return std::nullopt;
    }
    return f;
  }

  const VectorSet& roots_;
  std::vector<IntVector> basis_;
  RationalMatrix basis_inverse_;
};

// All 2x2 minors of (a, b) vanish.
bool parallel(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (checked_mul(a[i], b[j]) != checked_mul(a[j], b[i])) return false;
  return true;
}

}  // namespace

std::optional<CorootFunctional> find_coroot(const VectorSet& roots, const IntVector& alpha) {
  return CorootSearch(roots).find(alpha);
}

RootSystemVerdict is_root_system(const VectorSet& roots) {
  RootSystemVerdict verdict;
  auto fail = [&](FailureReason reason, std::optional<IntVector> witness = std::nullopt) {
    verdict.failure_reason = reason;
    verdict.witness = std::move(witness);
    return verdict;
  };

  if (roots.contains(IntVector(static_cast<std::size_t>(roots.dimension()), 0)))
    return fail(FailureReason::zero_vector);
  if (roots.dimension() < 1 || rank(roots.elements()) != roots.dimension())
    return fail(FailureReason::not_spanning);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (parallel(roots[i], roots[j]) && roots[j] != negate(roots[i]))
        return fail(FailureReason::non_reduced, roots[i]);
  for (const IntVector& alpha : roots)
    if (!roots.contains(negate(alpha))) return fail(FailureReason::not_centrally_symmetric, alpha);

  // Largest first, so positive roots are tried before their negatives.
  const CorootSearch search(roots);
  for (auto it = roots.elements().rbegin(); it != roots.elements().rend(); ++it) {
    const IntVector& alpha = *it;
    auto coroot = search.find(alpha);
    if (!coroot) {
      verdict.coroots.clear();
      return fail(FailureReason::no_coroot, alpha);
    }
    verdict.coroots.emplace(alpha, std::move(*coroot));
  }
  verdict.is_root_system = true;
  return verdict;
}

VectorSet positive_roots(const VectorSet& roots) {
  std::vector<IntVector> out;
  for (const IntVector& v : roots) {
    const auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (first == v.end()) throw std::invalid_argument("positive roots of a set containing 0");
    if (!roots.contains(negate(v))) throw std::invalid_argument("positive roots of a set that is not centrally symmetric");
    if (*first > 0) out.push_back(v);
  }
  return VectorSet(roots.dimension(), std::move(out));
}

std::vector<IntVector> simple_roots(const VectorSet& positives) {
  std::vector<IntVector> base;
  for (const IntVector& alpha : positives) {
    bool decomposable = false;
    for (const IntVector& beta : positives)
      if (beta != alpha && positives.contains(subtract(alpha, beta))) {
        decomposable = true;
        break;
      }
    if (!decomposable) base.push_back(alpha);
  }
  if (static_cast<int>(base.size()) != rank(positives.elements()))
    throw std::logic_error("simple root count " + std::to_string(base.size()) + " differs from the rank");
  return base;
}

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const int m = rank();
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != m) throw std::logic_error("Cartan matrix is not square");
  for (int i = 0; i < m; ++i) {
    if ((*this)(i, i) != 2) throw std::logic_error("Cartan matrix diagonal entry is not 2");
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const int a = (*this)(i, j);
      const int b = (*this)(j, i);
      if (a > 0) throw std::logic_error("positive off-diagonal Cartan entry");
      if ((a == 0) != (b == 0)) throw std::logic_error("asymmetric zero pattern in Cartan matrix");
      if (a * b > 3) throw std::logic_error("Cartan entry product exceeds 3");
    }
  }
}

CartanMatrix CartanMatrix::restricted(const std::vector<int>& indices) const {
  std::vector<std::vector<int>> sub;
  for (int i : indices) {
    std::vector<int> row;
    for (int j : indices) row.push_back((*this)(i, j));
    sub.push_back(std::move(row));
  }
  return CartanMatrix(std::move(sub));
}

CartanMatrix cartan_matrix(const std::vector<IntVector>& base,
                           const std::map<IntVector, CorootFunctional>& coroots) {
  std::vector<std::vector<int>> a(base.size(), std::vector<int>(base.size()));
  for (std::size_t j = 0; j < base.size(); ++j) {
    const auto it = coroots.find(base[j]);
    if (it == coroots.end()) throw std::invalid_argument("no coroot for simple root " + format_vector(base[j]));
    for (std::size_t i = 0; i < base.size(); ++i) {
      const Rational value = it->second(base[i]);
      if (!value.is_integer()) throw std::logic_error("non-integral Cartan entry");
      a[i][j] = static_cast<int>(value.num());
    }
  }
  return CartanMatrix(std::move(a));
}

std::vector<std::vector<int>> irreducible_components(const CartanMatrix& cartan) {
  const int m = cartan.rank();
  std::vector<int> component(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < m; ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{start};
    component[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      out.back().push_back(i);
      for (int j = 0; j < m; ++j)
        if (j != i && cartan(i, j) != 0 && component[static_cast<std::size_t>(j)] < 0) {
          component[static_cast<std::size_t>(j)] = id;
          stack.push_back(j);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace rootfan

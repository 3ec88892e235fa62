#include "rootfan/type_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootfan {

VectorSet standard_An(int rank) {
  if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
  const auto dim = static_cast<std::size_t>(rank + 1);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      IntVector v(dim, 0);
      v[i] = 1;
      v[j] = -1;
      out.push_back(negate(v));
      out.push_back(std::move(v));
    }
  return VectorSet(rank + 1, std::move(out));
}

IntVector cycle_to_An_map(const IntVector& v) {
  IntVector out(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = checked_add(out[i], v[i]);
    out[i + 1] = checked_sub(out[i + 1], v[i]);
  }
  return out;
}

RationalVector fundamental_weight(int index, int rank) {
  if (rank < 1 || index < 1 || index > rank) throw std::invalid_argument("fundamental weight index out of range");
  const Rational shift(index, rank + 1);
  RationalVector out(static_cast<std::size_t>(rank + 1));
  for (int j = 0; j <= rank; ++j) out[static_cast<std::size_t>(j)] = (j < index ? Rational(1) : Rational(0)) - shift;
  return out;
}

std::vector<RationalVector> permutation_orbit(const RationalVector& weight) {
  RationalVector current = weight;
  std::sort(current.begin(), current.end());
  std::vector<RationalVector> out;
  do {
    out.push_back(current);
  } while (std::next_permutation(current.begin(), current.end()));
  return out;
}

RationalVector project_to_quotient(const RationalVector& x) {
  if (x.empty()) throw std::invalid_argument("projection of an empty vector");
  RationalVector out(x.begin(), x.end() - 1);
  for (Rational& c : out) c -= x.back();
  return out;
}

VectorSet weyl_orbit_fundamental_weights(int rank) {
  std::vector<IntVector> out;
  for (int i = 1; i <= rank; ++i)
    for (const RationalVector& w : permutation_orbit(fundamental_weight(i, rank))) {
      IntVector v;
      for (const Rational& c : project_to_quotient(w)) {
        if (!c.is_integer()) throw std::logic_error("projected weight is not integral");
        v.push_back(c.num());
      }
      out.push_back(std::move(v));
    }
  return VectorSet(rank, std::move(out));
}

}  // namespace rootfan

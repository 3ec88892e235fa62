#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace rootfan {

using IntVector = std::vector<std::int64_t>;

IntVector negate(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& v, std::int64_t factor);
bool is_zero(const IntVector& v);
// Space-separated coordinates, e.g. "1 0 -1".
std::string format_vector(const IntVector& v);

// Finite set of distinct integer vectors of a common dimension, kept in
// lexicographic order.
class VectorSet {
public:
  explicit VectorSet(int dimension) : dimension_(dimension) {}
  // Sorts and removes duplicates. Throws std::invalid_argument on a
  // dimension mismatch.
  VectorSet(int dimension, std::vector<IntVector> elements);

  int dimension() const { return dimension_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const IntVector& v) const;

  const std::vector<IntVector>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const IntVector& operator[](std::size_t i) const { return elements_[i]; }

  VectorSet negated() const;
  // Applies `map` to every element; results may have a different dimension.
  template <class F>
  VectorSet transformed(int dimension, F&& map) const {
    std::vector<IntVector> out;
    out.reserve(elements_.size());
    for (const IntVector& v : elements_) out.push_back(map(v));
    return VectorSet(dimension, std::move(out));
  }

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

private:
  int dimension_;
  std::vector<IntVector> elements_;
};

// One vector per line, lines in set order.
std::string to_text(const VectorSet& set);
// Array of arrays of integers.
nlohmann::json to_json(const VectorSet& set);
VectorSet vector_set_from_json(const nlohmann::json& j, int dimension);

}  // namespace rootfan

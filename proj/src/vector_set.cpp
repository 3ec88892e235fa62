#include "rootfan/vector_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootfan/rational.hpp"

namespace rootfan {

IntVector negate(const IntVector& v) {
  IntVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), checked_neg);
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

IntVector scale(const IntVector& v, std::int64_t factor) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_mul(v[i], factor);
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::string format_vector(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

VectorSet::VectorSet(int dimension, std::vector<IntVector> elements)
    : dimension_(dimension), elements_(std::move(elements)) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
  for (const IntVector& v : elements_)
    if (static_cast<int>(v.size()) != dimension)
      throw std::invalid_argument("vector of dimension " + std::to_string(v.size()) + " in a set of dimension " +
                                  std::to_string(dimension));
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool VectorSet::contains(const IntVector& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

VectorSet VectorSet::negated() const {
  return transformed(dimension_, [](const IntVector& v) { return negate(v); });
}

std::string to_text(const VectorSet& set) {
  std::string out;
  for (const IntVector& v : set) out += format_vector(v) + "\n";
  return out;
}

nlohmann::json to_json(const VectorSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (const IntVector& v : set) out.push_back(v);
  return out;
}

VectorSet vector_set_from_json(const nlohmann::json& j, int dimension) {
  return VectorSet(dimension, j.get<std::vector<IntVector>>());
}

}  // namespace rootfan

#include "rootfan/dynkin.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootfan {

char to_char(Family family) { return static_cast<char>('A' + static_cast<int>(family)); }

std::string Component::str() const { return std::string(1, to_char(family)) + std::to_string(rank); }

bool is_catalog_entry(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

namespace {

class CartanBuilder {
public:
  explicit CartanBuilder(int rank) : a_(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank))) {
    for (int i = 0; i < rank; ++i) at(i, i) = 2;
  }
  // 1-based node labels; A[i][j] = ij, A[j][i] = ji.
  CartanBuilder& bond(int i, int j, int ij = -1, int ji = -1) {
    at(i - 1, j - 1) = ij;
    at(j - 1, i - 1) = ji;
    return *this;
  }
  CartanBuilder& chain(int first, int last) {
    for (int i = first; i < last; ++i) bond(i, i + 1);
    return *this;
  }
  CartanMatrix build() { return CartanMatrix(std::move(a_)); }

private:
  int& at(int i, int j) { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  std::vector<std::vector<int>> a_;
};

}  // namespace

CartanMatrix catalog_cartan(Family family, int rank) {
  if (!is_catalog_entry(family, rank))
    throw std::invalid_argument(Component{family, rank}.str() + " is not a catalog entry");
  CartanBuilder b(rank);
  switch (family) {
    case Family::A:
      b.chain(1, rank);
      break;
    case Family::B:  // α_n short
      b.chain(1, rank - 1).bond(rank - 1, rank, -2, -1);
      break;
    case Family::C:  // α_n long
      b.chain(1, rank - 1).bond(rank - 1, rank, -1, -2);
      break;
    case Family::D:
      b.chain(1, rank - 1).bond(rank - 2, rank);
      break;
    case Family::E:
      b.bond(1, 3).chain(3, rank).bond(2, 4);
      break;
    case Family::F:  // α_1, α_2 long
      b.bond(1, 2).bond(2, 3, -2, -1).bond(3, 4);
      break;
    case Family::G:  // α_1 short
      b.bond(1, 2, -1, -3);
      break;
  }
  return b.build();
}

RootSystemType::RootSystemType(std::vector<Component> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

int RootSystemType::rank() const {
  int total = 0;
  for (const Component& c : components_) total += c.rank;
  return total;
}

std::string RootSystemType::str() const {
  std::string out;
  for (const Component& c : components_) {
    if (!out.empty()) out += '+';
    out += c.str();
  }
  return out;
}

RootSystemType RootSystemType::parse(const std::string& text) {
  std::vector<Component> components;
  if (text.empty() || text.back() == '+') throw std::invalid_argument("malformed root system type '" + text + "'");
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('+', pos), text.size());
    const std::string token = text.substr(pos, end - pos);
    if (token.size() < 2 || token[0] < 'A' || token[0] > 'G' ||
        !std::all_of(token.begin() + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed root system type '" + text + "'");
    const Component c{static_cast<Family>(token[0] - 'A'), std::stoi(token.substr(1))};
    if (!is_catalog_entry(c.family, c.rank)) throw std::invalid_argument(c.str() + " is not a catalog entry");
    components.push_back(c);
    pos = end + 1;
  }
  return RootSystemType(std::move(components));
}

namespace {

std::vector<Component> catalog_of_rank(int rank) {
  std::vector<Component> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    if (is_catalog_entry(f, rank)) out.push_back({f, rank});
  return out;
}

// Sorted off-diagonal row entries; equal signatures are necessary for a node
// of one matrix to map onto a node of the other.
std::vector<std::vector<int>> row_signatures(const CartanMatrix& m) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < m.rank(); ++i) {
    std::vector<int> sig;
    for (int j = 0; j < m.rank(); ++j)
      if (j != i && m(i, j) != 0) sig.push_back(m(i, j) * 8 + m(j, i));
    std::sort(sig.begin(), sig.end());
    out.push_back(std::move(sig));
  }
  return out;
}

// Backtracking search for p with given(p[i], p[j]) == pattern(i, j).
class CartanMatcher {
public:
  CartanMatcher(const CartanMatrix& pattern, const CartanMatrix& given)
      : pattern_(pattern), given_(given), pattern_sig_(row_signatures(pattern)), given_sig_(row_signatures(given)) {}

  bool match() {
    if (pattern_.rank() != given_.rank()) return false;
    image_.assign(static_cast<std::size_t>(pattern_.rank()), -1);
    used_.assign(static_cast<std::size_t>(pattern_.rank()), false);
    return extend(0);
  }

private:
  bool extend(int i) {
    if (i == pattern_.rank()) return true;
    for (int candidate = 0; candidate < given_.rank(); ++candidate) {
      if (used_[static_cast<std::size_t>(candidate)]) continue;
      if (pattern_sig_[static_cast<std::size_t>(i)] != given_sig_[static_cast<std::size_t>(candidate)]) continue;
      bool consistent = true;
      for (int j = 0; j < i && consistent; ++j) {
        const int pj = image_[static_cast<std::size_t>(j)];
        consistent = given_(candidate, pj) == pattern_(i, j) && given_(pj, candidate) == pattern_(j, i);
      }
      if (!consistent) continue;
      image_[static_cast<std::size_t>(i)] = candidate;
      used_[static_cast<std::size_t>(candidate)] = true;
      if (extend(i + 1)) return true;
      used_[static_cast<std::size_t>(candidate)] = false;
    }
    return false;
  }

  const CartanMatrix& pattern_;
  const CartanMatrix& given_;
  std::vector<std::vector<int>> pattern_sig_;
  std::vector<std::vector<int>> given_sig_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Component> identify_component(const CartanMatrix& cartan) {
  for (const Component& c : catalog_of_rank(cartan.rank()))
    if (CartanMatcher(catalog_cartan(c.family, c.rank), cartan).match()) return c;
  return std::nullopt;
}

RootSystemAnalysis analyze(const VectorSet& roots) {
  RootSystemAnalysis out;
  out.verdict = is_root_system(roots);
  if (!out.verdict.is_root_system) return out;

  out.base = simple_roots(positive_roots(roots));
  out.cartan = cartan_matrix(out.base, out.verdict.coroots);
  std::vector<Component> components;
  for (const auto& indices : irreducible_components(*out.cartan)) {
    const auto component = identify_component(out.cartan->restricted(indices));
    if (!component) throw std::logic_error("Cartan component matches no Dynkin diagram");
    components.push_back(*component);
  }
  out.type = RootSystemType(std::move(components));
  return out;
}

std::optional<RootSystemType> classify(const VectorSet& roots) { return analyze(roots).type; }

namespace {

// Catalog entries plus the aliases C_2 = B_2 and D_3 = A_3.
bool has_positive_root_count(Family family, int rank) {
  if (family == Family::C) return rank >= 2;
  if (family == Family::D) return rank >= 3;
  return is_catalog_entry(family, rank);
}

}  // namespace

std::uint64_t positive_root_count(Family family, int rank) {
  if (!has_positive_root_count(family, rank))
    throw std::invalid_argument("no irreducible root system " + Component{family, rank}.str());
  const auto n = static_cast<std::uint64_t>(rank);
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::vector<Component> irreducible_types_of_rank(int rank) {
  std::vector<Component> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    if (has_positive_root_count(f, rank)) out.push_back({f, rank});
  return out;
}

ObstructionReport positive_root_count_obstruction(int max_rank) {
  if (max_rank < 3 || max_rank > 62) throw std::invalid_argument("max rank must be in 3..62");
  ObstructionReport report{{}, true};
  for (int rank = 3; rank <= max_rank; ++rank) {
    ObstructionRow row{rank, (std::uint64_t{1} << rank) - 1, {}, true};
    for (const Component& c : irreducible_types_of_rank(rank)) {
      const std::uint64_t count = positive_root_count(c.family, c.rank);
      row.counts.emplace_back(c, count);
      if (count == row.subset_count) row.holds = false;
    }
    report.holds = report.holds && row.holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace rootfan

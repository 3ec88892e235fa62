#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootfan/rootsys.hpp"

namespace rootfan {

enum class Family { A, B, C, D, E, F, G };

char to_char(Family family);

// One irreducible component, e.g. (B, 3).
struct Component {
  Family family;
  int rank;
  friend auto operator<=>(const Component&, const Component&) = default;
  std::string str() const;
};

// Catalog entries without duplicates: A_n (n ≥ 1), B_n (n ≥ 2), C_n (n ≥ 3),
// D_n (n ≥ 4), E_6, E_7, E_8, F_4, G_2.
bool is_catalog_entry(Family family, int rank);

// Cartan matrix of a catalog entry in Bourbaki numbering, with
// A[i][j] = 2(α_i, α_j) / (α_j, α_j). Throws std::invalid_argument for
// entries outside the catalog.
CartanMatrix catalog_cartan(Family family, int rank);

// Multiset of irreducible components, kept sorted by family then rank.
class RootSystemType {
public:
  RootSystemType() = default;
  explicit RootSystemType(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }
  int rank() const;
  // "A3", "A1+A1+B2".
  std::string str() const;
  // Inverse of str(). Throws std::invalid_argument on bad input.
  static RootSystemType parse(const std::string& text);

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;

private:
  std::vector<Component> components_;
};

// Finds the catalog entry whose Cartan matrix equals `cartan` up to a
// simultaneous permutation of rows and columns. Expects an irreducible matrix.
std::optional<Component> identify_component(const CartanMatrix& cartan);

struct RootSystemAnalysis {
  RootSystemVerdict verdict;
  // Present only when verdict.is_root_system.
  std::vector<IntVector> base;
  std::optional<CartanMatrix> cartan;
  std::optional<RootSystemType> type;
};

// Root-system test followed, on success, by base extraction, Cartan matrix
// and Dynkin classification of every component.
RootSystemAnalysis analyze(const VectorSet& roots);

// nullopt when the set is not a root system.
std::optional<RootSystemType> classify(const VectorSet& roots);

// Closed-form number of positive roots. Besides the catalog this accepts the
// low-rank aliases C_2 and D_3, whose formulas still count correctly.
std::uint64_t positive_root_count(Family family, int rank);

// Irreducible types at `rank` that positive_root_count accepts.
std::vector<Component> irreducible_types_of_rank(int rank);

struct ObstructionRow {
  int rank;
  std::uint64_t subset_count;  // 2^rank - 1
  std::vector<std::pair<Component, std::uint64_t>> counts;
  bool holds;  // subset_count matches none of the counts
};

struct ObstructionReport {
  std::vector<ObstructionRow> rows;
  bool holds;
};

// For every rank 3..max_rank, checks that no irreducible root system of that
// rank has 2^rank - 1 positive roots. Throws if max_rank < 3 or max_rank > 62.
ObstructionReport positive_root_count_obstruction(int max_rank);

}  // namespace rootfan

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rootfan/buildset.hpp"
#include "rootfan/dynkin.hpp"
#include "rootfan/graph.hpp"

namespace rootfan {

// The stages a graph passes through on its way to a record. Tests swap in
// faulty stages to check that the harness notices.
struct Pipeline {
  std::function<BuildingSet(const Graph&)> building_set = [](const Graph& g) { return rootfan::building_set(g); };
  std::function<VectorSet(const BuildingSet&)> facet_vectors = [](const BuildingSet& b) {
    return rootfan::facet_vectors(b);
  };
};

struct GraphRecord {
  CanonicalKey canonical_key;
  Graph graph{1};
  int node_count = 0;
  int edge_count = 0;
  bool is_cycle = false;
  bool is_complete = false;
  std::size_t building_set_size = 0;
  std::size_t facet_vector_count = 0;
  bool complement_closed = false;
  bool centrally_symmetric = false;
  bool is_root_system = false;
  std::optional<RootSystemType> root_type;
  std::optional<FailureReason> failure_reason;
};

// Structural tests from degrees and edge count alone.
bool is_cycle_graph(const Graph& graph);
bool is_complete_graph(const Graph& graph);

GraphRecord evaluate_graph(const Graph& graph, const Pipeline& pipeline = {});

// Which claims a record contradicts; empty when it is consistent.
// Records with fewer than 3 nodes are only checked for the symmetry
// equivalence and the record invariants.
std::vector<std::string> violations(const GraphRecord& record);

struct Counterexample {
  GraphRecord record;
  std::vector<std::string> violations;
  BuildingSet building_set;
  VectorSet facet_vectors;
};

struct NodeCountSummary {
  int node_count = 0;
  std::size_t graphs = 0;
  std::size_t cycles = 0;
  std::size_t complete = 0;
  std::size_t centrally_symmetric = 0;
  std::size_t root_systems = 0;
};

struct VerificationReport {
  int node_cap = 0;
  EnumerationMode mode = EnumerationMode::up_to_iso;
  std::vector<GraphRecord> records;
  std::vector<NodeCountSummary> per_node_count;
  // Root system exactly for cycles, always of type A_{k-1}.
  bool theorem_holds = true;
  // Centrally symmetric exactly for cycles and complete graphs.
  bool central_symmetry_holds = true;
  // complement_closed == centrally_symmetric and |F| = |B| - 1 everywhere.
  bool symmetry_equivalence_holds = true;
  std::vector<CanonicalKey> counterexamples;
  std::vector<Counterexample> counterexample_details;

  bool passed() const { return theorem_holds && central_symmetry_holds && symmetry_equivalence_holds; }
};

// Runs every connected graph with 3..node_cap nodes through the pipeline.
// Records come out in enumeration order, grouped by node count, regardless
// of `threads` (0 = hardware concurrency).
VerificationReport verify_theorem(int node_cap, EnumerationMode mode, const Pipeline& pipeline = {},
                                  unsigned threads = 0);

// complement_closed == centrally_symmetric for every connected graph with
// 2..node_cap nodes.
bool cross_check_symmetry_equivalence(int node_cap, EnumerationMode mode, const Pipeline& pipeline = {});

// K_2: F = {e_1, -e_1} is a root system of type A_1 though K_2 is no cycle.
GraphRecord two_node_edge_case();

nlohmann::json to_json(const GraphRecord& record);
nlohmann::json to_json(const VerificationReport& report);
// Summary table rendered from the JSON form.
std::string render_report_text(const nlohmann::json& report);

}  // namespace rootfan

#include "rootfan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace rootfan {

bool is_cycle_graph(const Graph& graph) {
  const int k = graph.node_count();
  if (k < 3 || graph.edge_count() != k || !graph.is_connected()) return false;
  for (int node = 1; node <= k; ++node)
    if (graph.degree(node) != 2) return false;
  return true;
}

bool is_complete_graph(const Graph& graph) {
  const int k = graph.node_count();
  return graph.edge_count() == k * (k - 1) / 2;
}

GraphRecord evaluate_graph(const Graph& graph, const Pipeline& pipeline) {
  GraphRecord r;
  r.canonical_key = canonical_form(graph);
  r.graph = graph;
  r.node_count = graph.node_count();
  r.edge_count = graph.edge_count();
  r.is_cycle = is_cycle_graph(graph);
  r.is_complete = is_complete_graph(graph);

  const BuildingSet b = pipeline.building_set(graph);
  const VectorSet f = pipeline.facet_vectors(b);
  r.building_set_size = b.size();
  r.facet_vector_count = f.size();
  r.complement_closed = complement_closed(b);
  r.centrally_symmetric = centrally_symmetric(f);

  const RootSystemAnalysis analysis = analyze(f);
  r.is_root_system = analysis.verdict.is_root_system;
  r.root_type = analysis.type;
  if (!r.is_root_system) r.failure_reason = analysis.verdict.failure_reason;
  return r;
}

std::vector<std::string> violations(const GraphRecord& r) {
  std::vector<std::string> out;
  if (r.facet_vector_count + 1 != r.building_set_size) out.push_back("facet count differs from |B(G)| - 1");
  if (r.complement_closed != r.centrally_symmetric)
    out.push_back("complement closure disagrees with central symmetry");
  if (r.node_count < 3) return out;
  if (r.is_root_system != r.is_cycle) out.push_back(r.is_cycle ? "cycle without root system" : "root system on a non-cycle");
  if (r.is_root_system && (!r.root_type || *r.root_type != RootSystemType({{Family::A, r.node_count - 1}})))
    out.push_back("root system of type other than A_{k-1}");
  if (r.centrally_symmetric != (r.is_cycle || r.is_complete))
    out.push_back(r.centrally_symmetric ? "centrally symmetric but neither cycle nor complete"
                                        : "cycle or complete graph without central symmetry");
  return out;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
}

}  // namespace

VerificationReport verify_theorem(int node_cap, EnumerationMode mode, const Pipeline& pipeline, unsigned threads) {
  if (node_cap < 3 || node_cap > enumeration_cap(mode))
    throw std::invalid_argument("node cap for " + std::string(to_string(mode)) + " verification must be in 3.." +
                                std::to_string(enumeration_cap(mode)));
  VerificationReport report;
  report.node_cap = node_cap;
  report.mode = mode;

  for (int k = 3; k <= node_cap; ++k) {
    const std::vector<Graph> graphs = enumerate_connected_graphs(k, mode);
    std::vector<GraphRecord> records(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) { records[i] = evaluate_graph(graphs[i], pipeline); });

    NodeCountSummary summary{k, records.size()};
    for (GraphRecord& r : records) {
      summary.cycles += r.is_cycle;
      summary.complete += r.is_complete;
      summary.centrally_symmetric += r.centrally_symmetric;
      summary.root_systems += r.is_root_system;

      const std::vector<std::string> found = violations(r);
      if (!found.empty()) {
        // Rerun the stages so the failure can be diagnosed from the report.
        const BuildingSet b = pipeline.building_set(r.graph);
        report.counterexamples.push_back(r.canonical_key);
        report.counterexample_details.push_back({r, found, b, pipeline.facet_vectors(b)});
      }
      const bool theorem_ok =
          r.is_root_system == r.is_cycle && (!r.is_root_system || r.root_type == RootSystemType({{Family::A, k - 1}}));
      report.theorem_holds = report.theorem_holds && theorem_ok;
      report.central_symmetry_holds =
          report.central_symmetry_holds && r.centrally_symmetric == (r.is_cycle || r.is_complete);
      report.symmetry_equivalence_holds = report.symmetry_equivalence_holds &&
                                          r.complement_closed == r.centrally_symmetric &&
                                          r.facet_vector_count + 1 == r.building_set_size;
      report.records.push_back(std::move(r));
    }
    report.per_node_count.push_back(summary);
  }
  return report;
}

bool cross_check_symmetry_equivalence(int node_cap, EnumerationMode mode, const Pipeline& pipeline) {
  if (node_cap < 2 || node_cap > enumeration_cap(mode))
    throw std::invalid_argument("node cap must be in 2.." + std::to_string(enumeration_cap(mode)));
  bool agree = true;
  for (int k = 2; k <= node_cap && agree; ++k)
    for_each_connected_graph(k, mode, [&](const Graph& g) {
      if (!agree) return;
      const BuildingSet b = pipeline.building_set(g);
      agree = complement_closed(b) == centrally_symmetric(pipeline.facet_vectors(b));
    });
  return agree;
}

GraphRecord two_node_edge_case() { return evaluate_graph(complete_graph(2)); }

nlohmann::json to_json(const GraphRecord& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : r.graph.edges()) edges.push_back({e.u, e.v});
  return {
      {"canonical_key", r.canonical_key.str()},
      {"node_count", r.node_count},
      {"edge_count", r.edge_count},
      {"edges", edges},
      {"is_cycle", r.is_cycle},
      {"is_complete", r.is_complete},
      {"building_set_size", r.building_set_size},
      {"facet_vector_count", r.facet_vector_count},
      {"complement_closed", r.complement_closed},
      {"centrally_symmetric", r.centrally_symmetric},
      {"is_root_system", r.is_root_system},
      {"root_type", r.root_type ? nlohmann::json(r.root_type->str()) : nlohmann::json()},
      {"failure_reason", r.failure_reason ? nlohmann::json(to_string(*r.failure_reason)) : nlohmann::json()},
  };
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const GraphRecord& r : report.records) records.push_back(to_json(r));

  nlohmann::json per_k = nlohmann::json::array();
  for (const NodeCountSummary& s : report.per_node_count)
    per_k.push_back({{"node_count", s.node_count},
                     {"graphs", s.graphs},
                     {"cycles", s.cycles},
                     {"complete", s.complete},
                     {"centrally_symmetric", s.centrally_symmetric},
                     {"root_systems", s.root_systems}});

  nlohmann::json keys = nlohmann::json::array();
  for (const CanonicalKey& key : report.counterexamples) keys.push_back(key.str());

  nlohmann::json details = nlohmann::json::array();
  for (const Counterexample& c : report.counterexample_details)
    details.push_back({{"record", to_json(c.record)},
                       {"violations", c.violations},
                       {"building_set", to_json(c.building_set)},
                       {"facet_vectors", to_json(c.facet_vectors)}});

  return {
      {"node_cap", report.node_cap},
      {"mode", to_string(report.mode)},
      {"theorem_holds", report.theorem_holds},
      {"central_symmetry_holds", report.central_symmetry_holds},
      {"symmetry_equivalence_holds", report.symmetry_equivalence_holds},
      {"per_node_count", per_k},
      {"counterexamples", keys},
      {"counterexample_details", details},
      {"records", records},
  };
}

namespace {

std::string yes_no(const nlohmann::json& value) { return value.get<bool>() ? "yes" : "no"; }

std::string or_dash(const nlohmann::json& value) { return value.is_null() ? "-" : value.get<std::string>(); }

}  // namespace

std::string render_report_text(const nlohmann::json& report) {
  std::ostringstream out;
  out << std::left;
  out << std::setw(32) << "key" << std::setw(3) << "k" << std::setw(4) << "m" << std::setw(6) << "cycle"
      << std::setw(9) << "complete" << std::setw(5) << "|B|" << std::setw(5) << "|F|" << std::setw(10) << "compl-cl"
      << std::setw(10) << "cent-sym" << std::setw(6) << "root" << std::setw(6) << "type"
      << "reason\n";
  for (const auto& r : report.at("records")) {
    out << std::setw(32) << r.at("canonical_key").get<std::string>() << std::setw(3) << r.at("node_count").get<int>()
        << std::setw(4) << r.at("edge_count").get<int>() << std::setw(6) << yes_no(r.at("is_cycle")) << std::setw(9)
        << yes_no(r.at("is_complete")) << std::setw(5) << r.at("building_set_size").get<std::size_t>()
        << std::setw(5) << r.at("facet_vector_count").get<std::size_t>() << std::setw(10)
        << yes_no(r.at("complement_closed")) << std::setw(10) << yes_no(r.at("centrally_symmetric")) << std::setw(6)
        << yes_no(r.at("is_root_system")) << std::setw(6) << or_dash(r.at("root_type"))
        << or_dash(r.at("failure_reason")) << "\n";
  }
  out << "\n";
  for (const auto& s : report.at("per_node_count"))
    out << "k=" << s.at("node_count").get<int>() << ": graphs=" << s.at("graphs").get<std::size_t>()
        << " cycles=" << s.at("cycles").get<std::size_t>() << " complete=" << s.at("complete").get<std::size_t>()
        << " centrally_symmetric=" << s.at("centrally_symmetric").get<std::size_t>()
        << " root_systems=" << s.at("root_systems").get<std::size_t>() << "\n";
  out << "mode=" << report.at("mode").get<std::string>() << " node_cap=" << report.at("node_cap").get<int>() << "\n";
  out << "theorem_holds=" << report.at("theorem_holds").get<bool>() << "\n";
  out << "central_symmetry_holds=" << report.at("central_symmetry_holds").get<bool>() << "\n";
  out << "symmetry_equivalence_holds=" << report.at("symmetry_equivalence_holds").get<bool>() << "\n";
  out << "counterexamples=" << report.at("counterexamples").size() << "\n";
  for (const auto& c : report.at("counterexample_details")) {
    out << "counterexample " << c.at("record").at("canonical_key").get<std::string>() << ":";
    for (const auto& v : c.at("violations")) out << " [" << v.get<std::string>() << "]";
    out << "\n  building set:";
    for (const auto& m : c.at("building_set").at("members")) {
      out << " {";
      for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i].get<int>();
      out << "}";
    }
    out << "\n  facet vectors:";
    for (const auto& v : c.at("facet_vectors")) {
      out << " (";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get<long long>();
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace rootfan

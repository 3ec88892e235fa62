#include "rootfan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace rootfan::cli {

namespace {

using nlohmann::json;

struct GraphSource {
  std::optional<int> cycle, complete, path, star;
  std::string file;

  void attach(CLI::App& cmd) {
    cmd.add_option("--cycle", cycle, "cycle graph C_K");
    cmd.add_option("--complete", complete, "complete graph K_K");
    cmd.add_option("--path", path, "path graph P_K");
    cmd.add_option("--star", star, "star graph with K nodes");
    cmd.add_option("FILE", file, "graph file");
  }

  Graph load() const {
    const int given = cycle.has_value() + complete.has_value() + path.has_value() + star.has_value() + !file.empty();
    if (given != 1) throw CLI::ValidationError("exactly one graph source is required");
    if (cycle) return cycle_graph(*cycle);
    if (complete) return complete_graph(*complete);
    if (path) return path_graph(*path);
    if (star) return star_graph(*star);
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read " + file);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_graph(text.str());
  }
};

json nodes_json(const std::vector<IntVector>& vectors) {
  json out = json::array();
  for (const IntVector& v : vectors) out.push_back(v);
  return out;
}

json check_json(const VectorSet& facets) {
  const RootSystemAnalysis analysis = analyze(facets);
  const RootSystemVerdict& v = analysis.verdict;
  return {
      {"is_root_system", v.is_root_system},
      {"failure_reason", v.is_root_system ? json() : json(to_string(v.failure_reason))},
      {"witness", v.witness ? json(*v.witness) : json()},
      {"type", analysis.type ? json(analysis.type->str()) : json()},
      {"simple_roots", analysis.cartan ? nodes_json(analysis.base) : json()},
      {"cartan_matrix", analysis.cartan ? json(analysis.cartan->entries()) : json()},
  };
}

std::string vector_text(const json& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i].get<long long>());
  return out;
}

std::string scalar_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Text renderings; each reads only the JSON document.
std::string render_text(const std::string& command, const json& doc) {
  std::ostringstream out;
  if (command == "building-set") {
    for (const auto& m : doc.at("members")) {
      out << "{";
      for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i].get<int>();
      out << "}\n";
    }
  } else if (command == "facets") {
    for (const auto& v : doc) out << vector_text(v) << "\n";
  } else if (command == "symmetry") {
    for (const char* key : {"centrally_symmetric", "complement_closed", "agree"})
      out << key << "=" << scalar_text(doc.at(key)) << "\n";
  } else if (command == "check") {
    for (const char* key : {"is_root_system", "failure_reason", "type"})
      out << key << "=" << scalar_text(doc.at(key)) << "\n";
    out << "witness=" << (doc.at("witness").is_null() ? "-" : vector_text(doc.at("witness"))) << "\n";
    if (!doc.at("cartan_matrix").is_null()) {
      out << "simple_roots:\n";
      for (const auto& v : doc.at("simple_roots")) out << "  " << vector_text(v) << "\n";
      out << "cartan_matrix:\n";
      for (const auto& row : doc.at("cartan_matrix")) out << "  " << vector_text(row) << "\n";
    }
  } else if (command == "classify") {
    out << (doc.at("type").is_null() ? "not-a-root-system" : doc.at("type").get<std::string>()) << "\n";
  } else if (command == "verify") {
    out << render_report_text(doc);
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Pipeline& pipeline) {
  CLI::App app{"Facet vectors of connected graphs and root-system checks", "rootfan"};
  app.require_subcommand(1);

  std::string format = "text";
  GraphSource source;
  int max_nodes = 7;
  bool labeled = false;
  bool up_to_iso = false;

  const std::vector<std::pair<std::string, std::string>> graph_commands = {
      {"building-set", "print the graphical building set B(G)"},
      {"facets", "print the facet vectors F(G)"},
      {"symmetry", "compare central symmetry of F(G) with complement closure of B(G)"},
      {"check", "decide whether F(G) is a root system"},
      {"classify", "print the root system type of F(G)"},
  };
  for (const auto& [name, help] : graph_commands) {
    CLI::App* cmd = app.add_subcommand(name, help);
    source.attach(*cmd);
    cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  }
  CLI::App* verify = app.add_subcommand("verify", "check every connected graph up to a node count");
  verify->add_option("--max-nodes", max_nodes, "largest node count")->capture_default_str();
  auto* labeled_flag = verify->add_flag("--labeled", labeled, "enumerate labeled graphs");
  verify->add_flag("--up-to-iso", up_to_iso, "one graph per isomorphism class (default)")->excludes(labeled_flag);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json doc;
  int status = kExitOk;
  try {
    if (command == "verify") {
      const VerificationReport report =
          verify_theorem(max_nodes, labeled ? EnumerationMode::labeled : EnumerationMode::up_to_iso, pipeline);
      doc = to_json(report);
      if (!report.passed()) status = kExitVerificationFailed;
    } else {
      const Graph graph = source.load();
      const BuildingSet b = pipeline.building_set(graph);
      if (command == "building-set") {
        doc = to_json(b);
      } else {
        const VectorSet f = pipeline.facet_vectors(b);
        if (command == "facets") {
          doc = to_json(f);
        } else if (command == "symmetry") {
          const bool cs = centrally_symmetric(f);
          const bool cc = complement_closed(b);
          doc = {{"centrally_symmetric", cs}, {"complement_closed", cc}, {"agree", cs == cc}};
        } else if (command == "check") {
          doc = check_json(f);
        } else {
          const auto type = classify(f);
          doc = {{"is_root_system", type.has_value()}, {"type", type ? json(type->str()) : json()}};
        }
      }
    }
  } catch (const std::exception& e) {
    err << "rootfan: " << e.what() << "\n";
    return kExitUsage;
  }

  if (format == "json")
    out << doc.dump(2) << "\n";
  else
    out << render_text(command, doc);
  out.flush();
  return status;
}

}  // namespace rootfan::cli

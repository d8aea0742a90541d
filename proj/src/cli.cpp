#include "cover/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "cover/graph.hpp"
#include "cover/io.hpp"
#include "cover/leighton.hpp"
#include "cover/refinement.hpp"
#include "cover/symres.hpp"
#include "cover/voltage.hpp"

namespace cover::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

struct RunConfig {
  std::string graph, graph2, map_path, data_path, charts_path, action;
  std::optional<std::uint64_t> seed;
  std::string s_policy = "first";
  bool component_only = false;
  bool dot = false;
  std::optional<std::size_t> max_len;
  std::string out_dir;
  std::uint32_t degree = 2;
  std::uint32_t count = 2;
};

// Thrown after the violation list has been printed.
struct InvalidData {
  std::string what;
};

SPolicy parse_policy(const std::string& s) {
  return s == "both" ? SPolicy::kBothGraphsLcm : SPolicy::kFirstGraphLcm;
}

ColoredGraph load_graph(const std::string& path, std::ostream& err, bool require_connected = true) {
  ColoredGraph g;
  try {
    g = io::graph_from_json(io::read_json_file(path));
  } catch (const io::InvalidInput& e) {
    err << path << ": " << e.what() << "\n";
    for (const auto& v : e.violations) err << "  " << v << "\n";
    throw InvalidData{e.what()};
  }
  auto violations = validate_graph(g);
  if (violations.empty() && require_connected && !is_connected(g)) {
    violations.push_back({ViolationKind::kNotConnected, {}, "graph is not connected"});
  }
  if (!violations.empty()) {
    err << path << ": invalid graph\n";
    for (const auto& v : violations) err << "  " << to_string(v.kind) << ": " << v.message << "\n";
    throw InvalidData{"invalid graph"};
  }
  return g;
}

fs::path out_dir(const RunConfig& cfg) {
  fs::path dir = cfg.out_dir.empty() ? fs::path(".") : fs::path(cfg.out_dir);
  fs::create_directories(dir);
  return dir;
}

int cmd_refine(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ColoredGraph g = load_graph(cfg.graph, err);
  std::optional<ColoredGraph> g2;
  if (!cfg.graph2.empty()) g2 = load_graph(cfg.graph2, err);

  RefinedColoring coloring;
  try {
    coloring = joint_refinement(g, g2 ? &*g2 : nullptr);
  } catch (const IncompatibleColoring& e) {
    err << e.what() << "\n";
    throw InvalidData{e.what()};
  }
  bool exists = true;
  std::optional<ColorGraphData> data;
  std::optional<CoverParameters> params;
  if (g2) {
    const CoverDecision decision = common_cover_exists(g, *g2);
    exists = decision.exists;
    if (exists) {
      data = decision.data;
      coloring = decision.coloring;
    }
  } else {
    data = quotient_color_graph(coloring, g);
  }
  if (data) params = cover_parameters(*data, parse_policy(cfg.s_policy));

  Json doc = io::refinement_to_json(coloring, data ? &*data : nullptr, params ? &*params : nullptr);
  if (g2) doc["common_cover"] = exists;
  if (cfg.out_dir.empty()) {
    out << doc.dump(1) << "\n";
  } else {
    const fs::path dir = out_dir(cfg);
    io::write_json_file(dir / "refined.json", doc);
    if (cfg.dot) {
      io::write_text_file(dir / "g.dot", io::to_dot(g, &coloring.vertex_class[0], &coloring.dart_class[0]));
      if (g2) io::write_text_file(dir / "g2.dot", io::to_dot(*g2, &coloring.vertex_class[1], &coloring.dart_class[1]));
    }
    out << "vertex classes: " << coloring.num_vertex_classes() << ", dart classes: " << coloring.num_dart_classes()
        << "\n";
  }
  if (!exists) {
    err << "no common covering: the refined classes do not mix the two graphs\n";
    return kNegative;
  }
  return kOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ColoredGraph g = load_graph(cfg.graph, err);
  const ColoredGraph g2 = load_graph(cfg.graph2, err);
  const CoverDecision decision = common_cover_exists(g, g2);
  if (!decision.exists) {
    err << "no common covering: the refined classes do not mix the two graphs\n";
    return kNegative;
  }
  const CoverParameters params = cover_parameters(decision.data, parse_policy(cfg.s_policy));
  const CoverBlueprint blueprint = make_blueprint(g, g2, decision.coloring, decision.data, params, cfg.seed);
  const CommonCover cover = build_common_cover(g, g2, decision.coloring, blueprint, cfg.component_only);

  const fs::path dir = out_dir(cfg);
  io::write_json_file(dir / "H.json", io::graph_to_json(cover.h));
  io::write_json_file(dir / "map_g.json", io::map_to_json(cover.to_g));
  io::write_json_file(dir / "map_g2.json", io::map_to_json(cover.to_g2));
  if (cfg.dot) io::write_text_file(dir / "H.dot", io::to_dot(cover.h));

  out << "s = " << params.s << "\n";
  out << "|V(H)| = " << cover.h.num_vertices() << "\n";
  out << "|darts(H)| = " << cover.h.num_darts() << "\n";
  if (cfg.component_only) {
    out << "full H: |V| = " << cover.full_vertices << ", |darts| = " << cover.full_darts << "\n";
  }
  out << "degree over g = " << covering_degree(cover.h, g, cover.to_g) << "\n";
  out << "degree over g2 = " << covering_degree(cover.h, g2, cover.to_g2) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ColoredGraph h = load_graph(cfg.graph, err, false);
  const ColoredGraph g = load_graph(cfg.graph2, err);
  GraphMap map;
  try {
    map = io::map_from_json(io::read_json_file(cfg.map_path));
  } catch (const io::InvalidInput& e) {
    out << "defect: " << e.what() << "\n";
    for (const auto& v : e.violations) out << "  " << v << "\n";
    return kNegative;
  }
  const CoveringReport report = verify_covering(h, g, map);
  if (report.ok()) {
    out << "ok: covering of degree " << covering_degree(h, g, map) << "\n";
    return kOk;
  }
  const std::size_t shown = std::min<std::size_t>(report.defects.size(), 20);
  out << report.defects.size() << " defect(s)\n";
  for (std::size_t j = 0; j < shown; ++j) {
    out << "  " << to_string(report.defects[j].kind) << ": " << report.defects[j].message << "\n";
  }
  return kNegative;
}

SymRestrictedData load_symdata(const std::string& path, std::ostream& err) {
  try {
    return io::symdata_from_json(io::read_json_file(path));
  } catch (const io::InvalidInput& e) {
    err << path << ": " << e.what() << "\n";
    for (const auto& v : e.violations) err << "  " << v << "\n";
    throw InvalidData{e.what()};
  }
}

void require_valid(const SymRestrictedData& d, std::ostream& err) {
  const auto violations = validate_symdata(d);
  if (violations.empty()) return;
  err << "invalid symmetry-restricted data\n";
  for (const auto& v : violations) err << "  " << v.message << "\n";
  throw InvalidData{"invalid symmetry-restricted data"};
}

int cmd_sym(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SymRestrictedData d = load_symdata(cfg.data_path, err);
  auto emit = [&](const std::string& name, const Json& doc) {
    if (cfg.out_dir.empty()) {
      out << doc.dump(1) << "\n";
    } else {
      io::write_json_file(out_dir(cfg) / name, doc);
    }
  };

  if (cfg.action == "validate") {
    auto violations = validate_symdata(d);
    Json doc = {{"data_violations", Json::array()}};
    for (const auto& v : violations) doc["data_violations"].push_back(v.message);
    if (violations.empty() && !cfg.graph.empty()) {
      SRGraph g;
      g.graph = load_graph(cfg.graph, err, false);
      if (cfg.charts_path.empty()) throw CLI::ValidationError("--charts", "required with --graph");
      g.charts = io::charts_from_json(io::read_json_file(cfg.charts_path), g.graph.num_vertices());
      doc["graph_violations"] = Json::array();
      for (const auto& v : validate_srs_graph(g, d)) {
        doc["graph_violations"].push_back(v.message);
        violations.push_back(v);
      }
    }
    doc["ok"] = violations.empty();
    emit("validate.json", doc);
    return violations.empty() ? kOk : kNegative;
  }

  require_valid(d, err);
  if (cfg.action == "stabilizers") {
    const StabilizerReport report = edge_stabilizers(d);
    emit("stabilizers.json", io::stabilizers_to_json(report));
    return report.all_balanced() ? kOk : kNegative;
  }
  if (cfg.action == "reduce") {
    if (!is_tree(d.color_graph)) {
      err << "reduce needs a color graph that is a tree\n";
      return kInvalidInput;
    }
    emit("reduced.json", io::symdata_to_json(reduce_to_balanced(d)));
    return kOk;
  }
  // cycles
  const std::size_t max_len = cfg.max_len.value_or(default_cycle_length(d.color_graph));
  const CycleReport report = check_cycle_condition(d, max_len);
  emit("cycles.json", io::cycles_to_json(report));
  return report.ok() ? kOk : kNegative;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ColoredGraph base = load_graph(cfg.graph, err);
  if (cfg.degree == 0) throw CLI::ValidationError("--degree", "must be positive");
  std::mt19937_64 rng(cfg.seed.value_or(0));
  const fs::path dir = out_dir(cfg);
  for (std::uint32_t j = 0; j < cfg.count; ++j) {
    GraphMap projection;
    const Component lift = random_voltage_lift(base, cfg.degree, rng, &projection);
    std::ostringstream name;
    name << "lift_" << std::setw(3) << std::setfill('0') << j;
    io::write_json_file(dir / (name.str() + ".json"), io::graph_to_json(lift.graph));
    io::write_json_file(dir / (name.str() + "_map.json"), io::map_to_json(projection));
    out << name.str() << ".json: " << lift.graph.num_vertices() << " vertices, " << lift.graph.num_darts()
        << " darts\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Common finite coverings of finite graphs", "cover"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& s) { cfg.seed = s; },
                                            "Seed for the random choices");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_dir, "Output directory"); };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--s-policy", cfg.s_policy, "s = lcm of m_k over the first graph or both")
        ->check(CLI::IsMember({"first", "both"}));
  };

  CLI::App* refine = app.add_subcommand("refine", "Refined graph of colors of one or two graphs");
  refine->add_option("graph", cfg.graph, "Graph file")->required();
  refine->add_option("graph2", cfg.graph2, "Second graph file");
  add_out(refine);
  add_policy(refine);
  refine->add_flag("--dot", cfg.dot, "Also write DOT files colored by refined class");

  CLI::App* construct = app.add_subcommand("construct", "Build a common finite covering");
  construct->add_option("graph", cfg.graph, "First graph file")->required();
  construct->add_option("graph2", cfg.graph2, "Second graph file")->required();
  add_seed(construct);
  add_out(construct);
  add_policy(construct);
  construct->add_flag("--component", cfg.component_only, "Keep only the component of vertex 0");
  construct->add_flag("--dot", cfg.dot, "Also write H.dot");

  CLI::App* verify = app.add_subcommand("verify", "Check that a map is a covering");
  verify->add_option("cover", cfg.graph, "Covering graph file")->required();
  verify->add_option("base", cfg.graph2, "Base graph file")->required();
  verify->add_option("map", cfg.map_path, "Map file")->required();

  CLI::App* sym = app.add_subcommand("sym", "Symmetry-restricted data checks");
  sym->add_option("action", cfg.action, "validate | stabilizers | reduce | cycles")
      ->required()
      ->check(CLI::IsMember({"validate", "stabilizers", "reduce", "cycles"}));
  sym->add_option("data", cfg.data_path, "Data file")->required();
  sym->add_option("--graph", cfg.graph, "Graph to validate against the data");
  sym->add_option("--charts", cfg.charts_path, "Chart file for --graph");
  sym->add_option_function<std::size_t>("--max-len", [&](const std::size_t& n) { cfg.max_len = n; },
                                        "Longest closed path checked (default 2|E(C)|)");
  add_out(sym);

  CLI::App* gen = app.add_subcommand("gen", "Random voltage lifts of a base graph");
  gen->add_option("base", cfg.graph, "Base graph file")->required();
  gen->add_option("--degree", cfg.degree, "Lift degree")->capture_default_str();
  gen->add_option("--count", cfg.count, "Number of lifts")->capture_default_str();
  add_seed(gen);
  add_out(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (refine->parsed()) return cmd_refine(cfg, out, err);
    if (construct->parsed()) return cmd_construct(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (sym->parsed()) return cmd_sym(cfg, out, err);
    return cmd_gen(cfg, out, err);
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const InvalidData&) {
    return kInvalidInput;
  } catch (const io::InvalidInput& e) {
    err << e.what() << "\n";
    for (const auto& v : e.violations) err << "  " << v << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cover"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cover::cli

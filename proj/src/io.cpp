#include "cover/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace cover::io {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) throw ParseError(ctx + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ctx + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t as_index(const Json& v, const std::string& ctx) {
  if (!v.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || x > std::numeric_limits<std::uint32_t>::max()) throw ParseError(ctx + ": id out of range");
  return static_cast<std::uint64_t>(x);
}

std::int64_t as_int(const Json& v, const std::string& ctx) {
  if (!v.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  return v.get<std::int64_t>();
}

const Json& as_array(const Json& v, const std::string& ctx) {
  if (!v.is_array()) throw ParseError(ctx + ": expected an array");
  return v;
}

std::uint64_t key_index(const std::string& key, const std::string& ctx) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(key, &used);
  } catch (const std::exception&) {
    throw ParseError(ctx + ": key \"" + key + "\" is not an id");
  }
  if (used != key.size()) throw ParseError(ctx + ": key \"" + key + "\" is not an id");
  return x;
}

// Places records by id; ids must be exactly 0..n-1.
template <typename Record>
std::vector<Record> place_by_id(std::vector<std::pair<std::uint64_t, Record>> items, const std::string& what) {
  std::vector<std::string> problems;
  std::vector<Record> out(items.size());
  std::vector<bool> filled(items.size(), false);
  for (auto& [id, rec] : items) {
    if (id >= items.size()) {
      problems.push_back(what + " id " + std::to_string(id) + " out of range (ids must be 0.." +
                         std::to_string(items.size() - 1) + ")");
      continue;
    }
    if (filled[id]) {
      problems.push_back("duplicate " + what + " id " + std::to_string(id));
      continue;
    }
    filled[id] = true;
    out[id] = std::move(rec);
  }
  if (!problems.empty()) throw InvalidInput("invalid " + what + " ids", std::move(problems));
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  write_text_file(path, doc.dump(1) + "\n");
}

ColoredGraph graph_from_json(const Json& doc) {
  const Json& vertices = as_array(field(doc, "vertices", "graph"), "graph.vertices");
  const Json& darts = as_array(field(doc, "darts", "graph"), "graph.darts");
  std::vector<std::pair<std::uint64_t, std::optional<Color>>> vs;
  for (const Json& v : vertices) {
    std::optional<Color> color;
    if (v.is_object() && v.contains("color") && !v["color"].is_null()) color = as_int(v["color"], "vertex color");
    vs.emplace_back(as_index(field(v, "id", "vertex"), "vertex id"), color);
  }
  std::vector<std::pair<std::uint64_t, DartRecord>> ds;
  for (const Json& d : darts) {
    DartRecord rec;
    rec.tail = static_cast<Vertex>(as_index(field(d, "tail", "dart"), "dart tail"));
    rec.bar = static_cast<Dart>(as_index(field(d, "bar", "dart"), "dart bar"));
    if (d.contains("color") && !d["color"].is_null()) rec.color = as_int(d["color"], "dart color");
    ds.emplace_back(as_index(field(d, "id", "dart"), "dart id"), rec);
  }
  ColoredGraph g;
  g.vertex_color = place_by_id(std::move(vs), "vertex");
  g.darts = place_by_id(std::move(ds), "dart");
  return g;
}

Json graph_to_json(const ColoredGraph& g) {
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Json o = {{"id", v}};
    if (g.vertex_color[v]) o["color"] = *g.vertex_color[v];
    vertices.push_back(std::move(o));
  }
  Json darts = Json::array();
  for (Dart e = 0; e < g.num_darts(); ++e) {
    Json o = {{"id", e}, {"bar", g.darts[e].bar}, {"tail", g.darts[e].tail}};
    if (g.darts[e].color) o["color"] = *g.darts[e].color;
    darts.push_back(std::move(o));
  }
  return {{"vertices", std::move(vertices)}, {"darts", std::move(darts)}};
}

ColorGraph color_graph_from_json(const Json& doc) {
  const ColoredGraph g = graph_from_json(doc);
  ColorGraph c;
  c.num_vertices = g.num_vertices();
  for (const DartRecord& d : g.darts) c.darts.push_back({d.tail, d.bar});
  return c;
}

Json color_graph_to_json(const ColorGraph& c) {
  ColoredGraph g;
  g.vertex_color.assign(c.num_vertices, std::nullopt);
  for (const ColorDart& d : c.darts) g.darts.push_back({d.tail, d.bar, std::nullopt});
  return graph_to_json(g);
}

GraphMap map_from_json(const Json& doc) {
  auto pairs = [&](const char* key) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> items;
    for (const Json& p : as_array(field(doc, key, "map"), key)) {
      if (!p.is_array() || p.size() != 2) throw ParseError(std::string(key) + ": expected [h, g] pairs");
      items.emplace_back(as_index(p[0], key), static_cast<std::uint32_t>(as_index(p[1], key)));
    }
    return place_by_id(std::move(items), key);
  };
  GraphMap m;
  m.vertex_map = pairs("vertex_map");
  m.dart_map = pairs("dart_map");
  return m;
}

Json map_to_json(const GraphMap& m) {
  Json vm = Json::array(), dm = Json::array();
  for (std::size_t x = 0; x < m.vertex_map.size(); ++x) vm.push_back({x, m.vertex_map[x]});
  for (std::size_t x = 0; x < m.dart_map.size(); ++x) dm.push_back({x, m.dart_map[x]});
  return {{"vertex_map", std::move(vm)}, {"dart_map", std::move(dm)}};
}

Json refinement_to_json(const RefinedColoring& coloring, const ColorGraphData* data,
                        const CoverParameters* params) {
  Json graphs = Json::array();
  for (std::size_t p = 0; p < coloring.num_graphs(); ++p) {
    Json g = {{"vertex_class", coloring.vertex_class[p]}, {"dart_class", coloring.dart_class[p]}};
    if (data != nullptr) {
      g["n"] = data->counts[p].n;
      g["m"] = data->counts[p].m;
    }
    graphs.push_back(std::move(g));
  }
  Json out = {{"color_graph", color_graph_to_json(coloring.color_graph)},
              {"graphs", std::move(graphs)},
              {"rounds", coloring.rounds}};
  if (data != nullptr) out["r"] = data->r;
  if (params != nullptr) out["parameters"] = {{"s", params->s}, {"a", params->a}, {"b", params->b}};
  return out;
}

SymGroup group_from_json(const Json& doc) {
  const auto degree = as_index(field(doc, "degree", "group"), "group.degree");
  std::vector<Perm> gens;
  for (const Json& g : as_array(field(doc, "generators", "group"), "group.generators")) {
    Perm p;
    for (const Json& x : as_array(g, "generator")) p.push_back(static_cast<Point>(as_index(x, "generator")));
    if (p.size() != degree || !is_permutation(p)) {
      throw InvalidInput("invalid generator", {"generator is not a permutation of " + std::to_string(degree) + " points"});
    }
    gens.push_back(std::move(p));
  }
  SymGroup out;
  try {
    out.group = PermGroup::closure(degree, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw InvalidInput("invalid group", {e.what()});
  }
  out.star_size = doc.contains("star_size") ? as_index(doc["star_size"], "star_size") : degree;
  if (doc.contains("orbit_labels")) {
    const Json& labels = doc["orbit_labels"];
    if (!labels.is_object()) throw ParseError("orbit_labels: expected an object");
    for (const auto& [key, value] : labels.items()) {
      out.orbit_labels[static_cast<Point>(key_index(key, "orbit_labels"))] =
          static_cast<Dart>(as_index(value, "orbit label"));
    }
  }
  return out;
}

Json group_to_json(const SymGroup& g) {
  Json labels = Json::object();
  for (const auto& [point, k] : g.orbit_labels) labels[std::to_string(point)] = k;
  return {{"degree", g.group.degree()},
          {"generators", g.group.generators()},
          {"orbit_labels", std::move(labels)},
          {"star_size", g.star_size}};
}

SymRestrictedData symdata_from_json(const Json& doc) {
  SymRestrictedData d;
  d.color_graph = color_graph_from_json(field(doc, "color_graph", "symdata"));
  const Json& groups = field(doc, "groups", "symdata");
  std::vector<std::pair<std::uint64_t, SymGroup>> items;
  if (groups.is_object()) {
    for (const auto& [key, value] : groups.items()) items.emplace_back(key_index(key, "groups"), group_from_json(value));
  } else if (groups.is_array()) {
    for (std::size_t i = 0; i < groups.size(); ++i) items.emplace_back(i, group_from_json(groups[i]));
  } else {
    throw ParseError("symdata.groups: expected an object or array");
  }
  d.groups = place_by_id(std::move(items), "group");
  if (doc.contains("orbit_labels")) {
    const Json& all = doc["orbit_labels"];
    if (!all.is_object()) throw ParseError("symdata.orbit_labels: expected an object");
    for (const auto& [key, labels] : all.items()) {
      const auto i = key_index(key, "orbit_labels");
      if (i >= d.groups.size()) throw InvalidInput("invalid orbit labels", {"no group for vertex color " + key});
      if (!labels.is_object()) throw ParseError("orbit_labels." + key + ": expected an object");
      for (const auto& [pkey, value] : labels.items()) {
        d.groups[i].orbit_labels[static_cast<Point>(key_index(pkey, "orbit_labels"))] =
            static_cast<Dart>(as_index(value, "orbit label"));
      }
    }
  }
  return d;
}

Json symdata_to_json(const SymRestrictedData& d) {
  Json groups = Json::object();
  for (std::size_t i = 0; i < d.groups.size(); ++i) groups[std::to_string(i)] = group_to_json(d.groups[i]);
  return {{"color_graph", color_graph_to_json(d.color_graph)}, {"groups", std::move(groups)}};
}

std::vector<std::vector<std::pair<Dart, Point>>> charts_from_json(const Json& doc, std::size_t num_vertices) {
  const Json& body = doc.contains("charts") ? doc["charts"] : doc;
  if (!body.is_object()) throw ParseError("charts: expected an object");
  std::vector<std::vector<std::pair<Dart, Point>>> out(num_vertices);
  for (const auto& [key, pairs] : body.items()) {
    const auto v = key_index(key, "charts");
    if (v >= num_vertices) throw InvalidInput("invalid charts", {"chart for unknown vertex " + key});
    for (const Json& p : as_array(pairs, "chart")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("chart: expected [dart, point] pairs");
      out[v].emplace_back(static_cast<Dart>(as_index(p[0], "chart dart")), static_cast<Point>(as_index(p[1], "chart point")));
    }
  }
  return out;
}

Json charts_to_json(const std::vector<std::vector<std::pair<Dart, Point>>>& charts) {
  Json out = Json::object();
  for (std::size_t v = 0; v < charts.size(); ++v) {
    auto sorted = charts[v];
    std::sort(sorted.begin(), sorted.end());
    Json pairs = Json::array();
    for (const auto& [e, x] : sorted) pairs.push_back({e, x});
    out[std::to_string(v)] = std::move(pairs);
  }
  return {{"charts", std::move(out)}};
}

Json stabilizers_to_json(const StabilizerReport& report) {
  Json stabs = Json::array();
  for (const EdgeStabilizer& s : report.stabilizers) {
    stabs.push_back({{"dart_color", s.k},
                     {"basepoint", s.basepoint},
                     {"order", s.group.order()},
                     {"abelian", s.group.is_abelian()},
                     {"generators", s.group.generators()}});
  }
  Json edges = Json::array();
  for (const EdgeBalance& e : report.edges) {
    edges.push_back({{"k", e.k}, {"k_bar", e.k_bar}, {"order", e.order}, {"bar_order", e.bar_order},
                     {"balanced", e.balanced}});
  }
  return {{"stabilizers", std::move(stabs)}, {"edges", std::move(edges)}, {"balanced", report.all_balanced()}};
}

Json cycles_to_json(const CycleReport& report) {
  auto path_json = [](const PathCheck& p) {
    return Json{{"path", p.path}, {"order", p.order}, {"isomorphic", p.isomorphic}};
  };
  Json checked = Json::array();
  for (const PathCheck& p : report.checked) checked.push_back(path_json(p));
  Json out = {{"max_len", report.max_len}, {"paths_checked", report.checked.size()},
              {"checked", std::move(checked)}, {"ok", report.ok()}};
  out["first_failure"] = report.first_failure ? path_json(*report.first_failure) : Json(nullptr);
  return out;
}

std::string to_dot(const ColoredGraph& g, const std::vector<std::size_t>* vertex_class,
                   const std::vector<std::size_t>* dart_class) {
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << v;
    if (vertex_class != nullptr) {
      const std::size_t c = (*vertex_class)[v];
      out << "\\nclass " << c << "\", fillcolor=\"" << kPalette[c % kColors];
    }
    out << "\"];\n";
  }
  for (Dart e = 0; e < g.num_darts(); ++e) {
    const Dart b = g.bar(e);
    if (b < e) continue;
    out << "  v" << g.tail(e) << " -- v" << g.head(e) << " [label=\"" << e << "/" << b;
    if (dart_class != nullptr) {
      out << "\\n" << (*dart_class)[e] << "/" << (*dart_class)[b] << "\", color=\""
          << kPalette[(*dart_class)[e] % kColors];
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cover::io

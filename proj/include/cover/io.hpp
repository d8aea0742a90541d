#pragma once

// JSON file formats and DOT export. Writers emit sorted keys, arrays sorted
// by id and integers only, so identical inputs give identical bytes.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cover/graph.hpp"
#include "cover/leighton.hpp"
#include "cover/refinement.hpp"
#include "cover/symres.hpp"

namespace cover::io {

using Json = nlohmann::json;

/// Malformed JSON or a document that does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose content is invalid (duplicate or missing ids,
/// broken invariants).
class InvalidInput : public std::runtime_error {
 public:
  InvalidInput(std::string what, std::vector<std::string> violations)
      : std::runtime_error(std::move(what)), violations(std::move(violations)) {}
  std::vector<std::string> violations;
};

Json read_json_file(const std::filesystem::path& path);

/// Writes via a temporary file and a rename.
void write_json_file(const std::filesystem::path& path, const Json& doc);
void write_text_file(const std::filesystem::path& path, const std::string& text);

ColoredGraph graph_from_json(const Json& doc);
Json graph_to_json(const ColoredGraph& g);

/// Color graphs use the graph layout; a dart's "tail" is d0.
ColorGraph color_graph_from_json(const Json& doc);
Json color_graph_to_json(const ColorGraph& c);

GraphMap map_from_json(const Json& doc);
Json map_to_json(const GraphMap& m);

Json refinement_to_json(const RefinedColoring& coloring, const ColorGraphData* data,
                        const CoverParameters* params);

/// {"degree", "generators", "orbit_labels"?, "star_size"?}
SymGroup group_from_json(const Json& doc);
Json group_to_json(const SymGroup& g);

/// {"color_graph", "groups": {"i": group}, "orbit_labels"?: {"i": {"point": k}}}
SymRestrictedData symdata_from_json(const Json& doc);
Json symdata_to_json(const SymRestrictedData& d);

/// {"v": [[dart, point], ...], ...}
std::vector<std::vector<std::pair<Dart, Point>>> charts_from_json(const Json& doc, std::size_t num_vertices);
Json charts_to_json(const std::vector<std::vector<std::pair<Dart, Point>>>& charts);

Json stabilizers_to_json(const StabilizerReport& report);
Json cycles_to_json(const CycleReport& report);

/// Undirected DOT with one edge per dart pair. With classes given, vertices
/// and edges are colored by refined class.
std::string to_dot(const ColoredGraph& g, const std::vector<std::size_t>* vertex_class = nullptr,
                   const std::vector<std::size_t>* dart_class = nullptr);

}  // namespace cover::io

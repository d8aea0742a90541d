#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cover/cli.hpp"
#include "cover/io.hpp"
#include "cover/voltage.hpp"
#include "fixtures.hpp"

using namespace cover;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const char* env = std::getenv("COVER_TEST_TMP");
  fs::path dir = (env != nullptr ? fs::path(env) : fs::temp_directory_path() / "cover_tests") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cover::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string save(const fs::path& dir, const std::string& name, const ColoredGraph& g) {
  const fs::path p = dir / name;
  io::write_json_file(p, io::graph_to_json(g));
  return p.string();
}

}  // namespace

TEST_CASE("graph JSON round trip") {
  ColoredGraph g = fixtures::path(3);
  g.vertex_color = {0, 1, 0};
  for (Dart e = 0; e < 4; ++e) g.darts[e].color = e % 2 == 0 ? 4 : 5;
  CHECK(io::graph_from_json(io::graph_to_json(g)) == g);

  const auto doc = io::Json::parse(R"({"vertices":[{"id":1},{"id":0}],"darts":[{"id":1,"tail":1,"bar":0},{"id":0,"tail":0,"bar":1}]})");
  CHECK(io::graph_from_json(doc) == fixtures::path(2));

  const auto dup = io::Json::parse(R"({"vertices":[{"id":0},{"id":0}],"darts":[]})");
  CHECK_THROWS_AS(io::graph_from_json(dup), io::InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(io::Json::parse(R"({"vertices":[]})")), io::ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::Json::parse(R"({"vertices":[{"id":-1}],"darts":[]})")), io::ParseError);
}

TEST_CASE("map, symdata and chart round trips") {
  const GraphMap m{{1, 0}, {1, 0, 3, 2}};
  CHECK(io::map_from_json(io::map_to_json(m)) == m);

  const SymRestrictedData d = fixtures::z4_loop();
  const SymRestrictedData back = io::symdata_from_json(io::symdata_to_json(d));
  CHECK(back.color_graph == d.color_graph);
  REQUIRE(back.groups.size() == 1);
  CHECK(back.groups[0].group.order() == 16);
  CHECK(back.groups[0].orbit_labels == d.groups[0].orbit_labels);

  const std::vector<std::vector<std::pair<Dart, Point>>> charts = {{{0, 1}, {1, 0}}, {{2, 0}}};
  CHECK(io::charts_from_json(io::charts_to_json(charts), 2) == charts);

  const auto top = io::Json::parse(R"({"color_graph":{"vertices":[{"id":0},{"id":1}],
    "darts":[{"id":0,"tail":0,"bar":1},{"id":1,"tail":1,"bar":0}]},
    "groups":[{"degree":2,"generators":[[1,0]]},{"degree":3,"generators":[[1,2,0]]}],
    "orbit_labels":{"0":{"0":0},"1":{"0":1}}})");
  const SymRestrictedData parsed = io::symdata_from_json(top);
  CHECK(validate_symdata(parsed).empty());
}

TEST_CASE("DOT export") {
  const std::string dot = io::to_dot(fixtures::cycle(3));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}

TEST_CASE("cli refine") {
  const fs::path dir = scratch("refine");
  const auto p3 = save(dir, "p3.json", fixtures::path(3));
  const auto c3 = save(dir, "c3.json", fixtures::cycle(3));
  const auto c6 = save(dir, "c6.json", fixtures::cycle(6));
  const auto p2 = save(dir, "p2.json", fixtures::path(2));

  Run r = run_cli({"refine", p3});
  REQUIRE(r.code == 0);
  const auto doc = io::Json::parse(r.out);
  CHECK(doc["color_graph"]["vertices"].size() == 2);

  r = run_cli({"refine", c3, c6, "--out", (dir / "o").string(), "--dot"});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "o" / "refined.json"));
  CHECK(fs::exists(dir / "o" / "g2.dot"));

  CHECK(run_cli({"refine", c3, p2}).code == 1);
  CHECK(run_cli({"refine", c3, "--bogus"}).code == 2);
  CHECK(run_cli({"refine", (dir / "missing.json").string()}).code == 2);

  std::ofstream(dir / "broken.json") << "{\"vertices\": [";
  CHECK(run_cli({"refine", (dir / "broken.json").string()}).code == 2);

  ColoredGraph half = fixtures::path(2);
  half.darts[0].bar = 0;
  half.darts[1].bar = 1;
  r = run_cli({"refine", save(dir, "half.json", half)});
  CHECK(r.code == 3);
  CHECK(r.err.find("half") != std::string::npos);
  CHECK(run_cli({"refine", save(dir, "two.json", disjoint_union(fixtures::path(2), fixtures::path(2)))}).code == 3);
}

TEST_CASE("cli construct and verify") {
  const fs::path dir = scratch("construct");
  const auto k4 = save(dir, "k4.json", fixtures::complete(4));
  const auto k33 = save(dir, "k33.json", fixtures::complete_bipartite(3, 3));
  const auto c3 = save(dir, "c3.json", fixtures::cycle(3));
  const auto p2 = save(dir, "p2.json", fixtures::path(2));

  Run r = run_cli({"construct", k4, k33, "--out", (dir / "a").string(), "--seed", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("|V(H)| = 72") != std::string::npos);
  CHECK(r.out.find("|darts(H)| = 216") != std::string::npos);
  CHECK(run_cli({"verify", (dir / "a/H.json").string(), k4, (dir / "a/map_g.json").string()}).code == 0);
  CHECK(run_cli({"verify", (dir / "a/H.json").string(), k33, (dir / "a/map_g2.json").string()}).code == 0);

  // Identical inputs, flags and seed give identical bytes.
  REQUIRE(run_cli({"construct", k4, k33, "--out", (dir / "b").string(), "--seed", "5"}).code == 0);
  for (const char* f : {"H.json", "map_g.json", "map_g2.json"}) CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));

  // Corrupt one dart image.
  auto map = io::read_json_file(dir / "a/map_g.json");
  map["dart_map"][0][1] = (map["dart_map"][0][1].get<int>() + 1) % 12;
  io::write_json_file(dir / "bad_map.json", map);
  r = run_cli({"verify", (dir / "a/H.json").string(), k4, (dir / "bad_map.json").string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("defect") != std::string::npos);

  const auto ident = io::map_to_json(identity_map(fixtures::complete(4)));
  io::write_json_file(dir / "id.json", ident);
  CHECK(run_cli({"verify", k4, k4, (dir / "id.json").string()}).code == 0);

  CHECK(run_cli({"construct", c3, p2, "--out", (dir / "c").string()}).code == 1);
  r = run_cli({"construct", p2, p2, "--component", "--out", (dir / "d").string()});
  CHECK(r.code == 0);
  CHECK(io::graph_from_json(io::read_json_file(dir / "d/H.json")) == fixtures::path(2));
  CHECK(run_cli({"construct", k4, k33, "--s-policy", "neither"}).code == 2);
}

TEST_CASE("cli sym") {
  const fs::path dir = scratch("sym");
  io::write_json_file(dir / "dc.json", io::symdata_to_json(fixtures::dodeca_cube()));
  io::write_json_file(dir / "ic.json", io::symdata_to_json(fixtures::icosa_cube()));
  io::write_json_file(dir / "loop.json", io::symdata_to_json(fixtures::z4_loop()));
  const std::string dc = (dir / "dc.json").string(), ic = (dir / "ic.json").string(),
                    loop = (dir / "loop.json").string();

  CHECK(run_cli({"sym", "validate", dc}).code == 0);
  Run r = run_cli({"sym", "stabilizers", dc});
  REQUIRE(r.code == 0);
  const auto st = io::Json::parse(r.out);
  CHECK(st.dump().find("\"order\":6") != std::string::npos);
  CHECK(run_cli({"sym", "stabilizers", ic}).code == 1);

  r = run_cli({"sym", "reduce", dc, "--out", (dir / "red").string()});
  REQUIRE(r.code == 0);
  CHECK(run_cli({"sym", "stabilizers", (dir / "red/reduced.json").string()}).code == 0);
  CHECK(run_cli({"sym", "reduce", loop}).code == 3);

  CHECK(run_cli({"sym", "cycles", loop}).code == 1);
  CHECK(run_cli({"sym", "cycles", dc, "--max-len", "4"}).code == 0);
  CHECK(run_cli({"sym", "explode", dc}).code == 2);

  SymRestrictedData bad = fixtures::dodeca_cube();
  bad.groups[0].orbit_labels[0] = 1;
  io::write_json_file(dir / "bad.json", io::symdata_to_json(bad));
  CHECK(run_cli({"sym", "validate", (dir / "bad.json").string()}).code == 1);
  CHECK(run_cli({"sym", "stabilizers", (dir / "bad.json").string()}).code == 3);
}

TEST_CASE("cli gen") {
  const fs::path dir = scratch("gen");
  const auto k4 = save(dir, "k4.json", fixtures::complete(4));
  Run r = run_cli({"gen", k4, "--degree", "2", "--count", "2", "--seed", "7", "--out", (dir / "lifts").string()});
  REQUIRE(r.code == 0);
  const auto a = io::graph_from_json(io::read_json_file(dir / "lifts/lift_000.json"));
  const auto b = io::graph_from_json(io::read_json_file(dir / "lifts/lift_001.json"));
  CHECK(common_cover_exists(a, b).exists);
  const auto proj = io::map_from_json(io::read_json_file(dir / "lifts/lift_000_map.json"));
  CHECK(verify_covering(a, fixtures::complete(4), proj).ok());

  REQUIRE(run_cli({"gen", k4, "--degree", "1", "--count", "1", "--out", (dir / "one").string()}).code == 0);
  CHECK(io::graph_from_json(io::read_json_file(dir / "one/lift_000.json")).num_vertices() == 4);
}

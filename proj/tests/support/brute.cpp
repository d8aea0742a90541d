#include "brute.hpp"

#include <map>
#include <tuple>

namespace brute {

std::vector<std::size_t> normalize(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::size_t> rename;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (std::size_t x : labels) out.push_back(rename.emplace(x, rename.size()).first->second);
  return out;
}

namespace {

using cover::ColoredGraph;

bool respects_colors(const ColoredGraph& g, const std::vector<std::size_t>& block) {
  for (std::size_t u = 0; u < block.size(); ++u) {
    for (std::size_t v = 0; v < block.size(); ++v) {
      if (block[u] == block[v] && g.vertex_color[u] != g.vertex_color[v]) return false;
    }
  }
  return true;
}

using Profile = std::map<std::tuple<std::optional<cover::Color>, std::optional<cover::Color>, std::size_t>, int>;

bool equitable(const ColoredGraph& g, const std::vector<std::size_t>& block) {
  std::vector<Profile> profile(block.size());
  for (cover::Dart e = 0; e < g.num_darts(); ++e) {
    ++profile[g.tail(e)][{g.darts[e].color, g.darts[g.bar(e)].color, block[g.head(e)]}];
  }
  for (std::size_t u = 0; u < block.size(); ++u) {
    for (std::size_t v = u + 1; v < block.size(); ++v) {
      if (block[u] == block[v] && profile[u] != profile[v]) return false;
    }
  }
  return true;
}

bool refines(const std::vector<std::size_t>& fine, const std::vector<std::size_t>& coarse) {
  for (std::size_t u = 0; u < fine.size(); ++u) {
    for (std::size_t v = 0; v < fine.size(); ++v) {
      if (fine[u] == fine[v] && coarse[u] != coarse[v]) return false;
    }
  }
  return true;
}

template <class F>
void for_each_partition(std::size_t n, F&& visit) {
  std::vector<std::size_t> rgs(n, 0);
  auto rec = [&](auto& self, std::size_t j, std::size_t blocks) -> void {
    if (j == n) {
      visit(rgs);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[j] = b;
      self(self, j + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (n == 0) {
    visit(rgs);
    return;
  }
  rgs[0] = 0;
  rec(rec, 1, 1);
}

}  // namespace

EquitableResult coarsest_equitable_partition(const ColoredGraph& g) {
  EquitableResult out;
  std::vector<std::vector<std::size_t>> all;
  std::size_t best_blocks = 0;
  for_each_partition(g.num_vertices(), [&](const std::vector<std::size_t>& rgs) {
    if (!respects_colors(g, rgs) || !equitable(g, rgs)) return;
    all.push_back(rgs);
    std::size_t blocks = 0;
    for (std::size_t b : rgs) blocks = std::max(blocks, b + 1);
    if (out.vertex_block.empty() || blocks < best_blocks) {
      out.vertex_block = rgs;
      best_blocks = blocks;
    }
  });
  out.equitable_count = all.size();
  out.unique_coarsest = true;
  for (const auto& p : all) out.unique_coarsest = out.unique_coarsest && refines(p, out.vertex_block);

  std::vector<std::size_t> dart_key;
  std::map<std::tuple<std::optional<cover::Color>, std::optional<cover::Color>, std::size_t, std::size_t>, std::size_t>
      ids;
  for (cover::Dart e = 0; e < g.num_darts(); ++e) {
    const auto key = std::make_tuple(g.darts[e].color, g.darts[g.bar(e)].color, out.vertex_block[g.tail(e)],
                                     out.vertex_block[g.head(e)]);
    out.dart_block.push_back(ids.emplace(key, ids.size()).first->second);
  }
  return out;
}

}  // namespace brute

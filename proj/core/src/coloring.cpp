#include "uacg/coloring.hpp"

#include <algorithm>

#include "uacg/errors.hpp"

namespace uacg {

std::vector<int> Coloring::class_of(std::size_t vertex_count) const {
  std::vector<int> out(vertex_count, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (auto v : classes[c].vertices) {
      if (v < vertex_count) out[v] = static_cast<int>(c);
    }
  }
  return out;
}

void canonicalize(Coloring& c) {
  for (auto& cls : c.classes) std::sort(cls.vertices.begin(), cls.vertices.end());
  std::stable_sort(c.classes.begin(), c.classes.end(), [](const ColorClass& a, const ColorClass& b) {
    if (a.vertices.empty() || b.vertices.empty()) return !a.vertices.empty() && b.vertices.empty();
    return a.vertices.front() < b.vertices.front();
  });
}

Coloring coloring_from_assignment(std::string graph, const std::vector<int>& assignment) {
  std::vector<std::vector<VertexId>> buckets;
  for (VertexId v = 0; v < assignment.size(); ++v) {
    const int c = assignment[v];
    if (c < 0) throw PartitionError("coloring_from_assignment: vertex " + std::to_string(v) + " is unassigned");
    if (static_cast<std::size_t>(c) >= buckets.size()) buckets.resize(static_cast<std::size_t>(c) + 1);
    buckets[static_cast<std::size_t>(c)].push_back(v);
  }
  Coloring out{std::move(graph), {}};
  for (auto& b : buckets) {
    if (!b.empty()) out.classes.push_back({"", std::move(b)});
  }
  canonicalize(out);
  for (std::size_t i = 0; i < out.classes.size(); ++i) out.classes[i].label = "c" + std::to_string(i);
  return out;
}

std::vector<int> greedy_assignment(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<bool> used;
    g.row(v).for_each([&](std::size_t u) {
      if (color[u] >= 0) {
        if (static_cast<std::size_t>(color[u]) >= used.size()) used.resize(static_cast<std::size_t>(color[u]) + 1);
        used[static_cast<std::size_t>(color[u])] = true;
      }
    });
    int c = 0;
    while (static_cast<std::size_t>(c) < used.size() && used[static_cast<std::size_t>(c)]) ++c;
    color[v] = c;
  }
  return color;
}

std::vector<int> merge_to_complete(const Graph& g, std::vector<int> assignment) {
  const auto n = g.vertex_count();
  if (assignment.size() != n) throw DimensionError("merge_to_complete: assignment size mismatch");
  int k = 0;
  for (auto c : assignment) {
    if (c < 0) throw PartitionError("merge_to_complete: unassigned vertex");
    k = std::max(k, c + 1);
  }
  std::vector<DynamicBitset> mask(static_cast<std::size_t>(k), DynamicBitset(n));
  std::vector<DynamicBitset> reach(static_cast<std::size_t>(k), DynamicBitset(n));
  for (VertexId v = 0; v < n; ++v) {
    mask[static_cast<std::size_t>(assignment[v])].set(v);
    reach[static_cast<std::size_t>(assignment[v])] |= g.row(v);
  }
  std::vector<std::size_t> alive;
  for (std::size_t c = 0; c < mask.size(); ++c) {
    if (mask[c].any()) alive.push_back(c);
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < alive.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < alive.size() && !merged; ++j) {
        const auto a = alive[i];
        const auto b = alive[j];
        if (reach[a].intersects(mask[b])) continue;
        mask[a] |= mask[b];
        reach[a] |= reach[b];
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
  }
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < alive.size(); ++i) {
    mask[alive[i]].for_each([&](std::size_t v) { out[v] = static_cast<int>(i); });
  }
  return out;
}

}  // namespace uacg

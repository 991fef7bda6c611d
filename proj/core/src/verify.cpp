#include "uacg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "uacg/errors.hpp"

namespace uacg {

void check_partition(const Graph& g, const Coloring& c) {
  const auto n = g.vertex_count();
  std::vector<int> owner(n, -1);
  std::set<std::string> labels;
  for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
    const auto& cls = c.classes[ci];
    if (cls.vertices.empty()) throw PartitionError("class '" + cls.label + "' is empty");
    if (!labels.insert(cls.label).second) throw PartitionError("duplicate class label '" + cls.label + "'");
    for (auto v : cls.vertices) {
      if (v >= n) throw PartitionError("class '" + cls.label + "' contains vertex " + std::to_string(v) + " outside the graph");
      if (owner[v] != -1) {
        throw PartitionError("vertex " + std::to_string(v) + " appears in both '" +
                             c.classes[static_cast<std::size_t>(owner[v])].label + "' and '" + cls.label + "'");
      }
      owner[v] = static_cast<int>(ci);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (owner[v] == -1) throw PartitionError("vertex " + std::to_string(v) + " is not covered by any class");
  }
}

namespace {

DynamicBitset members(const Graph& g, std::span<const VertexId> s) {
  DynamicBitset out(g.vertex_count());
  for (auto v : s) {
    if (v >= g.vertex_count()) throw DimensionError("vertex " + std::to_string(v) + " outside the graph");
    out.set(v);
  }
  return out;
}

}  // namespace

ProperReport is_proper(const Graph& g, const Coloring& c) {
  check_partition(g, c);
  std::vector<std::size_t> order(c.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return c.classes[a].label < c.classes[b].label; });
  for (auto ci : order) {
    const auto& cls = c.classes[ci];
    const auto mask = members(g, cls.vertices);
    std::vector<VertexId> sorted = cls.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (auto u : sorted) {
      const auto hit = (g.row(u) & mask).find_next(u);
      if (hit != DynamicBitset::npos) {
        return {false, ProperViolation{u, static_cast<VertexId>(hit), cls.label}};
      }
    }
  }
  return {};
}

CompleteReport is_complete(const Graph& g, const Coloring& c) {
  check_partition(g, c);
  const auto k = c.classes.size();
  std::vector<DynamicBitset> mask(k), reach(k, DynamicBitset(g.vertex_count()));
  for (std::size_t i = 0; i < k; ++i) {
    mask[i] = members(g, c.classes[i].vertices);
    for (auto v : c.classes[i].vertices) reach[i] |= g.row(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!reach[i].intersects(mask[j])) {
        return {false, std::make_pair(c.classes[i].label, c.classes[j].label)};
      }
    }
  }
  return {};
}

namespace {

SetReport scan_pairs(const Graph& g, std::span<const VertexId> s, bool want_adjacent) {
  std::vector<VertexId> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto v : sorted) {
    if (v >= g.vertex_count()) throw DimensionError("vertex " + std::to_string(v) + " outside the graph");
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i] == sorted[j]) continue;
      if (g.adjacent(sorted[i], sorted[j]) != want_adjacent) return {false, Edge{sorted[i], sorted[j]}};
    }
  }
  return {};
}

}  // namespace

SetReport is_clique(const Graph& g, std::span<const VertexId> s) { return scan_pairs(g, s, true); }

SetReport is_independent(const Graph& g, std::span<const VertexId> s) { return scan_pairs(g, s, false); }

std::vector<VertexId> non_common_neighbors(const Graph& g, std::span<const VertexId> s) {
  DynamicBitset excluded(g.vertex_count());
  for (auto v : s) {
    if (v >= g.vertex_count()) throw DimensionError("vertex " + std::to_string(v) + " outside the graph");
    excluded |= g.row(v);
    excluded.set(v);
  }
  return excluded.complement().to_vector();
}

CompletenessBounds completeness_upper_bounds(std::uint64_t e) {
  CompletenessBounds b;
  b.sqrt_bound = std::sqrt(2.0 * static_cast<double>(e) + 0.25) + 0.5;
  auto k = static_cast<std::uint64_t>(std::floor(b.sqrt_bound));
  // floating point guard; the integer condition is authoritative
  while (k > 1 && k * (k - 1) / 2 > e) --k;
  while ((k + 1) * k / 2 <= e) ++k;
  b.binomial_bound_k = std::max<std::uint64_t>(k, 1);
  return b;
}

SetReport singletons_form_clique(const Graph& g, const Coloring& c) {
  std::vector<VertexId> special;
  for (const auto& cls : c.classes) {
    if (cls.vertices.size() == 1) special.push_back(cls.vertices.front());
  }
  return is_clique(g, special);
}

AchromaticLedger::Verdict AchromaticLedger::accept(const std::string& key, const Graph& g, const Coloring& c) {
  try {
    if (auto r = is_proper(g, c); !r.ok) return {false, "not proper: edge in class '" + r.violation->label + "'"};
    if (auto r = is_complete(g, c); !r.ok) {
      return {false, "not complete: no edge between '" + r.missing_pair->first + "' and '" + r.missing_pair->second + "'"};
    }
  } catch (const PartitionError& e) {
    return {false, std::string("not a partition: ") + e.what()};
  }
  if (c.size() > completeness_upper_bounds(g).binomial_bound_k) {
    return {false, "class count exceeds the edge-counting bound"};
  }
  if (!singletons_form_clique(g, c).ok) return {false, "singleton classes do not form a clique"};
  auto& slot = best_[key];
  slot = std::max(slot, c.size());
  return {true, {}};
}

std::optional<std::size_t> AchromaticLedger::best(const std::string& key) const {
  if (auto it = best_.find(key); it != best_.end()) return it->second;
  return std::nullopt;
}

}  // namespace uacg

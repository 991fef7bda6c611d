#include "uacg/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "uacg/errors.hpp"

namespace uacg {

Graph::Graph(std::size_t vertex_count) : rows_(vertex_count, DynamicBitset(vertex_count)) {}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u >= rows_.size() || v >= rows_.size()) throw DimensionError("add_edge: vertex out of range");
  if (u == v) throw DomainError("add_edge: loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < rows_.size(); ++u) {
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<VertexId>(v));
    });
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(rows_.size());
  for (VertexId v = 0; v < rows_.size(); ++v) {
    out.rows_[v] = rows_[v].complement();
    out.rows_[v].reset(v);
  }
  return out;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  const auto n = g.vertex_count();
  s.degree_sequence.resize(n);
  std::uint64_t degree_sum = 0;
  for (VertexId v = 0; v < n; ++v) {
    s.degree_sequence[v] = g.degree(v);
    degree_sum += s.degree_sequence[v];
  }
  s.edge_count = degree_sum / 2;
  if (n > 0) {
    const auto [lo, hi] = std::minmax_element(s.degree_sequence.begin(), s.degree_sequence.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
    s.is_regular = *lo == *hi;
  }
  return s;
}

std::vector<VertexId> neighbors(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw DimensionError("neighbors: vertex out of range");
  return g.row(v).to_vector();
}

UnitaryGraph build_graph(const RingSpec& ring, std::size_t vertex_cap) {
  const auto n = ring.order();
  if (n > vertex_cap) {
    throw CapacityError("build_graph: ring has " + std::to_string(n) + " elements, cap is " + std::to_string(vertex_cap));
  }
  UnitaryGraph out{ring, {}, Graph(n)};
  out.vertices.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.vertices.push_back(ring.element(i));

  const auto m = ring.factor_count();
  for (VertexId i = 0; i < n; ++i) {
    const auto& x = out.vertices[i].coords;
    for (VertexId j = i + 1; j < n; ++j) {
      const auto& y = out.vertices[j].coords;
      bool unit = true;
      for (std::size_t f = 0; f < m && unit; ++f) unit = ring.factor(f).sum_is_unit(x[f], y[f]);
      if (unit) out.graph.add_edge(i, j);
    }
  }
  return out;
}

std::vector<int> bipartition(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      bool clash = false;
      g.row(u).for_each([&](std::size_t v) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(static_cast<VertexId>(v));
        } else if (side[v] == side[u]) {
          clash = true;
        }
      });
      if (clash) return {};
    }
  }
  return side;
}

}  // namespace uacg

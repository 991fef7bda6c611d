#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "uacg/bitset.hpp"
#include "uacg/ring.hpp"

namespace uacg {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph stored as packed adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const { return rows_.size(); }
  void add_edge(VertexId u, VertexId v);
  bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
  const DynamicBitset& row(VertexId v) const { return rows_[v]; }
  std::size_t degree(VertexId v) const { return rows_[v].count(); }
  std::uint64_t edge_count() const;
  // All edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;
  Graph complement() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<DynamicBitset> rows_;
};

struct GraphStats {
  std::uint64_t edge_count = 0;
  std::vector<std::size_t> degree_sequence;  // indexed by vertex
  bool is_regular = true;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

GraphStats stats(const Graph& g);
std::vector<VertexId> neighbors(const Graph& g, VertexId v);

inline constexpr std::size_t default_vertex_cap = 5000;

// U(R): vertices are the ring elements in enumeration order; x ~ y iff
// x != y and x + y is a unit.
struct UnitaryGraph {
  RingSpec ring;
  std::vector<RingElement> vertices;
  Graph graph;
};

UnitaryGraph build_graph(const RingSpec& ring, std::size_t vertex_cap = default_vertex_cap);

// Two-coloring of g by BFS, or empty if g has an odd cycle.
std::vector<int> bipartition(const Graph& g);

}  // namespace uacg

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uacg/graph.hpp"

namespace uacg {

struct ColorClass {
  std::string label;
  std::vector<VertexId> vertices;  // sorted ascending
  bool operator==(const ColorClass&) const = default;
};

// Partition of a graph's vertices into labeled classes. `graph` is the ring
// descriptor (or any identifier) of the graph the coloring refers to.
struct Coloring {
  std::string graph;
  std::vector<ColorClass> classes;

  std::size_t size() const { return classes.size(); }
  // class index per vertex; -1 for uncovered vertices
  std::vector<int> class_of(std::size_t vertex_count) const;
  bool operator==(const Coloring&) const = default;
};

// Sorts vertices inside each class and orders classes by minimum member.
void canonicalize(Coloring& c);

// Builds a coloring from a per-vertex class assignment in [0, k). Labels are
// "c0", "c1", ... in canonical (minimum member) order.
Coloring coloring_from_assignment(std::string graph, const std::vector<int>& assignment);

// First-fit proper coloring in vertex index order; returns class per vertex.
std::vector<int> greedy_assignment(const Graph& g);

// Merges classes that have no edge between them until every pair of classes
// is joined by an edge. Merging such a pair never creates a monochromatic
// edge, so a proper input stays proper. Returned classes are 0..k-1.
std::vector<int> merge_to_complete(const Graph& g, std::vector<int> assignment);

struct CliqueWitness {
  std::vector<VertexId> vertices;
  std::vector<std::string> labels;  // parallel to vertices
};

}  // namespace uacg

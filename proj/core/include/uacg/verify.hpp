#pragma once

// Independent certificate checkers. Every check is a direct scan over the
// graph's adjacency rows; none of them trusts how a certificate was built.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uacg/coloring.hpp"
#include "uacg/graph.hpp"

namespace uacg {

struct ProperViolation {
  VertexId u = 0;
  VertexId v = 0;
  std::string label;
  bool operator==(const ProperViolation&) const = default;
};

struct ProperReport {
  bool ok = true;
  std::optional<ProperViolation> violation;
};

struct CompleteReport {
  bool ok = true;
  std::optional<std::pair<std::string, std::string>> missing_pair;
};

struct SetReport {
  bool ok = true;
  std::optional<Edge> witness;  // first offending pair (lexicographic)
};

// Throws PartitionError unless c is a partition of g's vertex set into
// nonempty classes with unique labels.
void check_partition(const Graph& g, const Coloring& c);

// No monochromatic edge. The reported violation is the lexicographically
// first edge inside the class with the smallest label.
ProperReport is_proper(const Graph& g, const Coloring& c);

// Every unordered pair of classes has at least one crossing edge. The first
// missing pair in class order is reported.
CompleteReport is_complete(const Graph& g, const Coloring& c);

SetReport is_clique(const Graph& g, std::span<const VertexId> s);
SetReport is_independent(const Graph& g, std::span<const VertexId> s);

// Vertices outside s that are adjacent to no member of s. When s is a color
// class, members of the other classes are reported like any other vertex.
std::vector<VertexId> non_common_neighbors(const Graph& g, std::span<const VertexId> s);

struct CompletenessBounds {
  std::uint64_t binomial_bound_k = 1;  // max k with k(k-1)/2 <= e
  double sqrt_bound = 1.0;             // sqrt(2e + 1/4) + 1/2
};

CompletenessBounds completeness_upper_bounds(std::uint64_t edge_count);
inline CompletenessBounds completeness_upper_bounds(const Graph& g) { return completeness_upper_bounds(g.edge_count()); }

// Singleton classes of a complete coloring must form a clique.
SetReport singletons_form_clique(const Graph& g, const Coloring& c);

// Records verified achromatic lower bounds per graph key. A coloring is only
// accepted if it is a proper, complete partition whose size respects the
// counting bound and whose singletons form a clique; the recorded value per
// key never decreases.
class AchromaticLedger {
 public:
  struct Verdict {
    bool accepted = false;
    std::string reason;
  };

  Verdict accept(const std::string& key, const Graph& g, const Coloring& c);
  std::optional<std::size_t> best(const std::string& key) const;

 private:
  std::map<std::string, std::size_t> best_;
};

}  // namespace uacg

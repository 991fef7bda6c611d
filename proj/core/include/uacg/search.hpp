#pragma once

// Heuristic search for large achromatic (proper and complete) colorings.
// Everything returned is a lower-bound certificate that has been re-checked
// with verify.hpp; the search never claims upper bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uacg/coloring.hpp"
#include "uacg/graph.hpp"

namespace uacg {

namespace detail {
__extension__ typedef unsigned __int128 u128;
}  // namespace detail

// SplitMix64: state += 0x9e3779b97f4a7c15, then the output is the state
// passed through two xor-shift-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by multiply-shift.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<detail::u128>(next()) * bound) >> 64);
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

enum class SearchStrategy { greedy_merge, randomized_backtrack, hill_climb };

std::string_view to_string(SearchStrategy s);
SearchStrategy parse_strategy(std::string_view name);

struct SearchConfig {
  std::uint64_t seed = 42;
  std::uint64_t restarts = 4;
  // Per restart: tabu moves (hill_climb), search nodes (randomized_backtrack)
  // or merge passes (greedy_merge).
  std::uint64_t iterations = 1'000'000;
  // Tabu moves allowed to repair one split before it is abandoned.
  std::uint64_t repair_iterations = 20'000;
  std::optional<std::size_t> target_k;
  SearchStrategy strategy = SearchStrategy::hill_climb;
};

struct TraceRow {
  std::uint64_t restart = 0;
  std::size_t k = 0;  // best k over restarts 0..restart
  std::uint64_t iterations = 0;
};

struct SearchOutcome {
  Coloring best_coloring;
  std::size_t k = 0;
  bool verified = false;
  bool target_reached = false;
  std::vector<TraceRow> trace;
};

SearchOutcome achromatic_search(const Graph& g, const SearchConfig& cfg, std::string graph_id = "");

// Hill-climb from a known proper complete coloring. Throws DomainError if
// `start` is not proper and complete on g.
SearchOutcome seed_from_construction(const Graph& g, const Coloring& start, const SearchConfig& cfg);

}  // namespace uacg

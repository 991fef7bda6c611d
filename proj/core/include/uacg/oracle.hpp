#pragma once

// Exact solvers for small graphs. Each solver verifies its certificate with
// the checkers in verify.hpp before returning. Budgets count search nodes,
// so results are reproducible across machines.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "uacg/coloring.hpp"
#include "uacg/graph.hpp"

namespace uacg {

enum class Parameter { omega, chi, alpha, chi_a, psi };

std::string_view to_string(Parameter p);
Parameter parse_parameter(std::string_view name);

struct ExactResult {
  Parameter parameter = Parameter::omega;
  std::uint64_t value = 0;  // certified value; exact iff `exact`
  bool exact = true;
  std::uint64_t lower = 0;  // bracketing interval, lower == upper when exact
  std::uint64_t upper = 0;
  std::vector<VertexId> vertex_set;  // clique (omega) or independent set (alpha)
  std::optional<Coloring> coloring;  // chi, chi_a, psi
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
};

inline constexpr std::uint64_t default_node_budget = 100'000'000;
// The partition solvers keep vertex sets in single machine words.
inline constexpr std::size_t partition_solver_max_vertices = 64;

// Branch and bound with a greedy-coloring bound over bitset candidate sets.
ExactResult clique_number_exact(const Graph& g, std::uint64_t budget = default_node_budget);
// Maximum clique of the complement.
ExactResult independence_number_exact(const Graph& g, std::uint64_t budget = default_node_budget);
// DSATUR branch and bound between the clique bound and a greedy coloring.
ExactResult chromatic_number_exact(const Graph& g, std::uint64_t budget = default_node_budget);
// Largest k admitting a proper complete coloring. Each k is decided by an
// exhaustive partition search, descending from the edge-counting bound.
ExactResult achromatic_number_exact(const Graph& g, std::uint64_t budget = default_node_budget);
// As above without properness.
ExactResult pseudo_achromatic_exact(const Graph& g, std::uint64_t budget = default_node_budget);

ExactResult solve_exact(const Graph& g, Parameter parameter, std::uint64_t budget = default_node_budget);

}  // namespace uacg

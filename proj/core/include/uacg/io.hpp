#pragma once

// Interchange formats shared by the CLI subcommands.
//
// Graph JSON:    {"edges": [[i,j],...], "n": int, "ring": str, "vertices": [[coord,...],...]}
// Coloring JSON: {"classes": [{"label": str, "vertices": [int,...]},...], "graph": str, "k": int}
// DOT:           graph U { i [label="(x,y)"]; ... i -- j; ... }
//
// Keys are emitted sorted, edges as (i < j) in lexicographic order and class
// vertex lists ascending, so identical inputs give byte-identical files.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "uacg/coloring.hpp"
#include "uacg/graph.hpp"
#include "uacg/oracle.hpp"
#include "uacg/search.hpp"

namespace uacg {

struct GraphDocument {
  std::string ring;
  std::vector<std::vector<std::uint32_t>> vertices;  // coordinate tuple per vertex; may be empty
  Graph graph;
};

GraphDocument to_document(const UnitaryGraph& g);

std::string graph_to_json(const GraphDocument& doc);
GraphDocument graph_from_json(std::string_view text);

std::string graph_to_dot(const GraphDocument& doc);
Graph graph_from_dot(std::string_view text);

std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(std::string_view text);

std::string clique_to_json(const CliqueWitness& w, const std::string& graph);
std::string result_to_json(const ExactResult& r);
// restart,k,iterations
std::string trace_to_csv(const std::vector<TraceRow>& trace);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace uacg

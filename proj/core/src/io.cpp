#include "uacg/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "uacg/errors.hpp"

namespace uacg {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

json coloring_object(const Coloring& c) {
  json classes = json::array();
  for (const auto& cls : c.classes) {
    auto vs = cls.vertices;
    std::sort(vs.begin(), vs.end());
    classes.push_back({{"label", cls.label}, {"vertices", vs}});
  }
  return {{"graph", c.graph}, {"k", c.classes.size()}, {"classes", std::move(classes)}};
}

std::string label_of(const GraphDocument& doc, VertexId v) {
  if (v >= doc.vertices.size()) return std::to_string(v);
  std::string out = "(";
  for (std::size_t i = 0; i < doc.vertices[v].size(); ++i) {
    if (i) out += ',';
    out += std::to_string(doc.vertices[v][i]);
  }
  return out + ")";
}

}  // namespace

GraphDocument to_document(const UnitaryGraph& g) {
  GraphDocument doc{g.ring.descriptor(), {}, g.graph};
  doc.vertices.reserve(g.vertices.size());
  for (const auto& v : g.vertices) doc.vertices.push_back(v.coords);
  return doc;
}

std::string graph_to_json(const GraphDocument& doc) {
  json edges = json::array();
  for (const auto& [i, j] : doc.graph.edges()) edges.push_back({i, j});
  json j{{"ring", doc.ring}, {"n", doc.graph.vertex_count()}, {"vertices", doc.vertices}, {"edges", std::move(edges)}};
  return j.dump() + "\n";
}

GraphDocument graph_from_json(std::string_view text) {
  const auto j = parse_json(text, "graph");
  try {
    GraphDocument doc;
    doc.ring = j.value("ring", std::string{});
    const auto n = j.at("n").get<std::size_t>();
    if (j.contains("vertices")) doc.vertices = j.at("vertices").get<std::vector<std::vector<std::uint32_t>>>();
    if (!doc.vertices.empty() && doc.vertices.size() != n) throw FormatError("graph: 'vertices' length differs from 'n'");
    doc.graph = Graph(n);
    for (const auto& e : j.at("edges")) {
      const auto a = e.at(0).get<std::size_t>();
      const auto b = e.at(1).get<std::size_t>();
      if (a >= n || b >= n || a == b) throw FormatError("graph: bad edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
      doc.graph.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    return doc;
  } catch (const json::exception& e) {
    throw FormatError(std::string("graph: ") + e.what());
  }
}

std::string graph_to_dot(const GraphDocument& doc) {
  std::ostringstream os;
  os << "graph U {\n";
  for (VertexId v = 0; v < doc.graph.vertex_count(); ++v) os << "  " << v << " [label=\"" << label_of(doc, v) << "\"];\n";
  for (const auto& [i, j] : doc.graph.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

Graph graph_from_dot(std::string_view text) {
  const std::string s(text);
  static const std::regex header_re(R"(^\s*(?:strict\s+)?graph\b[^{]*\{)");
  if (!std::regex_search(s, header_re)) throw FormatError("dot: expected an undirected 'graph { ... }' document");
  static const std::regex node_re(R"((?:^|[;{\n])\s*(\d+)\s*\[)");
  static const std::regex edge_re(R"((\d+)\s*--\s*(\d+))");
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), node_re); it != std::sregex_iterator(); ++it) {
    n = std::max<std::size_t>(n, std::stoul((*it)[1]) + 1);
  }
  for (auto it = std::sregex_iterator(s.begin(), s.end(), edge_re); it != std::sregex_iterator(); ++it) {
    const auto a = static_cast<VertexId>(std::stoul((*it)[1]));
    const auto b = static_cast<VertexId>(std::stoul((*it)[2]));
    edges.emplace_back(a, b);
    n = std::max<std::size_t>(n, std::max(a, b) + std::size_t{1});
  }
  Graph g(n);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::string coloring_to_json(const Coloring& c) { return coloring_object(c).dump() + "\n"; }

Coloring coloring_from_json(std::string_view text) {
  const auto j = parse_json(text, "coloring");
  try {
    Coloring c;
    c.graph = j.value("graph", std::string{});
    for (const auto& cls : j.at("classes")) {
      c.classes.push_back({cls.at("label").get<std::string>(), cls.at("vertices").get<std::vector<VertexId>>()});
    }
    if (j.contains("k") && j.at("k").get<std::size_t>() != c.classes.size()) {
      throw FormatError("coloring: 'k' does not match the number of classes");
    }
    return c;
  } catch (const json::exception& e) {
    throw FormatError(std::string("coloring: ") + e.what());
  }
}

std::string clique_to_json(const CliqueWitness& w, const std::string& graph) {
  json members = json::array();
  for (std::size_t i = 0; i < w.vertices.size(); ++i) members.push_back({{"vertex", w.vertices[i]}, {"label", w.labels[i]}});
  auto vs = w.vertices;
  std::sort(vs.begin(), vs.end());
  json j{{"graph", graph}, {"size", w.vertices.size()}, {"vertices", vs}, {"members", std::move(members)}};
  return j.dump() + "\n";
}

std::string result_to_json(const ExactResult& r) {
  json j{{"parameter", std::string(to_string(r.parameter))},
         {"value", r.value},
         {"exact", r.exact},
         {"lower", r.lower},
         {"upper", r.upper},
         {"nodes_explored", r.nodes_explored},
         {"elapsed_seconds", r.elapsed.count()}};
  if (r.coloring) {
    j["certificate"] = coloring_object(*r.coloring);
  } else {
    j["certificate"] = {{"vertices", r.vertex_set}};
  }
  return j.dump() + "\n";
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream os;
  os << "restart,k,iterations\n";
  for (const auto& row : trace) os << row.restart << ',' << row.k << ',' << row.iterations << '\n';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace uacg

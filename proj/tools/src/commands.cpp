#include "uacg_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "uacg/constructions.hpp"
#include "uacg/errors.hpp"
#include "uacg/graph.hpp"
#include "uacg/io.hpp"
#include "uacg/oracle.hpp"
#include "uacg/ring.hpp"
#include "uacg/search.hpp"
#include "uacg/verify.hpp"

namespace uacg::cli {

namespace {

// Graphs up to this order get an exact clique-number column in `table`.
constexpr std::uint64_t table_oracle_max_n = 45;

struct Options {
  std::string ring;
  std::string graph_path;
  std::string coloring_path;
  std::string out_path;
  std::string trace_path;
  std::string format = "json";
  std::string construction;
  std::string param = "chi_a";
  std::string strategy = "hill-climb";
  std::string budget;
  std::uint64_t seed = 42;
  std::optional<std::size_t> target;
  std::optional<std::uint64_t> restarts;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  bool proper = false;
  bool complete = false;
  std::size_t max_vertices = default_vertex_cap;
  std::vector<std::uint64_t> table_n;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts plain integers and scientific notation such as 1e6.
std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--budget: not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v) || v < 0 || v != std::floor(v) || v > 9.0e18) {
    throw UsageError("--budget: expected a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

GraphDocument load_graph_file(const std::string& path) {
  const auto text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
  return GraphDocument{"", {}, graph_from_dot(text)};
}

// Graph from --graph, or built from --ring.
GraphDocument load_graph(const Options& o) {
  if (!o.graph_path.empty() && !o.ring.empty()) throw UsageError("give either --graph or --ring, not both");
  if (!o.graph_path.empty()) return load_graph_file(o.graph_path);
  if (o.ring.empty()) throw UsageError("a graph is required: pass --graph <path> or --ring <descriptor>");
  return to_document(build_graph(parse_ring(o.ring), o.max_vertices));
}

std::uint64_t edge_count_formula(const RingSpec& ring) {
  const auto n = ring.order();
  const auto u = ring.unit_count();
  return ring.odd_order() ? u * (n - 1) / 2 : u * n / 2;
}

bool all_local(const RingSpec& ring) {
  return std::all_of(ring.factors().begin(), ring.factors().end(), [](const LocalFactor& f) { return f.is_local(); });
}

// Clique and chromatic number known in closed form: the odd-order formula,
// or 2 for even Z_n (bipartite with at least one edge).
std::optional<std::uint64_t> omega_formula(const RingSpec& ring) {
  if (ring.odd_order() && all_local(ring)) return theorem1_value(ring);
  if (ring.is_zn() && !ring.odd_order()) return 2;
  return std::nullopt;
}

std::size_t prime_count(const RingSpec& ring) {
  if (ring.is_zn()) return factorize(ring.order()).size();
  return ring.factor_count();
}

// Achromatic numbers known for families of Z_n, or "unknown".
std::string known_achromatic(const RingSpec& ring) {
  const auto n = ring.order();
  std::vector<PrimePower> f;
  if (ring.is_zn()) {
    f = factorize(n);
  } else if (ring.factor_count() == 1 && ring.factor(0).kind() == FactorKind::residue) {
    f = {{ring.factor(0).p(), ring.factor(0).k()}};
  } else if (ring.factor_count() == 2 && ring.factor(0).kind() == FactorKind::residue &&
             ring.factor(1).kind() == FactorKind::residue) {
    f = {{ring.factor(0).p(), ring.factor(0).k()}, {ring.factor(1).p(), ring.factor(1).k()}};
  } else {
    return "unknown";
  }
  if (f.size() == 1 && f[0].p == 2) return "2";
  if (f.size() == 1) return std::to_string(euler_phi(n) / 2 + 1);
  if (f.size() == 2 && f[0].p == 2 && f[0].k == 1 && f[1].k == 1) return std::to_string(f[1].p);
  if (f.size() == 2 && f[0].p != 2 && f[0].k == 1 && f[1].k == 1) {
    const auto bound = std::to_string((n + 1) / 2);
    return f[0].p == 3 ? bound : ">=" + bound;
  }
  return "unknown";
}

int cmd_params(const Options& o, std::ostream& out) {
  if (o.ring.empty()) throw UsageError("params: a ring descriptor is required");
  const auto ring = parse_ring(o.ring);
  const auto omega = omega_formula(ring);
  const auto value = omega ? std::to_string(*omega) : std::string("unknown");
  out << "ring: " << ring.descriptor() << '\n'
      << "n: " << ring.order() << '\n'
      << "m: " << prime_count(ring) << '\n'
      << "units: " << ring.unit_count() << '\n'
      << "omega: " << value << '\n'
      << "chi: " << value << '\n'
      << "chi_a: " << known_achromatic(ring) << '\n'
      << "edges: " << edge_count_formula(ring) << '\n';
  return exit_ok;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.table_n.empty()) throw UsageError("table: list at least one n");
  std::ostringstream csv;
  csv << "n,parity,m,omega_formula,chi_formula,constructive_check,oracle\n";
  bool all_ok = true;
  for (const auto n : o.table_n) {
    if (n < 3) throw UsageError("table: n must be at least 3, got " + std::to_string(n));
    const auto ring = parse_ring("zn:" + std::to_string(n));
    const auto formula = *omega_formula(ring);
    std::string check = "skipped";
    std::string oracle;
    if (n <= o.max_vertices) {
      const auto g = build_graph(ring, o.max_vertices);
      bool ok = false;
      if (ring.odd_order()) {
        const auto c = theorem1_coloring(ring);
        const auto w = theorem1_clique(ring);
        ok = c.size() == formula && w.vertices.size() == formula && is_proper(g.graph, c).ok &&
             is_clique(g.graph, w.vertices).ok;
      } else {
        const auto c = bipartition_coloring(n);
        ok = g.graph.edge_count() > 0 && is_proper(g.graph, c).ok;
      }
      check = ok ? "verified" : "failed";
      all_ok = all_ok && ok;
      if (n <= table_oracle_max_n) {
        const auto r = clique_number_exact(g.graph);
        oracle = std::to_string(r.value);
        all_ok = all_ok && r.exact && r.value == formula;
      }
    }
    csv << n << ',' << (n % 2 ? "odd" : "even") << ',' << prime_count(ring) << ',' << formula << ',' << formula << ','
        << check << ',' << oracle << '\n';
  }
  emit(csv.str(), o.out_path, out);
  return all_ok ? exit_ok : exit_verification;
}

int cmd_graph(const Options& o, std::ostream& out) {
  if (o.ring.empty()) throw UsageError("graph: a ring descriptor is required");
  const auto doc = to_document(build_graph(parse_ring(o.ring), o.max_vertices));
  std::string text;
  if (o.format == "json") {
    text = graph_to_json(doc);
  } else if (o.format == "dot") {
    text = graph_to_dot(doc);
  } else {
    throw UsageError("graph: --format must be json or dot");
  }
  emit(text, o.out_path, out);
  if (!o.out_path.empty()) {
    out << "graph " << doc.ring << ": n=" << doc.graph.vertex_count() << " edges=" << doc.graph.edge_count() << '\n';
  }
  return exit_ok;
}

int cmd_color(const Options& o, std::ostream& out) {
  Coloring c;
  bool need_complete = false;
  if (o.construction == "thm1") {
    if (o.ring.empty()) throw UsageError("color: --construction thm1 needs --ring");
    c = theorem1_coloring(parse_ring(o.ring));
  } else if (o.construction == "thm2") {
    if (o.p != 0 || o.q != 0) {
      if (!o.ring.empty()) throw UsageError("color: give either --p/--q or --ring");
      c = theorem2_coloring(o.p, o.q);
    } else if (!o.ring.empty()) {
      c = theorem2_coloring(parse_ring(o.ring));
    } else {
      throw UsageError("color: --construction thm2 needs --p and --q, or --ring");
    }
    need_complete = true;
  } else if (o.construction == "bipartite") {
    if (o.ring.empty()) throw UsageError("color: --construction bipartite needs --ring zn:<even n>");
    const auto ring = parse_ring(o.ring);
    if (!ring.is_zn() || ring.odd_order()) throw UsageError("color: bipartite needs an even zn ring");
    c = bipartition_coloring(ring.order());
  } else {
    throw UsageError("color: --construction must be thm1, thm2 or bipartite");
  }

  const auto g = build_graph(parse_ring(c.graph), o.max_vertices);
  if (auto r = is_proper(g.graph, c); !r.ok) {
    throw VerificationError("color: class " + r.violation->label + " contains edge " + std::to_string(r.violation->u) +
                            "-" + std::to_string(r.violation->v));
  }
  const bool complete = is_complete(g.graph, c).ok;
  if (need_complete && !complete) throw VerificationError("color: coloring is not complete");

  emit(coloring_to_json(c), o.out_path, out);
  if (!o.out_path.empty()) {
    out << "coloring of " << c.graph << ": k=" << c.size() << " proper=yes complete=" << (complete ? "yes" : "no")
        << '\n';
  }
  return exit_ok;
}

int cmd_clique(const Options& o, std::ostream& out) {
  if (o.ring.empty()) throw UsageError("clique: a ring descriptor is required");
  const auto ring = parse_ring(o.ring);
  const auto w = theorem1_clique(ring);
  const auto g = build_graph(ring, o.max_vertices);
  if (auto r = is_clique(g.graph, w.vertices); !r.ok) {
    throw VerificationError("clique: vertices " + std::to_string(r.witness->first) + " and " +
                            std::to_string(r.witness->second) + " are not adjacent");
  }
  emit(clique_to_json(w, ring.descriptor()), o.out_path, out);
  if (!o.out_path.empty()) out << "clique of " << ring.descriptor() << ": size=" << w.vertices.size() << " verified\n";
  return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.graph_path.empty() || o.coloring_path.empty()) throw UsageError("verify: --graph and --coloring are required");
  const auto doc = load_graph_file(o.graph_path);
  const auto c = coloring_from_json(read_text_file(o.coloring_path));
  if (!doc.ring.empty() && !c.graph.empty() && doc.ring != c.graph) {
    throw UsageError("verify: coloring refers to '" + c.graph + "' but the graph is '" + doc.ring + "'");
  }
  const bool check_proper = o.proper || !o.complete;
  const bool check_complete = o.complete || !o.proper;

  check_partition(doc.graph, c);
  bool ok = true;
  if (check_proper) {
    const auto r = is_proper(doc.graph, c);
    if (r.ok) {
      out << "proper: ok\n";
    } else {
      ok = false;
      out << "proper: FAIL edge " << r.violation->u << "-" << r.violation->v << " inside class " << r.violation->label
          << '\n';
    }
  }
  if (check_complete) {
    const auto r = is_complete(doc.graph, c);
    if (r.ok) {
      out << "complete: ok\n";
    } else {
      ok = false;
      out << "complete: FAIL no edge between classes " << r.missing_pair->first << " and " << r.missing_pair->second
          << '\n';
    }
  }
  out << "k: " << c.size() << '\n';
  return ok ? exit_ok : exit_verification;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto doc = load_graph(o);
  const auto param = parse_parameter(o.param);
  const auto budget = o.budget.empty() ? default_node_budget : parse_count(o.budget);
  auto r = solve_exact(doc.graph, param, budget);
  if (r.coloring) r.coloring->graph = doc.ring;
  emit(result_to_json(r), o.out_path, out);
  if (!o.out_path.empty()) {
    out << to_string(param) << ": " << (r.exact ? std::to_string(r.value)
                                                : "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]")
        << " nodes=" << r.nodes_explored << '\n';
  }
  return r.exact ? exit_ok : exit_budget;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto doc = load_graph(o);
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.target_k = o.target;
  cfg.strategy = parse_strategy(o.strategy);
  if (!o.budget.empty()) cfg.iterations = parse_count(o.budget);
  if (o.restarts) cfg.restarts = *o.restarts;

  SearchOutcome result;
  if (o.construction.empty()) {
    if (cfg.iterations == 0) throw UsageError("search: --budget must be positive without a warm start");
    result = achromatic_search(doc.graph, cfg, doc.ring);
  } else if (o.construction == "thm2") {
    if (doc.ring.empty()) throw UsageError("search: a warm start needs a ring-backed graph");
    result = seed_from_construction(doc.graph, theorem2_coloring(parse_ring(doc.ring)), cfg);
  } else {
    throw UsageError("search: the only warm start is --construction thm2");
  }

  if (o.format == "csv") {
    out << trace_to_csv(result.trace);
    if (!o.out_path.empty()) write_text_file(o.out_path, coloring_to_json(result.best_coloring));
  } else if (o.format == "json") {
    emit(coloring_to_json(result.best_coloring), o.out_path, out);
  } else {
    throw UsageError("search: --format must be json or csv");
  }
  if (!o.trace_path.empty()) write_text_file(o.trace_path, trace_to_csv(result.trace));
  if (!o.out_path.empty()) {
    out << "search: k=" << result.k << " verified=" << (result.verified ? "yes" : "no");
    if (o.target) out << " target=" << *o.target << (result.target_reached ? " reached" : " not reached");
    out << '\n';
  }
  if (!result.verified) return exit_verification;
  return result.target_reached || !o.target ? exit_ok : exit_budget;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitary addition Cayley graphs: constructions, certificates and exact solvers", "uacg"};
  app.require_subcommand(1);
  Options o;

  auto add_ring = [&](CLI::App* sub, bool positional) {
    sub->add_option(positional ? "ring,--ring" : "--ring", o.ring, "ring descriptor, e.g. zn:15 or prod:3^2,gf(3,2)");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "output file (default: standard output)"); };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", o.max_vertices, "refuse to build graphs larger than this")->capture_default_str();
  };

  auto* graph = app.add_subcommand("graph", "build U(R) and export it as JSON or DOT");
  add_ring(graph, true);
  add_out(graph);
  add_cap(graph);
  graph->add_option("--format", o.format, "json or dot")->capture_default_str();

  auto* params = app.add_subcommand("params", "closed-form parameters of U(R)");
  add_ring(params, true);

  auto* color = app.add_subcommand("color", "explicit colorings (thm1, thm2, bipartite)");
  add_ring(color, true);
  add_out(color);
  add_cap(color);
  color->add_option("--construction", o.construction, "thm1, thm2 or bipartite")->required();
  color->add_option("--p", o.p, "smaller prime for thm2");
  color->add_option("--q", o.q, "larger prime for thm2");

  auto* clique = app.add_subcommand("clique", "explicit maximum clique of U(R), odd order");
  add_ring(clique, true);
  add_out(clique);
  add_cap(clique);

  auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
  verify->add_option("--graph", o.graph_path, "graph JSON or DOT")->required();
  verify->add_option("--coloring", o.coloring_path, "coloring JSON")->required();
  verify->add_flag("--proper", o.proper, "check properness");
  verify->add_flag("--complete", o.complete, "check completeness");

  auto* oracle = app.add_subcommand("oracle", "exact omega, chi, alpha, chi_a or psi");
  add_ring(oracle, false);
  add_out(oracle);
  add_cap(oracle);
  oracle->add_option("--graph", o.graph_path, "graph JSON or DOT");
  oracle->add_option("--param", o.param, "omega, chi, alpha, chi_a or psi")->capture_default_str();
  oracle->add_option("--budget", o.budget, "search node budget (accepts 1e8)");

  auto* search = app.add_subcommand("search", "heuristic achromatic coloring search");
  add_ring(search, false);
  add_out(search);
  add_cap(search);
  search->add_option("--graph", o.graph_path, "graph JSON or DOT");
  search->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  search->add_option("--budget", o.budget, "iterations per restart (accepts 1e6)");
  search->add_option("--restarts", o.restarts, "number of restarts");
  search->add_option("--target", o.target, "stop once a coloring with this many classes is found");
  search->add_option("--strategy", o.strategy, "hill-climb, randomized-backtrack or greedy-merge")
      ->capture_default_str();
  search->add_option("--construction", o.construction, "warm start (thm2)");
  search->add_option("--trace", o.trace_path, "write the restart trace CSV here");
  search->add_option("--format", o.format, "json (coloring) or csv (trace) on standard output")->capture_default_str();

  auto* table = app.add_subcommand("table", "summary CSV of omega/chi for a list of n");
  table->add_option("n", o.table_n, "values of n")->required();
  add_out(table);
  add_cap(table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (graph->parsed()) return cmd_graph(o, out);
    if (params->parsed()) return cmd_params(o, out);
    if (color->parsed()) return cmd_color(o, out);
    if (clique->parsed()) return cmd_clique(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (table->parsed()) return cmd_table(o, out);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return exit_verification;
  } catch (const PartitionError& e) {
    err << "verification failed: " << e.what() << '\n';
    return exit_verification;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {  // DomainError, DimensionError
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::length_error& e) {  // CapacityError
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace uacg::cli

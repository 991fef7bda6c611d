// Acceptance suite: one PASS/FAIL line per criterion. The exit status is
// nonzero if any blocking criterion fails; the U(Z_21) achromatic check is
// reported separately and never affects the exit status.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "naive.hpp"
#include "uacg/constructions.hpp"
#include "uacg/graph.hpp"
#include "uacg/oracle.hpp"
#include "uacg/search.hpp"
#include "uacg/verify.hpp"

using namespace uacg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

bool report(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(start);
  if (limit_seconds > 0) {
    out.require(elapsed < limit_seconds, "runtime " + std::to_string(elapsed) + " s over the " + std::to_string(limit_seconds) + " s limit");
  }
  std::printf("%s criterion %d: %s (%.2f s) %s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), elapsed, out.detail.str().c_str());
  std::fflush(stdout);
  return out.ok;
}

// Independent double-loop checks over the adjacency matrix.
bool naive_proper_complete(const Graph& g, const Coloring& c, bool need_complete) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    for (auto v : c.classes[i].vertices) {
      if (v >= colour.size() || colour[v] != -1) return false;
      colour[v] = static_cast<int>(i);
    }
  }
  if (std::find(colour.begin(), colour.end(), -1) != colour.end()) return false;
  if (!naive::proper(g, colour)) return false;
  return !need_complete || naive::complete(g, colour, static_cast<int>(c.size()));
}

bool naive_clique(const Graph& g, const std::vector<VertexId>& s) {
  if (std::set<VertexId>(s.begin(), s.end()).size() != s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

// Optimal coloring and clique of equal size, both checked.
void certify_optimal(Outcome& out, const RingSpec& ring, std::uint64_t expected, bool confirm_with_oracle) {
  const auto g = build_graph(ring);
  const auto c = theorem1_coloring(ring);
  const auto w = theorem1_clique(ring);
  const auto name = ring.descriptor();
  out.require(c.size() == expected, name + " coloring has " + std::to_string(c.size()) + " classes, expected " + std::to_string(expected));
  out.require(w.vertices.size() == expected, name + " clique has size " + std::to_string(w.vertices.size()));
  out.require(is_proper(g.graph, c).ok && naive_proper_complete(g.graph, c, false), name + " coloring not proper");
  out.require(is_clique(g.graph, w.vertices).ok && naive_clique(g.graph, w.vertices), name + " clique not a clique");
  if (confirm_with_oracle) {
    const auto r = clique_number_exact(g.graph);
    out.require(r.exact && r.value == expected, name + " exact clique number " + std::to_string(r.value));
  }
}

std::uint64_t formula_zn(std::uint64_t n) {
  const auto f = factorize(n);
  return f.size() + euler_phi(n) / (std::uint64_t{1} << f.size());
}

Graph zn_graph(std::uint64_t n) { return build_graph(n % 2 ? make_ring_zn(n) : RingSpec::zmod_even(n)).graph; }

void exact_value(Outcome& out, std::uint64_t n, std::uint64_t expected) {
  const auto g = zn_graph(n);
  const auto r = achromatic_number_exact(g, default_node_budget);
  out.require(r.exact, "Z_" + std::to_string(n) + " budget exhausted");
  out.require(r.value == expected, "Z_" + std::to_string(n) + " gave " + std::to_string(r.value) + ", expected " + std::to_string(expected));
  out.require(r.coloring && naive_proper_complete(g, *r.coloring, true), "Z_" + std::to_string(n) + " certificate");
  out.detail << "Z_" << n << "=" << r.value << " (" << r.nodes_explored << " nodes) ";
}

void search_target(Outcome& out, std::uint64_t n, std::size_t target) {
  const auto ring = make_ring_zn(n);
  const auto g = build_graph(ring).graph;
  SearchConfig cfg;  // default seed, restarts and iterations
  cfg.target_k = target;
  const auto r = achromatic_search(g, cfg, ring.descriptor());
  out.require(r.verified && r.target_reached, "Z_" + std::to_string(n) + " reached only k=" + std::to_string(r.k));
  out.require(r.best_coloring.size() == r.k && r.k >= target, "Z_" + std::to_string(n) + " class count");
  out.require(naive_proper_complete(g, r.best_coloring, true), "Z_" + std::to_string(n) + " certificate rejected by naive check");
  out.require(r.k <= completeness_upper_bounds(g).binomial_bound_k, "Z_" + std::to_string(n) + " above counting bound");
  out.detail << "Z_" << n << ": k=" << r.k << " seed=" << cfg.seed << " restarts_used=" << r.trace.size() << " ";
}

std::vector<std::uint64_t> sample(std::vector<std::uint64_t> pool, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(count, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

int main() {
  bool all = true;

  all &= report(1, "clique number = chromatic number = m + phi(n)/2^m on Z_n", 10.0, [](Outcome& out) {
    for (std::uint64_t n : {9, 15, 21, 25, 27, 33, 35, 45, 63, 105, 225}) certify_optimal(out, make_ring_zn(n), formula_zn(n), false);
  });

  all &= report(2, "clique number = chromatic number on non-cyclic products", 30.0, [](Outcome& out) {
    const std::vector<std::pair<const char*, std::uint64_t>> rings = {
        {"prod:3,3", 2 + 1 * 1}, {"prod:3,3^2", 2 + 1 * 3}, {"prod:gf(3,2)", 1 + 4}, {"prod:5,gf(3,2)", 2 + 2 * 4}};
    for (const auto& [d, expected] : rings) {
      const auto ring = parse_ring(d);
      std::uint64_t formula = ring.factor_count();
      std::uint64_t prod = 1;
      for (const auto& f : ring.factors()) prod *= (f.size() - f.maximal_ideal_size()) / 2;
      formula += prod;
      out.require(formula == expected, std::string(d) + " formula");
      certify_optimal(out, ring, expected, true);
    }
  });

  all &= report(3, "(pq+1)/2-class proper complete coloring of Z_p x Z_q", 10.0, [](Outcome& out) {
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {3, 5}, {3, 7}, {3, 11}, {3, 13}, {5, 7}, {5, 11}, {7, 11}, {5, 13}}) {
      const auto c = theorem2_coloring(p, q);
      const auto g = build_graph(make_ring_zn(static_cast<std::uint64_t>(p) * q)).graph;
      const auto tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      out.require(c.size() == (p * q + 1) / 2, tag + " class count " + std::to_string(c.size()));
      out.require(is_proper(g, c).ok && is_complete(g, c).ok, tag + " verify module");
      out.require(naive_proper_complete(g, c, true), tag + " naive check");
    }
  });

  all &= report(4, "achromatic number of U(Z_15) is 8 (node budget 1e8)", 0, [](Outcome& out) { exact_value(out, 15, 8); });
  report(4, "[stretch, non-blocking] achromatic number of U(Z_21) is 11", 0, [](Outcome& out) { exact_value(out, 21, 11); });

  all &= report(5, "achromatic numbers of U(Z_6), U(Z_10), U(Z_9)", 180.0, [](Outcome& out) {
    for (auto [n, expected] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{6, 3}, {10, 5}, {9, 4}}) {
      const auto start = Clock::now();
      exact_value(out, n, expected);
      out.require(seconds_since(start) < 60.0, "Z_" + std::to_string(n) + " over 60 s");
    }
  });

  all &= report(6, "search finds k >= 19 on U(Z_35) and k >= 30 on U(Z_55)", 1200.0, [](Outcome& out) {
    for (auto [n, target] : std::vector<std::pair<std::uint64_t, std::size_t>>{{35, 19}, {55, 30}}) {
      const auto start = Clock::now();
      search_target(out, n, target);
      out.require(seconds_since(start) < 600.0, "Z_" + std::to_string(n) + " over 600 s");
    }
  });

  all &= report(7, "degree and edge-count laws (50 odd, 20 even n <= 1000)", 0, [](Outcome& out) {
    std::vector<std::uint64_t> odd, even;
    for (std::uint64_t n = 3; n <= 1000; ++n) (n % 2 ? odd : even).push_back(n);
    even.erase(even.begin());  // keep n >= 4
    for (auto n : sample(odd, 50, 1)) {
      const auto g = build_graph(make_ring_zn(n)).graph;
      const auto phi = euler_phi(n);
      bool degrees = true;
      for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t expected = phi - (std::gcd(x, n) == 1 ? 1 : 0);
        std::uint64_t counted = 0;
        for (std::uint64_t y = 0; y < n; ++y) counted += naive::zn_adjacent(n, x, y);
        degrees = degrees && g.degree(static_cast<VertexId>(x)) == expected && counted == expected;
      }
      out.require(degrees, "odd n=" + std::to_string(n) + " degree");
      out.require(g.edge_count() == phi * (n - 1) / 2, "odd n=" + std::to_string(n) + " edge count");
    }
    for (auto n : sample(even, 20, 2)) {
      const auto g = build_graph(RingSpec::zmod_even(n)).graph;
      const auto phi = euler_phi(n);
      bool regular = true;
      for (VertexId v = 0; v < n; ++v) regular = regular && g.degree(v) == phi;
      bool bipartite = true;
      for (const auto& [u, v] : g.edges()) bipartite = bipartite && (u % 2 != v % 2);
      out.require(regular, "even n=" + std::to_string(n) + " not phi(n)-regular");
      out.require(bipartite && !bipartition(g).empty(), "even n=" + std::to_string(n) + " not bipartite");
    }
  });

  all &= report(8, "chi <= chi_a <= psi <= binomial bound; singleton classes form cliques", 0, [](Outcome& out) {
    std::vector<std::pair<std::string, Graph>> instances;
    for (std::uint64_t n = 3; n <= 16; ++n) instances.emplace_back("zn:" + std::to_string(n), zn_graph(n));
    instances.emplace_back("prod:3,3", build_graph(parse_ring("prod:3,3")).graph);
    instances.emplace_back("prod:gf(3,2)", build_graph(parse_ring("prod:gf(3,2)")).graph);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) instances.emplace_back("random" + std::to_string(i), naive::random_graph(4 + rng() % 7, 0.5, rng));

    AchromaticLedger ledger;
    for (const auto& [name, g] : instances) {
      const auto chi = chromatic_number_exact(g);
      const auto chi_a = achromatic_number_exact(g);
      const auto psi = pseudo_achromatic_exact(g);
      const auto bound = completeness_upper_bounds(g).binomial_bound_k;
      out.require(chi.exact && chi_a.exact && psi.exact, name + " not exact");
      out.require(chi.value <= chi_a.value && chi_a.value <= psi.value && psi.value <= bound, name + " chain broken");
      for (const auto* r : {&chi, &chi_a}) {
        if (!r->coloring || !is_complete(g, *r->coloring).ok) continue;
        const auto verdict = ledger.accept(name, g, *r->coloring);
        out.require(verdict.accepted, name + " ledger rejected a certificate: " + verdict.reason);
        out.require(singletons_form_clique(g, *r->coloring).ok, name + " singletons");
      }
      out.require(singletons_form_clique(g, *psi.coloring).ok, name + " psi singletons");
      out.require(ledger.best(name) == chi_a.value, name + " ledger value");
    }
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 5}, {3, 7}, {5, 7}, {5, 11}}) {
      const auto g = zn_graph(static_cast<std::uint64_t>(p) * q);
      const auto c = theorem2_coloring(p, q);
      out.require(ledger.accept("zn:" + std::to_string(p * q), g, c).accepted, "pair construction rejected by the ledger");
      out.require(singletons_form_clique(g, c).ok, "pair construction singletons");
    }
  });

  all &= report(9, "exact solvers agree with exhaustive enumeration on 200 random graphs", 300.0, [](Outcome& out) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng() % 8;
      const auto g = naive::random_graph(n, (1 + rng() % 9) / 10.0, rng);
      const auto ref = naive::partition_parameters(g);
      const auto tag = "graph " + std::to_string(t);
      out.require(clique_number_exact(g).value == naive::clique_number(g), tag + " omega");
      out.require(independence_number_exact(g).value == naive::independence_number(g), tag + " alpha");
      out.require(chromatic_number_exact(g).value == ref.chi, tag + " chi");
      out.require(achromatic_number_exact(g).value == ref.chi_a, tag + " chi_a");
      out.require(pseudo_achromatic_exact(g).value == ref.psi, tag + " psi");
    }
  });

  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: at least one criterion failed");
  return all ? 0 : 1;
}

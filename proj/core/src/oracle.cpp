#include "uacg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "uacg/errors.hpp"
#include "uacg/verify.hpp"

namespace uacg {

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::omega: return "omega";
    case Parameter::chi: return "chi";
    case Parameter::alpha: return "alpha";
    case Parameter::chi_a: return "chi_a";
    case Parameter::psi: return "psi";
  }
  return "?";
}

Parameter parse_parameter(std::string_view name) {
  for (auto p : {Parameter::omega, Parameter::chi, Parameter::alpha, Parameter::chi_a, Parameter::psi}) {
    if (name == to_string(p)) return p;
  }
  throw FormatError("unknown parameter '" + std::string(name) + "' (expected omega|chi|alpha|chi_a|psi)");
}

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Maximum clique

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  void run() {
    DynamicBitset all(g_.vertex_count());
    all.set_all();
    if (all.any()) expand(std::move(all));
  }

  const std::vector<VertexId>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  // Largest clique size not excluded when the search was cut short.
  std::size_t upper_bound() const { return aborted_ ? std::max(best_.size(), pending_bound_) : best_.size(); }

 private:
  void expand(DynamicBitset cand) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<VertexId> order;
    std::vector<std::size_t> bound;
    DynamicBitset uncolored = cand;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      DynamicBitset q = uncolored;
      while (q.any()) {
        const auto v = static_cast<VertexId>(q.find_first());
        q.reset(v);
        q.subtract(g_.row(v));
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const auto v = order[i];
      current_.push_back(v);
      DynamicBitset next = cand & g_.row(v);
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (aborted_) {
        pending_bound_ = std::max(pending_bound_, current_.size() + bound[i]);
        return;
      }
      cand.reset(v);
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t pending_bound_ = 0;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

ExactResult clique_result(const Graph& g, std::uint64_t budget, Parameter parameter) {
  const auto start = Clock::now();
  const Graph work = parameter == Parameter::alpha ? g.complement() : g;
  CliqueSearch search(work, budget);
  search.run();
  ExactResult r;
  r.parameter = parameter;
  r.vertex_set = search.best();
  std::sort(r.vertex_set.begin(), r.vertex_set.end());
  r.value = r.vertex_set.size();
  r.exact = !search.aborted();
  r.lower = r.value;
  r.upper = search.upper_bound();
  r.nodes_explored = search.nodes();
  const auto check = parameter == Parameter::alpha ? is_independent(g, r.vertex_set) : is_clique(g, r.vertex_set);
  if (!check.ok) throw VerificationError(std::string(to_string(parameter)) + " certificate failed verification");
  r.elapsed = Clock::now() - start;
  return r;
}

// ---------------------------------------------------------------------------
// Chromatic number: DSATUR branch and bound

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.vertex_count()), budget_(budget) {
    color_.assign(n_, -1);
    count_.assign(n_ * (n_ + 1), 0);
    saturation_.assign(n_, 0);
    best_k_ = n_ + 1;
  }

  void run(const std::vector<VertexId>& clique) {
    lower_ = clique.size();
    std::size_t used = 0;
    for (auto v : clique) assign(v, static_cast<int>(used++));
    dfs(clique.size(), used);
  }

  std::size_t best_k() const { return best_k_; }
  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  void assign(VertexId v, int c) {
    color_[v] = c;
    g_.row(v).for_each([&](std::size_t u) {
      if (count_[u * (n_ + 1) + static_cast<std::size_t>(c)]++ == 0) ++saturation_[u];
    });
  }

  void unassign(VertexId v) {
    const int c = color_[v];
    color_[v] = -1;
    g_.row(v).for_each([&](std::size_t u) {
      if (--count_[u * (n_ + 1) + static_cast<std::size_t>(c)] == 0) --saturation_[u];
    });
  }

  void dfs(std::size_t colored, std::size_t used) {
    if (aborted_ || best_k_ == lower_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (used >= best_k_) return;
    if (colored == n_) {
      best_k_ = used;
      best_ = color_;
      return;
    }
    VertexId pick = 0;
    int pick_sat = -1;
    std::size_t pick_deg = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      const auto deg = g_.degree(v);
      if (saturation_[v] > pick_sat || (saturation_[v] == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = saturation_[v];
        pick_deg = deg;
      }
    }
    const std::size_t limit = std::min(used + 1, best_k_ - 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (count_[pick * (n_ + 1) + c] != 0) continue;
      assign(pick, static_cast<int>(c));
      dfs(colored + 1, std::max(used, c + 1));
      unassign(pick);
      if (aborted_ || best_k_ == lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t lower_ = 0;
  std::size_t best_k_;
  std::vector<int> best_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> saturation_;
};

// ---------------------------------------------------------------------------
// Complete partitions (achromatic / pseudo-achromatic)

using Mask = std::uint64_t;

inline Mask bit(std::size_t v) { return Mask{1} << v; }

std::size_t mask_max_clique(const std::vector<Mask>& adj, Mask cand, std::size_t size, std::size_t best) {
  if (cand == 0) return std::max(best, size);
  while (cand != 0) {
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return best;
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    cand &= cand - 1;
    best = mask_max_clique(adj, cand & adj[v], size + 1, best);
  }
  return best;
}

class PartitionSearch {
 public:
  enum class Outcome { found, infeasible, budget };

  PartitionSearch(const Graph& g, bool proper, std::uint64_t budget) : n_(g.vertex_count()), proper_(proper), budget_(budget) {
    adj_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
      g.row(v).for_each([&](std::size_t u) { adj_[v] |= bit(u); });
    }
  }

  Outcome run(std::size_t k, std::vector<int>& assignment) {
    if (k == 0 || k > n_) return Outcome::infeasible;
    if (!singleton_argument_allows(k)) return Outcome::infeasible;
    k_ = k;
    cls_.assign(k, 0);
    reach_.assign(k, 0);
    open_ = 0;
    unassigned_ = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
    assign_.assign(n_, -1);
    aborted_ = false;
    if (dfs(0)) {
      assignment = assign_;
      return Outcome::found;
    }
    return aborted_ ? Outcome::budget : Outcome::infeasible;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // A k-class partition of n vertices has at least 2k - n singleton classes.
  // Singletons of a complete coloring are pairwise adjacent and each needs
  // degree >= k - 1.
  bool singleton_argument_allows(std::size_t k) const {
    if (2 * k <= n_) return true;
    const std::size_t needed = 2 * k - n_;
    Mask cand = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (static_cast<std::size_t>(std::popcount(adj_[v])) + 1 >= k) cand |= bit(v);
    }
    if (static_cast<std::size_t>(std::popcount(cand)) < needed) return false;
    return mask_max_clique(adj_, cand, 0, 0) >= needed;
  }

  Mask neighborhood(Mask set) const {
    Mask out = 0;
    while (set != 0) {
      out |= adj_[static_cast<std::size_t>(std::countr_zero(set))];
      set &= set - 1;
    }
    return out;
  }

  // Necessary conditions for completing the current partial partition.
  bool viable() const {
    const Mask free = unassigned_;
    const std::size_t future = k_ - open_;
    ext_.resize(open_);
    ext_reach_.resize(open_);
    for (std::size_t a = 0; a < open_; ++a) {
      ext_[a] = cls_[a] | (proper_ ? (free & ~reach_[a]) : free);
      ext_reach_[a] = neighborhood(ext_[a]);
      if (future > 0 && static_cast<std::size_t>(std::popcount(ext_reach_[a] & free)) < future) return false;
    }
    for (std::size_t a = 0; a < open_; ++a) {
      for (std::size_t b = a + 1; b < open_; ++b) {
        if ((reach_[a] & cls_[b]) != 0) continue;
        if ((ext_reach_[a] & ext_[b]) == 0) return false;
      }
    }
    if (future >= 2) {
      std::size_t twice_edges = 0;
      for (Mask s = free; s != 0; s &= s - 1) {
        twice_edges += static_cast<std::size_t>(std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(s))] & free));
      }
      if (twice_edges / 2 < future * (future - 1) / 2) return false;
    }
    return true;
  }

  bool complete() const {
    for (std::size_t a = 0; a < k_; ++a) {
      for (std::size_t b = a + 1; b < k_; ++b) {
        if ((reach_[a] & cls_[b]) == 0) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t v) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (v == n_) return open_ == k_ && complete();
    if (k_ - open_ > n_ - v) return false;
    if (!viable()) return false;

    unassigned_ &= ~bit(v);
    if (open_ < k_) {
      cls_[open_] = bit(v);
      reach_[open_] = adj_[v];
      assign_[v] = static_cast<int>(open_);
      ++open_;
      if (dfs(v + 1)) return true;
      --open_;
      cls_[open_] = 0;
      reach_[open_] = 0;
      if (aborted_) return false;
    }
    for (std::size_t c = 0; c < open_; ++c) {
      if (proper_ && (reach_[c] & bit(v)) != 0) continue;
      const Mask saved_reach = reach_[c];
      cls_[c] |= bit(v);
      reach_[c] |= adj_[v];
      assign_[v] = static_cast<int>(c);
      if (dfs(v + 1)) return true;
      cls_[c] &= ~bit(v);
      reach_[c] = saved_reach;
      if (aborted_) return false;
    }
    assign_[v] = -1;
    unassigned_ |= bit(v);
    return false;
  }

  std::size_t n_;
  bool proper_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t k_ = 0;
  std::size_t open_ = 0;
  Mask unassigned_ = 0;
  std::vector<Mask> adj_;
  std::vector<Mask> cls_;
  std::vector<Mask> reach_;
  std::vector<int> assign_;
  mutable std::vector<Mask> ext_;
  mutable std::vector<Mask> ext_reach_;
};

ExactResult partition_result(const Graph& g, std::uint64_t budget, bool proper) {
  const auto start = Clock::now();
  const auto n = g.vertex_count();
  if (n > partition_solver_max_vertices) {
    throw CapacityError("complete-coloring solver supports at most " + std::to_string(partition_solver_max_vertices) +
                        " vertices, graph has " + std::to_string(n));
  }
  ExactResult r;
  r.parameter = proper ? Parameter::chi_a : Parameter::psi;
  if (n == 0) {
    r.coloring = Coloring{};
    return r;
  }

  // Certified fallback in case the budget runs out.
  const auto fallback = merge_to_complete(g, greedy_assignment(g));
  const auto fallback_k = static_cast<std::uint64_t>(*std::max_element(fallback.begin(), fallback.end()) + 1);

  PartitionSearch search(g, proper, budget);
  const auto top = std::min<std::uint64_t>(completeness_upper_bounds(g).binomial_bound_k, n);
  std::vector<int> assignment;
  r.exact = false;
  for (auto k = top; k >= 1; --k) {
    const auto outcome = search.run(k, assignment);
    if (outcome == PartitionSearch::Outcome::found) {
      r.value = r.lower = r.upper = k;
      r.exact = true;
      break;
    }
    if (outcome == PartitionSearch::Outcome::budget) {
      assignment = fallback;
      r.value = r.lower = fallback_k;
      r.upper = k;
      break;
    }
  }
  r.nodes_explored = search.nodes();
  r.coloring = coloring_from_assignment("", assignment);
  if (r.coloring->size() != r.value) throw VerificationError("complete-coloring certificate has wrong class count");
  if (proper && !is_proper(g, *r.coloring).ok) throw VerificationError("chi_a certificate is not proper");
  if (!is_complete(g, *r.coloring).ok) throw VerificationError("complete-coloring certificate is not complete");
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace

ExactResult clique_number_exact(const Graph& g, std::uint64_t budget) { return clique_result(g, budget, Parameter::omega); }

ExactResult independence_number_exact(const Graph& g, std::uint64_t budget) {
  return clique_result(g, budget, Parameter::alpha);
}

ExactResult chromatic_number_exact(const Graph& g, std::uint64_t budget) {
  const auto start = Clock::now();
  ExactResult r;
  r.parameter = Parameter::chi;
  const auto n = g.vertex_count();
  if (n == 0) {
    r.coloring = Coloring{};
    return r;
  }
  const auto clique = clique_number_exact(g, budget);
  DsaturSearch search(g, budget > clique.nodes_explored ? budget - clique.nodes_explored : 0);
  search.run(clique.vertex_set);
  if (search.best().empty()) {
    // Budget ran out before the first full coloring; fall back to first-fit.
    const auto greedy = greedy_assignment(g);
    r.coloring = coloring_from_assignment("", greedy);
  } else {
    r.coloring = coloring_from_assignment("", search.best());
  }
  r.value = r.upper = r.coloring->size();
  r.lower = clique.value;
  r.exact = !search.aborted() || r.lower == r.upper;
  if (r.exact) r.lower = r.value;
  r.nodes_explored = clique.nodes_explored + search.nodes();
  if (!is_proper(g, *r.coloring).ok) throw VerificationError("chi certificate is not proper");
  r.elapsed = Clock::now() - start;
  return r;
}

ExactResult achromatic_number_exact(const Graph& g, std::uint64_t budget) { return partition_result(g, budget, true); }

ExactResult pseudo_achromatic_exact(const Graph& g, std::uint64_t budget) { return partition_result(g, budget, false); }

ExactResult solve_exact(const Graph& g, Parameter parameter, std::uint64_t budget) {
  switch (parameter) {
    case Parameter::omega: return clique_number_exact(g, budget);
    case Parameter::chi: return chromatic_number_exact(g, budget);
    case Parameter::alpha: return independence_number_exact(g, budget);
    case Parameter::chi_a: return achromatic_number_exact(g, budget);
    case Parameter::psi: return pseudo_achromatic_exact(g, budget);
  }
  throw DomainError("unknown parameter");
}

}  // namespace uacg

#include "uacg/search.hpp"

#include <algorithm>
#include <numeric>

#include "uacg/errors.hpp"
#include "uacg/verify.hpp"

namespace uacg {

std::string_view to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::greedy_merge: return "greedy-merge";
    case SearchStrategy::randomized_backtrack: return "randomized-backtrack";
    case SearchStrategy::hill_climb: return "hill-climb";
  }
  return "?";
}

SearchStrategy parse_strategy(std::string_view name) {
  for (auto s : {SearchStrategy::greedy_merge, SearchStrategy::randomized_backtrack, SearchStrategy::hill_climb}) {
    if (name == to_string(s)) return s;
  }
  throw FormatError("unknown strategy '" + std::string(name) + "' (expected greedy-merge|randomized-backtrack|hill-climb)");
}

namespace {

using AdjacencyLists = std::vector<std::vector<VertexId>>;

AdjacencyLists adjacency_lists(const Graph& g) {
  AdjacencyLists out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = g.row(v).to_vector();
  return out;
}

template <typename T>
void shuffle(std::vector<T>& xs, SplitMix64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
}

int class_count(const std::vector<int>& assignment) {
  return assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
}

// Per-restart generator, so restarts are independent of each other's length.
SplitMix64 restart_rng(std::uint64_t seed, std::uint64_t restart) {
  SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (restart + 1)));
  return SplitMix64(mix.next());
}

// Fixed-k assignment with incremental bookkeeping of
//   conflicts: edges inside a class,
//   missing:   class pairs with no crossing edge.
// A state of cost zero is a proper complete coloring.
class ColoringState {
 public:
  ColoringState(const AdjacencyLists& adj, const std::vector<int>& assignment, std::size_t capacity)
      : adj_(&adj), n_(adj.size()), cap_(capacity), assign_(assignment) {
    k_ = static_cast<std::size_t>(class_count(assignment));
    if (k_ > cap_) throw DomainError("search: class count exceeds capacity");
    size_.assign(cap_, 0);
    nbr_.assign(n_ * cap_, 0);
    edges_.assign(cap_ * cap_, 0);
    for (VertexId v = 0; v < n_; ++v) {
      ++size_[static_cast<std::size_t>(assign_[v])];
      for (auto w : adj[v]) ++nbr_[w * cap_ + static_cast<std::size_t>(assign_[v])];
    }
    for (VertexId v = 0; v < n_; ++v) {
      for (auto w : adj[v]) {
        if (w < v) continue;
        const auto a = static_cast<std::size_t>(assign_[v]);
        const auto b = static_cast<std::size_t>(assign_[w]);
        if (a == b) {
          ++conflicts_;
        } else {
          ++edges_[a * cap_ + b];
          ++edges_[b * cap_ + a];
        }
      }
    }
    for (std::size_t a = 0; a < k_; ++a) {
      for (std::size_t b = a + 1; b < k_; ++b) missing_ += edges_[a * cap_ + b] == 0;
    }
  }

  std::size_t k() const { return k_; }
  std::size_t capacity() const { return cap_; }
  std::size_t vertex_count() const { return n_; }
  int class_of(VertexId v) const { return assign_[v]; }
  int size(std::size_t c) const { return size_[c]; }
  int neighbors_in(VertexId v, std::size_t c) const { return nbr_[v * cap_ + c]; }
  bool connected(std::size_t a, std::size_t b) const { return edges_[a * cap_ + b] > 0; }
  long conflicts() const { return conflicts_; }
  long missing() const { return missing_; }
  long cost() const { return conflicts_ + missing_; }
  const std::vector<int>& assignment() const { return assign_; }

  std::size_t add_empty_class() {
    if (k_ >= cap_) throw DomainError("search: class capacity exhausted");
    missing_ += static_cast<long>(k_);
    return k_++;
  }

  long delta(VertexId v, std::size_t c) const {
    const auto a = static_cast<std::size_t>(assign_[v]);
    const int* mv = &nbr_[v * cap_];
    long d = mv[c] - mv[a];
    for (std::size_t x = 0; x < k_; ++x) {
      if (x == a || x == c || mv[x] == 0) continue;
      if (edges_[a * cap_ + x] == mv[x]) ++d;
      if (edges_[c * cap_ + x] == 0) --d;
    }
    const int before = edges_[a * cap_ + c];
    const int after = before + mv[a] - mv[c];
    if (before == 0 && after > 0) --d;
    if (before > 0 && after == 0) ++d;
    return d;
  }

  void move(VertexId v, std::size_t c) {
    const auto a = static_cast<std::size_t>(assign_[v]);
    if (a == c) return;
    const int* mv = &nbr_[v * cap_];
    conflicts_ += mv[c] - mv[a];
    for (std::size_t x = 0; x < k_; ++x) {
      if (x == a || x == c || mv[x] == 0) continue;
      int& ax = edges_[a * cap_ + x];
      ax -= mv[x];
      edges_[x * cap_ + a] = ax;
      if (ax == 0) ++missing_;
      int& cx = edges_[c * cap_ + x];
      if (cx == 0) --missing_;
      cx += mv[x];
      edges_[x * cap_ + c] = cx;
    }
    int& ac = edges_[a * cap_ + c];
    const int before = ac;
    ac += mv[a] - mv[c];
    edges_[c * cap_ + a] = ac;
    if (before == 0 && ac > 0) --missing_;
    if (before > 0 && ac == 0) ++missing_;
    assign_[v] = static_cast<int>(c);
    --size_[a];
    ++size_[c];
    for (auto w : (*adj_)[v]) {
      --nbr_[w * cap_ + a];
      ++nbr_[w * cap_ + c];
    }
  }

 private:
  const AdjacencyLists* adj_;
  std::size_t n_;
  std::size_t cap_;
  std::size_t k_ = 0;
  std::vector<int> assign_;
  std::vector<int> size_;
  std::vector<int> nbr_;    // n x cap: neighbors of v in class c
  std::vector<int> edges_;  // cap x cap: edges between classes
  long conflicts_ = 0;
  long missing_ = 0;
};

struct Move {
  VertexId v = 0;
  std::size_t c = 0;
};

// Tabu search on a fixed number of classes. Each step focuses on one
// violation (a vertex with a neighbor in its own class, or a class pair with
// no crossing edge) and takes the best non-tabu move that addresses it.
// Moves that would empty a class are never taken.
class TabuRepair {
 public:
  TabuRepair(std::size_t n, std::size_t capacity) : cap_(capacity), tabu_(n * capacity, 0) {}

  bool run(ColoringState& s, SplitMix64& rng, std::uint64_t limit, std::uint64_t& used) {
    long best_cost = s.cost();
    std::vector<VertexId> conflicted;
    std::vector<std::pair<std::size_t, std::size_t>> unjoined;
    for (std::uint64_t it = 0; it < limit; ++it) {
      if (s.cost() == 0) return true;
      ++used;
      ++clock_;

      conflicted.clear();
      unjoined.clear();
      if (s.conflicts() > 0) {
        for (VertexId v = 0; v < s.vertex_count(); ++v) {
          if (s.neighbors_in(v, static_cast<std::size_t>(s.class_of(v))) > 0) conflicted.push_back(v);
        }
      }
      if (s.missing() > 0) {
        for (std::size_t a = 0; a < s.k(); ++a) {
          for (std::size_t b = a + 1; b < s.k(); ++b) {
            if (!s.connected(a, b)) unjoined.emplace_back(a, b);
          }
        }
      }

      candidates_.clear();
      if (!conflicted.empty() && (unjoined.empty() || rng.coin())) {
        const auto v = conflicted[rng.below(conflicted.size())];
        for (std::size_t c = 0; c < s.k(); ++c) {
          if (c != static_cast<std::size_t>(s.class_of(v))) candidates_.push_back({v, c});
        }
      } else if (!unjoined.empty()) {
        const auto [a, b] = unjoined[rng.below(unjoined.size())];
        for (VertexId w = 0; w < s.vertex_count(); ++w) {
          const auto cw = static_cast<std::size_t>(s.class_of(w));
          if (s.size(cw) < 2) continue;
          if (cw != a && s.neighbors_in(w, b) > 0) candidates_.push_back({w, a});
          if (cw != b && s.neighbors_in(w, a) > 0) candidates_.push_back({w, b});
        }
      }

      const long cost = s.cost();
      bool have = false;
      Move pick;
      long pick_delta = 0;
      std::uint64_t ties = 0;
      for (const auto& m : candidates_) {
        const auto from = static_cast<std::size_t>(s.class_of(m.v));
        if (s.size(from) < 2) continue;
        const long d = s.delta(m.v, m.c);
        const bool aspirated = cost + d < best_cost;
        if (tabu_[m.v * cap_ + m.c] > clock_ && !aspirated) continue;
        if (!have || d < pick_delta) {
          have = true;
          pick = m;
          pick_delta = d;
          ties = 1;
        } else if (d == pick_delta && rng.below(++ties) == 0) {
          pick = m;
        }
      }
      if (!have) {
        // everything tabu: random walk step
        const auto v = static_cast<VertexId>(rng.below(s.vertex_count()));
        const auto from = static_cast<std::size_t>(s.class_of(v));
        if (s.size(from) < 2 || s.k() < 2) continue;
        auto c = static_cast<std::size_t>(rng.below(s.k() - 1));
        if (c >= from) ++c;
        pick = {v, c};
      }
      const auto from = static_cast<std::size_t>(s.class_of(pick.v));
      s.move(pick.v, pick.c);
      const auto tenure = 1 + rng.below(10) + static_cast<std::uint64_t>(3 * s.cost() / 5);
      tabu_[pick.v * cap_ + from] = clock_ + tenure;
      best_cost = std::min(best_cost, s.cost());
    }
    return s.cost() == 0;
  }

 private:
  std::size_t cap_;
  std::uint64_t clock_ = 0;
  std::vector<std::uint64_t> tabu_;
  std::vector<Move> candidates_;
};

Coloring certify(const Graph& g, const std::string& graph_id, const std::vector<int>& assignment) {
  Coloring c = coloring_from_assignment(graph_id, assignment);
  const auto proper = is_proper(g, c);
  const auto complete = is_complete(g, c);
  if (!proper.ok || !complete.ok) throw VerificationError("search produced a coloring that failed verification");
  if (c.size() > completeness_upper_bounds(g).binomial_bound_k) {
    throw VerificationError("search produced more classes than the edge-counting bound allows");
  }
  return c;
}

std::vector<int> random_greedy_complete(const Graph& g, SplitMix64& rng, std::uint64_t& used) {
  const auto n = g.vertex_count();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<int> color(n, -1);
  for (auto v : order) {
    ++used;
    std::vector<bool> blocked;
    g.row(v).for_each([&](std::size_t u) {
      if (color[u] < 0) return;
      if (static_cast<std::size_t>(color[u]) >= blocked.size()) blocked.resize(static_cast<std::size_t>(color[u]) + 1);
      blocked[static_cast<std::size_t>(color[u])] = true;
    });
    int c = 0;
    while (static_cast<std::size_t>(c) < blocked.size() && blocked[static_cast<std::size_t>(c)]) ++c;
    color[v] = c;
  }
  // random relabeling varies which pairs get merged first
  std::vector<int> relabel(static_cast<std::size_t>(class_count(color)));
  std::iota(relabel.begin(), relabel.end(), 0);
  shuffle(relabel, rng);
  for (auto& c : color) c = relabel[static_cast<std::size_t>(c)];
  return merge_to_complete(g, std::move(color));
}

struct RestartResult {
  std::vector<int> assignment;
  std::uint64_t used = 0;
};

// Grow k one class at a time: split a class, repair with tabu moves, keep
// the result only if it repairs to a proper complete coloring.
RestartResult hill_climb(const Graph& g, const AdjacencyLists& adj, std::vector<int> start, const SearchConfig& cfg,
                         SplitMix64& rng) {
  const auto n = g.vertex_count();
  const auto cap = static_cast<std::size_t>(std::min<std::uint64_t>(completeness_upper_bounds(g).binomial_bound_k, n));
  RestartResult out{start, 0};
  if (static_cast<std::size_t>(class_count(start)) >= cap) return out;
  ColoringState state(adj, start, cap);
  TabuRepair repair(n, cap);
  while (out.used < cfg.iterations) {
    if (cfg.target_k && state.k() >= *cfg.target_k) break;
    if (state.k() >= cap) break;
    std::vector<std::size_t> splittable;
    for (std::size_t c = 0; c < state.k(); ++c) {
      if (state.size(c) >= 2) splittable.push_back(c);
    }
    if (splittable.empty()) break;
    const ColoringState checkpoint = state;
    const auto from = splittable[rng.below(splittable.size())];
    const auto fresh = state.add_empty_class();
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (static_cast<std::size_t>(state.class_of(v)) == from) members.push_back(v);
    }
    shuffle(members, rng);
    for (std::size_t i = 0; i < members.size() / 2; ++i) state.move(members[i], fresh);
    const auto limit = std::min(cfg.repair_iterations, cfg.iterations - out.used);
    if (repair.run(state, rng, limit, out.used)) {
      out.assignment = state.assignment();
    } else {
      state = checkpoint;
    }
  }
  return out;
}

// Fixed-k randomized depth-first assignment with completeness pruning; gives
// up after `node_limit` nodes.
class RandomizedBacktrack {
 public:
  RandomizedBacktrack(const Graph& g, std::size_t k, SplitMix64& rng, std::uint64_t node_limit)
      : g_(g), n_(g.vertex_count()), k_(k), rng_(rng), limit_(node_limit) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::uint64_t> jitter(n_);
    for (auto& j : jitter) j = rng_.next();
    std::sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return jitter[a] < jitter[b];
    });
    assign_.assign(n_, -1);
    free_ = DynamicBitset(n_);
    free_.set_all();
  }

  bool run() { return dfs(0); }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& assignment() const { return assign_; }

 private:
  bool viable() const {
    const std::size_t future = k_ - cls_.size();
    std::vector<DynamicBitset> ext(cls_.size()), ext_reach(cls_.size(), DynamicBitset(n_));
    for (std::size_t a = 0; a < cls_.size(); ++a) {
      ext[a] = free_;
      ext[a].subtract(reach_[a]);
      ext[a] |= cls_[a];
      ext[a].for_each([&](std::size_t v) { ext_reach[a] |= g_.row(static_cast<VertexId>(v)); });
      if (future > 0 && ext_reach[a].intersection_count(free_) < future) return false;
    }
    for (std::size_t a = 0; a < cls_.size(); ++a) {
      for (std::size_t b = a + 1; b < cls_.size(); ++b) {
        if (reach_[a].intersects(cls_[b])) continue;
        if (!ext_reach[a].intersects(ext[b])) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (++nodes_ > limit_) return false;
    if (depth == n_) {
      if (cls_.size() != k_) return false;
      for (std::size_t a = 0; a < k_; ++a) {
        for (std::size_t b = a + 1; b < k_; ++b) {
          if (!reach_[a].intersects(cls_[b])) return false;
        }
      }
      return true;
    }
    if (k_ - cls_.size() > n_ - depth) return false;
    if (!viable()) return false;
    const auto v = order_[depth];
    free_.reset(v);
    std::vector<std::size_t> options;
    for (std::size_t c = 0; c < cls_.size(); ++c) {
      if (!reach_[c].test(v)) options.push_back(c);
    }
    shuffle(options, rng_);
    if (cls_.size() < k_) options.insert(options.begin(), cls_.size());
    for (auto c : options) {
      if (nodes_ > limit_) break;
      DynamicBitset saved;
      if (c == cls_.size()) {
        cls_.emplace_back(n_);
        reach_.emplace_back(n_);
      } else {
        saved = reach_[c];
      }
      cls_[c].set(v);
      reach_[c] |= g_.row(v);
      assign_[v] = static_cast<int>(c);
      if (dfs(depth + 1)) return true;
      if (c + 1 == cls_.size() && cls_[c].count() == 1) {
        cls_.pop_back();
        reach_.pop_back();
      } else {
        cls_[c].reset(v);
        reach_[c] = saved;
      }
    }
    assign_[v] = -1;
    free_.set(v);
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  SplitMix64& rng_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> order_;
  std::vector<int> assign_;
  DynamicBitset free_;
  std::vector<DynamicBitset> cls_;
  std::vector<DynamicBitset> reach_;
};

RestartResult backtrack_restart(const Graph& g, std::vector<int> start, const SearchConfig& cfg, SplitMix64& rng) {
  RestartResult out{std::move(start), 0};
  const auto cap = std::min<std::uint64_t>(completeness_upper_bounds(g).binomial_bound_k, g.vertex_count());
  auto k = static_cast<std::size_t>(class_count(out.assignment)) + 1;
  if (cfg.target_k) k = std::max(k, *cfg.target_k);
  while (k <= cap && out.used < cfg.iterations) {
    RandomizedBacktrack search(g, k, rng, cfg.iterations - out.used);
    const bool found = search.run();
    out.used += std::min(search.nodes(), cfg.iterations - out.used);
    if (!found) break;
    out.assignment = search.assignment();
    if (cfg.target_k && k >= *cfg.target_k) break;
    ++k;
  }
  return out;
}

RestartResult greedy_restart(const Graph& g, std::vector<int> start, const SearchConfig& cfg, SplitMix64& rng) {
  RestartResult out{std::move(start), 0};
  while (out.used < cfg.iterations) {
    if (cfg.target_k && static_cast<std::size_t>(class_count(out.assignment)) >= *cfg.target_k) break;
    auto candidate = random_greedy_complete(g, rng, out.used);
    if (class_count(candidate) > class_count(out.assignment)) out.assignment = std::move(candidate);
  }
  return out;
}

SearchOutcome run_search(const Graph& g, const SearchConfig& cfg, std::string graph_id, const std::vector<int>* warm) {
  if (g.vertex_count() == 0) throw DomainError("search: empty graph");
  const auto adj = adjacency_lists(g);
  SearchOutcome outcome;
  std::vector<int> best;
  for (std::uint64_t r = 0; r < cfg.restarts; ++r) {
    auto rng = restart_rng(cfg.seed, r);
    std::uint64_t setup = 0;
    auto start = warm ? *warm : random_greedy_complete(g, rng, setup);
    RestartResult result;
    switch (cfg.strategy) {
      case SearchStrategy::hill_climb: result = hill_climb(g, adj, std::move(start), cfg, rng); break;
      case SearchStrategy::randomized_backtrack: result = backtrack_restart(g, std::move(start), cfg, rng); break;
      case SearchStrategy::greedy_merge: result = greedy_restart(g, std::move(start), cfg, rng); break;
    }
    // ties keep the earlier restart
    if (class_count(result.assignment) > class_count(best)) best = result.assignment;
    outcome.trace.push_back({r, static_cast<std::size_t>(class_count(best)), result.used + setup});
    if (cfg.target_k && static_cast<std::size_t>(class_count(best)) >= *cfg.target_k) break;
  }
  if (best.empty()) {
    // zero restarts: only the starting point is available
    std::uint64_t setup = 0;
    auto rng = restart_rng(cfg.seed, 0);
    best = warm ? *warm : random_greedy_complete(g, rng, setup);
  }
  outcome.best_coloring = certify(g, graph_id, best);
  outcome.k = outcome.best_coloring.size();
  outcome.verified = true;
  outcome.target_reached = !cfg.target_k || outcome.k >= *cfg.target_k;
  return outcome;
}

}  // namespace

SearchOutcome achromatic_search(const Graph& g, const SearchConfig& cfg, std::string graph_id) {
  if (cfg.iterations == 0 || cfg.restarts == 0) throw DomainError("achromatic_search: budget must be positive");
  return run_search(g, cfg, std::move(graph_id), nullptr);
}

SearchOutcome seed_from_construction(const Graph& g, const Coloring& start, const SearchConfig& cfg) {
  try {
    if (!is_proper(g, start).ok) throw DomainError("seed_from_construction: starting coloring is not proper");
    if (!is_complete(g, start).ok) throw DomainError("seed_from_construction: starting coloring is not complete");
  } catch (const PartitionError& e) {
    throw DomainError(std::string("seed_from_construction: ") + e.what());
  }
  std::vector<int> warm(g.vertex_count(), -1);
  for (std::size_t c = 0; c < start.classes.size(); ++c) {
    for (auto v : start.classes[c].vertices) warm[v] = static_cast<int>(c);
  }
  if (cfg.iterations == 0 || cfg.restarts == 0) {
    SearchOutcome out;
    out.best_coloring = certify(g, start.graph, warm);
    out.k = out.best_coloring.size();
    out.verified = true;
    out.target_reached = !cfg.target_k || out.k >= *cfg.target_k;
    return out;
  }
  return run_search(g, cfg, start.graph, &warm);
}

}  // namespace uacg

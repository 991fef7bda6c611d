#include "uacg/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "uacg/errors.hpp"
#include "uacg/graph.hpp"
#include "uacg/verify.hpp"

namespace uacg {

namespace {

void require_odd_local(const RingSpec& ring, const char* op) {
  if (!ring.odd_order()) throw DomainError(std::string(op) + ": ring order must be odd");
  for (const auto& f : ring.factors()) {
    if (!f.is_local()) throw DomainError(std::string(op) + ": ring factors must be local");
  }
}

}  // namespace

std::uint64_t theorem1_value(const RingSpec& ring) {
  require_odd_local(ring, "theorem1_value");
  std::uint64_t product = 1;
  for (const auto& f : ring.factors()) product *= f.unit_count() / 2;
  return ring.factor_count() + product;
}

Coloring theorem1_coloring(const RingSpec& ring) {
  require_odd_local(ring, "theorem1_coloring");
  const auto m = ring.factor_count();
  Coloring out{ring.descriptor(), {}};
  for (std::size_t i = 0; i < m; ++i) out.classes.push_back({"A_" + std::to_string(i + 1), {}});

  // Units are grouped by negation orbit. orbit_slot maps the orbit's
  // coordinatewise-minimal representative to its position in first-seen order.
  std::map<std::vector<std::uint32_t>, std::size_t> orbit_slot;
  std::vector<std::vector<VertexId>> orbits;
  for (std::uint64_t idx = 0; idx < ring.order(); ++idx) {
    const auto x = ring.element(idx);
    std::size_t first_ideal = m;
    for (std::size_t f = 0; f < m; ++f) {
      if (ring.factor(f).in_maximal_ideal(x.coords[f])) {
        first_ideal = f;
        break;
      }
    }
    if (first_ideal < m) {
      out.classes[first_ideal].vertices.push_back(static_cast<VertexId>(idx));
      continue;
    }
    std::vector<std::uint32_t> key(m);
    for (std::size_t f = 0; f < m; ++f) key[f] = std::min(x.coords[f], ring.factor(f).neg(x.coords[f]));
    auto [it, inserted] = orbit_slot.emplace(std::move(key), orbits.size());
    if (inserted) orbits.emplace_back();
    orbits[it->second].push_back(static_cast<VertexId>(idx));
  }

  const std::size_t orbit_size = std::size_t{1} << m;
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    if (orbits[j].size() != orbit_size) {
      throw VerificationError("theorem1_coloring: unit orbit of size " + std::to_string(orbits[j].size()) +
                              ", expected " + std::to_string(orbit_size));
    }
    out.classes.push_back({"B_" + std::to_string(j + 1), std::move(orbits[j])});
  }
  if (out.size() != theorem1_value(ring)) throw VerificationError("theorem1_coloring: unexpected class count");
  return out;
}

std::vector<std::uint32_t> half_residue_set(const LocalFactor& factor) {
  if (!factor.is_local()) throw DomainError("half_residue_set: factor must be local");
  const std::uint32_t q = factor.residue_field_size();
  std::vector<std::uint32_t> chosen;
  if (factor.kind() == FactorKind::residue) {
    for (std::uint32_t r = 1; r <= (q - 1) / 2; ++r) chosen.push_back(r);
  } else {
    const std::uint32_t minus_one = factor.neg(factor.one());
    std::vector<bool> taken(q, false);
    for (auto x : factor.generator_powers()) {
      const auto nx = factor.neg(x);
      if (taken[x] || taken[nx]) continue;
      const auto pick = (x == minus_one) ? nx : x;
      taken[pick] = true;
      chosen.push_back(pick);
    }
  }

  // Residue-field arithmetic: Z_p for residue factors, the field itself for GF.
  auto field_neg = [&](std::uint32_t r) {
    return factor.kind() == FactorKind::residue ? (r == 0 ? 0 : q - r) : factor.neg(r);
  };
  std::vector<bool> in_set(q, false);
  for (auto r : chosen) in_set[r] = true;
  if (chosen.size() != (q - 1) / 2) throw VerificationError("half_residue_set: wrong size");
  if (in_set[0] || in_set[field_neg(1)]) throw VerificationError("half_residue_set: contains 0 or -1");
  for (std::uint32_t r = 1; r < q; ++r) {
    if (in_set[r] == in_set[field_neg(r)]) throw VerificationError("half_residue_set: not one of each {x,-x}");
  }
  return chosen;
}

CliqueWitness theorem1_clique(const RingSpec& ring) {
  require_odd_local(ring, "theorem1_clique");
  const auto m = ring.factor_count();

  std::vector<std::vector<std::uint32_t>> lifts(m);
  for (std::size_t f = 0; f < m; ++f) {
    const auto& factor = ring.factor(f);
    std::vector<bool> wanted(factor.residue_field_size(), false);
    for (auto r : half_residue_set(factor)) wanted[r] = true;
    for (std::uint32_t x = 0; x < factor.size(); ++x) {
      if (wanted[factor.quotient_residue(x)]) lifts[f].push_back(x);
    }
  }

  std::vector<RingElement> members;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    RingElement t = ring.one();
    t.coords[i] = 0;
    members.push_back(std::move(t));
    labels.push_back("T_" + std::to_string(i + 1));
  }
  // S_1 x ... x S_m, last coordinate fastest
  std::vector<std::size_t> pos(m, 0);
  for (bool done = false; !done;) {
    RingElement s;
    s.coords.resize(m);
    for (std::size_t f = 0; f < m; ++f) s.coords[f] = lifts[f][pos[f]];
    labels.push_back("S" + ring.format(s));
    members.push_back(std::move(s));
    for (std::size_t f = m;;) {
      if (f == 0) {
        done = true;
        break;
      }
      --f;
      if (++pos[f] < lifts[f].size()) break;
      pos[f] = 0;
    }
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!ring.is_unit(ring.add(members[i], members[j]))) {
        throw VerificationError("theorem1_clique: " + labels[i] + " and " + labels[j] + " are not adjacent");
      }
    }
  }
  if (members.size() != theorem1_value(ring)) throw VerificationError("theorem1_clique: unexpected size");

  CliqueWitness out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.vertices.push_back(static_cast<VertexId>(ring.index_of(members[i])));
    out.labels.push_back(labels[i]);
  }
  return out;
}

Coloring theorem2_coloring(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p) || !is_prime(q) || p < 3) throw DomainError("theorem2_coloring: p and q must be odd primes");
  if (p >= q) throw DomainError("theorem2_coloring: requires p < q");
  return theorem2_coloring(RingSpec::zn(static_cast<std::uint64_t>(p) * q));
}

Coloring theorem2_coloring(const RingSpec& ring) {
  if (ring.factor_count() != 2 || ring.factor(0).kind() != FactorKind::residue ||
      ring.factor(1).kind() != FactorKind::residue || ring.factor(0).k() != 1 || ring.factor(1).k() != 1) {
    throw DomainError("theorem2_coloring: ring must be Z_p x Z_q for primes p < q");
  }
  const std::uint32_t p = ring.factor(0).p();
  const std::uint32_t q = ring.factor(1).p();
  if (p >= q) throw DomainError("theorem2_coloring: requires p < q");

  auto mod = [](std::int64_t a, std::uint32_t m) {
    const auto r = a % static_cast<std::int64_t>(m);
    return static_cast<std::uint32_t>(r < 0 ? r + m : r);
  };
  auto vertex = [&](std::int64_t x, std::int64_t y) {
    return static_cast<VertexId>(ring.index_of(RingElement{{mod(x, p), mod(y, q)}}));
  };

  const std::int64_t P = p;
  const std::int64_t Q = q;
  const std::int64_t half = (Q - 1) / 2;
  std::vector<ColorClass> classes;
  auto add = [&](std::string label, std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    for (auto& existing : classes) {
      if (existing.vertices == vs) {
        existing.label += "=" + label;
        return;
      }
    }
    classes.push_back({std::move(label), std::move(vs)});
  };

  add("C_s", {vertex(0, half)});
  add("E_1", {vertex(0, 0), vertex(P - 1, 0)});
  add("E_2", {vertex(1, 0), vertex(P - 1, half + 1)});
  add("E_3", {vertex(0, 1), vertex(P - 1, Q - 1)});
  add("E_4", {vertex(1, 1), vertex(0, Q - 1)});
  add("E_5", {vertex(2, 1), vertex(1, Q - 1)});
  add("E_6", {vertex(P - 1, 1), vertex(P - 2, Q - 1)});
  for (std::int64_t z = 1; z <= (P - 5) / 2; ++z) {
    add("M_" + std::to_string(z), {vertex(z + 2, 1), vertex((P - 1) / 2 + z, Q - 1)});
  }
  // D_t is {(p-t, 0), (t, q-1)} with t shifted up by one; unshifted, D_1
  // would reuse (p-1, 0) from E_1 and (1, q-1) from E_5.
  for (std::int64_t t = 1; t <= (P - 3) / 2; ++t) {
    add("D_" + std::to_string(t), {vertex(P - t - 1, 0), vertex(t + 1, Q - 1)});
    add("D_" + std::to_string(t) + "'", {vertex(t + 1, 0), vertex(P - t - 1, 1)});
  }
  for (std::int64_t i = 1; i <= P - 1; ++i) {
    add("C_{" + std::to_string(i) + "," + std::to_string(half) + "}", {vertex(i, half), vertex(i - 1, half + 1)});
  }
  for (std::int64_t i = 0; i <= P - 1; ++i) {
    for (std::int64_t j = 2; j <= (Q - 3) / 2; ++j) {
      add("C_{" + std::to_string(i) + "," + std::to_string(j) + "}", {vertex(i, j), vertex(i - 1, Q - j)});
    }
  }

  Coloring out{ring.descriptor(), std::move(classes)};
  const auto expected = (static_cast<std::uint64_t>(p) * q + 1) / 2;
  if (out.size() != expected) {
    throw VerificationError("theorem2_coloring: built " + std::to_string(out.size()) + " classes, expected " +
                            std::to_string(expected));
  }
  const auto g = build_graph(ring, ring.order());
  try {
    if (auto r = is_proper(g.graph, out); !r.ok) throw VerificationError("theorem2_coloring: class '" + r.violation->label + "' is not independent");
    if (auto r = is_complete(g.graph, out); !r.ok) {
      throw VerificationError("theorem2_coloring: no edge between '" + r.missing_pair->first + "' and '" +
                              r.missing_pair->second + "'");
    }
  } catch (const PartitionError& e) {
    throw VerificationError(std::string("theorem2_coloring: ") + e.what());
  }
  return out;
}

Coloring bipartition_coloring(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) throw DomainError("bipartition_coloring: n must be even");
  Coloring out{"zn:" + std::to_string(n), {{"even", {}}, {"odd", {}}}};
  for (std::uint64_t v = 0; v < n; ++v) out.classes[v % 2].vertices.push_back(static_cast<VertexId>(v));
  return out;
}

}  // namespace uacg

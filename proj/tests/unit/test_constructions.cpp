#include <gtest/gtest.h>

#include <set>

#include "uacg/constructions.hpp"
#include "uacg/errors.hpp"
#include "uacg/graph.hpp"
#include "uacg/oracle.hpp"
#include "uacg/verify.hpp"

using namespace uacg;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_pairs = {
    {3, 5}, {3, 7}, {3, 11}, {3, 13}, {5, 7}, {5, 11}, {7, 11}, {5, 13}, {3, 17}, {7, 13}, {11, 13}};

std::vector<VertexId> class_named(const Coloring& c, const std::string& label) {
  for (const auto& cls : c.classes) {
    if (cls.label == label) return cls.vertices;
  }
  ADD_FAILURE() << "no class " << label;
  return {};
}

}  // namespace

TEST(OptimalColoring, Examples) {
  EXPECT_EQ(theorem1_coloring(make_ring_zn(9)).size(), 4u);
  EXPECT_EQ(theorem1_coloring(make_ring_zn(15)).size(), 4u);
  EXPECT_EQ(theorem1_coloring(parse_ring("prod:3,3")).size(), 3u);
}

TEST(OptimalColoring, RejectsEven) {
  EXPECT_THROW(theorem1_coloring(RingSpec::zmod_even(10)), DomainError);
  EXPECT_THROW(theorem1_clique(RingSpec::zmod_even(10)), DomainError);
  EXPECT_THROW(theorem1_value(RingSpec::zmod_even(10)), DomainError);
}

TEST(OptimalColoring, ClassStructure) {
  std::vector<RingSpec> rings;
  for (std::uint64_t n = 3; n <= 315; n += 2) rings.push_back(make_ring_zn(n));
  for (const char* d : {"prod:3,3", "prod:3,9", "prod:gf(3,2)", "prod:5,gf(3,2)", "prod:gf(5,2),gf(3,2)", "prod:gf(7,2)",
                        "prod:3,3,3", "prod:gf(3,3),5"}) {
    rings.push_back(parse_ring(d));
  }
  for (const auto& r : rings) {
    const auto m = r.factor_count();
    const auto c = theorem1_coloring(r);
    const auto g = build_graph(r);
    check_partition(g.graph, c);
    EXPECT_TRUE(is_proper(g.graph, c).ok) << r.descriptor();
    EXPECT_EQ(c.size(), theorem1_value(r));
    for (const auto& cls : c.classes) EXPECT_TRUE(is_independent(g.graph, cls.vertices).ok);
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_EQ(c.classes[i].label, "A_" + std::to_string(i + 1));
      for (auto v : c.classes[i].vertices) {
        const auto& x = g.vertices[v];
        EXPECT_TRUE(r.factor(i).in_maximal_ideal(x.coords[i]));
        for (std::size_t f = 0; f < i; ++f) EXPECT_FALSE(r.factor(f).in_maximal_ideal(x.coords[f]));
      }
    }
    for (std::size_t j = m; j < c.size(); ++j) {
      EXPECT_EQ(c.classes[j].vertices.size(), std::size_t{1} << m);
      EXPECT_EQ(c.classes[j].label, "B_" + std::to_string(j - m + 1));
    }
  }
}

TEST(OptimalClique, Examples) {
  const auto r15 = make_ring_zn(15);
  const auto w15 = theorem1_clique(r15);
  EXPECT_EQ(w15.vertices.size(), 4u);
  EXPECT_TRUE(is_clique(build_graph(r15).graph, w15.vertices).ok);

  EXPECT_EQ(theorem1_clique(make_ring_zn(105)).vertices.size(), 9u);

  const auto gf9 = parse_ring("prod:gf(3,2)");
  const auto w = theorem1_clique(gf9);
  EXPECT_EQ(w.vertices.size(), 5u);
  EXPECT_EQ(clique_number_exact(build_graph(gf9).graph).value, 5u);
}

TEST(OptimalClique, MatchesColoringAcrossRings) {
  for (std::uint64_t n = 3; n <= 315; n += 2) {
    const auto r = make_ring_zn(n);
    const auto w = theorem1_clique(r);
    const auto g = build_graph(r);
    EXPECT_TRUE(is_clique(g.graph, w.vertices).ok) << n;
    EXPECT_EQ(w.vertices.size(), theorem1_coloring(r).size()) << n;
    EXPECT_EQ(w.labels.size(), w.vertices.size());
    EXPECT_EQ(std::set<VertexId>(w.vertices.begin(), w.vertices.end()).size(), w.vertices.size());
  }
  for (const char* d : {"prod:gf(3,2),5", "prod:gf(5,2)", "prod:gf(3,3)", "prod:3,gf(7,2)", "prod:9,gf(3,2),5"}) {
    const auto r = parse_ring(d);
    const auto w = theorem1_clique(r);
    EXPECT_TRUE(is_clique(build_graph(r).graph, w.vertices).ok) << d;
    EXPECT_EQ(w.vertices.size(), theorem1_value(r)) << d;
  }
}

TEST(OptimalClique, LabelsTThenS) {
  const auto w = theorem1_clique(make_ring_zn(15));
  EXPECT_EQ(w.labels[0], "T_1");
  EXPECT_EQ(w.labels[1], "T_2");
  EXPECT_EQ(w.labels[2].substr(0, 2), "S(");
}

TEST(HalfResidueSet, Conditions) {
  for (const auto& f : {LocalFactor::residue(3), LocalFactor::residue(5, 2), LocalFactor::residue(13), LocalFactor::galois(3, 2),
                        LocalFactor::galois(5, 2), LocalFactor::galois(3, 3), LocalFactor::galois(7, 2), LocalFactor::galois(7, 3)}) {
    const auto s = half_residue_set(f);
    const auto q = f.residue_field_size();
    EXPECT_EQ(s.size(), (q - 1) / 2);
    std::set<std::uint32_t> set(s.begin(), s.end());
    EXPECT_EQ(set.size(), s.size());
    for (auto x : s) {
      EXPECT_NE(x, 0u);
      const auto neg = f.kind() == FactorKind::residue ? (q - x) % q : f.neg(x);
      EXPECT_FALSE(set.count(neg));
    }
  }
  const auto s13 = half_residue_set(LocalFactor::residue(13));
  EXPECT_EQ(s13, (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6}));
}

TEST(PairAchromaticColoring, Examples) {
  EXPECT_EQ(theorem2_coloring(3, 5).size(), 8u);
  EXPECT_EQ(theorem2_coloring(5, 7).size(), 18u);
  EXPECT_EQ(theorem2_coloring(3, 7).size(), 11u);
}

TEST(PairAchromaticColoring, ProperCompleteCount) {
  for (const auto& [p, q] : prime_pairs) {
    const auto c = theorem2_coloring(p, q);
    const auto g = build_graph(make_ring_zn(static_cast<std::uint64_t>(p) * q));
    EXPECT_EQ(c.size(), (p * q + 1) / 2);
    EXPECT_TRUE(is_proper(g.graph, c).ok) << p << "," << q;
    EXPECT_TRUE(is_complete(g.graph, c).ok) << p << "," << q;
    EXPECT_TRUE(singletons_form_clique(g.graph, c).ok);
    EXPECT_LE(c.size(), completeness_upper_bounds(g.graph).binomial_bound_k);
  }
}

TEST(PairAchromaticColoring, RingOverloadOnProductIndexing) {
  const auto r = parse_ring("prod:3,7");
  const auto c = theorem2_coloring(r);
  const auto g = build_graph(r);
  EXPECT_EQ(c.size(), 11u);
  EXPECT_TRUE(is_proper(g.graph, c).ok);
  EXPECT_TRUE(is_complete(g.graph, c).ok);
}

TEST(PairAchromaticColoring, NonCommonNeighbourhoods) {
  for (const auto& [p, q] : prime_pairs) {
    const auto r = make_ring_zn(static_cast<std::uint64_t>(p) * q);
    const auto g = build_graph(r);
    const auto c = theorem2_coloring(p, q);
    auto v = [&](std::uint32_t x, std::uint32_t y) { return static_cast<VertexId>(r.index_of(RingElement{{x, y}})); };
    EXPECT_EQ(non_common_neighbors(g.graph, class_named(c, "E_2")), (std::vector<VertexId>{v(p - 1, (q - 1) / 2)}));
    EXPECT_EQ(non_common_neighbors(g.graph, class_named(c, "E_3")), (std::vector<VertexId>{v(1, q - 1)}));
    EXPECT_EQ(non_common_neighbors(g.graph, class_named(c, "E_4")), (std::vector<VertexId>{v(p - 1, 1)}));
    auto sorted = [](std::vector<VertexId> xs) {
      std::sort(xs.begin(), xs.end());
      return xs;
    };
    const auto e5 = class_named(c, p == 3 ? "E_5=E_6" : "E_5");
    EXPECT_EQ(non_common_neighbors(g.graph, e5), sorted({v(p - 1, q - 1), v(p - 2, 1)}));
    for (std::uint32_t t = 1; t <= (p - 3) / 2; ++t) {
      const auto d = "D_" + std::to_string(t);
      EXPECT_EQ(non_common_neighbors(g.graph, class_named(c, d)), (std::vector<VertexId>{v(t + 1, 1)}));
      EXPECT_EQ(non_common_neighbors(g.graph, class_named(c, d + "'")), (std::vector<VertexId>{v(p - t - 1, q - 1)}));
    }
  }
}

TEST(PairAchromaticColoring, FamiliesAndDuplicates) {
  const auto c3 = theorem2_coloring(3, 7);
  int dup = 0;
  for (const auto& cls : c3.classes) {
    EXPECT_NE(cls.label.substr(0, 2), "M_");
    EXPECT_NE(cls.label.substr(0, 2), "D_");
    dup += cls.label == "E_5=E_6";
  }
  EXPECT_EQ(dup, 1);

  const auto c5 = theorem2_coloring(5, 7);
  for (const auto& cls : c5.classes) EXPECT_NE(cls.label.substr(0, 2), "M_");
  EXPECT_FALSE(class_named(c5, "D_1").empty());
  EXPECT_FALSE(class_named(c5, "D_1'").empty());

  const auto c7 = theorem2_coloring(7, 11);
  EXPECT_FALSE(class_named(c7, "M_1").empty());
  EXPECT_EQ(class_named(c7, "C_s").size(), 1u);

  // q = 5 leaves only the C_{i,(q-1)/2} family of C-classes.
  const auto c35 = theorem2_coloring(3, 5);
  EXPECT_EQ(std::count_if(c35.classes.begin(), c35.classes.end(), [](const ColorClass& cls) { return cls.label.rfind("C_{", 0) == 0; }), 2);
}

TEST(PairAchromaticColoring, Deterministic) { EXPECT_EQ(theorem2_coloring(5, 11), theorem2_coloring(5, 11)); }

TEST(PairAchromaticColoring, RejectsBadInput) {
  EXPECT_THROW(theorem2_coloring(7, 5), DomainError);
  EXPECT_THROW(theorem2_coloring(5, 5), DomainError);
  EXPECT_THROW(theorem2_coloring(3, 9), DomainError);
  EXPECT_THROW(theorem2_coloring(2, 5), DomainError);
  EXPECT_THROW(theorem2_coloring(parse_ring("prod:3,3,5")), DomainError);
  EXPECT_THROW(theorem2_coloring(parse_ring("prod:3^2,5")), DomainError);
}

TEST(Bipartition, Examples) {
  const auto c4 = bipartition_coloring(4);
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_EQ(c4.classes[0].vertices, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(c4.classes[1].vertices, (std::vector<VertexId>{1, 3}));
  const auto g6 = build_graph(RingSpec::zmod_even(6)).graph;
  EXPECT_TRUE(is_proper(g6, bipartition_coloring(6)).ok);
  const auto g10 = build_graph(RingSpec::zmod_even(10)).graph;
  EXPECT_TRUE(is_proper(g10, bipartition_coloring(10)).ok);
  EXPECT_TRUE(is_complete(g10, bipartition_coloring(10)).ok);
  EXPECT_THROW(bipartition_coloring(9), DomainError);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "ccsub/detect.hpp"
#include "ccsub/generators.hpp"
#include "ccsub/registry.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

namespace ccsub {
namespace {

using testing::census;
using testing::Matrix;
using testing::Tuple;

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), edges);
}

Tuple tuple_of(const DetectionResult& r) {
  return Tuple(r.witness->vertices.begin(), r.witness->vertices.end());
}

// Largest independent set inside N(v), by brute force on the matrix.
std::size_t max_star(const Matrix& m, Vertex v) {
  std::vector<Vertex> nb;
  for (Vertex u = 0; u < m.size(); ++u) {
    if (m(u, v)) nb.push_back(u);
  }
  std::size_t best = 0;
  std::vector<Vertex> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < nb.size(); ++i) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex w) { return m(w, nb[i]); })) {
        continue;
      }
      chosen.push_back(nb[i]);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return best;
}

// ---- registry-wide differential ------------------------------------------

TEST(Detectors, AgreeWithCensusOnCorpus) {
  for (const auto& [name, g] : testing::full_corpus(22)) {
    const auto truth = census(g, true);
    const bool gem_free = !truth.count(Pattern::kGem) || truth.at(Pattern::kGem).empty();
    for (const DetectorEntry& d : detectors()) {
      if (d.requires_gem_free && !gem_free) continue;
      const DetectionResult r = d.run(g, nullptr);
      const bool exists = truth.count(d.pattern) && !truth.at(d.pattern).empty();
      ASSERT_EQ(r.found(), exists) << name << " " << pattern_name(d.pattern) << ":" << d.algo;
      if (r.found()) {
        ASSERT_EQ(r.witness->pattern, d.pattern) << name << " " << d.algo;
        ASSERT_TRUE(truth.at(d.pattern).count(tuple_of(r)))
            << name << " " << pattern_name(d.pattern) << ":" << d.algo;
      }
    }
  }
}

TEST(Detectors, GemFreeDiamondWitnessesAreGenuineEverywhere) {
  for (const auto& [name, g] : testing::full_corpus(22)) {
    const DetectionResult r = detect_diamond_gemfree(g);
    if (r.found()) ASSERT_TRUE(induces(g, r.witness->vertices.span(), Pattern::kDiamond)) << name;
  }
}

TEST(Detectors, StarMatchesBruteForce) {
  for (const auto& [name, g] : testing::full_corpus(16)) {
    const Matrix m(g);
    std::size_t best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, max_star(m, v));
    for (int k = 2; k <= 7; ++k) {
      const DetectionResult r = detect_star(g, k);
      ASSERT_EQ(r.found(), best >= static_cast<std::size_t>(k)) << name << " k=" << k;
      if (r.found()) {
        ASSERT_EQ(r.witness->vertices.size(), static_cast<std::size_t>(k + 1));
        const Pattern tag = k == 2 ? Pattern::kP3 : k == 3 ? Pattern::kClaw : Pattern::kStar;
        ASSERT_EQ(r.witness->pattern, tag);
        ASSERT_TRUE(induces(g, r.witness->vertices.span(), Pattern::kStar)) << name;
      }
    }
  }
}

TEST(Detectors, CliqueMatchesMaximalCliques) {
  for (const auto& [name, g] : testing::full_corpus(30)) {
    std::size_t omega = g.num_vertices() > 0 ? 1 : 0;
    for (const auto& c : testing::maximal_cliques(g)) omega = std::max(omega, c.size());
    for (int k = 3; k <= 8; ++k) {
      const DetectionResult r = detect_clique(g, k);
      ASSERT_EQ(r.found(), omega >= static_cast<std::size_t>(k)) << name << " k=" << k;
      if (r.found()) {
        ASSERT_EQ(r.witness->vertices.size(), static_cast<std::size_t>(k));
        ASSERT_TRUE(induces(g, r.witness->vertices.span(), Pattern::kClique)) << name;
      }
    }
  }
}

TEST(Detectors, IndependentSetMatchesCensus) {
  for (const auto& [name, g] : testing::full_corpus(22)) {
    const auto truth = census(g);
    for (int k : {3, 4}) {
      const Pattern p = k == 3 ? Pattern::kEmpty3 : Pattern::kEmpty4;
      const bool exists = truth.count(p) && !truth.at(p).empty();
      ASSERT_EQ(detect_independent_set(g, k).found(), exists) << name << " k=" << k;
    }
  }
}

TEST(Detectors, FindIndependentSetRespectsDomain) {
  const Graph g = gen_star(5);
  const std::vector<Vertex> leaves{1, 2, 3, 4, 5};
  const auto is = find_independent_set(g, leaves, 5);
  ASSERT_TRUE(is);
  EXPECT_EQ(is->size(), 5u);
  const std::vector<Vertex> with_center{0, 1};
  EXPECT_FALSE(find_independent_set(g, with_center, 2));
}

TEST(Detectors, ParameterRangesAreChecked) {
  const Graph g = gen_path(5);
  EXPECT_THROW(detect_star(g, 1), InputError);
  EXPECT_THROW(detect_star(g, 8), InputError);
  EXPECT_THROW(detect_clique(g, 2), InputError);
  EXPECT_THROW(detect_clique(g, 9), InputError);
  EXPECT_THROW(detect_independent_set(g, 5), InputError);
}

// ---- spot checks ---------------------------------------------------------

TEST(Detectors, TriangleOnK3) {
  const DetectionResult r = detect_triangle_sparse(gen_complete(3));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->vertices, (VertexTuple{0, 1, 2}));
}

TEST(Detectors, CoDiamondOnSquareIsCertifiedByTwoCliques) {
  const DetectionResult r = detect_co_diamond(gen_cycle(4));
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.certificate, "two-clique partition");
  ASSERT_EQ(r.certificate_parts.size(), 2u);
  for (const auto& part : r.certificate_parts) {
    EXPECT_EQ(part.size(), 2u);
    EXPECT_TRUE(gen_cycle(4).adjacent(part[0], part[1]));
  }
}

TEST(Detectors, CoDiamondPartitionCertificateOnLargeInput) {
  const Graph g = disjoint_union(gen_complete(20), gen_complete(17));
  const DetectionResult r = detect_co_diamond(g);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.certificate, "two-clique partition");
}

// Triangle and co-P3 both present, but every component is complete
// multipartite, so there is no paw.
TEST(Detectors, PawNeedsComponentwiseTest) {
  const Graph g = disjoint_union(gen_complete(3), Graph(2, std::vector<Edge>{}));
  EXPECT_TRUE(detect_triangle_dense(g).found());
  EXPECT_TRUE(detect_co_p3(g).found());
  EXPECT_FALSE(detect_paw(g).found());
  EXPECT_TRUE(census(g)[Pattern::kPaw].empty());

  const Graph h = complement(g);
  EXPECT_FALSE(detect_co_paw(h).found());
  EXPECT_TRUE(census(h)[Pattern::kCoPaw].empty());
}

TEST(Detectors, P3FreeGraphs) {
  const Graph g = disjoint_union(gen_complete(4), gen_complete(3));
  EXPECT_FALSE(detect_p3(g).found());
  EXPECT_FALSE(detect_p3_sweep(g).found());
  EXPECT_TRUE(detect_p3(gen_path(3)).found());
}

TEST(Detectors, GemOnGemGraph) {
  // P4 0-1-2-3 plus the hub 4.
  const Graph gem(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  const DetectionResult r = detect_gem(gem);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->vertices, (VertexTuple{0, 1, 2, 3, 4}));
  EXPECT_FALSE(detect_gem(gen_complete(6)).found());
}

TEST(Detectors, BruteforceCertificate) {
  const DetectionResult r = detect_bruteforce(gen_complete(5), Pattern::kSquare);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.certificate, "exhaustive");
}

TEST(Detectors, StepsAreCounted) {
  const Graph g = gen_gnp(30, 0.3, 1);
  for (const DetectorEntry& d : detectors()) {
    StepCounter steps;
    d.run(g, &steps);
    EXPECT_GT(steps.total(), 0u) << pattern_name(d.pattern) << ":" << d.algo;
  }
}

// ---- neighborhood scan ---------------------------------------------------

TEST(FindIsOrP3, OutcomeIsConsistent) {
  for (const auto& [name, g] : testing::full_corpus(20)) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const IndependentOrP3 r = find_is_or_p3(g, v);
      if (r.p3) {
        const std::vector<Vertex> t{r.p3->first, r.p3->middle, r.p3->last};
        for (Vertex x : t) ASSERT_TRUE(g.adjacent(v, x)) << name;
        ASSERT_TRUE(g.adjacent(r.p3->first, r.p3->middle));
        ASSERT_TRUE(g.adjacent(r.p3->middle, r.p3->last));
        ASSERT_FALSE(g.adjacent(r.p3->first, r.p3->last));
        continue;
      }
      const auto& is = r.independent;
      for (std::size_t i = 0; i < is.size(); ++i) {
        ASSERT_TRUE(g.adjacent(v, is[i])) << name;
        for (std::size_t j = i + 1; j < is.size(); ++j) {
          ASSERT_FALSE(g.adjacent(is[i], is[j])) << name;
          const auto a = common_neighbors(g, is[i], v);
          const auto b = common_neighbors(g, is[j], v);
          ASSERT_TRUE(intersect_sorted(a, b).empty()) << name;
        }
      }
      // Maximal inside N(v).
      for (Vertex u : g.neighbors(v)) {
        const bool in = std::find(is.begin(), is.end(), u) != is.end();
        const bool blocked = std::any_of(is.begin(), is.end(),
                                         [&](Vertex w) { return g.adjacent(u, w); });
        ASSERT_TRUE(in || blocked) << name;
      }
    }
  }
}

}  // namespace
}  // namespace ccsub

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccsub/common_index.hpp"
#include "ccsub/graph.hpp"
#include "ccsub/pattern.hpp"
#include "ccsub/step_counter.hpp"

namespace ccsub {

// A witness occurrence, or its absence with an optional reason. Certified
// absences may carry the certificate's vertex sets in `certificate_parts`
// (for the co-diamond partition test: the two cliques).
struct DetectionResult {
  std::optional<Occurrence> witness;
  std::string certificate;
  std::vector<std::vector<Vertex>> certificate_parts;

  bool found() const noexcept { return witness.has_value(); }

  static DetectionResult hit(Occurrence o) {
    DetectionResult r;
    r.witness = std::move(o);
    return r;
  }
  static DetectionResult absent(std::string certificate = {},
                                std::vector<std::vector<Vertex>> parts = {}) {
    DetectionResult r;
    r.certificate = std::move(certificate);
    r.certificate_parts = std::move(parts);
    return r;
  }
};

// Any component that is not a clique has a vertex at distance two from a
// vertex of non-full degree; found by BFS, O(n + m).
DetectionResult detect_p3(const Graph& g, StepCounter* steps = nullptr);

// First P3 of the edge sweep.
DetectionResult detect_p3_sweep(const Graph& g, StepCounter* steps = nullptr);

/// Edge plus a vertex nonadjacent to both ends, in O(n + m).
///
/// Splits V at degree n/2 - 1. An edge among the low-degree vertices always
/// misses some vertex; a low vertex that is not joined to every high vertex
/// yields a witness directly; otherwise any witness lies inside the high
/// part, whose complement is small enough to build and search for a P3.
DetectionResult detect_co_p3(const Graph& g, StepCounter* steps = nullptr);

// k pairwise nonadjacent vertices of `domain` (ascending), by branching on
// the non-neighborhood of each candidate in (degree, id) order.
std::optional<std::vector<Vertex>> find_independent_set(
    const Graph& g, std::span<const Vertex> domain, std::size_t k,
    StepCounter* steps = nullptr);

// k in {3, 4}.
DetectionResult detect_independent_set(const Graph& g, int k,
                                       StepCounter* steps = nullptr);

// Induced K_{1,k}, 2 <= k <= 7. Centers of degree below m^{1/k} combine
// their neighbors directly; the others search N(v) for an independent set.
// The witness pattern is P3 for k = 2, claw for k = 3 and star otherwise.
DetectionResult detect_star(const Graph& g, int k, StepCounter* steps = nullptr);

DetectionResult detect_claw(const Graph& g, StepCounter* steps = nullptr);

// First triangle of the edge sweep, O(c n^2).
DetectionResult detect_triangle_dense(const Graph& g, StepCounter* steps = nullptr);

// Degree split at (c m)^{1/3}: pairs of neighbors of low vertices are
// probed, the high part is handed to the dense sweep. O(c^{1/3} m^{4/3}).
DetectionResult detect_triangle_sparse(const Graph& g,
                                       StepCounter* steps = nullptr);

// K_k for 3 <= k <= 8: grow k - 3 clique vertices, then run the dense
// triangle sweep on their common neighborhood.
DetectionResult detect_clique(const Graph& g, int k, StepCounter* steps = nullptr);

// Per connected component: a paw exists iff the component has a triangle
// and is not complete multipartite (has a co-P3).
DetectionResult detect_paw(const Graph& g, StepCounter* steps = nullptr);

// Per co-component: a co-paw exists iff it has an independent triple and a P3.
DetectionResult detect_co_paw(const Graph& g, StepCounter* steps = nullptr);

// Case analysis on the closure. Absence is certified as "exhaustive",
// "two-clique partition" (with the two cliques) or "high-degree scan".
DetectionResult detect_co_diamond(const Graph& g, StepCounter* steps = nullptr);

DetectionResult detect_co_square(const Graph& g, StepCounter* steps = nullptr);

// G is diamond-free iff every neighborhood induces a cluster graph.
DetectionResult detect_diamond_baseline(const Graph& g,
                                        StepCounter* steps = nullptr);

// Outcome of the neighborhood scan below: either an independent set I of
// G[N(v)] that is maximal there and whose members have pairwise disjoint
// common neighborhoods with v, or an induced P3 inside N(v).
struct IndependentOrP3 {
  std::vector<Vertex> independent;
  std::optional<P3Path> p3;
};

// Repeatedly takes the smallest remaining u of J = N(v), adds it to I and
// drops N[u] from J; a neighbor of u in N(v) already dropped closes a P3.
IndependentOrP3 find_is_or_p3(const Graph& g, Vertex v,
                              StepCounter* steps = nullptr);

// Correct only on gem-free inputs; on other graphs it may miss diamonds,
// but every witness it returns is genuine.
DetectionResult detect_diamond_gemfree(const Graph& g,
                                       StepCounter* steps = nullptr);

// A P4 inside some neighborhood.
DetectionResult detect_gem(const Graph& g, StepCounter* steps = nullptr);

// Extends each edge uv to u'-u-v-v'.
DetectionResult detect_p4(const Graph& g, StepCounter* steps = nullptr);

// A triangle whose closed neighborhoods do not cover V.
DetectionResult detect_co_claw(const Graph& g, StepCounter* steps = nullptr);

// First square of the two-phase enumeration.
DetectionResult detect_square(const Graph& g, StepCounter* steps = nullptr);

// First occurrence of the matching-based brute force; any catalog pattern.
DetectionResult detect_bruteforce(const Graph& g, Pattern h,
                                  StepCounter* steps = nullptr);

}  // namespace ccsub

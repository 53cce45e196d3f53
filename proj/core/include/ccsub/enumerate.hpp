#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "ccsub/common_index.hpp"
#include "ccsub/graph.hpp"
#include "ccsub/pattern.hpp"
#include "ccsub/step_counter.hpp"

namespace ccsub {

// Every enumerator streams canonical occurrences (ascending tuples), each
// vertex set exactly once, and returns the number emitted. A visitor
// returning Visit::kStop ends the enumeration after that occurrence.
using OccurrenceVisitor = std::function<Visit(const Occurrence&)>;

// Degree-ordered orientation listing, O(m^{3/2}).
std::size_t enumerate_triangles(const Graph& g, const OccurrenceVisitor& visit,
                                StepCounter* steps = nullptr);

// Every (edge, vertex) combination, O(nm).
std::size_t enumerate_co_p3(const Graph& g, const OccurrenceVisitor& visit,
                            StepCounter* steps = nullptr);

// Adapter over the P3 edge sweep in common_index.hpp.
std::size_t enumerate_p3_occurrences(const Graph& g,
                                     const OccurrenceVisitor& visit,
                                     StepCounter* steps = nullptr);

// Minimum size of a vertex set S such that every vertex outside S has two
// mutually nonadjacent neighbors in S; exact, by subset enumeration.
int compute_i2(const PatternInfo& h);

// The smallest-valued bitmask among the minimum anchor sets.
std::uint32_t optimal_anchor_mask(const PatternInfo& h);

/// Anchor-set enumeration.
///
/// Places the pattern's anchor vertices on host vertices in every way that
/// is consistent with the pattern restricted to the anchors, then draws each
/// remaining pattern vertex from the common-neighbor list of two of its
/// nonadjacent anchors. An occurrence is emitted only from the
/// lexicographically smallest placement among its automorphic images.
std::size_t enumerate_by_anchor(const Graph& g, Pattern h,
                                const OccurrenceVisitor& visit,
                                StepCounter* steps = nullptr);

// Same, reusing a prebuilt index for g.
std::size_t enumerate_by_anchor(const Graph& g, const CommonNeighborIndex& index,
                                Pattern h, const OccurrenceVisitor& visit,
                                StepCounter* steps = nullptr);

// P4s and paws from (edge, vertex) pairs: the fourth vertex comes from the
// common-neighbor list of a nonadjacent pair, so there are < c candidates.
std::size_t enumerate_p4_paw_edge_anchored(const Graph& g, Pattern h,
                                           const OccurrenceVisitor& visit,
                                           StepCounter* steps = nullptr);

enum class SquarePhase { kLowEdge, kHighOpposite };

using PhasedSquareVisitor =
    std::function<Visit(const Occurrence&, SquarePhase)>;

// Degree threshold D = sqrt(c) * m^{1/4}; degree >= D is high.
double square_degree_threshold(std::size_t closure, std::size_t num_edges);

/// Induced squares in two phases split at D = sqrt(c) m^{1/4}.
///
/// A square belongs to the low-edge phase iff two adjacent corners have
/// degree < D; otherwise two opposite corners are high and it is listed
/// from the common-neighbor lists of high nonadjacent pairs. The closure is
/// computed internally and charged to `steps->setup`.
std::size_t enumerate_squares_phased(const Graph& g,
                                     const PhasedSquareVisitor& visit,
                                     StepCounter* steps = nullptr);

std::size_t enumerate_squares_fast(const Graph& g, const OccurrenceVisitor& visit,
                                   StepCounter* steps = nullptr);

// nu(h) edges plus |V(h)| - 2 nu(h) vertices per choice; a vertex set is
// emitted only from its lexicographically smallest nu(h)-matching.
std::size_t enumerate_bruteforce_matching(const Graph& g, Pattern h,
                                          const OccurrenceVisitor& visit,
                                          StepCounter* steps = nullptr);

inline constexpr std::size_t kDefaultOracleCap = 60;

class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(std::size_t n, std::size_t cap);
};

// Ground truth: classifies all C(n, |V(h)|) vertex subsets.
std::size_t enumerate_subsets_oracle(const Graph& g, Pattern h,
                                     const OccurrenceVisitor& visit,
                                     std::size_t cap = kDefaultOracleCap);

}  // namespace ccsub

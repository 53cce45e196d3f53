#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ccsub/graph.hpp"
#include "ccsub/pattern.hpp"
#include "ccsub/step_counter.hpp"

namespace ccsub {

// An induced path first - middle - last with first < last.
struct P3Path {
  Vertex first;
  Vertex middle;
  Vertex last;
};

using P3Visitor = std::function<Visit(const P3Path&)>;

// Edge sweep: for every edge uv and every w in N(u) ∪ N(v), the triple is a
// triangle or a P3. Each P3 a-b-c is seen from both of its edges and is
// reported only from the edge incident to min(a, c). Triangles are skipped.
// Returns the number of P3s reported.
std::size_t enumerate_p3(const Graph& g, const P3Visitor& visit,
                         StepCounter* steps = nullptr);

/// Common neighbors of every nonadjacent pair that has at least one.
///
/// Built from the P3 sweep by a three-pass counting sort on
/// (first, last, middle); stored as flat runs keyed by the endpoint pair.
/// The total number of stored entries equals the number of induced P3s.
class CommonNeighborIndex {
 public:
  CommonNeighborIndex() = default;

  static CommonNeighborIndex build(const Graph& g, StepCounter* steps = nullptr);

  // Ascending common neighbors of the nonadjacent pair {u, v}; empty when
  // the pair is adjacent or has none.
  std::span<const Vertex> common(Vertex u, Vertex v) const;

  std::size_t num_pairs() const noexcept { return keys_.size(); }
  std::size_t num_entries() const noexcept { return middles_.size(); }
  Edge pair(std::size_t i) const noexcept { return keys_[i]; }
  std::span<const Vertex> list(std::size_t i) const noexcept {
    return {middles_.data() + offsets_[i], middles_.data() + offsets_[i + 1]};
  }

 private:
  std::vector<Edge> keys_;  // (u, v) with u < v, ascending
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> middles_;
};

inline CommonNeighborIndex build_index(const Graph& g, StepCounter* steps = nullptr) {
  return CommonNeighborIndex::build(g, steps);
}

struct ClosureReport {
  std::size_t c = 1;
  // Lexicographically first nonadjacent pair with c - 1 common neighbors.
  std::optional<Edge> argmax;

  friend bool operator==(const ClosureReport&, const ClosureReport&) = default;
};

// c = 1 + max over nonadjacent pairs of |N(u) ∩ N(v)|, via the index.
ClosureReport compute_closure(const Graph& g, StepCounter* steps = nullptr);
ClosureReport closure_from_index(const CommonNeighborIndex& index);

// Reference route: probes every vertex against every nonadjacent pair.
ClosureReport compute_closure_naive(const Graph& g);

}  // namespace ccsub

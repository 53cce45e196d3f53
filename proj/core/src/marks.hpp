#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "ccsub/graph.hpp"

namespace ccsub::internal {

// Epoch-stamped vertex marks: clear() is O(1) amortized.
class VertexMarks {
 public:
  explicit VertexMarks(std::size_t n) : stamp_(n, 0) {}

  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  void mark(Vertex v) { stamp_[v] = epoch_; }
  void mark_all(std::span<const Vertex> vs) {
    for (Vertex v : vs) stamp_[v] = epoch_;
  }
  bool marked(Vertex v) const { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

// Calls f(span of k chosen vertices, ascending) for every k-subset of
// `pool` (which must be ascending). Stops early when f returns false.
template <class F>
bool for_each_combination(std::span<const Vertex> pool, std::size_t k, F&& f) {
  if (k > pool.size()) return true;
  std::vector<std::size_t> idx(k);
  std::vector<Vertex> chosen(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (!f(std::span<const Vertex>(chosen))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(g.num_vertices());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Vertex>(i);
  return vs;
}

}  // namespace ccsub::internal

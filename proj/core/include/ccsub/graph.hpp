#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ccsub {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised for malformed arguments: bad endpoints, unsupported patterns,
// invalid generator parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one flat array of ascending neighbor runs (CSR).
/// Duplicate input pairs are collapsed; self-loops and out-of-range
/// endpoints are rejected with InputError.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }

  // Binary search in the shorter of the two lists.
  bool adjacent(Vertex u, Vertex v) const noexcept;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  template <typename F>
  void for_each_edge(F&& f) const {
    for (Vertex u = 0; u < num_vertices(); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) f(u, v);
      }
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph(n, edges);
}

// N(u) ∩ N(v) by merging the two sorted lists.
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

// Sorted-run intersection helper shared by several algorithms.
std::vector<Vertex> intersect_sorted(std::span<const Vertex> a,
                                     std::span<const Vertex> b);

// G[vertices]. `vertices` must be ascending; new vertex i is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph complement(const Graph& g);

// Connected components, each ascending; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace ccsub

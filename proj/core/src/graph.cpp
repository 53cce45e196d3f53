#include "ccsub/graph.hpp"

#include <algorithm>
#include <string>

namespace ccsub {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v) + " (n = " + std::to_string(n) +
                       ")");
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  offsets_.assign(n + 1, 0);
  adjacency_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++offsets_[u + 1];
    adjacency_.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for_each_edge([&](Vertex u, Vertex v) { out.emplace_back(u, v); });
  return out;
}

std::vector<Vertex> intersect_sorted(std::span<const Vertex> a,
                                     std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  return intersect_sorted(g.neighbors(u), g.neighbors(v));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = local[w];
      if (j != static_cast<Vertex>(-1) && i < j) {
        edges.emplace_back(static_cast<Vertex>(i), j);
      }
    }
  }
  return Graph(vertices.size(), edges);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto it = nu.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != nu.end() && *it < v) ++it;
      if (it == nu.end() || *it != v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

}  // namespace ccsub

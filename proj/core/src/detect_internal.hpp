#pragma once

#include <span>
#include <vector>

#include "ccsub/detect.hpp"

namespace ccsub::internal {

// Rewrites a witness found in induced_subgraph(g, ids) in terms of g.
inline DetectionResult lift(DetectionResult r, std::span<const Vertex> ids) {
  if (!r.found()) return r;
  VertexTuple mapped;
  for (Vertex v : r.witness->vertices) mapped.push_back(ids[v]);
  r.witness = Occurrence::of(r.witness->pattern, mapped.span());
  return r;
}

inline Graph induced_counted(const Graph& g, std::span<const Vertex> ids,
                             StepCounter& sc) {
  for (Vertex v : ids) sc.neighbor_scans += g.degree(v);
  return induced_subgraph(g, ids);
}

}  // namespace ccsub::internal

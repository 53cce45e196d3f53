#include "ccsub/common_index.hpp"

#include <algorithm>

namespace ccsub {
namespace {

struct Triple {
  Vertex first;
  Vertex last;
  Vertex middle;
};

// Stable counting sort of `in` by key(t) in [0, n).
template <class Key>
void counting_sort(std::vector<Triple>& in, std::vector<Triple>& out,
                   std::size_t n, Key key) {
  std::vector<std::size_t> bucket(n + 1, 0);
  for (const Triple& t : in) ++bucket[key(t) + 1];
  for (std::size_t i = 0; i < n; ++i) bucket[i + 1] += bucket[i];
  out.resize(in.size());
  for (const Triple& t : in) out[bucket[key(t)]++] = t;
  in.swap(out);
}

}  // namespace

std::size_t enumerate_p3(const Graph& g, const P3Visitor& visit,
                         StepCounter* steps) {
  CounterRef sc(steps);
  std::size_t count = 0;
  const std::size_t n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      // Merge N(u) and N(v); w in exactly one list closes a P3 with uv.
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < nu.size() || j < nv.size()) {
        ++sc->neighbor_scans;
        Vertex w;
        bool in_u = false;
        if (j == nv.size() || (i < nu.size() && nu[i] < nv[j])) {
          w = nu[i++];
          in_u = true;
        } else if (i == nu.size() || nv[j] < nu[i]) {
          w = nv[j++];
        } else {
          w = nu[i];
          ++i;
          ++j;
          continue;  // triangle
        }
        if (w == u || w == v) continue;
        // in_u: path v - u - w; in_v: path u - v - w.
        const Vertex end = in_u ? v : u;
        const Vertex mid = in_u ? u : v;
        if (end < w) {
          ++count;
          if (visit(P3Path{end, mid, w}) == Visit::kStop) return count;
        }
      }
    }
  }
  return count;
}

CommonNeighborIndex CommonNeighborIndex::build(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  std::vector<Triple> triples;
  enumerate_p3(
      g,
      [&](const P3Path& p) {
        triples.push_back({p.first, p.last, p.middle});
        return Visit::kContinue;
      },
      sc.get());

  const std::size_t n = g.num_vertices();
  std::vector<Triple> scratch;
  counting_sort(triples, scratch, n, [](const Triple& t) { return t.middle; });
  counting_sort(triples, scratch, n, [](const Triple& t) { return t.last; });
  counting_sort(triples, scratch, n, [](const Triple& t) { return t.first; });
  sc->index_touches += 3 * triples.size();

  CommonNeighborIndex index;
  index.middles_.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (i == 0 || t.first != triples[i - 1].first || t.last != triples[i - 1].last) {
      if (i != 0) index.offsets_.push_back(index.middles_.size());
      index.keys_.emplace_back(t.first, t.last);
    }
    index.middles_.push_back(t.middle);
  }
  if (!triples.empty()) index.offsets_.push_back(index.middles_.size());
  return index;
}

std::span<const Vertex> CommonNeighborIndex::common(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return {};
  return list(static_cast<std::size_t>(it - keys_.begin()));
}

ClosureReport closure_from_index(const CommonNeighborIndex& index) {
  ClosureReport report;
  std::size_t best = 0;
  for (std::size_t i = 0; i < index.num_pairs(); ++i) {
    if (index.list(i).size() > best) {
      best = index.list(i).size();
      report.argmax = index.pair(i);
    }
  }
  report.c = best + 1;
  return report;
}

ClosureReport compute_closure(const Graph& g, StepCounter* steps) {
  return closure_from_index(CommonNeighborIndex::build(g, steps));
}

ClosureReport compute_closure_naive(const Graph& g) {
  const std::size_t n = g.num_vertices();
  ClosureReport report;
  std::size_t best = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      std::size_t shared = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) ++shared;
      }
      if (shared > best) {
        best = shared;
        report.argmax = Edge{u, v};
      }
    }
  }
  report.c = best + 1;
  return report;
}

}  // namespace ccsub

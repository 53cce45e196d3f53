#include "ccsub/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include "marks.hpp"

namespace ccsub {
namespace {

using internal::VertexMarks;
using internal::for_each_combination;

using Perm = std::array<int, kMaxPatternOrder>;

std::vector<Perm> automorphisms(const PatternInfo& h) {
  const int k = h.order;
  std::vector<Perm> out;
  Perm p{};
  std::iota(p.begin(), p.begin() + k, 0);
  do {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = a + 1; b < k && ok; ++b) {
        ok = h.has_edge(a, b) == h.has_edge(p[a], p[b]);
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + k));
  return out;
}

bool valid_anchor_set(const PatternInfo& h, std::uint32_t mask) {
  for (int x = 0; x < h.order; ++x) {
    if (mask >> x & 1) continue;
    bool covered = false;
    for (int a = 0; a < h.order && !covered; ++a) {
      if (!(mask >> a & 1) || !h.has_edge(x, a)) continue;
      for (int b = a + 1; b < h.order && !covered; ++b) {
        covered = (mask >> b & 1) && h.has_edge(x, b) && !h.has_edge(a, b);
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool edge_less(Edge a, Edge b) { return a < b; }

Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::size_t enumerate_triangles(const Graph& g, const OccurrenceVisitor& visit,
                                StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  // Orient each edge toward the endpoint later in (degree, id) order.
  auto before = [&g](Vertex a, Vertex b) {
    return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
  };
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      ++sc->neighbor_scans;
      if (before(u, v)) out[u].push_back(v);
    }
  }
  VertexMarks marks(n);
  std::size_t count = 0;
  for (Vertex u = 0; u < n; ++u) {
    marks.clear();
    marks.mark_all(out[u]);
    for (Vertex v : out[u]) {
      for (Vertex w : out[v]) {
        ++sc->neighbor_scans;
        if (!marks.marked(w)) continue;
        ++count;
        if (visit(Occurrence::of(Pattern::kK3, {u, v, w})) == Visit::kStop) {
          return count;
        }
      }
    }
  }
  return count;
}

std::size_t enumerate_co_p3(const Graph& g, const OccurrenceVisitor& visit,
                            StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  VertexMarks marks(n);
  std::size_t count = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      marks.clear();
      marks.mark(u);
      marks.mark(v);
      marks.mark_all(g.neighbors(u));
      marks.mark_all(g.neighbors(v));
      sc->neighbor_scans += g.degree(u) + g.degree(v);
      for (Vertex w = 0; w < n; ++w) {
        ++sc->edge_probes;
        if (marks.marked(w)) continue;
        ++count;
        if (visit(Occurrence::of(Pattern::kCoP3, {u, v, w})) == Visit::kStop) {
          return count;
        }
      }
    }
  }
  return count;
}

std::size_t enumerate_p3_occurrences(const Graph& g,
                                     const OccurrenceVisitor& visit,
                                     StepCounter* steps) {
  return enumerate_p3(
      g,
      [&](const P3Path& p) {
        return visit(Occurrence::of(Pattern::kP3, {p.first, p.middle, p.last}));
      },
      steps);
}

int compute_i2(const PatternInfo& h) {
  return std::popcount(optimal_anchor_mask(h));
}

std::uint32_t optimal_anchor_mask(const PatternInfo& h) {
  const std::uint32_t full = (1u << h.order) - 1;
  for (int size = 0; size <= h.order; ++size) {
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (std::popcount(mask) == size && valid_anchor_set(h, mask)) return mask;
    }
  }
  return full;
}

std::size_t enumerate_by_anchor(const Graph& g, Pattern h,
                                const OccurrenceVisitor& visit,
                                StepCounter* steps) {
  CounterRef sc(steps);
  const CommonNeighborIndex index = CommonNeighborIndex::build(g, sc.get());
  return enumerate_by_anchor(g, index, h, visit, sc.get());
}

std::size_t enumerate_by_anchor(const Graph& g, const CommonNeighborIndex& index,
                                Pattern h, const OccurrenceVisitor& visit,
                                StepCounter* steps) {
  CounterRef sc(steps);
  const PatternInfo& info = pattern_info(h);
  const int k = info.order;
  if (info.anchor_mask == 0 || !valid_anchor_set(info, info.anchor_mask)) {
    throw InputError("pattern '" + std::string(info.name) +
                     "' has no usable anchor set");
  }

  // Placement order: anchors first, then the vertices drawn from the index.
  std::vector<int> order;
  for (int x = 0; x < k; ++x) {
    if (info.anchor_mask >> x & 1) order.push_back(x);
  }
  const std::size_t num_anchors = order.size();
  for (int x = 0; x < k; ++x) {
    if (!(info.anchor_mask >> x & 1)) order.push_back(x);
  }

  // For each placed pattern vertex: an earlier adjacent anchor to scan from
  // (anchors) or the nonadjacent anchor pair whose index list supplies it.
  std::vector<int> scan_from(k, -1);
  std::vector<std::pair<int, int>> source_pair(k, {-1, -1});
  for (std::size_t d = 0; d < order.size(); ++d) {
    const int x = order[d];
    if (d < num_anchors) {
      for (std::size_t e = 0; e < d; ++e) {
        if (info.has_edge(x, order[e])) {
          scan_from[x] = order[e];
          break;
        }
      }
      continue;
    }
    for (std::size_t a = 0; a < num_anchors && source_pair[x].first < 0; ++a) {
      for (std::size_t b = a + 1; b < num_anchors; ++b) {
        const int pa = order[a];
        const int pb = order[b];
        if (info.has_edge(x, pa) && info.has_edge(x, pb) && !info.has_edge(pa, pb)) {
          source_pair[x] = {pa, pb};
          break;
        }
      }
    }
  }

  std::vector<Perm> auts = automorphisms(info);
  auts.erase(auts.begin());  // identity comes first in next_permutation order

  const std::vector<Vertex> everyone = internal::all_vertices(g);
  std::array<Vertex, kMaxPatternOrder> phi{};
  std::size_t count = 0;
  bool stopped = false;

  auto lex_minimal = [&]() {
    for (const Perm& s : auts) {
      for (int i = 0; i < k; ++i) {
        const Vertex a = phi[s[i]];
        if (a < phi[i]) return false;
        if (a > phi[i]) break;
      }
    }
    return true;
  };

  auto consistent = [&](std::size_t depth, Vertex cand) {
    const int x = order[depth];
    for (std::size_t e = 0; e < depth; ++e) {
      const Vertex y = phi[order[e]];
      if (y == cand) return false;
      ++sc->edge_probes;
      if (info.has_edge(x, order[e]) != g.adjacent(cand, y)) return false;
    }
    return true;
  };

  auto place = [&](auto&& self, std::size_t depth) -> void {
    if (depth == static_cast<std::size_t>(k)) {
      if (!lex_minimal()) return;
      ++count;
      Occurrence occ = Occurrence::of(h, std::span<const Vertex>(phi.data(), k));
      if (visit(occ) == Visit::kStop) stopped = true;
      return;
    }
    const int x = order[depth];
    std::span<const Vertex> candidates;
    if (depth < num_anchors) {
      candidates = scan_from[x] >= 0 ? g.neighbors(phi[scan_from[x]])
                                     : std::span<const Vertex>(everyone);
    } else {
      candidates = index.common(phi[source_pair[x].first], phi[source_pair[x].second]);
    }
    for (Vertex cand : candidates) {
      if (depth < num_anchors) {
        ++sc->neighbor_scans;
      } else {
        ++sc->index_touches;
      }
      if (!consistent(depth, cand)) continue;
      phi[x] = cand;
      self(self, depth + 1);
      if (stopped) return;
    }
  };
  place(place, 0);
  return count;
}

std::size_t enumerate_p4_paw_edge_anchored(const Graph& g, Pattern h,
                                           const OccurrenceVisitor& visit,
                                           StepCounter* steps) {
  if (h != Pattern::kP4 && h != Pattern::kPaw) {
    throw InputError("edge-anchored enumeration supports only P4 and paw");
  }
  CounterRef sc(steps);
  const CommonNeighborIndex index = CommonNeighborIndex::build(g, sc.get());
  const std::size_t n = g.num_vertices();
  VertexMarks near(n);
  std::size_t count = 0;

  // Marks N[a] ∪ N[b]; unmarked vertices are nonadjacent to both.
  auto mark_closed = [&](Vertex a, Vertex b) {
    near.clear();
    near.mark(a);
    near.mark(b);
    near.mark_all(g.neighbors(a));
    near.mark_all(g.neighbors(b));
    sc->neighbor_scans += g.degree(a) + g.degree(b);
  };

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : g.neighbors(x)) {
      if (y < x) continue;
      if (h == Pattern::kP4) {
        // Path a - b - c - d with fixed edge ab and end d; c from index(b, d).
        for (auto [a, b] : {Edge{x, y}, Edge{y, x}}) {
          mark_closed(a, b);
          for (Vertex d = a + 1; d < n; ++d) {
            ++sc->edge_probes;
            if (near.marked(d)) continue;
            for (Vertex c : index.common(b, d)) {
              ++sc->index_touches;
              ++sc->edge_probes;
              if (g.adjacent(c, a)) continue;
              ++count;
              if (visit(Occurrence::of(Pattern::kP4, {a, b, c, d})) == Visit::kStop) {
                return count;
              }
            }
          }
        }
      } else {
        // Triangle {x, y, center} with pendant p; center from index(x, p).
        mark_closed(x, y);
        for (Vertex p = 0; p < n; ++p) {
          ++sc->edge_probes;
          if (near.marked(p)) continue;
          for (Vertex center : index.common(x, p)) {
            ++sc->index_touches;
            ++sc->edge_probes;
            if (!g.adjacent(center, y)) continue;
            ++count;
            if (visit(Occurrence::of(Pattern::kPaw, {x, y, center, p})) ==
                Visit::kStop) {
              return count;
            }
          }
        }
      }
    }
  }
  return count;
}

double square_degree_threshold(std::size_t closure, std::size_t num_edges) {
  return std::sqrt(static_cast<double>(closure)) *
         std::pow(static_cast<double>(num_edges), 0.25);
}

std::size_t enumerate_squares_phased(const Graph& g,
                                     const PhasedSquareVisitor& visit,
                                     StepCounter* steps) {
  CounterRef sc(steps);
  StepCounter setup;
  const std::size_t c = compute_closure(g, &setup).c;
  sc->setup += setup.total();

  const std::size_t n = g.num_vertices();
  const double threshold = square_degree_threshold(c, g.num_edges());
  std::vector<bool> high(n);
  for (Vertex v = 0; v < n; ++v) {
    high[v] = static_cast<double>(g.degree(v)) >= threshold;
  }
  std::size_t count = 0;

  // Phase (i): squares u - v - v' - u' owned by their smallest low-low edge.
  for (Vertex u = 0; u < n; ++u) {
    if (high[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v < u || high[v]) continue;
      const Edge uv{u, v};
      for (Vertex up : g.neighbors(u)) {
        ++sc->neighbor_scans;
        if (up == v) continue;
        ++sc->edge_probes;
        if (g.adjacent(up, v)) continue;
        for (Vertex vp : g.neighbors(v)) {
          ++sc->neighbor_scans;
          if (vp == u || vp == up) continue;
          sc->edge_probes += 2;
          if (g.adjacent(vp, u) || !g.adjacent(up, vp)) continue;
          bool owner = true;
          for (Edge e : {normalized(v, vp), normalized(vp, up), normalized(up, u)}) {
            if (!high[e.first] && !high[e.second] && edge_less(e, uv)) {
              owner = false;
              break;
            }
          }
          if (!owner) continue;
          ++count;
          if (visit(Occurrence::of(Pattern::kSquare, {u, v, vp, up}),
                    SquarePhase::kLowEdge) == Visit::kStop) {
            return count;
          }
        }
      }
    }
  }

  // Phase (ii): P3s whose endpoints are both high, from the edge sweep
  // restricted to edges with a high endpoint and high third vertices.
  std::vector<std::vector<Vertex>> high_neighbors(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      ++sc->neighbor_scans;
      if (high[w]) high_neighbors[v].push_back(w);
    }
  }
  struct Entry {
    Vertex first;
    Vertex last;
    Vertex middle;
    auto operator<=>(const Entry&) const = default;
  };
  std::vector<Entry> entries;
  for (Vertex u = 0; u < n; ++u) {
    if (!high[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      for (Vertex w : high_neighbors[v]) {
        ++sc->neighbor_scans;
        if (w == u) continue;
        ++sc->edge_probes;
        if (g.adjacent(u, w)) continue;
        if (u < w) entries.push_back({u, w, v});
      }
    }
  }
  std::sort(entries.begin(), entries.end());
  sc->index_touches += entries.size();

  for (std::size_t lo = 0; lo < entries.size();) {
    std::size_t hi = lo;
    while (hi < entries.size() && entries[hi].first == entries[lo].first &&
           entries[hi].last == entries[lo].last) {
      ++hi;
    }
    const Vertex x = entries[lo].first;
    const Vertex y = entries[lo].last;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) {
        const Vertex a = entries[i].middle;
        const Vertex b = entries[j].middle;
        ++sc->index_touches;
        ++sc->edge_probes;
        if (g.adjacent(a, b)) continue;
        // Every edge of x - a - y - b touches a high corner, so the
        // low-edge phase never lists it. If {a, b} is also a high pair,
        // the pair holding the smallest corner reports it.
        if (high[a] && high[b] && std::min(a, b) < x) continue;
        ++count;
        if (visit(Occurrence::of(Pattern::kSquare, {x, a, y, b}),
                  SquarePhase::kHighOpposite) == Visit::kStop) {
          return count;
        }
      }
    }
    lo = hi;
  }
  return count;
}

std::size_t enumerate_squares_fast(const Graph& g, const OccurrenceVisitor& visit,
                                   StepCounter* steps) {
  return enumerate_squares_phased(
      g, [&](const Occurrence& o, SquarePhase) { return visit(o); }, steps);
}

std::size_t enumerate_bruteforce_matching(const Graph& g, Pattern h,
                                          const OccurrenceVisitor& visit,
                                          StepCounter* steps) {
  CounterRef sc(steps);
  const PatternInfo& info = pattern_info(h);
  const int k = info.order;
  const int nu = info.nu;
  const std::vector<Edge> edges = g.edges();
  const std::vector<Vertex> everyone = internal::all_vertices(g);
  std::size_t count = 0;
  bool stopped = false;

  std::vector<Edge> chosen;
  std::vector<Vertex> pool;
  std::vector<Vertex> set;

  // Lexicographically smallest set of nu pairwise disjoint edges in G[X].
  auto smallest_matching = [&](std::span<const Vertex> xs) {
    std::vector<Edge> local;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (g.adjacent(xs[i], xs[j])) local.emplace_back(xs[i], xs[j]);
      }
    }
    std::vector<Edge> best;
    std::vector<Edge> cur;
    auto search = [&](auto&& self, std::size_t from) -> bool {
      if (static_cast<int>(cur.size()) == nu) {
        best = cur;
        return true;
      }
      for (std::size_t i = from; i < local.size(); ++i) {
        bool disjoint = true;
        for (Edge e : cur) {
          disjoint = disjoint && e.first != local[i].first &&
                     e.first != local[i].second && e.second != local[i].first &&
                     e.second != local[i].second;
        }
        if (!disjoint) continue;
        cur.push_back(local[i]);
        if (self(self, i + 1)) return true;
        cur.pop_back();
      }
      return false;
    };
    search(search, 0);
    return best;
  };

  auto finish = [&]() {
    // Pool: vertices not covered by the chosen edges.
    pool.clear();
    for (Vertex v : everyone) {
      bool used = false;
      for (Edge e : chosen) used = used || e.first == v || e.second == v;
      if (!used) pool.push_back(v);
    }
    for_each_combination(pool, static_cast<std::size_t>(k - 2 * nu),
                         [&](std::span<const Vertex> extra) {
                           ++sc->edge_probes;
                           set.assign(extra.begin(), extra.end());
                           for (Edge e : chosen) {
                             set.push_back(e.first);
                             set.push_back(e.second);
                           }
                           std::sort(set.begin(), set.end());
                           if (!induces(g, set, h)) return true;
                           if (nu > 0 && smallest_matching(set) != chosen) return true;
                           ++count;
                           if (visit(Occurrence::of(h, set)) == Visit::kStop) {
                             stopped = true;
                             return false;
                           }
                           return true;
                         });
  };

  auto pick_edges = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == nu) {
      finish();
      return;
    }
    for (std::size_t i = from; i < edges.size() && !stopped; ++i) {
      ++sc->neighbor_scans;
      bool disjoint = true;
      for (Edge e : chosen) {
        disjoint = disjoint && e.first != edges[i].first &&
                   e.first != edges[i].second && e.second != edges[i].first &&
                   e.second != edges[i].second;
      }
      if (!disjoint) continue;
      chosen.push_back(edges[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  pick_edges(pick_edges, 0);
  return count;
}

OracleCapExceeded::OracleCapExceeded(std::size_t n, std::size_t cap)
    : std::runtime_error("subset oracle refused: n = " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap)) {}

std::size_t enumerate_subsets_oracle(const Graph& g, Pattern h,
                                     const OccurrenceVisitor& visit,
                                     std::size_t cap) {
  const PatternInfo& info = pattern_info(h);
  if (g.num_vertices() > cap) throw OracleCapExceeded(g.num_vertices(), cap);
  const std::vector<Vertex> everyone = internal::all_vertices(g);
  std::size_t count = 0;
  for_each_combination(everyone, static_cast<std::size_t>(info.order),
                       [&](std::span<const Vertex> xs) {
                         const bool hit = info.order <= 4
                                              ? induced_pattern(g, xs) == h
                                              : induces(g, xs, h);
                         if (!hit) return true;
                         ++count;
                         return visit(Occurrence::of(h, xs)) == Visit::kContinue;
                       });
  return count;
}

}  // namespace ccsub

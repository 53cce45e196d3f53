// Detectors built on structural characterizations: paw and co-paw through
// (co-)components, co-diamond and co-square through the closure.

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ccsub/detect.hpp"
#include "ccsub/enumerate.hpp"
#include "detect_internal.hpp"
#include "marks.hpp"

namespace ccsub {
namespace {

using internal::VertexMarks;
using internal::induced_counted;
using internal::lift;

// Connected components of the complement, ascending and ordered by their
// smallest vertex. Each BFS step splits the unvisited list into neighbors
// (kept) and non-neighbors (visited), so the total work is O(n + m).
std::vector<std::vector<Vertex>> co_components(const Graph& g,
                                               std::vector<int>* side,
                                               StepCounter& sc) {
  const std::size_t n = g.num_vertices();
  VertexMarks adj(n);
  std::vector<Vertex> unvisited = internal::all_vertices(g);
  std::vector<Vertex> kept;
  std::vector<std::vector<Vertex>> out;
  if (side != nullptr) side->assign(n, 0);
  while (!unvisited.empty()) {
    std::vector<Vertex> queue{unvisited.front()};
    unvisited.erase(unvisited.begin());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      adj.clear();
      adj.mark_all(g.neighbors(x));
      sc.neighbor_scans += g.degree(x) + unvisited.size();
      kept.clear();
      for (Vertex y : unvisited) {
        if (adj.marked(y)) {
          kept.push_back(y);
        } else {
          if (side != nullptr) (*side)[y] = 1 - (*side)[x];
          queue.push_back(y);
        }
      }
      unvisited.swap(kept);
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(std::move(queue));
  }
  return out;
}

// Two nonadjacent members of `set`, found by counting each member's
// neighbors inside it.
std::optional<Edge> nonadjacent_pair(const Graph& g, std::span<const Vertex> set,
                                     VertexMarks& marks, StepCounter& sc) {
  marks.clear();
  marks.mark_all(set);
  for (Vertex x : set) {
    std::size_t inside = 0;
    for (Vertex y : g.neighbors(x)) {
      ++sc.neighbor_scans;
      if (marks.marked(y)) ++inside;
    }
    if (inside + 1 == set.size()) continue;
    for (Vertex y : set) {
      ++sc.edge_probes;
      if (y != x && !g.adjacent(x, y)) return Edge{std::min(x, y), std::max(x, y)};
    }
  }
  return std::nullopt;
}

// Vertices outside N[members...].
std::vector<Vertex> outside_closed(const Graph& g, std::initializer_list<Vertex> members,
                                   VertexMarks& marks, StepCounter& sc) {
  marks.clear();
  for (Vertex v : members) {
    marks.mark(v);
    marks.mark_all(g.neighbors(v));
    sc.neighbor_scans += g.degree(v);
  }
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!marks.marked(x)) out.push_back(x);
  }
  sc.neighbor_scans += g.num_vertices();
  return out;
}

// First vertex of `pool` adjacent to none of `avoid`.
std::optional<Vertex> first_missing(const Graph& g, std::span<const Vertex> pool,
                                    std::initializer_list<Vertex> avoid,
                                    VertexMarks& marks, StepCounter& sc) {
  marks.clear();
  for (Vertex a : avoid) {
    marks.mark(a);
    marks.mark_all(g.neighbors(a));
    sc.neighbor_scans += g.degree(a);
  }
  for (Vertex p : pool) {
    ++sc.neighbor_scans;
    if (!marks.marked(p)) return p;
  }
  return std::nullopt;
}

[[noreturn]] void broken(const char* what) {
  throw std::logic_error(std::string("detector invariant violated: ") + what);
}

// ---- paw / co-paw ---------------------------------------------------------

// hits[x] = |N(x) ∩ T| for a triangle or independent triple T.
struct TripleScan {
  const Graph& g;
  std::vector<int> hits;
  std::array<Vertex, 3> t{};

  explicit TripleScan(const Graph& graph) : g(graph), hits(graph.num_vertices()) {}

  void load(std::span<const Vertex> triple, StepCounter& sc) {
    std::fill(hits.begin(), hits.end(), 0);
    sc.neighbor_scans += hits.size();
    for (std::size_t i = 0; i < 3; ++i) {
      t[i] = triple[i];
      for (Vertex y : g.neighbors(t[i])) {
        ++sc.neighbor_scans;
        ++hits[y];
      }
    }
  }
  bool in_t(Vertex x) const { return x == t[0] || x == t[1] || x == t[2]; }

  std::optional<Vertex> vertex_with_hits(int h, StepCounter& sc) const {
    for (Vertex x = 0; x < hits.size(); ++x) {
      ++sc.neighbor_scans;
      if (!in_t(x) && hits[x] == h) return x;
    }
    return std::nullopt;
  }

  // Two members of T whose adjacency to x equals `adjacent`.
  std::array<Vertex, 2> pick_two(Vertex x, bool adjacent) const {
    std::array<Vertex, 2> out{};
    std::size_t k = 0;
    for (Vertex v : t) {
      if (k < 2 && g.adjacent(x, v) == adjacent) out[k++] = v;
    }
    return out;
  }
};

std::optional<Occurrence> paw_in_component(const Graph& sub, const Occurrence& tri,
                                           StepCounter& sc) {
  TripleScan scan(sub);
  scan.load(tri.vertices.span(), sc);
  if (auto x = scan.vertex_with_hits(1, sc)) {
    return Occurrence::of(Pattern::kPaw, {scan.t[0], scan.t[1], scan.t[2], *x});
  }
  // y two steps from T through x, where x sees two triangle vertices a, b:
  // {x, a, b} is a triangle and y hangs off x.
  for (Vertex x = 0; x < sub.num_vertices(); ++x) {
    if (scan.in_t(x) || scan.hits[x] < 2) continue;
    for (Vertex y : sub.neighbors(x)) {
      ++sc.neighbor_scans;
      if (scan.hits[y] != 0 || scan.in_t(y)) continue;
      auto [a, b] = scan.pick_two(x, true);
      return Occurrence::of(Pattern::kPaw, {x, a, b, y});
    }
  }
  // Every vertex sees at least two of T; some other triangle has a pendant.
  std::optional<Occurrence> hit;
  enumerate_triangles(
      sub,
      [&](const Occurrence& other) {
        scan.load(other.vertices.span(), sc);
        if (auto x = scan.vertex_with_hits(1, sc)) {
          hit = Occurrence::of(Pattern::kPaw, {scan.t[0], scan.t[1], scan.t[2], *x});
          return Visit::kStop;
        }
        return Visit::kContinue;
      },
      &sc);
  return hit;
}

std::optional<Occurrence> co_paw_in_co_component(const Graph& sub,
                                                 std::span<const Vertex> triple,
                                                 StepCounter& sc) {
  TripleScan scan(sub);
  scan.load(triple, sc);
  // x adjacent to exactly two of an independent triple: a P3 plus the third.
  if (auto x = scan.vertex_with_hits(2, sc)) {
    return Occurrence::of(Pattern::kCoPaw, {scan.t[0], scan.t[1], scan.t[2], *x});
  }
  // The same argument in the complement: y sees all of T, x sees at most
  // one of T and misses y; then a - y - b plus x with a, b ∉ N(x).
  const std::size_t n = sub.num_vertices();
  VertexMarks marks(n);
  for (Vertex y = 0; y < n; ++y) {
    if (scan.hits[y] != 3) continue;
    marks.clear();
    marks.mark_all(sub.neighbors(y));
    sc.neighbor_scans += sub.degree(y);
    for (Vertex x = 0; x < n; ++x) {
      ++sc.edge_probes;
      if (x == y || scan.in_t(x) || scan.hits[x] > 1 || marks.marked(x)) continue;
      auto [a, b] = scan.pick_two(x, false);
      return Occurrence::of(Pattern::kCoPaw, {x, a, b, y});
    }
  }
  std::optional<Occurrence> hit;
  const std::vector<Vertex> all = internal::all_vertices(sub);
  internal::for_each_combination(all, 3, [&](std::span<const Vertex> other) {
    sc.edge_probes += 3;
    if (sub.adjacent(other[0], other[1]) || sub.adjacent(other[0], other[2]) ||
        sub.adjacent(other[1], other[2])) {
      return true;
    }
    scan.load(other, sc);
    if (auto x = scan.vertex_with_hits(2, sc)) {
      hit = Occurrence::of(Pattern::kCoPaw, {scan.t[0], scan.t[1], scan.t[2], *x});
      return false;
    }
    return true;
  });
  return hit;
}

// ---- co-diamond -----------------------------------------------------------

Occurrence co_diamond(Vertex a, Vertex b, Vertex x, Vertex y) {
  return Occurrence::of(Pattern::kCoDiamond, {a, b, x, y});
}

struct CliqueSplit {
  std::optional<Occurrence> witness;
  std::vector<Vertex> clique;
  std::vector<Vertex> rest;
};

// Greedily extends the clique `seed` to a maximal clique C. With |C| >= 2c,
// either V \ C is a clique, or a nonadjacent pair outside C misses two
// vertices of C: each of them sees fewer than c vertices of C.
CliqueSplit split_at_clique(const Graph& g, std::span<const Vertex> seed,
                            StepCounter& sc) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> seen(n, 0);
  std::vector<bool> member(n, false);
  CliqueSplit out;
  auto add = [&](Vertex v) {
    member[v] = true;
    out.clique.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      ++sc.neighbor_scans;
      ++seen[w];
    }
  };
  for (Vertex v : seed) add(v);
  for (Vertex v = 0; v < n; ++v) {
    if (!member[v] && seen[v] == out.clique.size()) add(v);
  }
  std::sort(out.clique.begin(), out.clique.end());
  for (Vertex v = 0; v < n; ++v) {
    if (!member[v]) out.rest.push_back(v);
  }
  VertexMarks marks(n);
  auto pair = nonadjacent_pair(g, out.rest, marks, sc);
  if (!pair) return out;
  auto [u, v] = *pair;
  marks.clear();
  marks.mark_all(g.neighbors(u));
  marks.mark_all(g.neighbors(v));
  std::vector<Vertex> free;
  for (Vertex z : out.clique) {
    ++sc.neighbor_scans;
    if (!marks.marked(z)) free.push_back(z);
    if (free.size() == 2) break;
  }
  if (free.size() < 2) broken("maximal clique below 2c");
  out.witness = co_diamond(free[0], free[1], u, v);
  return out;
}

DetectionResult from_split(CliqueSplit split) {
  if (split.witness) return DetectionResult::hit(*split.witness);
  return DetectionResult::absent("two-clique partition",
                                 {std::move(split.clique), std::move(split.rest)});
}

// Partition of V into two cliques via a 2-coloring of the complement.
std::optional<std::array<std::vector<Vertex>, 2>> two_clique_partition(
    const Graph& g, StepCounter& sc) {
  std::vector<int> side;
  co_components(g, &side, sc);
  std::array<std::vector<Vertex>, 2> parts;
  for (Vertex v = 0; v < g.num_vertices(); ++v) parts[side[v]].push_back(v);
  VertexMarks marks(g.num_vertices());
  for (const auto& part : parts) {
    if (nonadjacent_pair(g, part, marks, sc)) return std::nullopt;
  }
  return parts;
}

// ---- co-square ------------------------------------------------------------

Occurrence co_square(Vertex a, Vertex b, Vertex x, Vertex y) {
  return Occurrence::of(Pattern::kCoSquare, {a, b, x, y});
}

// The construction for nonadjacent u, v with deg(u) >= c and
// deg(v) >= 2c - 1: w ∈ N(u) \ N(v), then v' ∈ N(v) \ N(u) \ N(w).
std::optional<Occurrence> co_square_from_pair(const Graph& g, Vertex u, Vertex v,
                                              VertexMarks& marks, StepCounter& sc) {
  auto w = first_missing(g, g.neighbors(u), {v}, marks, sc);
  if (!w) return std::nullopt;
  auto vp = first_missing(g, g.neighbors(v), {u, *w}, marks, sc);
  if (!vp) return std::nullopt;
  return co_square(u, *w, v, *vp);
}

// An edge of `edges` with both ends unmarked.
std::optional<Edge> edge_avoiding(std::span<const Edge> edges,
                                  const VertexMarks& marks, StepCounter& sc) {
  for (Edge e : edges) {
    ++sc.edge_probes;
    if (!marks.marked(e.first) && !marks.marked(e.second)) return e;
  }
  return std::nullopt;
}

}  // namespace

DetectionResult detect_paw(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 4) continue;
    const Graph sub = induced_counted(g, comp, *sc);
    DetectionResult tri = detect_triangle_dense(sub, sc.get());
    if (!tri.found()) continue;
    if (!detect_co_p3(sub, sc.get()).found()) continue;
    auto paw = paw_in_component(sub, *tri.witness, *sc);
    if (!paw) broken("component with triangle and co-P3 but no paw");
    return lift(DetectionResult::hit(*paw), comp);
  }
  return DetectionResult::absent();
}

DetectionResult detect_co_paw(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  for (const auto& q : co_components(g, nullptr, *sc)) {
    if (q.size() < 4) continue;
    const Graph sub = induced_counted(g, q, *sc);
    const std::vector<Vertex> all = internal::all_vertices(sub);
    auto triple = find_independent_set(sub, all, 3, sc.get());
    if (!triple) continue;
    if (!detect_p3(sub, sc.get()).found()) continue;
    auto co_paw = co_paw_in_co_component(sub, *triple, *sc);
    if (!co_paw) broken("co-component with K3-bar and P3 but no co-paw");
    return lift(DetectionResult::hit(*co_paw), q);
  }
  return DetectionResult::absent();
}

DetectionResult detect_co_diamond(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  if (n < 4) return DetectionResult::absent("exhaustive");
  // Two cliques cannot hold three pairwise nonadjacent vertices.
  const std::size_t half = n / 2;
  const std::size_t min_edges = half * (half - 1) / 2 + (n - half) * (n - half - 1) / 2;
  if (g.num_edges() >= min_edges) {
    if (auto parts = two_clique_partition(g, *sc)) {
      return DetectionResult::absent("two-clique partition",
                                     {(*parts)[0], (*parts)[1]});
    }
  }

  StepCounter setup;
  const std::size_t c = compute_closure(g, &setup).c;
  sc->setup += setup.total();

  if (n <= 6 * c) return detect_bruteforce(g, Pattern::kCoDiamond, sc.get());

  VertexMarks marks(n);
  VertexMarks scratch(n);

  // An edge with both ends of degree <= 2c leaves more than 2c vertices
  // outside its closed neighborhood.
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) > 2 * c) continue;
    for (Vertex w : g.neighbors(u)) {
      ++sc->neighbor_scans;
      if (w < u || g.degree(w) > 2 * c) continue;
      const std::vector<Vertex> rest = outside_closed(g, {u, w}, marks, *sc);
      if (auto pair = nonadjacent_pair(g, rest, scratch, *sc)) {
        return DetectionResult::hit(co_diamond(u, w, pair->first, pair->second));
      }
      return from_split(split_at_clique(g, rest, *sc));
    }
  }

  // A vertex of middling degree: its non-neighborhood still has >= 2c
  // vertices, and any nonadjacent pair there misses some neighbor of v.
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d <= 2 * c || d + 2 * c + 1 > n) continue;
    const std::vector<Vertex> rest = outside_closed(g, {v}, marks, *sc);
    if (auto pair = nonadjacent_pair(g, rest, scratch, *sc)) {
      auto w = first_missing(g, g.neighbors(v), {pair->first, pair->second}, marks, *sc);
      if (!w) broken("no private neighbor for a middling-degree vertex");
      return DetectionResult::hit(co_diamond(v, *w, pair->first, pair->second));
    }
    return from_split(split_at_clique(g, rest, *sc));
  }

  // Every edge now has an endpoint of degree >= n - 2c.
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= 2 * c) continue;
    const std::vector<Vertex> rest = outside_closed(g, {v}, marks, *sc);
    auto pair = nonadjacent_pair(g, rest, scratch, *sc);
    if (!pair) continue;
    auto w = first_missing(g, g.neighbors(v), {pair->first, pair->second}, marks, *sc);
    if (!w) broken("no private neighbor for a high-degree vertex");
    return DetectionResult::hit(co_diamond(v, *w, pair->first, pair->second));
  }
  return DetectionResult::absent("high-degree scan");
}

DetectionResult detect_co_square(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  StepCounter setup;
  const std::size_t c = compute_closure(g, &setup).c;
  sc->setup += setup.total();

  VertexMarks marks(n);
  std::vector<bool> in_c(n, false);
  std::vector<Vertex> big;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 >= 2 * c) {
      in_c[v] = true;
      big.push_back(v);
    }
  }
  if (auto pair = nonadjacent_pair(g, big, marks, *sc)) {
    auto occ = co_square_from_pair(g, pair->first, pair->second, marks, *sc);
    if (!occ) broken("high-degree nonadjacent pair without co-square");
    return DetectionResult::hit(*occ);
  }

  // Components of G - C. Edges touching the clique C pairwise interfere,
  // so two disjoint edges need at least one outside C.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> nontrivial;
  std::vector<bool> isolated(n, false);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (in_c[s] || comp[s] >= 0) continue;
    comp[s] = static_cast<int>(s);
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex y : g.neighbors(queue[head])) {
        ++sc->neighbor_scans;
        if (in_c[y] || comp[y] >= 0) continue;
        comp[y] = static_cast<int>(s);
        queue.push_back(y);
      }
    }
    if (queue.size() == 1) {
      isolated[s] = true;
    } else {
      std::sort(queue.begin(), queue.end());
      nontrivial.push_back(queue);
    }
  }
  if (nontrivial.empty()) return DetectionResult::absent();

  auto first_edge = [&](const std::vector<Vertex>& part) {
    const Vertex a = part.front();
    for (Vertex b : g.neighbors(a)) {
      if (!in_c[b]) return Edge{a, b};
    }
    broken("nontrivial component without an edge");
  };
  if (nontrivial.size() > 1) {
    const Edge e = first_edge(nontrivial[0]);
    const Edge f = first_edge(nontrivial[1]);
    return DetectionResult::hit(co_square(e.first, e.second, f.first, f.second));
  }

  const std::vector<Vertex>& s = nontrivial.front();
  std::vector<Edge> s_edges;
  for (Vertex a : s) {
    for (Vertex b : g.neighbors(a)) {
      ++sc->neighbor_scans;
      if (a < b && !in_c[b]) s_edges.emplace_back(a, b);
    }
  }

  // A vertex at distance >= 4 inside G[S]: the first and last edge of a
  // shortest path form a co-square.
  {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n);
    queue.assign(1, s.front());
    dist[s.front()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        ++sc->neighbor_scans;
        if (in_c[y] || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        parent[y] = x;
        if (dist[y] == 4) {
          const Vertex x3 = parent[y];
          const Vertex x1 = parent[parent[x3]];
          return DetectionResult::hit(co_square(s.front(), x1, x3, y));
        }
        queue.push_back(y);
      }
    }
  }

  // An edge to an isolated vertex of G - C pairs with any edge of S outside
  // N(v); the isolated vertex has no neighbor in S.
  for (Vertex v : big) {
    std::optional<Vertex> leaf;
    for (Vertex y : g.neighbors(v)) {
      ++sc->neighbor_scans;
      if (isolated[y]) {
        leaf = y;
        break;
      }
    }
    if (!leaf) continue;
    marks.clear();
    marks.mark_all(g.neighbors(v));
    if (auto e = edge_avoiding(s_edges, marks, *sc)) {
      return DetectionResult::hit(co_square(v, *leaf, e->first, e->second));
    }
  }

  // Residual: disjoint, unlinked edge pairs of G[C ∪ S].
  std::vector<Vertex> residual = big;
  residual.insert(residual.end(), s.begin(), s.end());
  std::sort(residual.begin(), residual.end());
  std::vector<Edge> edges;
  std::vector<bool> in_res(n, false);
  for (Vertex v : residual) in_res[v] = true;
  for (Vertex a : residual) {
    for (Vertex b : g.neighbors(a)) {
      ++sc->neighbor_scans;
      if (a < b && in_res[b]) edges.emplace_back(a, b);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    marks.clear();
    marks.mark(a);
    marks.mark(b);
    marks.mark_all(g.neighbors(a));
    marks.mark_all(g.neighbors(b));
    sc->neighbor_scans += g.degree(a) + g.degree(b);
    if (auto e = edge_avoiding(std::span<const Edge>(edges).subspan(i + 1), marks, *sc)) {
      return DetectionResult::hit(co_square(a, b, e->first, e->second));
    }
  }
  return DetectionResult::absent("exhaustive residual");
}

}  // namespace ccsub

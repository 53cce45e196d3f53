#include "ccsub/detect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccsub/enumerate.hpp"
#include "detect_internal.hpp"
#include "marks.hpp"

namespace ccsub {
namespace {

using internal::VertexMarks;
using internal::induced_counted;
using internal::lift;

// Depth-first search for `need` pairwise nonadjacent vertices among
// `candidates`, each later pick nonadjacent to all earlier ones.
bool extend_independent(const Graph& g, std::span<const Vertex> candidates,
                        std::size_t need, std::vector<Vertex>& chosen,
                        StepCounter& sc) {
  if (need == 0) return true;
  if (candidates.size() < need) return false;
  std::vector<Vertex> rest;
  for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
    const Vertex v = candidates[i];
    rest.clear();
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      ++sc.edge_probes;
      if (!g.adjacent(v, candidates[j])) rest.push_back(candidates[j]);
    }
    chosen.push_back(v);
    if (extend_independent(g, rest, need - 1, chosen, sc)) return true;
    chosen.pop_back();
  }
  return false;
}

Pattern star_pattern(int k) {
  if (k == 2) return Pattern::kP3;
  if (k == 3) return Pattern::kClaw;
  return Pattern::kStar;
}

}  // namespace

DetectionResult detect_p3(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> queue;
  for (const auto& comp : connected_components(g)) {
    sc->neighbor_scans += comp.size();
    Vertex root = comp.front();
    bool found_root = false;
    for (Vertex v : comp) {
      if (g.degree(v) + 1 < comp.size()) {
        root = v;
        found_root = true;
        break;
      }
    }
    if (!found_root) continue;  // component is a clique
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        ++sc->neighbor_scans;
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        if (dist[y] == 2) {
          return DetectionResult::hit(Occurrence::of(Pattern::kP3, {root, x, y}));
        }
        queue.push_back(y);
      }
    }
  }
  return DetectionResult::absent();
}

DetectionResult detect_p3_sweep(const Graph& g, StepCounter* steps) {
  std::optional<Occurrence> hit;
  enumerate_p3(
      g,
      [&](const P3Path& p) {
        hit = Occurrence::of(Pattern::kP3, {p.first, p.middle, p.last});
        return Visit::kStop;
      },
      steps);
  return hit ? DetectionResult::hit(*hit) : DetectionResult::absent();
}

DetectionResult detect_co_p3(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  if (n < 3 || g.num_edges() == 0) return DetectionResult::absent();

  std::vector<bool> low(n);
  std::vector<Vertex> high_part;
  for (Vertex v = 0; v < n; ++v) {
    low[v] = 2 * g.degree(v) + 2 < n;
    if (!low[v]) high_part.push_back(v);
  }
  VertexMarks marks(n);

  // An edge inside the low part: |N[u] ∪ N[v]| <= deg(u) + deg(v) < n - 2.
  for (Vertex u = 0; u < n; ++u) {
    if (!low[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      ++sc->neighbor_scans;
      if (!low[v]) continue;
      marks.clear();
      marks.mark(u);
      marks.mark(v);
      marks.mark_all(g.neighbors(u));
      marks.mark_all(g.neighbors(v));
      for (Vertex w = 0; w < n; ++w) {
        ++sc->edge_probes;
        if (!marks.marked(w)) {
          return DetectionResult::hit(Occurrence::of(Pattern::kCoP3, {u, v, w}));
        }
      }
    }
  }

  // The low part is independent, so N(v) ⊆ high part for low v. A high u
  // missed by v has more neighbors than v, one of them outside N(v).
  for (Vertex v = 0; v < n; ++v) {
    if (!low[v] || g.degree(v) == high_part.size()) continue;
    marks.clear();
    marks.mark_all(g.neighbors(v));
    sc->neighbor_scans += g.degree(v);
    for (Vertex u : high_part) {
      ++sc->edge_probes;
      if (marks.marked(u)) continue;
      for (Vertex w : g.neighbors(u)) {
        ++sc->neighbor_scans;
        if (!marks.marked(w)) {
          return DetectionResult::hit(Occurrence::of(Pattern::kCoP3, {u, v, w}));
        }
      }
    }
  }

  // Every low vertex sees the whole high part, so a witness lies inside it:
  // a P3 in the complement of G[high].
  const Graph high_graph = induced_counted(g, high_part, *sc);
  sc->edge_probes += high_part.size() * high_part.size();
  const Graph inverse = complement(high_graph);
  DetectionResult path = detect_p3(inverse, sc.get());
  if (!path.found()) return DetectionResult::absent();
  path.witness->pattern = Pattern::kCoP3;
  return lift(std::move(path), high_part);
}

std::optional<std::vector<Vertex>> find_independent_set(
    const Graph& g, std::span<const Vertex> domain, std::size_t k,
    StepCounter* steps) {
  CounterRef sc(steps);
  std::vector<Vertex> order(domain.begin(), domain.end());
  std::sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) {
    return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
  });
  std::vector<Vertex> chosen;
  if (!extend_independent(g, order, k, chosen, *sc)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

DetectionResult detect_independent_set(const Graph& g, int k,
                                       StepCounter* steps) {
  if (k != 3 && k != 4) {
    throw InputError("independent set detection supports k = 3 or 4");
  }
  const std::vector<Vertex> all = internal::all_vertices(g);
  auto found = find_independent_set(g, all, static_cast<std::size_t>(k), steps);
  if (!found) return DetectionResult::absent();
  return DetectionResult::hit(
      Occurrence::of(k == 3 ? Pattern::kEmpty3 : Pattern::kEmpty4, *found));
}

DetectionResult detect_star(const Graph& g, int k, StepCounter* steps) {
  if (k < 2 || k + 1 > static_cast<int>(VertexTuple::kCapacity)) {
    throw InputError("star detection supports 2 <= k <= 7");
  }
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  const double threshold =
      std::pow(static_cast<double>(g.num_edges()), 1.0 / k);
  const auto need = static_cast<std::size_t>(k);
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < need) continue;
    chosen.clear();
    bool ok = false;
    if (static_cast<double>(g.degree(v)) < threshold) {
      ok = extend_independent(g, g.neighbors(v), need, chosen, *sc);
    } else if (auto leaves = find_independent_set(g, g.neighbors(v), need, sc.get())) {
      chosen = *leaves;
      ok = true;
    }
    if (ok) {
      chosen.push_back(v);
      return DetectionResult::hit(Occurrence::of(star_pattern(k), chosen));
    }
  }
  return DetectionResult::absent();
}

DetectionResult detect_claw(const Graph& g, StepCounter* steps) {
  return detect_star(g, 3, steps);
}

DetectionResult detect_triangle_dense(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      // Walk N(u) ∪ N(v) in merged order; a shared entry closes a triangle.
      auto a = g.neighbors(u);
      auto b = g.neighbors(v);
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < a.size() && j < b.size()) {
        ++sc->neighbor_scans;
        if (a[i] < b[j]) {
          ++i;
        } else if (b[j] < a[i]) {
          ++j;
        } else {
          return DetectionResult::hit(Occurrence::of(Pattern::kK3, {u, v, a[i]}));
        }
      }
      sc->neighbor_scans += (a.size() - i) + (b.size() - j);
    }
  }
  return DetectionResult::absent();
}

DetectionResult detect_triangle_sparse(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  StepCounter setup;
  const std::size_t c = compute_closure(g, &setup).c;
  sc->setup += setup.total();

  const std::size_t n = g.num_vertices();
  const double threshold =
      std::cbrt(static_cast<double>(c) * static_cast<double>(g.num_edges()));
  std::vector<Vertex> high;
  for (Vertex x = 0; x < n; ++x) {
    if (static_cast<double>(g.degree(x)) >= threshold) {
      high.push_back(x);
      continue;
    }
    auto nx = g.neighbors(x);
    for (std::size_t i = 0; i < nx.size(); ++i) {
      for (std::size_t j = i + 1; j < nx.size(); ++j) {
        ++sc->edge_probes;
        if (g.adjacent(nx[i], nx[j])) {
          return DetectionResult::hit(
              Occurrence::of(Pattern::kK3, {x, nx[i], nx[j]}));
        }
      }
    }
  }
  const Graph dense = induced_counted(g, high, *sc);
  return lift(detect_triangle_dense(dense, sc.get()), high);
}

DetectionResult detect_clique(const Graph& g, int k, StepCounter* steps) {
  if (k < 3 || k > static_cast<int>(VertexTuple::kCapacity)) {
    throw InputError("clique detection supports 3 <= k <= 8");
  }
  CounterRef sc(steps);
  const Pattern tag = k == 3 ? Pattern::kK3 : (k == 4 ? Pattern::kK4 : Pattern::kClique);
  std::vector<Vertex> clique;

  auto grow = [&](auto&& self, std::span<const Vertex> pool) -> DetectionResult {
    if (clique.size() + 3 == static_cast<std::size_t>(k)) {
      const Graph sub = induced_counted(g, pool, *sc);
      DetectionResult r = lift(detect_triangle_dense(sub, sc.get()), pool);
      if (!r.found()) return r;
      VertexTuple all = r.witness->vertices;
      for (Vertex v : clique) all.push_back(v);
      return DetectionResult::hit(Occurrence::of(tag, all.span()));
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const Vertex v = pool[i];
      std::vector<Vertex> next;
      auto nv = g.neighbors(v);
      sc->neighbor_scans += nv.size() + pool.size() - i;
      std::set_intersection(pool.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                            pool.end(), nv.begin(), nv.end(),
                            std::back_inserter(next));
      if (next.size() + clique.size() + 1 < static_cast<std::size_t>(k)) continue;
      clique.push_back(v);
      DetectionResult r = self(self, next);
      clique.pop_back();
      if (r.found()) return r;
    }
    return DetectionResult::absent();
  };
  const std::vector<Vertex> all = internal::all_vertices(g);
  return grow(grow, all);
}

DetectionResult detect_diamond_baseline(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  VertexMarks in_nv(n);
  std::vector<Vertex> root(n);
  std::vector<std::size_t> size(n);
  const Vertex none = static_cast<Vertex>(-1);

  auto diamond = [](Vertex v, Vertex a, Vertex b, Vertex c) {
    return DetectionResult::hit(Occurrence::of(Pattern::kDiamond, {v, a, b, c}));
  };

  for (Vertex v = 0; v < n; ++v) {
    auto nv = g.neighbors(v);
    in_nv.clear();
    in_nv.mark_all(nv);
    for (Vertex u : nv) root[u] = none;

    // Greedy clusters: each unassigned u claims its neighbors inside N(v).
    for (Vertex u : nv) {
      if (root[u] != none) continue;
      root[u] = u;
      size[u] = 1;
      for (Vertex w : g.neighbors(u)) {
        ++sc->neighbor_scans;
        if (!in_nv.marked(w)) continue;
        if (root[w] == none) {
          root[w] = u;
          ++size[u];
        } else if (root[w] != u) {
          // root[w] - w - u, with root[w] and u nonadjacent.
          return diamond(v, root[w], w, u);
        }
      }
    }
    // Each member must see exactly its own cluster.
    for (Vertex w : nv) {
      const Vertex r = root[w];
      std::size_t inside = 0;
      for (Vertex x : g.neighbors(w)) {
        ++sc->neighbor_scans;
        if (!in_nv.marked(x)) continue;
        if (root[x] != r) return diamond(v, r, w, x);
        ++inside;
      }
      if (inside + 1 == size[r]) continue;
      for (Vertex y : nv) {
        ++sc->edge_probes;
        if (y != w && root[y] == r && !g.adjacent(w, y)) return diamond(v, w, r, y);
      }
    }
  }
  return DetectionResult::absent();
}

IndependentOrP3 find_is_or_p3(const Graph& g, Vertex v, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  VertexMarks in_nv(n);
  VertexMarks dropped(n);
  in_nv.clear();
  dropped.clear();
  auto nv = g.neighbors(v);
  in_nv.mark_all(nv);
  sc->neighbor_scans += nv.size();

  IndependentOrP3 out;
  std::vector<Vertex> claimed;
  for (Vertex u : nv) {
    ++sc->neighbor_scans;
    if (dropped.marked(u)) continue;
    out.independent.push_back(u);
    dropped.mark(u);
    claimed.clear();
    for (Vertex w : g.neighbors(u)) {
      ++sc->neighbor_scans;
      if (!in_nv.marked(w)) continue;
      if (!dropped.marked(w)) {
        claimed.push_back(w);
        continue;
      }
      // w was dropped with some earlier x of I, so x - w - u is induced.
      for (Vertex x : out.independent) {
        ++sc->edge_probes;
        if (x != u && g.adjacent(x, w)) {
          out.p3 = P3Path{std::min(x, u), w, std::max(x, u)};
          return out;
        }
      }
    }
    for (Vertex w : claimed) dropped.mark(w);
  }
  return out;
}

DetectionResult detect_diamond_gemfree(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  StepCounter setup;
  const std::size_t c = compute_closure(g, &setup).c;
  sc->setup += setup.total();

  auto diamond = [](Vertex v, Vertex u, Vertex a, Vertex b) {
    return DetectionResult::hit(Occurrence::of(Pattern::kDiamond, {v, u, a, b}));
  };

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    IndependentOrP3 scan = find_is_or_p3(g, v, sc.get());
    if (scan.p3) {
      return diamond(v, scan.p3->first, scan.p3->middle, scan.p3->last);
    }
    for (Vertex u : scan.independent) {
      const std::vector<Vertex> s = common_neighbors(g, u, v);
      sc->neighbor_scans += g.degree(u) + g.degree(v);
      // Up to c vertices are checked pairwise. Beyond that, once the first
      // c form a clique joined to everything else, two nonadjacent
      // vertices would share c common neighbors, so s is a clique.
      const std::size_t t = std::min(c, s.size());
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          ++sc->edge_probes;
          if (!g.adjacent(s[i], s[j])) return diamond(v, u, s[i], s[j]);
        }
      }
    }
  }
  return DetectionResult::absent();
}

DetectionResult detect_p4(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  VertexMarks near_u(n);
  VertexMarks near_v(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      near_u.clear();
      near_u.mark(u);
      near_u.mark_all(g.neighbors(u));
      near_v.clear();
      near_v.mark(v);
      near_v.mark_all(g.neighbors(v));
      sc->neighbor_scans += g.degree(u) + g.degree(v);
      for (Vertex a : g.neighbors(u)) {
        ++sc->neighbor_scans;
        if (near_v.marked(a)) continue;
        for (Vertex b : g.neighbors(v)) {
          ++sc->neighbor_scans;
          if (near_u.marked(b)) continue;
          ++sc->edge_probes;
          if (!g.adjacent(a, b)) {
            return DetectionResult::hit(Occurrence::of(Pattern::kP4, {a, u, v, b}));
          }
        }
      }
    }
  }
  return DetectionResult::absent();
}

DetectionResult detect_gem(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nv = g.neighbors(v);
    if (nv.size() < 4) continue;
    const Graph local = induced_counted(g, nv, *sc);
    DetectionResult r = lift(detect_p4(local, sc.get()), nv);
    if (!r.found()) continue;
    VertexTuple gem = r.witness->vertices;
    gem.push_back(v);
    return DetectionResult::hit(Occurrence::of(Pattern::kGem, gem.span()));
  }
  return DetectionResult::absent();
}

DetectionResult detect_co_claw(const Graph& g, StepCounter* steps) {
  CounterRef sc(steps);
  const std::size_t n = g.num_vertices();
  VertexMarks covered(n);
  std::optional<Occurrence> hit;
  enumerate_triangles(
      g,
      [&](const Occurrence& t) {
        covered.clear();
        for (Vertex x : t.vertices) {
          covered.mark(x);
          covered.mark_all(g.neighbors(x));
          sc->neighbor_scans += g.degree(x);
        }
        for (Vertex z = 0; z < n; ++z) {
          ++sc->edge_probes;
          if (covered.marked(z)) continue;
          hit = Occurrence::of(Pattern::kCoClaw,
                               {t.vertices[0], t.vertices[1], t.vertices[2], z});
          return Visit::kStop;
        }
        return Visit::kContinue;
      },
      sc.get());
  return hit ? DetectionResult::hit(*hit) : DetectionResult::absent();
}

DetectionResult detect_square(const Graph& g, StepCounter* steps) {
  std::optional<Occurrence> hit;
  enumerate_squares_fast(
      g,
      [&](const Occurrence& o) {
        hit = o;
        return Visit::kStop;
      },
      steps);
  return hit ? DetectionResult::hit(*hit) : DetectionResult::absent();
}

DetectionResult detect_bruteforce(const Graph& g, Pattern h, StepCounter* steps) {
  std::optional<Occurrence> hit;
  enumerate_bruteforce_matching(
      g, h,
      [&](const Occurrence& o) {
        hit = o;
        return Visit::kStop;
      },
      steps);
  return hit ? DetectionResult::hit(*hit) : DetectionResult::absent("exhaustive");
}

}  // namespace ccsub

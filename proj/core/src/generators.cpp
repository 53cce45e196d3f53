#include "ccsub/generators.hpp"

#include <sstream>

namespace ccsub {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Graph gen_star(std::size_t leaves) {
  require(leaves >= 1, "star: need at least one leaf");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, vx(i));
  return Graph(leaves + 1, edges);
}

Graph gen_double_star(std::size_t leaves) {
  require(leaves >= 1, "double_star: need at least one leaf per center");
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t i = 0; i < leaves; ++i) {
    edges.emplace_back(0, vx(2 + i));
    edges.emplace_back(1, vx(2 + leaves + i));
  }
  return Graph(2 + 2 * leaves, edges);
}

Graph gen_clique_pendants(std::size_t clique, std::size_t pendants) {
  require(clique >= 1 && pendants >= 1,
          "clique_pendants: clique and pendant counts must be positive");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < clique; ++i) {
    for (std::size_t j = i + 1; j < clique; ++j) edges.emplace_back(vx(i), vx(j));
  }
  for (std::size_t i = 0; i < pendants; ++i) edges.emplace_back(0, vx(clique + i));
  return Graph(clique + pendants, edges);
}

Graph gen_k2_bipartite_plus_edge(std::size_t n) {
  require(n >= 3, "k2_bipartite_plus_edge: need n >= 3");
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t i = 2; i < n; ++i) {
    edges.emplace_back(0, vx(i));
    edges.emplace_back(1, vx(i));
  }
  return Graph(n, edges);
}

Graph gen_is_plus_star(std::size_t n) {
  require(n >= 4 && n % 2 == 0, "is_plus_star: need even n >= 4");
  const std::size_t half = n / 2;
  std::vector<Edge> edges;
  for (std::size_t i = half + 1; i < n; ++i) edges.emplace_back(vx(half), vx(i));
  return Graph(n, edges);
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "gnp: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) edges.emplace_back(vx(u), vx(v));
    }
  }
  return Graph(n, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(vx(u), vx(v));
  }
  return Graph(n, edges);
}

Graph gen_complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < left; ++u) {
    for (std::size_t v = 0; v < right; ++v) edges.emplace_back(vx(u), vx(left + v));
  }
  return Graph(left + right, edges);
}

Graph gen_cycle(std::size_t n) {
  require(n >= 3, "cycle: need n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vx(i), vx((i + 1) % n));
  return Graph(n, edges);
}

Graph gen_path(std::size_t n) {
  require(n >= 1, "path: need n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(vx(i), vx(i + 1));
  return Graph(n, edges);
}

Graph gen_blowup(Pattern h, std::size_t n) {
  const PatternInfo& info = pattern_info(h);
  const auto k = static_cast<std::size_t>(info.order);
  require(n > 0 && n % k == 0, "blowup: n must be a positive multiple of " +
                                   std::to_string(k));
  const std::size_t b = n / k;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < b; ++a) {
      for (std::size_t c = a + 1; c < b; ++c) {
        edges.emplace_back(vx(i * b + a), vx(i * b + c));
      }
    }
  }
  for (const auto& e : info.edges()) {
    for (std::size_t a = 0; a < b; ++a) {
      for (std::size_t c = 0; c < b; ++c) {
        edges.emplace_back(vx(e[0] * b + a), vx(e[1] * b + c));
      }
    }
  }
  return Graph(n, edges);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

ProjectivePlane projective_plane(std::uint32_t p) {
  require(is_prime(p), "projective: order must be prime, got " + std::to_string(p));
  ProjectivePlane plane;
  plane.order = p;
  // Normalized representatives: (1, a, b), (0, 1, a), (0, 0, 1).
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) plane.points.push_back({1, a, b});
  }
  for (std::uint32_t a = 0; a < p; ++a) plane.points.push_back({0, 1, a});
  plane.points.push_back({0, 0, 1});

  const std::size_t count = plane.points.size();
  plane.incidence.resize(count);
  for (std::size_t line = 0; line < count; ++line) {
    const auto& y = plane.points[line];
    for (std::size_t pt = 0; pt < count; ++pt) {
      const auto& x = plane.points[pt];
      const std::uint64_t dot = std::uint64_t{x[0]} * y[0] +
                                std::uint64_t{x[1]} * y[1] +
                                std::uint64_t{x[2]} * y[2];
      if (dot % p == 0) plane.incidence[line].push_back(static_cast<std::uint32_t>(pt));
    }
  }
  return plane;
}

Graph gen_projective(std::uint32_t p) {
  const ProjectivePlane plane = projective_plane(p);
  const std::size_t count = plane.points.size();
  auto point = [](std::size_t i, int copy) { return vx(2 * i + copy); };
  auto line = [count](std::size_t j, int copy) { return vx(2 * count + 2 * j + copy); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) {
    edges.emplace_back(point(i, 0), point(i, 1));
    edges.emplace_back(line(i, 0), line(i, 1));
  }
  for (std::size_t j = 0; j < count; ++j) {
    for (std::uint32_t i : plane.incidence[j]) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) edges.emplace_back(point(i, a), line(j, b));
      }
    }
  }
  return Graph(4 * count, edges);
}

Graph gen_family(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Star& f) { return gen_star(f.leaves); },
          [](const family::DoubleStar& f) { return gen_double_star(f.leaves); },
          [](const family::CliquePendants& f) {
            return gen_clique_pendants(f.clique, f.pendants);
          },
          [](const family::K2BipartitePlusEdge& f) {
            return gen_k2_bipartite_plus_edge(f.n);
          },
          [](const family::IsPlusStar& f) { return gen_is_plus_star(f.n); },
          [](const family::Gnp& f) { return gen_gnp(f.n, f.p, f.seed); },
          [](const family::Projective& f) { return gen_projective(f.p); },
          [](const family::Blowup& f) { return gen_blowup(f.pattern, f.n); },
          [](const family::Complete& f) { return gen_complete(f.n); },
          [](const family::CompleteBipartite& f) {
            return gen_complete_bipartite(f.left, f.right);
          },
          [](const family::Cycle& f) { return gen_cycle(f.n); },
          [](const family::Path& f) { return gen_path(f.n); },
          [](const family::Edgeless& f) { return Graph(f.n, {}); },
      },
      spec);
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(
      Overloaded{
          [&](const family::Star& f) { os << "star(" << f.leaves << ")"; },
          [&](const family::DoubleStar& f) { os << "double_star(" << f.leaves << ")"; },
          [&](const family::CliquePendants& f) {
            os << "clique_pendants(" << f.clique << "," << f.pendants << ")";
          },
          [&](const family::K2BipartitePlusEdge& f) {
            os << "k2_bipartite_plus_edge(" << f.n << ")";
          },
          [&](const family::IsPlusStar& f) { os << "is_plus_star(" << f.n << ")"; },
          [&](const family::Gnp& f) {
            os << "gnp(" << f.n << "," << f.p << "," << f.seed << ")";
          },
          [&](const family::Projective& f) { os << "projective(" << f.p << ")"; },
          [&](const family::Blowup& f) {
            os << "blowup(" << pattern_name(f.pattern) << "," << f.n << ")";
          },
          [&](const family::Complete& f) { os << "complete(" << f.n << ")"; },
          [&](const family::CompleteBipartite& f) {
            os << "complete_bipartite(" << f.left << "," << f.right << ")";
          },
          [&](const family::Cycle& f) { os << "cycle(" << f.n << ")"; },
          [&](const family::Path& f) { os << "path(" << f.n << ")"; },
          [&](const family::Edgeless& f) { os << "edgeless(" << f.n << ")"; },
      },
      spec);
  return os.str();
}

}  // namespace ccsub

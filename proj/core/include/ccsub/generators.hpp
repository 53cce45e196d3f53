#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ccsub/graph.hpp"
#include "ccsub/pattern.hpp"

namespace ccsub {

// Portable 64-bit generator (SplitMix64) so seeded graphs are identical on
// every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  // Uniform in [0, 1) from the top 53 bits.
  double next_double() noexcept;

 private:
  std::uint64_t state_;
};

namespace family {

struct Star { std::size_t leaves; };                   // K_{1,t}
struct DoubleStar { std::size_t leaves; };             // two adjacent centers, t leaves each
struct CliquePendants { std::size_t clique; std::size_t pendants; };
struct K2BipartitePlusEdge { std::size_t n; };         // K_{2,n-2} plus the hub edge
struct IsPlusStar { std::size_t n; };                  // n/2 isolated + K_{1,n/2-1}
struct Gnp { std::size_t n; double p; std::uint64_t seed; };
struct Projective { std::uint32_t p; };
struct Blowup { Pattern pattern; std::size_t n; };
struct Complete { std::size_t n; };
struct CompleteBipartite { std::size_t left; std::size_t right; };
struct Cycle { std::size_t n; };
struct Path { std::size_t n; };
struct Edgeless { std::size_t n; };

}  // namespace family

using FamilySpec =
    std::variant<family::Star, family::DoubleStar, family::CliquePendants,
                 family::K2BipartitePlusEdge, family::IsPlusStar, family::Gnp,
                 family::Projective, family::Blowup, family::Complete,
                 family::CompleteBipartite, family::Cycle, family::Path,
                 family::Edgeless>;

Graph gen_family(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);

Graph gen_star(std::size_t leaves);
Graph gen_double_star(std::size_t leaves);
Graph gen_clique_pendants(std::size_t clique, std::size_t pendants);
Graph gen_k2_bipartite_plus_edge(std::size_t n);
Graph gen_is_plus_star(std::size_t n);
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
Graph gen_complete(std::size_t n);
Graph gen_complete_bipartite(std::size_t left, std::size_t right);
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);

// Replaces every pattern vertex i by a clique block {i*b, ..., i*b + b-1},
// b = n / order, and joins blocks i, j completely iff ij is a pattern edge.
Graph gen_blowup(Pattern h, std::size_t n);

// PG(2, p) over the prime field: points and lines are the normalized nonzero
// triples (first nonzero coordinate 1); point x lies on line y iff x.y = 0.
struct ProjectivePlane {
  std::uint32_t order = 0;
  std::vector<std::array<std::uint32_t, 3>> points;
  // incidence[line] = ascending point indices on that line.
  std::vector<std::vector<std::uint32_t>> incidence;
};

bool is_prime(std::uint64_t p);
ProjectivePlane projective_plane(std::uint32_t p);

// Doubled incidence graph: point i -> (2i, 2i+1), line j -> (2N+2j, 2N+2j+1)
// with N = p^2+p+1. Each pair of copies is joined, and an incident
// point/line pair contributes all four cross edges.
Graph gen_projective(std::uint32_t p);

}  // namespace ccsub

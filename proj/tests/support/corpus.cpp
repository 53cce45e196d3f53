#include "corpus.hpp"

#include <sstream>

#include "ccsub/generators.hpp"
#include "ccsub/pattern.hpp"

namespace ccsub::testing {
namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), edges);
}

}  // namespace

std::vector<NamedGraph> gnp_corpus() {
  std::vector<NamedGraph> out;
  std::uint64_t seed = 1000;
  for (double p : kCorpusDensities) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 5 + static_cast<std::size_t>(i * 35 / 29);
      std::ostringstream name;
      name << "gnp(" << n << "," << p << "," << seed << ")";
      out.push_back({name.str(), gen_gnp(n, p, seed)});
      ++seed;
    }
  }
  return out;
}

std::vector<NamedGraph> special_graphs() {
  const Graph k1(1, std::vector<Edge>{});
  const Graph k2 = gen_complete(2);
  const Graph k3 = gen_complete(3);
  const Graph two_k1(2, std::vector<Edge>{});
  return {
      {"K1", k1},
      {"K2", k2},
      {"empty(0)", Graph(0, std::vector<Edge>{})},
      {"K3+2K1", disjoint_union(k3, two_k1)},
      {"co(K3+2K1)", complement(disjoint_union(k3, two_k1))},
      {"K2+K1", disjoint_union(k2, k1)},
      {"P3+K1", disjoint_union(gen_path(3), k1)},
      {"K3+K1", disjoint_union(k3, k1)},
      {"2K2", disjoint_union(k2, k2)},
      {"K2+2K1", disjoint_union(k2, two_k1)},
      {"K222", complement(gen_blowup(Pattern::kK3, 6))},
      {"C5+K3", disjoint_union(gen_cycle(5), k3)},
      {"K4+K4", disjoint_union(gen_complete(4), gen_complete(4))},
      {"paw+K1", disjoint_union(gen_blowup(Pattern::kPaw, 4), k1)},
  };
}

std::vector<NamedGraph> family_corpus() {
  std::vector<NamedGraph> out = special_graphs();
  auto add = [&out](const FamilySpec& spec) {
    out.push_back({describe(spec), gen_family(spec)});
  };
  for (std::size_t t = 1; t <= 39; t += (t < 10 ? 1 : 7)) add(family::Star{t});
  for (std::size_t t = 1; t <= 19; t += (t < 8 ? 1 : 5)) add(family::DoubleStar{t});
  for (std::size_t k = 1; k <= 8; ++k) {
    for (std::size_t t = 1; t <= 5; ++t) add(family::CliquePendants{k, t});
  }
  for (std::size_t n = 3; n <= 40; n += (n < 12 ? 1 : 7)) add(family::K2BipartitePlusEdge{n});
  for (std::size_t n = 4; n <= 40; n += (n < 12 ? 2 : 8)) add(family::IsPlusStar{n});
  add(family::Projective{2});
  for (const auto& info : catalog()) {
    for (std::size_t b : {1, 2, 3, 5, 8}) {
      const std::size_t n = b * static_cast<std::size_t>(info.order);
      if (n <= 40) add(family::Blowup{info.id, n});
    }
  }
  for (std::size_t n = 1; n <= 9; ++n) add(family::Complete{n});
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = a; b <= 6; ++b) add(family::CompleteBipartite{a, b});
  }
  for (std::size_t n = 3; n <= 12; ++n) add(family::Cycle{n});
  for (std::size_t n = 1; n <= 10; ++n) add(family::Path{n});
  for (std::size_t n = 1; n <= 6; ++n) add(family::Edgeless{n});
  return out;
}

std::vector<NamedGraph> full_corpus(std::size_t max_n) {
  std::vector<NamedGraph> out;
  for (auto& g : gnp_corpus()) {
    if (g.graph.num_vertices() <= max_n) out.push_back(std::move(g));
  }
  for (auto& g : family_corpus()) {
    if (g.graph.num_vertices() <= max_n) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ccsub::testing

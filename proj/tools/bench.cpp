#include <chrono>
#include <cmath>
#include <cstdlib>

#include "ccsub/registry.hpp"
#include "cli.hpp"

namespace ccsub::tools {
namespace {

std::size_t need(const std::optional<std::size_t>& v, const char* flag,
                 const std::string& family) {
  if (!v) throw InputError(family + " requires --" + flag);
  return *v;
}

std::uint32_t prime_order(const FamilyParams& params) {
  if (!params.p) throw InputError("projective requires --p");
  const double p = *params.p;
  if (p < 2 || p != std::floor(p) || p > 1e6) {
    throw InputError("projective: --p must be a prime integer");
  }
  return static_cast<std::uint32_t>(p);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

FamilySpec make_family(const std::string& name, const FamilyParams& params) {
  if (name == "star") return family::Star{need(params.t, "t", name)};
  if (name == "double_star") return family::DoubleStar{need(params.t, "t", name)};
  if (name == "clique_pendants") {
    return family::CliquePendants{need(params.k, "k", name), need(params.t, "t", name)};
  }
  if (name == "k2_bipartite_plus_edge") {
    return family::K2BipartitePlusEdge{need(params.n, "n", name)};
  }
  if (name == "is_plus_star") return family::IsPlusStar{need(params.n, "n", name)};
  if (name == "gnp") {
    if (!params.p) throw InputError("gnp requires --p");
    return family::Gnp{need(params.n, "n", name), *params.p, params.seed};
  }
  if (name == "projective") return family::Projective{prime_order(params)};
  if (name == "blowup") {
    if (!params.pattern) throw InputError("blowup requires --pattern");
    return family::Blowup{parse_pattern(*params.pattern), need(params.n, "n", name)};
  }
  if (name == "complete") return family::Complete{need(params.n, "n", name)};
  if (name == "complete_bipartite") {
    return family::CompleteBipartite{need(params.k, "k", name), need(params.t, "t", name)};
  }
  if (name == "cycle") return family::Cycle{need(params.n, "n", name)};
  if (name == "path") return family::Path{need(params.n, "n", name)};
  if (name == "edgeless") return family::Edgeless{need(params.n, "n", name)};
  throw InputError("unknown family '" + name + "'");
}

FamilySpec sized_family(const std::string& name, FamilyParams params,
                        std::size_t size) {
  if (name == "star" || name == "double_star") {
    params.t = size;
  } else if (name == "clique_pendants" || name == "complete_bipartite") {
    params.k = size;
    params.t = size;
  } else if (name == "projective") {
    params.p = static_cast<double>(size);
  } else {
    params.n = size;
  }
  return make_family(name, params);
}

std::vector<BenchRow> run_bench(const std::string& family, const FamilyParams& params,
                                std::span<const std::size_t> sizes,
                                const std::string& algo) {
  // Resolve the algorithm before generating anything.
  const std::vector<std::string> parts = split(algo, ':');
  std::function<std::size_t(const Graph&, StepCounter*)> run;
  if (algo == "squares") {
    run = [](const Graph& g, StepCounter* s) {
      return enumerate_squares_fast(g, [](const Occurrence&) { return Visit::kContinue; }, s);
    };
  } else if (algo == "p3") {
    run = [](const Graph& g, StepCounter* s) {
      return enumerate_p3(g, [](const P3Path&) { return Visit::kContinue; }, s);
    };
  } else if (algo == "triangle-dense") {
    run = [](const Graph& g, StepCounter* s) -> std::size_t {
      return detect_triangle_dense(g, s).found() ? 1 : 0;
    };
  } else if (algo == "triangle-sparse") {
    run = [](const Graph& g, StepCounter* s) -> std::size_t {
      return detect_triangle_sparse(g, s).found() ? 1 : 0;
    };
  } else if (parts.size() >= 2 && parts.size() <= 3 &&
             (parts[0] == "detect" || parts[0] == "enumerate")) {
    const Pattern p = parse_pattern(parts[1]);
    const std::string which = parts.size() == 3 ? parts[2] : "";
    if (parts[0] == "detect") {
      const DetectorEntry& d = find_detector(p, which);
      run = [&d](const Graph& g, StepCounter* s) -> std::size_t {
        return d.run(g, s).found() ? 1 : 0;
      };
    } else {
      const EnumeratorEntry& e = find_enumerator(p, which);
      run = [&e](const Graph& g, StepCounter* s) {
        return e.run(g, [](const Occurrence&) { return Visit::kContinue; }, s);
      };
    }
  } else {
    throw InputError("unknown bench algorithm '" + algo + "'");
  }

  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) {
    const Graph g = gen_family(sized_family(family, params, size));
    BenchRow row;
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.c = compute_closure(g).c;
    StepCounter steps;
    const auto start = std::chrono::steady_clock::now();
    row.count = run(g, &steps);
    const auto stop = std::chrono::steady_clock::now();
    row.steps = steps.algorithm_steps();
    row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(row);
  }
  return rows;
}

std::size_t oracle_cap_from_env() {
  const char* raw = std::getenv("ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || raw[0] == '-') {
    throw InputError("ORACLE_CAP must be a non-negative integer, got '" +
                     std::string(raw) + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace ccsub::tools

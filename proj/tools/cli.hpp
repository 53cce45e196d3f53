#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccsub/generators.hpp"

namespace ccsub::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitNotFound = 1,
  kExitUsage = 2,
  kExitInvariant = 3,
};

struct FamilyParams {
  std::optional<std::size_t> t;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::optional<std::string> pattern;
};

// Family names: star, double_star, clique_pendants, k2_bipartite_plus_edge,
// is_plus_star, gnp, projective, blowup, complete, complete_bipartite,
// cycle, path, edgeless. InputError on unknown names or missing parameters.
FamilySpec make_family(const std::string& name, const FamilyParams& params);

// The family with its main size parameter set to `size` (t for the star
// families, p for projective, k = t for clique_pendants, n otherwise).
FamilySpec sized_family(const std::string& name, FamilyParams params,
                        std::size_t size);

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t c = 0;
  std::size_t count = 0;
  std::uint64_t steps = 0;
  double wall_ms = 0;
};

// `algo` is one of squares, p3, triangle-dense, triangle-sparse, or
// detect:<pattern>[:<algo>] / enumerate:<pattern>[:<algo>]. Steps exclude
// setup work such as computing the closure.
std::vector<BenchRow> run_bench(const std::string& family, const FamilyParams& params,
                                std::span<const std::size_t> sizes,
                                const std::string& algo);

// Oracle cap from the ORACLE_CAP environment variable, default 60.
std::size_t oracle_cap_from_env();

// Entry point; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ccsub::tools

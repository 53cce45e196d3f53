#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ccsub/graph.hpp"
#include "ccsub/registry.hpp"

namespace ccsub::tools {

struct PatternReport {
  Pattern pattern;
  std::size_t oracle_count = 0;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;
};

struct VerifyReport {
  std::vector<PatternReport> patterns;
  bool all_agree() const;
};

/// Differential check of detectors and enumerators against the subset oracle.
///
/// For each requested pattern, every enumerator must stream exactly the
/// oracle's vertex sets, once each, and every detector must report a
/// witness iff the oracle finds one, with the witness among the oracle's
/// sets. Detectors flagged as gem-free only are skipped on graphs that
/// contain a gem. Throws OracleCapExceeded when n exceeds `oracle_cap`.
VerifyReport verify_graph(const Graph& g, std::span<const Pattern> patterns,
                          std::size_t oracle_cap,
                          std::span<const DetectorEntry> detectors,
                          std::span<const EnumeratorEntry> enumerators);

// Same, with the full registries.
VerifyReport verify_graph(const Graph& g, std::span<const Pattern> patterns,
                          std::size_t oracle_cap);

// All sixteen catalog patterns.
std::vector<Pattern> all_patterns();

}  // namespace ccsub::tools

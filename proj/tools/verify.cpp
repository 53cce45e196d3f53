#include "verify.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace ccsub::tools {
namespace {

std::string describe_set(const VertexTuple& t) { return "{" + format_tuple(t) + "}"; }

}  // namespace

bool VerifyReport::all_agree() const {
  return std::all_of(patterns.begin(), patterns.end(),
                     [](const PatternReport& r) { return r.mismatches.empty(); });
}

std::vector<Pattern> all_patterns() {
  std::vector<Pattern> out;
  for (const auto& info : catalog()) out.push_back(info.id);
  return out;
}

VerifyReport verify_graph(const Graph& g, std::span<const Pattern> patterns,
                          std::size_t oracle_cap,
                          std::span<const DetectorEntry> detectors,
                          std::span<const EnumeratorEntry> enumerators) {
  if (g.num_vertices() > oracle_cap) {
    throw OracleCapExceeded(g.num_vertices(), oracle_cap);
  }
  std::optional<bool> has_gem;
  auto gem_present = [&]() {
    if (!has_gem) {
      bool any = false;
      enumerate_subsets_oracle(
          g, Pattern::kGem,
          [&](const Occurrence&) {
            any = true;
            return Visit::kStop;
          },
          oracle_cap);
      has_gem = any;
    }
    return *has_gem;
  };

  VerifyReport report;
  for (Pattern p : patterns) {
    PatternReport pr{p, 0, 0, {}};
    std::set<VertexTuple> truth;
    enumerate_subsets_oracle(
        g, p,
        [&](const Occurrence& o) {
          truth.insert(o.vertices);
          return Visit::kContinue;
        },
        oracle_cap);
    pr.oracle_count = truth.size();
    const std::string name(pattern_name(p));

    for (const EnumeratorEntry& e : enumerators) {
      if (e.pattern != p || e.algo == "oracle") continue;
      ++pr.checks;
      std::set<VertexTuple> got;
      std::size_t duplicates = 0;
      std::size_t mislabeled = 0;
      const std::string who = name + " enumerate/" + std::string(e.algo) + ": ";
      try {
        e.run(
            g,
            [&](const Occurrence& o) {
              if (o.pattern != p) ++mislabeled;
              if (!got.insert(o.vertices).second) ++duplicates;
              return Visit::kContinue;
            },
            nullptr);
      } catch (const std::logic_error& ex) {
        pr.mismatches.push_back(who + "threw: " + ex.what());
        continue;
      }
      if (duplicates > 0) {
        pr.mismatches.push_back(who + std::to_string(duplicates) + " duplicate(s)");
      }
      if (mislabeled > 0) {
        pr.mismatches.push_back(who + std::to_string(mislabeled) + " mislabeled");
      }
      if (got != truth) {
        std::vector<VertexTuple> extra;
        std::vector<VertexTuple> missing;
        std::set_difference(got.begin(), got.end(), truth.begin(), truth.end(),
                            std::back_inserter(extra));
        std::set_difference(truth.begin(), truth.end(), got.begin(), got.end(),
                            std::back_inserter(missing));
        std::string msg = who + std::to_string(got.size()) + " vs oracle " +
                          std::to_string(truth.size());
        if (!extra.empty()) msg += ", extra " + describe_set(extra.front());
        if (!missing.empty()) msg += ", missing " + describe_set(missing.front());
        pr.mismatches.push_back(msg);
      }
    }

    for (const DetectorEntry& d : detectors) {
      if (d.pattern != p) continue;
      if (d.requires_gem_free && gem_present()) continue;
      ++pr.checks;
      const std::string who = name + " detect/" + std::string(d.algo) + ": ";
      DetectionResult r;
      try {
        r = d.run(g, nullptr);
      } catch (const std::logic_error& ex) {
        pr.mismatches.push_back(who + "threw: " + ex.what());
        continue;
      }
      if (r.found() != !truth.empty()) {
        pr.mismatches.push_back(who + (r.found() ? "found" : "none") + " but oracle has " +
                                std::to_string(truth.size()));
      } else if (r.found() &&
                 (r.witness->pattern != p || !truth.contains(r.witness->vertices))) {
        pr.mismatches.push_back(who + "witness " + describe_set(r.witness->vertices) +
                                " does not induce the pattern");
      }
    }
    report.patterns.push_back(std::move(pr));
  }
  return report;
}

VerifyReport verify_graph(const Graph& g, std::span<const Pattern> patterns,
                          std::size_t oracle_cap) {
  return verify_graph(g, patterns, oracle_cap, detectors(), enumerators());
}

}  // namespace ccsub::tools

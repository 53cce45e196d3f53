#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "ccsub/detect.hpp"
#include "ccsub/enumerate.hpp"

namespace ccsub {

using Detector = std::function<DetectionResult(const Graph&, StepCounter*)>;
using Enumerator =
    std::function<std::size_t(const Graph&, const OccurrenceVisitor&, StepCounter*)>;

struct DetectorEntry {
  Pattern pattern;
  std::string_view algo;
  Detector run;
  // Only valid on gem-free inputs.
  bool requires_gem_free = false;
};

struct EnumeratorEntry {
  Pattern pattern;
  std::string_view algo;
  Enumerator run;
};

// Every (pattern, algorithm) pair. The first entry for a pattern is its
// default; "bruteforce" / "matching" and "oracle" exist for every pattern.
std::span<const DetectorEntry> detectors();
std::span<const EnumeratorEntry> enumerators();

std::vector<const DetectorEntry*> detectors_for(Pattern p);
std::vector<const EnumeratorEntry*> enumerators_for(Pattern p);

// Empty `algo` selects the default. InputError for unknown combinations.
const DetectorEntry& find_detector(Pattern p, std::string_view algo = {});
const EnumeratorEntry& find_enumerator(Pattern p, std::string_view algo = {});

}  // namespace ccsub

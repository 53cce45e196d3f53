#include "ccsub/registry.hpp"

#include <string>

namespace ccsub {
namespace {

using P = Pattern;

std::vector<DetectorEntry> make_detectors() {
  std::vector<DetectorEntry> d = {
      {P::kEmpty3, "branching", [](const Graph& g, StepCounter* s) {
         return detect_independent_set(g, 3, s);
       }},
      {P::kCoP3, "linear", detect_co_p3},
      {P::kP3, "bfs", detect_p3},
      {P::kP3, "sweep", detect_p3_sweep},
      {P::kP3, "star", [](const Graph& g, StepCounter* s) { return detect_star(g, 2, s); }},
      {P::kK3, "dense", detect_triangle_dense},
      {P::kK3, "sparse", detect_triangle_sparse},
      {P::kK3, "clique", [](const Graph& g, StepCounter* s) { return detect_clique(g, 3, s); }},
      {P::kEmpty4, "branching", [](const Graph& g, StepCounter* s) {
         return detect_independent_set(g, 4, s);
       }},
      {P::kCoDiamond, "closure", detect_co_diamond},
      {P::kCoPaw, "olariu", detect_co_paw},
      {P::kCoSquare, "closure", detect_co_square},
      {P::kP4, "extension", detect_p4},
      {P::kClaw, "star", detect_claw},
      {P::kCoClaw, "triangles", detect_co_claw},
      {P::kPaw, "olariu", detect_paw},
      {P::kSquare, "fast", detect_square},
      {P::kDiamond, "baseline", detect_diamond_baseline},
      {P::kDiamond, "gemfree", detect_diamond_gemfree, true},
      {P::kK4, "clique", [](const Graph& g, StepCounter* s) { return detect_clique(g, 4, s); }},
      {P::kGem, "neighborhood", detect_gem},
  };
  for (const auto& info : catalog()) {
    const Pattern p = info.id;
    d.push_back({p, "bruteforce", [p](const Graph& g, StepCounter* s) {
                   return detect_bruteforce(g, p, s);
                 }});
  }
  return d;
}

std::vector<EnumeratorEntry> make_enumerators() {
  std::vector<EnumeratorEntry> e = {
      {P::kP3, "sweep", enumerate_p3_occurrences},
      {P::kK3, "ordered", enumerate_triangles},
      {P::kCoP3, "edge-vertex", enumerate_co_p3},
      {P::kP4, "edge-anchored",
       [](const Graph& g, const OccurrenceVisitor& v, StepCounter* s) {
         return enumerate_p4_paw_edge_anchored(g, P::kP4, v, s);
       }},
      {P::kPaw, "edge-anchored",
       [](const Graph& g, const OccurrenceVisitor& v, StepCounter* s) {
         return enumerate_p4_paw_edge_anchored(g, P::kPaw, v, s);
       }},
      {P::kSquare, "fast", enumerate_squares_fast},
  };
  for (const auto& info : catalog()) {
    const Pattern p = info.id;
    e.push_back({p, "anchor",
                 [p](const Graph& g, const OccurrenceVisitor& v, StepCounter* s) {
                   return enumerate_by_anchor(g, p, v, s);
                 }});
    e.push_back({p, "matching",
                 [p](const Graph& g, const OccurrenceVisitor& v, StepCounter* s) {
                   return enumerate_bruteforce_matching(g, p, v, s);
                 }});
    e.push_back({p, "oracle",
                 [p](const Graph& g, const OccurrenceVisitor& v, StepCounter*) {
                   return enumerate_subsets_oracle(g, p, v);
                 }});
  }
  return e;
}

template <class Entry>
std::vector<const Entry*> entries_for(std::span<const Entry> all, Pattern p) {
  std::vector<const Entry*> out;
  for (const Entry& e : all) {
    if (e.pattern == p) out.push_back(&e);
  }
  return out;
}

template <class Entry>
const Entry& find_entry(std::span<const Entry> all, Pattern p, std::string_view algo,
                        const char* kind) {
  for (const Entry& e : all) {
    if (e.pattern == p && (algo.empty() || e.algo == algo)) return e;
  }
  std::string known;
  for (const Entry* e : entries_for(all, p)) {
    if (!known.empty()) known += ", ";
    known += e->algo;
  }
  throw InputError("no " + std::string(kind) + " '" + std::string(algo) +
                   "' for pattern " + std::string(pattern_name(p)) +
                   (known.empty() ? "" : " (available: " + known + ")"));
}

}  // namespace

std::span<const DetectorEntry> detectors() {
  static const std::vector<DetectorEntry> all = make_detectors();
  return all;
}

std::span<const EnumeratorEntry> enumerators() {
  static const std::vector<EnumeratorEntry> all = make_enumerators();
  return all;
}

std::vector<const DetectorEntry*> detectors_for(Pattern p) {
  return entries_for(detectors(), p);
}

std::vector<const EnumeratorEntry*> enumerators_for(Pattern p) {
  return entries_for(enumerators(), p);
}

const DetectorEntry& find_detector(Pattern p, std::string_view algo) {
  return find_entry(detectors(), p, algo, "detector");
}

const EnumeratorEntry& find_enumerator(Pattern p, std::string_view algo) {
  return find_entry(enumerators(), p, algo, "enumerator");
}

}  // namespace ccsub

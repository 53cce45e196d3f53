#include <gtest/gtest.h>

#include "ccsub/generators.hpp"
#include "support/corpus.hpp"
#include "verify.hpp"

namespace ccsub::tools {
namespace {

std::size_t count_mismatches(const VerifyReport& r) {
  std::size_t k = 0;
  for (const auto& p : r.patterns) k += p.mismatches.size();
  return k;
}

TEST(Verify, AllAgreeOnSmallCorpus) {
  const auto patterns = all_patterns();
  for (const auto& [name, g] : testing::full_corpus(14)) {
    const VerifyReport r = verify_graph(g, patterns, kDefaultOracleCap);
    ASSERT_TRUE(r.all_agree()) << name;
    ASSERT_EQ(r.patterns.size(), patterns.size());
  }
}

TEST(Verify, ReportsOracleCounts) {
  const std::vector<Pattern> ps{Pattern::kP3, Pattern::kSquare};
  const VerifyReport r = verify_graph(gen_cycle(4), ps, kDefaultOracleCap);
  ASSERT_EQ(r.patterns.size(), 2u);
  EXPECT_EQ(r.patterns[0].oracle_count, 4u);
  EXPECT_EQ(r.patterns[1].oracle_count, 1u);
  EXPECT_GT(r.patterns[1].checks, 0u);
}

TEST(Verify, RefusesAboveCap) {
  EXPECT_THROW(verify_graph(gen_path(12), all_patterns(), 10), OracleCapExceeded);
}

// A corrupted enumerator drops the last occurrence it is shown.
TEST(Verify, CorruptedEnumeratorIsReported) {
  const EnumeratorEntry dropping{
      Pattern::kP3, "dropping",
      [](const Graph& g, const OccurrenceVisitor& visit, StepCounter* steps) {
        std::vector<Occurrence> all;
        enumerate_p3_occurrences(
            g, [&](const Occurrence& o) { all.push_back(o); return Visit::kContinue; }, steps);
        if (!all.empty()) all.pop_back();
        for (const auto& o : all) visit(o);
        return all.size();
      }};
  const EnumeratorEntry duplicating{
      Pattern::kP3, "duplicating",
      [](const Graph& g, const OccurrenceVisitor& visit, StepCounter* steps) {
        return 2 * enumerate_p3_occurrences(
                       g, [&](const Occurrence& o) { visit(o); return visit(o); }, steps);
      }};
  const std::vector<Pattern> ps{Pattern::kP3};
  const Graph g = gen_star(4);
  for (const auto& entry : {dropping, duplicating}) {
    const VerifyReport r = verify_graph(g, ps, kDefaultOracleCap, {},
                                        std::span<const EnumeratorEntry>(&entry, 1));
    EXPECT_FALSE(r.all_agree()) << entry.algo;
    EXPECT_GT(count_mismatches(r), 0u) << entry.algo;
  }
}

TEST(Verify, CorruptedDetectorIsReported) {
  const DetectorEntry blind{Pattern::kK3, "blind",
                            [](const Graph&, StepCounter*) { return DetectionResult::absent(); }};
  const DetectorEntry liar{
      Pattern::kK3, "liar", [](const Graph&, StepCounter*) {
        return DetectionResult::hit(Occurrence::of(Pattern::kK3, {0, 1, 2}));
      }};
  const std::vector<Pattern> ps{Pattern::kK3};
  const Graph with = gen_complete(4);
  const Graph without = gen_path(4);
  auto run = [&](const Graph& g, const DetectorEntry& d) {
    return verify_graph(g, ps, kDefaultOracleCap, std::span<const DetectorEntry>(&d, 1), {});
  };
  EXPECT_FALSE(run(with, blind).all_agree());
  EXPECT_TRUE(run(without, blind).all_agree());
  EXPECT_FALSE(run(without, liar).all_agree());
}

TEST(Verify, ThrowingEntryIsRecordedAsMismatch) {
  const DetectorEntry broken{Pattern::kK3, "broken", [](const Graph&, StepCounter*) -> DetectionResult {
                               throw std::logic_error("boom");
                             }};
  const std::vector<Pattern> ps{Pattern::kK3};
  const VerifyReport r = verify_graph(gen_path(3), ps, kDefaultOracleCap,
                                      std::span<const DetectorEntry>(&broken, 1), {});
  ASSERT_FALSE(r.all_agree());
  EXPECT_NE(r.patterns[0].mismatches[0].find("boom"), std::string::npos);
}

TEST(Verify, GemFreeOnlyDetectorsSkippedOnGemGraphs) {
  // Always "absent": wrong on the gem graph, which has diamonds.
  const DetectorEntry blind{Pattern::kDiamond, "blind",
                            [](const Graph&, StepCounter*) { return DetectionResult::absent(); },
                            true};
  const Graph gem(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  const std::vector<Pattern> ps{Pattern::kDiamond};
  const VerifyReport r = verify_graph(gem, ps, kDefaultOracleCap,
                                      std::span<const DetectorEntry>(&blind, 1), {});
  EXPECT_TRUE(r.all_agree());
}

}  // namespace
}  // namespace ccsub::tools

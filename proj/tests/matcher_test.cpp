#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "iupacscan/encoding.hpp"
#include "iupacscan/matcher.hpp"
#include "iupacscan/oracle.hpp"
#include "random_instances.hpp"

using namespace iupacscan;

namespace {

const EncodedText& worked_text() {
  static const EncodedText t = encode_text("ATGACCGGCAT");
  return t;
}
const EncodedPattern& worked_pattern() {
  static const EncodedPattern p = encode_pattern("C[CGT]GG[CG]");
  return p;
}

}  // namespace

TEST(MismatchesAt, WorkedExample) {
  EXPECT_EQ(mismatches_at(worked_text(), worked_pattern(), kMatchLUT, 1, 2), 2u);
  EXPECT_EQ(mismatches_at(worked_text(), worked_pattern(), kMatchLUT, 5, 2), 0u);
  EXPECT_EQ(mismatches_at(worked_text(), worked_pattern(), kMatchLUT, 3, 2), std::nullopt);
}

TEST(MismatchesAt, AbortPointMatchesTrace) {
  // i = 3 stops after its third probe, i = 2 and i = 7 after the fourth.
  EXPECT_EQ(trace_window(worked_text(), worked_pattern(), kMatchLUT, 3, 2).size(), 3u);
  EXPECT_EQ(trace_window(worked_text(), worked_pattern(), kMatchLUT, 2, 2).size(), 4u);
  EXPECT_EQ(trace_window(worked_text(), worked_pattern(), kMatchLUT, 7, 2).size(), 4u);
  // with k = 0 the first window stops at its first probe
  EXPECT_EQ(trace_window(worked_text(), worked_pattern(), kMatchLUT, 1, 0).size(), 1u);
}

TEST(Search, WorkedExample) {
  EXPECT_EQ(search(worked_text(), worked_pattern(), 2),
            (std::vector<MatchResult>{{1, 2}, {4, 2}, {5, 0}, {6, 2}}));
  EXPECT_EQ(search(worked_text(), worked_pattern(), 0), (std::vector<MatchResult>{{5, 0}}));
  EXPECT_EQ(search(worked_text(), worked_pattern(), SearchParams{2}).size(), 4u);
}

TEST(Search, PatternLongerThanText) {
  EXPECT_TRUE(search(encode_text("ACGT"), encode_pattern("ACGTA"), 5).empty());
  EXPECT_TRUE(search(encode_text(""), encode_pattern("A"), 0).empty());
}

TEST(Search, InvalidTextNeverMatchesEvenN) {
  const auto t = encode_text("ANA");
  EXPECT_EQ(search(t, encode_pattern("N"), 0), (std::vector<MatchResult>{{1, 0}, {3, 0}}));
  EXPECT_EQ(search(t, encode_pattern("NNN"), 1), (std::vector<MatchResult>{{1, 1}}));
  EXPECT_TRUE(search(t, encode_pattern("NNN"), 0).empty());
}

TEST(Search, BudgetAtLeastMAcceptsEveryWindow) {
  const auto t = encode_text("ACGTNNACGT");
  const auto p = encode_pattern("-TTT");
  const auto hits = search(t, p, 4);
  ASSERT_EQ(hits.size(), window_count(10, 4));
  for (std::size_t i = 0; i < hits.size(); ++i) EXPECT_EQ(hits[i].position, i + 1);
}

TEST(WindowCount, Basics) {
  EXPECT_EQ(window_count(11, 5), 7u);
  EXPECT_EQ(window_count(5, 5), 1u);
  EXPECT_EQ(window_count(4, 5), 0u);
  EXPECT_EQ(window_count(0, 1), 0u);
}

TEST(SearchProperty, AgreesWithNaiveOracle) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = testgen::uniform(rng, 1, 2000);
    const std::size_t m = testgen::uniform(rng, 1, trial % 2 ? 50 : 6);
    const std::size_t k = testgen::uniform(rng, 0, 3);
    const std::string raw = testgen::text(rng, n, "ACGTN");
    const std::string spec = testgen::pattern(rng, m);
    const auto fast = search(encode_text(raw), encode_pattern(spec), k);
    const auto slow = oracle::naive_search(raw, oracle::parse_class_pattern(spec), k);
    ASSERT_EQ(fast, slow) << "trial " << trial << " pattern " << spec << " k " << k;
  }
}

TEST(SearchProperty, MonotoneInBudget) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = encode_text(testgen::text(rng, testgen::uniform(rng, 1, 500), "ACGTN"));
    const auto p = encode_pattern(testgen::pattern(rng, testgen::uniform(rng, 1, 10)));
    for (std::size_t k = 0; k < 4; ++k) {
      const auto small = search(t, p, k);
      const auto large = search(t, p, k + 1);
      EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
  }
}

TEST(SearchProperty, EarlyAbortAgreesWithFullSum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = encode_text(testgen::text(rng, testgen::uniform(rng, 1, 400), "ACGTN"));
    const auto p = encode_pattern(testgen::pattern(rng, testgen::uniform(rng, 1, 12)));
    const std::size_t k = testgen::uniform(rng, 0, 3);
    for (std::size_t i = 1; i <= window_count(t.size(), p.size()); ++i) {
      const std::size_t full = full_mismatches_at(t, p, kMatchLUT, i);
      const auto aborting = mismatches_at(t, p, kMatchLUT, i, k);
      if (full <= k) {
        ASSERT_EQ(aborting, full);
      } else {
        ASSERT_EQ(aborting, std::nullopt);
      }
    }
  }
}

TEST(SearchProperty, InvalidPositionsCountAsMismatches) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto raw = testgen::text(rng, testgen::uniform(rng, 1, 300), "ACGTNN");
    const auto t = encode_text(raw);
    const auto p = encode_pattern(testgen::pattern(rng, testgen::uniform(rng, 1, 10)));
    for (std::size_t i = 1; i <= window_count(t.size(), p.size()); ++i) {
      std::size_t bad = 0;
      for (std::size_t j = 0; j < p.size(); ++j) bad += raw[i - 1 + j] == 'N';
      ASSERT_GE(full_mismatches_at(t, p, kMatchLUT, i), bad);
    }
  }
}

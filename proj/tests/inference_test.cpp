#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "presmin/inference.hpp"
#include "presmin/sources.hpp"

using namespace presmin;

namespace {

UPSet random_canonical(std::mt19937_64& rng, Natural max_n, Natural max_d) {
  const oracle::RawUp r = oracle::random_up(rng, max_n, max_d);
  return canonicalize(UPSet(r.threshold, r.exceptional, r.period, r.residues));
}

UPSet threes_then_evens() {
  std::vector<Natural> e;
  for (Natural x = 0; x <= 50; x += 3) e.push_back(x);
  return canonicalize(UPSet(51, e, 2, {0}));
}

}  // namespace

TEST(SuccessorGap, Examples) {
  EXPECT_EQ(successor_gap_bound(UPSet::coset(3, 0), 30), 3u);
  EXPECT_EQ(successor_gap_bound(UPSet(0, {}, 10, {0, 1}), 100), 9u);
  EXPECT_EQ(successor_gap_bound(resolve("builtin:squares?B=100"), 100), 19u);
  EXPECT_EQ(successor_gap_bound(UPSet::point(4), 100), std::nullopt);
  EXPECT_EQ(successor_gap_bound(UPSet::empty(), 100), std::nullopt);
}

TEST(UniformPeriod, Examples) {
  EXPECT_EQ(find_uniform_period(UPSet::coset(2, 0), 10), Lookup::found(2));
  EXPECT_EQ(find_uniform_period(threes_then_evens(), 20), Lookup::found(2));
  EXPECT_EQ(find_uniform_period(UPSet::all(), 10), Lookup::found(1));
}

TEST(Decompose, Examples) {
  const Decomposition d = decompose(UPSet(5, {1, 2, 3}, 7, {5}), 24);
  EXPECT_EQ(d.points, (std::vector<Natural>{1, 2, 3}));
  ASSERT_EQ(d.segments.size(), 1u);
  EXPECT_EQ(d.segments[0], (Segment{4, std::nullopt, 7, {5}}));
  EXPECT_TRUE(d.certified);
  EXPECT_TRUE(same_set(d.to_upset(), UPSet(5, {1, 2, 3}, 7, {5})));

  const Decomposition evens = decompose(UPSet::coset(2, 0), 8);
  EXPECT_TRUE(evens.points.empty());
  EXPECT_EQ(evens.segments[0], (Segment{0, std::nullopt, 2, {0}}));

  const Decomposition mixed = decompose(threes_then_evens(), 20);
  EXPECT_EQ(mixed.segments[0].lo, 51u);
  EXPECT_EQ(mixed.segments[0].modulus, 2u);

  EXPECT_THROW(decompose(resolve("builtin:primes?B=10000"), 40), InferenceFailure);
  EXPECT_THROW(decompose(UPSet::all(), 0), DomainError);
}

TEST(Decompose, ReproducesCanonicalForms) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const UPSet s = random_canonical(rng, 25, 12);
    const Decomposition d = decompose(s, 2 * s.period() + 1);
    ASSERT_EQ(d.to_upset(), s) << s.to_string();
    ASSERT_EQ(d.points, s.exceptional());
  }
}

TEST(Decompose, EventuallyPeriodicOracle) {
  // Irregular prefix of length 300, then x ≡ 1, 4 (mod 6); horizon 3000.
  std::mt19937_64 rng(42);
  std::vector<bool> noise(300);
  for (auto&& b : noise) b = std::bernoulli_distribution(0.5)(rng);
  const Oracle o{[noise](Natural x) { return x < 300 ? static_cast<bool>(noise[x]) : x % 3 == 1; },
                 3000, "noisy"};
  const SetHandle h(o);
  const Decomposition d = decompose(h, 20);
  ASSERT_EQ(d.segments.size(), 1u);
  EXPECT_EQ(d.segments[0].modulus, 3u);
  EXPECT_EQ(d.segments[0].residues, (std::vector<Natural>{1}));
  EXPECT_LE(d.segments[0].lo, 300u);
  EXPECT_FALSE(d.segments[0].hi);
  EXPECT_FALSE(d.certified);
  EXPECT_EQ(d.checked_to, 3000u);
  for (Natural x = 0; x <= 3000; ++x) ASSERT_EQ(d.to_upset().contains(x), h.contains(x));

  const AnalysisReport r = classify(h, 20, 3000);
  EXPECT_EQ(r.classification, Classification::eventually_periodic);
}

TEST(Decompose, ShortTailIsNotAcceptedOnPrefixes) {
  // Periodic only on the last 100 of 3000 positions.
  std::mt19937_64 rng(43);
  std::vector<bool> noise(2900);
  for (auto&& b : noise) b = std::bernoulli_distribution(0.5)(rng);
  const Oracle o{[noise](Natural x) { return x < 2900 ? static_cast<bool>(noise[x]) : x % 2 == 0; },
                 3000, "late"};
  EXPECT_THROW(decompose(o, 10), InferenceFailure);
  // Half the horizon is enough.
  const Oracle half{[](Natural x) { return x < 1500 ? x % 7 == 3 : x % 2 == 0; }, 3000, "half"};
  EXPECT_EQ(decompose(half, 10).segments[0].lo, 1499u);
  const Oracle short_tail{[](Natural x) { return x < 1600 ? x % 7 == 3 : x % 2 == 0; }, 3000, "s"};
  EXPECT_THROW(decompose(short_tail, 10), InferenceFailure);
}

TEST(Evidence, Squares) {
  const WitnessTable w = expanding_evidence(resolve("builtin:squares?B=10000"), 50, 10000);
  ASSERT_EQ(w.rows.size(), 50u);
  for (const WitnessRow& row : w.rows) {
    EXPECT_GT(row.count, 0u) << row.n;
    EXPECT_FALSE(row.largest.empty());
  }
  EXPECT_EQ(w.rows[0].largest.back(), 9801u);
  EXPECT_TRUE(w.evidence);
}

TEST(Evidence, Evens) {
  const WitnessTable w = expanding_evidence(UPSet::coset(2, 0), 10, 1000);
  EXPECT_EQ(w.rows[0].count, 500u);
  for (Natural n = 2; n <= 10; ++n) EXPECT_EQ(w.rows[n - 1].count, 0u);
  EXPECT_FALSE(w.evidence);
}

TEST(Evidence, PowersOfTwo) {
  const WitnessTable w = expanding_evidence(resolve("builtin:powers?k=2&B=1048576"), 40, 1 << 20);
  EXPECT_TRUE(w.evidence);
}

TEST(Evidence, WitnessTableMatchesOracle) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const Natural b = std::uniform_int_distribution<Natural>(10, 300)(rng);
    std::vector<bool> flags(b + 1);
    const double p = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
    for (auto&& f : flags) f = std::bernoulli_distribution(p)(rng);
    const PrefixSet s(flags);
    const Natural n_max = 12;
    const WitnessTable w = expanding_evidence(s, n_max, b);
    for (Natural n = 1; n <= n_max; ++n) {
      std::vector<Natural> all;
      for (Natural x = 0; x + n <= b; ++x) {
        if (!flags[x]) continue;
        bool gap = true;
        for (Natural y = x + 1; y <= x + n; ++y) gap = gap && !flags[y];
        if (gap) all.push_back(x);
      }
      ASSERT_EQ(w.rows[n - 1].count, all.size());
      const std::size_t keep = std::min(all.size(), kWitnessesKept);
      ASSERT_EQ(w.rows[n - 1].largest, std::vector<Natural>(all.end() - keep, all.end()));
    }
  }
}

TEST(Classify, PeriodicSetsAreCompleteAndExclusive) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 150; ++i) {
    const UPSet s = random_canonical(rng, 25, 12);
    const AnalysisReport r = classify(s, 2 * s.period(), 2000);
    ASSERT_EQ(r.classification, Classification::eventually_periodic) << s.to_string();
    ASSERT_FALSE(r.witnesses.evidence) << s.to_string();
    ASSERT_EQ(r.decomposition->to_upset(), s);
  }
}

TEST(Classify, ExpandingPrefixesHaveNoPeriodicDecomposition) {
  for (const char* spec : {"builtin:squares?B=10000", "builtin:primes?B=10000",
                           "builtin:powers?k=2&B=10000", "builtin:fibonacci?B=10000",
                           "builtin:powers?k=3&B=10000"}) {
    const SetHandle h = resolve(spec);
    const WitnessTable w = expanding_evidence(h, 40, 10000);
    ASSERT_TRUE(w.evidence) << spec;
    EXPECT_THROW(decompose(h, 40), InferenceFailure) << spec;
    const AnalysisReport r = classify(h, 40, 10000);
    EXPECT_EQ(r.classification, Classification::expanding_evidence) << spec;
    EXPECT_FALSE(r.decomposition);
  }
}

TEST(Classify, AlphaIsNondecreasingAfterRestriction) {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 100; ++i) {
    const UPSet s = random_canonical(rng, 25, 12);
    const Natural n_max = 2 * s.period() + 2;
    const WindowProfile p = profile(s, n_max, s.period());
    std::vector<Natural> domain;
    for (Natural n = 1; n <= n_max; ++n)
      if (p.entries[n].alpha) domain.push_back(n);
    const PrefixSet r = monotone_restrict(PrefixSet::from_members(n_max, domain),
                                          [&](Natural n) { return *p.entries[n].alpha; }, n_max);
    const auto kept = r.members();
    for (std::size_t k = 1; k < kept.size(); ++k)
      ASSERT_LE(*p.entries[kept[k - 1]].alpha, *p.entries[kept[k]].alpha);
  }
}

TEST(Classify, HorizonIsChecked) {
  EXPECT_THROW(classify(resolve("builtin:squares?B=100"), 5, 200), HorizonExceeded);
}

TEST(Classify, ShortExpandingPrefixIsInconclusive) {
  EXPECT_EQ(classify(resolve("builtin:finite(1, 2, 3, 5, 8)"), 3, 20).classification,
            Classification::eventually_periodic);
  const AnalysisReport r = classify(PrefixSet::from_members(30, {0, 1, 3, 7}), 4, 30);
  EXPECT_NE(r.classification, Classification::expanding_evidence);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mddkit/scorer.hpp"
#include "test_util.hpp"

namespace mddkit {
namespace {

using testing::seq;
using L = PositionLabel;

TEST(ComputeF1, ReferenceTriples) {
  // reference (precision, recall, F1) triples, all four-decimal values
  EXPECT_NEAR(*compute_f1(0.1091, 0.807), 0.1923, 0.0005);
  EXPECT_NEAR(*compute_f1(0.3327, 0.7252), 0.4561, 0.0005);
  EXPECT_NEAR(*compute_f1(0.3713, 0.6501), 0.4726, 0.0005);
}

TEST(ComputeF1, EdgeCases) {
  for (double x : {0.01, 0.25, 0.5, 1.0}) EXPECT_DOUBLE_EQ(*compute_f1(x, x), x);
  EXPECT_FALSE(compute_f1(0.0, 0.0).has_value());
  EXPECT_DOUBLE_EQ(*compute_f1(0.0, 1.0), 0.0);
  EXPECT_THROW(compute_f1(1.2, 0.5), UndefinedMetric);
  EXPECT_THROW(compute_f1(0.5, -0.1), UndefinedMetric);
}

TEST(ComputePer, Examples) {
  EXPECT_DOUBLE_EQ(compute_per(seq("a b c"), seq("a b c")), 0.0);
  EXPECT_DOUBLE_EQ(compute_per(seq("a b c d"), seq("a x c")), 0.5);
  EXPECT_DOUBLE_EQ(compute_per(seq("a b c d"), PhonemeSequence{}), 1.0);
  EXPECT_DOUBLE_EQ(compute_per(seq("a"), seq("b c d")), 3.0);  // insertions can push it past 1
  EXPECT_THROW(compute_per(PhonemeSequence{}, seq("a")), UndefinedMetric);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_positions(seq("a b c"), seq("a b c"), seq("a b c")), (std::vector{L::true_accept, L::true_accept, L::true_accept}));
  EXPECT_EQ(classify_positions(seq("a b"), seq("a x"), seq("a x")),
            (std::vector{L::true_accept, L::true_reject_diagnosed}));
  EXPECT_EQ(classify_positions(seq("a b c"), seq("a x c"), seq("a b c")),
            (std::vector{L::true_accept, L::false_accept, L::true_accept}));
  EXPECT_EQ(classify_positions(seq("a b c"), seq("a b c"), seq("a y c")),
            (std::vector{L::true_accept, L::false_reject, L::true_accept}));
  EXPECT_EQ(classify_positions(seq("a b c"), seq("a x c"), seq("a y c")),
            (std::vector{L::true_accept, L::true_reject_misdiagnosed, L::true_accept}));
}

TEST(Classify, MatchingDeletionsAreDiagnosed) {
  EXPECT_EQ(classify_positions(seq("a b c"), seq("a c"), seq("a c")),
            (std::vector{L::true_accept, L::true_reject_diagnosed, L::true_accept}));
  // deleted in speech, substituted by the system
  EXPECT_EQ(classify_positions(seq("a b c"), seq("a c"), seq("a x c")),
            (std::vector{L::true_accept, L::true_reject_misdiagnosed, L::true_accept}));
}

TEST(Classify, InsertionsAreCountedApart) {
  const auto cls = classify_positions_detailed(seq("a b"), seq("a z b"), seq("a b"));
  EXPECT_EQ(cls.labels, (std::vector{L::true_accept, L::true_accept}));
  EXPECT_EQ(cls.annotated_insertions, 1u);
  EXPECT_EQ(cls.hypothesis_insertions, 0u);
}

TEST(Labels, Names) {
  EXPECT_STREQ(to_string(L::true_accept), "TA");
  EXPECT_STREQ(to_string(L::false_reject), "FR");
  EXPECT_STREQ(to_string(L::true_reject_diagnosed), "TR_CD");
  EXPECT_STREQ(to_string(L::true_reject_misdiagnosed), "TR_DE");
  EXPECT_STREQ(to_string(L::false_accept), "FA");
}

// Counted by hand:
//   u1  c=a b c d  ann=a x c d  hyp=a x c e  ->  TA TR_CD TA FR, PER errors 1
//   u2  c=a b      ann=a y      hyp=a z      ->  TA TR_DE,       PER errors 1
//   u3  c=p q      ann=p r      hyp=p q      ->  TA FA,          PER errors 1
std::vector<LabeledUtterance> hand_corpus() {
  return {
      {seq("a b c d"), seq("a x c d"), seq("a x c e")},
      {seq("a b"), seq("a y"), seq("a z")},
      {seq("p q"), seq("p r"), seq("p q")},
  };
}

TEST(ComputeReport, HandCountedCorpus) {
  const auto r = compute_report(hand_corpus());
  EXPECT_EQ(r.counts.n_utterances, 3u);
  EXPECT_EQ(r.counts.n_canonical_positions, 8u);
  EXPECT_EQ(r.counts.ta, 4u);
  EXPECT_EQ(r.counts.fr, 1u);
  EXPECT_EQ(r.counts.tr, 2u);
  EXPECT_EQ(r.counts.fa, 1u);
  EXPECT_EQ(r.counts.cd, 1u);
  EXPECT_DOUBLE_EQ(*r.per, 3.0 / 8);
  EXPECT_DOUBLE_EQ(*r.correct_rate, 5.0 / 8);
  EXPECT_DOUBLE_EQ(*r.accuracy, 6.0 / 8);
  EXPECT_DOUBLE_EQ(*r.ta_rate, 0.8);
  EXPECT_DOUBLE_EQ(*r.fr_rate, 0.2);
  EXPECT_DOUBLE_EQ(*r.tr_rate, 2.0 / 3);
  EXPECT_DOUBLE_EQ(*r.fa_rate, 1.0 / 3);
  EXPECT_DOUBLE_EQ(*r.cd_rate, 0.5);
  EXPECT_DOUBLE_EQ(*r.precision, 2.0 / 3);
  EXPECT_DOUBLE_EQ(*r.recall, 2.0 / 3);
  EXPECT_DOUBLE_EQ(*r.f1, 2.0 / 3);
}

TEST(ComputeReport, CanonicalReferencedPer) {
  ScoreOptions opts;
  opts.per_reference = PerReference::canonical;
  // hyp vs canonical: u1 2 errors, u2 1, u3 0
  EXPECT_DOUBLE_EQ(*compute_report(hand_corpus(), opts).per, 3.0 / 8);
  const std::vector<LabeledUtterance> one{{seq("a b c d"), seq("a b c d"), seq("a")}};
  EXPECT_DOUBLE_EQ(*compute_report(one, opts).per, 0.75);
}

TEST(ComputeReport, AllCorrectLeavesDetectionMetricsUndefined) {
  const std::vector<LabeledUtterance> u{{seq("a b c"), seq("a b c"), seq("a b c")}};
  const auto r = compute_report(u);
  EXPECT_FALSE(r.precision.has_value());
  EXPECT_FALSE(r.recall.has_value());
  EXPECT_FALSE(r.f1.has_value());
  EXPECT_FALSE(r.cd_rate.has_value());
  EXPECT_DOUBLE_EQ(*r.accuracy, 1.0);
  EXPECT_DOUBLE_EQ(*r.correct_rate, 1.0);
  EXPECT_DOUBLE_EQ(*r.ta_rate, 1.0);
}

TEST(ComputeReport, Errors) {
  EXPECT_THROW(compute_report(std::vector<LabeledUtterance>{}), UndefinedMetric);
  const std::vector<LabeledUtterance> u{{PhonemeSequence{}, seq("a"), seq("a")}};
  EXPECT_THROW(compute_report(u), UndefinedMetric);
}

// Random utterances built by editing a canonical sequence.
class RandomCorpus {
 public:
  explicit RandomCorpus(std::uint64_t seed) : gen_(seed) {}

  PhonemeSequence mutate(const PhonemeSequence& s, double rate) {
    PhonemeSequence out;
    for (const auto& p : s) {
      const double u = unit_(gen_);
      if (u < rate / 3) continue;
      if (u < 2 * rate / 3) out.push_back(symbol());
      else if (u < rate) {
        out.push_back(symbol());
        out.push_back(p);
      } else out.push_back(p);
    }
    return out;
  }

  LabeledUtterance utterance() {
    PhonemeSequence c;
    for (int n = 1 + static_cast<int>(gen_() % 12); n > 0; --n) c.push_back(symbol());
    auto ann = mutate(c, 0.2);
    auto hyp = gen_() % 2 ? mutate(ann, 0.2) : mutate(c, 0.2);
    return {std::move(c), std::move(ann), std::move(hyp)};
  }

  std::vector<LabeledUtterance> corpus(int n) {
    std::vector<LabeledUtterance> out;
    for (int i = 0; i < n; ++i) out.push_back(utterance());
    return out;
  }

  std::mt19937_64& gen() { return gen_; }

 private:
  PhonemeSymbol symbol() {
    static const char* pool[] = {"a", "aa", "b", "t", "s", "S", "i", "u", "l", "ll"};
    return PhonemeSymbol(pool[gen_() % 10]);
  }

  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

TEST(ScorerProperties, LabelPartitionAndCdBound) {
  RandomCorpus rc(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto u = rc.utterance();
    const auto c = score_utterance(u);
    ASSERT_EQ(c.ta + c.fr + c.tr + c.fa, u.canonical.size());
    ASSERT_LE(c.cd, c.tr);
    ASSERT_EQ(classify_positions(u.canonical, u.annotated, u.hypothesis).size(), u.canonical.size());
  }
}

TEST(ScorerProperties, RateIdentities) {
  RandomCorpus rc(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = compute_report(rc.corpus(5));
    if (r.ta_rate) {
      ASSERT_DOUBLE_EQ(*r.ta_rate + *r.fr_rate, 1.0);
    }
    if (r.tr_rate) {
      ASSERT_DOUBLE_EQ(*r.tr_rate + *r.fa_rate, 1.0);
    }
    if (r.f1 && *r.precision + *r.recall > 0) {
      ASSERT_DOUBLE_EQ(*r.f1, 2 * *r.precision * *r.recall / (*r.precision + *r.recall));
    }
    for (const auto& v : {r.accuracy, r.precision, r.recall, r.cd_rate}) {
      if (v) {
        ASSERT_TRUE(*v >= 0.0 && *v <= 1.0);
      }
    }
  }
}

TEST(ScorerProperties, PerfectSystemFixpoint) {
  RandomCorpus rc(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto corpus = rc.corpus(4);
    for (auto& u : corpus) u.hypothesis = u.annotated;
    const auto r = compute_report(corpus);
    ASSERT_EQ(r.counts.fa, 0u);
    ASSERT_EQ(r.counts.fr, 0u);
    ASSERT_EQ(r.counts.cd, r.counts.tr);
    ASSERT_DOUBLE_EQ(*r.correct_rate, 1.0);
    if (r.counts.tr > 0) {
      ASSERT_DOUBLE_EQ(*r.precision, 1.0);
      ASSERT_DOUBLE_EQ(*r.recall, 1.0);
      ASSERT_DOUBLE_EQ(*r.f1, 1.0);
    }
  }
}

TEST(ScorerProperties, BlindSystemFixpoint) {
  RandomCorpus rc(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto corpus = rc.corpus(4);
    for (auto& u : corpus) u.hypothesis = u.canonical;
    const auto r = compute_report(corpus);
    ASSERT_EQ(r.counts.tr, 0u);
    ASSERT_EQ(r.counts.fr, 0u);
    if (r.recall) {
      ASSERT_DOUBLE_EQ(*r.recall, 0.0);
    }
  }
}

TEST(ScorerProperties, OrderIndependent) {
  RandomCorpus rc(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto corpus = rc.corpus(20);
    const auto a = compute_report(corpus);
    std::shuffle(corpus.begin(), corpus.end(), rc.gen());
    const auto b = compute_report(corpus);
    ASSERT_EQ(a.counts, b.counts);
    ASSERT_EQ(a.per, b.per);
    ASSERT_EQ(a.f1, b.f1);
    ASSERT_EQ(a.accuracy, b.accuracy);
  }
}

}  // namespace
}  // namespace mddkit

#include <gtest/gtest.h>

#include <random>

#include "mddkit/orthography.hpp"
#include "mddkit/phonetiser.hpp"
#include "test_util.hpp"

namespace mddkit {
namespace {

using testing::seq;

std::string g2p(std::string_view text, const RuleSet& rules = default_rules(),
                Strictness mode = Strictness::strict) {
  return serialize(phonetise(text, rules, mode));
}

TEST(Phonetiser, NotationAnchor) { EXPECT_EQ(g2p("نَعْبَدُ"), "n a E b a d u"); }

TEST(Phonetiser, SingleConsonantWithDamma) { EXPECT_EQ(g2p("بُ"), "b u"); }

TEST(Phonetiser, HamzaShaddaAndLongAlef) { EXPECT_EQ(g2p("إِيَّاكَ"), "< i yy aa k a"); }

TEST(Phonetiser, OracleCorpus) {
  const auto oracle = testing::load_oracle(MDDKIT_TEST_DATA_DIR "/phonetiser_oracle.tsv");
  ASSERT_GE(oracle.size(), 20u);
  for (const auto& [text, expected] : oracle) {
    SCOPED_TRACE(text);
    EXPECT_NO_THROW(EXPECT_EQ(g2p(normalize_orthography(text)), expected));
  }
}

TEST(Phonetiser, ArticleBeforeSunLetterKeepsLam) {
  EXPECT_EQ(g2p("النُّعَاسَ"), "l nn u E aa s a");
  RuleSet rules = default_rules();
  rules.flags.assimilate_article = true;
  EXPECT_EQ(g2p("النُّعَاسَ", rules), "nn u E aa s a");
  // sukun lam is a written consonant, never assimilated
  EXPECT_EQ(g2p("ٱلْقَمَرُ", rules), "l q a m a r u");
}

TEST(Phonetiser, Tanwin) {
  EXPECT_EQ(g2p("أَمَنَةً"), "< a m a n a t a n");
  EXPECT_EQ(g2p("كِتَابٌ"), "k i t aa b u n");
  EXPECT_EQ(g2p("كِتَابٍ"), "k i t aa b i n");
  EXPECT_EQ(g2p("كِتَابًا"), "k i t aa b a n");
}

TEST(Phonetiser, TaaMarbutaPausal) {
  EXPECT_EQ(g2p("رَحْمَةْ"), "r a H m a h");
  EXPECT_EQ(g2p("رَحْمَةِ"), "r a H m a t i");
}

TEST(Phonetiser, EmphaticColouring) {
  EXPECT_EQ(g2p("صَبَرَ"), "S A b a r a");
  EXPECT_EQ(g2p("طَابَ"), "T AA b a");
  EXPECT_EQ(g2p("ضُرٌّ"), "D U rr u n");
  EXPECT_EQ(g2p("قَالَ"), "q aa l a");
  RuleSet rules = default_rules();
  rules.flags.emphatic_qaf = true;
  rules.flags.emphatic_ra = true;
  EXPECT_EQ(g2p("قَالَ", rules), "q AA l a");
  EXPECT_EQ(g2p("رَبِّ", rules), "r A bb i");
}

TEST(Phonetiser, Diphthongs) {
  EXPECT_EQ(g2p("بَيْتٌ"), "b a y t u n");
  EXPECT_EQ(g2p("يَوْمٌ"), "y a w m u n");
}

TEST(Phonetiser, HamzatWasl) {
  EXPECT_EQ(g2p("ٱهْدِنَا"), "h d i n aa");
  RuleSet rules = default_rules();
  rules.flags.wasl_initial_glottal = true;
  EXPECT_EQ(g2p("ٱهْدِنَا", rules), "< i h d i n aa");
  EXPECT_EQ(g2p("ٱلرَّحْمَٰنِ", rules), "< a l rr a H m aa n i");
  EXPECT_EQ(g2p("ٱدْخُلُوا", rules), "< u d x u l uu");
  // only utterance-initially
  EXPECT_EQ(g2p("قُلْ ٱدْخُلُوا", rules), "q u l d x u l uu");
}

TEST(Phonetiser, Madda) {
  EXPECT_EQ(g2p("آمَنَ"), "< aa m a n a");
  EXPECT_EQ(g2p("ٱلْقُرْآنُ"), "l q u r < aa n u");
  EXPECT_EQ(g2p("ٱلضَّآلِّينَ"), "l DD AA ll ii n a");
}

TEST(Phonetiser, SmallYehLengthens) { EXPECT_EQ(g2p("بِهِۦ"), "b i h ii"); }

TEST(Phonetiser, BareLetterBeforeGeminateIsUnvowelled) {
  EXPECT_EQ(g2p("وَلَمْ يَكُن لَّهُۥ"), "w a l a m y a k u n ll a h uu");
  EXPECT_EQ(g2p("مِن رَّبِّهِمْ"), "m i n rr a bb i h i m");
  EXPECT_TRUE(validate_diacritization("مِن رَّبِّهِمْ").empty());
  // the next letter has no shadda: still missing
  EXPECT_EQ(validate_diacritization("مِن رَبِّهِمْ"), std::vector<std::size_t>{1});
}

TEST(Phonetiser, StrictModeRejectsBareConsonant) {
  try {
    phonetise("كَتب");
    FAIL() << "expected MissingDiacritic";
  } catch (const MissingDiacritic& e) {
    EXPECT_EQ(e.cluster(), 1u);
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Phonetiser, LenientModeAssumesSukun) {
  EXPECT_EQ(g2p("كَتب", default_rules(), Strictness::lenient), "k a t b");
}

TEST(Phonetiser, OrphanMarkAndForeignCharacters) {
  EXPECT_THROW(phonetise("َبُ"), MalformedInput);
  EXPECT_EQ(g2p("َبُ", default_rules(), Strictness::lenient), "b u");
  EXPECT_THROW(phonetise("بُx"), MalformedInput);
}

TEST(Phonetiser, PunctuationIsAWordBoundary) { EXPECT_EQ(g2p("بُ، بِ"), "b u b i"); }

TEST(Phonetiser, EmptyText) { EXPECT_TRUE(phonetise("").empty()); }

TEST(ValidateDiacritization, Examples) {
  EXPECT_TRUE(validate_diacritization("كَتَبَ").empty());
  EXPECT_EQ(validate_diacritization("كتب"), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(validate_diacritization("كَتب"), (std::vector<std::size_t>{1, 2}));
}

TEST(ValidateDiacritization, VowelCarriersAndArticleAreExempt) {
  EXPECT_TRUE(validate_diacritization("ٱلنَّاسِ").empty());
  EXPECT_TRUE(validate_diacritization("يَقُولُونَ").empty());
  EXPECT_TRUE(validate_diacritization("عَلَى").empty());
  // word-final bare consonant is still missing its mark
  EXPECT_EQ(validate_diacritization("مِنْ شَر"), (std::vector<std::size_t>{4}));
}

TEST(ValidateDiacritization, AgreesWithStrictPhonetise) {
  const auto oracle = testing::load_oracle(MDDKIT_TEST_DATA_DIR "/phonetiser_oracle.tsv");
  for (const auto& [text, expected] : oracle) {
    EXPECT_TRUE(validate_diacritization(normalize_orthography(text)).empty()) << text;
  }
}

// Random words drawn from consonant + mark clusters.
class WordGenerator {
 public:
  explicit WordGenerator(std::uint64_t seed) : rng_(seed) {}

  std::u32string word() {
    static const std::u32string letters = U"بتثجحخدذرزسشصضطظعغفقكلمنهءأ";
    static const std::u32string marks = U"َُِْ";
    std::u32string w;
    const int n = 1 + static_cast<int>(rng_() % 5);
    for (int i = 0; i < n; ++i) {
      w.push_back(letters[rng_() % letters.size()]);
      if (rng_() % 4 == 0) w.push_back(arabic::kShadda);
      w.push_back(marks[rng_() % marks.size()]);
    }
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

TEST(PhonetiserProperties, ConcatenationOverWords) {
  WordGenerator gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w1 = gen.word();
    const auto w2 = gen.word();
    auto joined = phonetise(w1 + U" " + w2);
    auto a = phonetise(w1);
    const auto b = phonetise(w2);
    a.insert(a.end(), b.begin(), b.end());
    ASSERT_EQ(joined, a);
  }
}

TEST(PhonetiserProperties, ShaddaYieldsGeminateAndInventoryClosure) {
  WordGenerator gen(11);
  const auto& inv = default_inventory();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w = gen.word();
    const auto out = phonetise(w);
    std::size_t shaddas = 0;
    for (char32_t c : w) shaddas += c == arabic::kShadda;
    std::size_t geminates = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      ASSERT_TRUE(inv.is_canonical(out[i].str())) << out[i].str();
      const auto& s = out[i].str();
      const bool vowel = std::string("aiuAIU").find(s[0]) != std::string::npos;
      if (!vowel && s.size() == 2 && s[0] == s[1]) ++geminates;
    }
    ASSERT_EQ(geminates, shaddas);
  }
}

TEST(PhonetiserProperties, Deterministic) {
  WordGenerator gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = gen.word();
    ASSERT_EQ(phonetise(w), phonetise(w));
  }
}

TEST(RuleSet, DefaultRulesAreInventoryClosed) {
  EXPECT_NO_THROW(default_rules().check_inventory(default_inventory()));
}

TEST(RuleSet, BundledFileMatchesBuiltIn) {
  const RuleSet file = load_rules_file(MDDKIT_DATA_DIR "/default_rules.txt");
  EXPECT_EQ(file.consonants, default_rules().consonants);
  EXPECT_EQ(file.emphatics, default_rules().emphatics);
  EXPECT_EQ(file.punctuation, default_rules().punctuation);
}

TEST(RuleSet, OverridesAndValidation) {
  const RuleSet r = load_rules("[consonants]\nث\ts\n[emphatics]\nق\n[flags]\nassimilate_article = true\n");
  EXPECT_EQ(r.consonant(0x062B), "s");
  EXPECT_TRUE(r.is_emphatic(arabic::kQaf));
  EXPECT_FALSE(r.is_emphatic(arabic::kSad));
  EXPECT_TRUE(r.flags.assimilate_article);
  EXPECT_THROW(load_rules("[flags]\nbogus = true\n"), ConfigError);
  EXPECT_THROW(load_rules("[consonants]\nب\tb b\n"), ConfigError);
  EXPECT_THROW(load_rules("ب\tb\n"), ConfigError);

  RuleSet odd = default_rules();
  odd.consonants[0x062B] = "th";
  EXPECT_THROW(odd.check_inventory(default_inventory()), ConfigError);
  odd.consonants.erase(0x062B);
  EXPECT_THROW(odd.validate(), ConfigError);
}

}  // namespace
}  // namespace mddkit

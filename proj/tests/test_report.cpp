#include <gtest/gtest.h>

#include "mddkit/report.hpp"
#include "test_util.hpp"

namespace mddkit {
namespace {

bool has_line(const std::string& doc, const std::string& line) {
  return ("\n" + doc).find("\n" + line + "\n") != std::string::npos;
}

TEST(FormatRatio, FourDecimals) {
  EXPECT_EQ(format_ratio(0.47264), "0.4726");
  EXPECT_EQ(format_ratio(1.0), "1.0000");
  EXPECT_EQ(format_ratio(0.0), "0.0000");
  EXPECT_EQ(format_ratio(std::nullopt), "null");
}

TEST(EmitReport, ScoreKv) {
  ScoreReport r;
  r.f1 = 0.47264;
  r.counts.ta = 12;
  const auto doc = emit_report(r, ReportFormat::kv);
  EXPECT_TRUE(has_line(doc, "f1 = 0.4726")) << doc;
  EXPECT_TRUE(has_line(doc, "precision = null")) << doc;
  EXPECT_TRUE(has_line(doc, "ta = 12")) << doc;
  // stable order: counts before ratios, f1 last
  EXPECT_LT(doc.find("n_utterances"), doc.find("ta = "));
  EXPECT_LT(doc.find("per = "), doc.find("precision = "));
  EXPECT_TRUE(doc.ends_with("f1 = 0.4726\n"));
}

TEST(EmitReport, ScoreTableHasEveryField) {
  const std::vector<LabeledUtterance> u{{testing::seq("a b"), testing::seq("a x"), testing::seq("a x")}};
  const auto doc = emit_report(compute_report(u), ReportFormat::table);
  for (const char* key : {"precision", "recall", "f1", "cd_rate", "correct_rate", "accuracy"})
    EXPECT_NE(doc.find(key), std::string::npos) << key;
  EXPECT_NE(doc.find("1.0000"), std::string::npos);
}

TEST(EmitReport, HistogramOrdering) {
  PhonemeHistogram h;
  h.add(PhonemeSymbol("b"), 2);
  h.add(PhonemeSymbol("a"), 2);
  h.add(PhonemeSymbol("aa"), 6);
  const auto doc = emit_report(h, ReportFormat::kv);
  EXPECT_TRUE(has_line(doc, "total = 10"));
  EXPECT_TRUE(has_line(doc, "frequency.aa = 0.6000"));
  EXPECT_LT(doc.find("count.aa"), doc.find("count.a ="));
  EXPECT_LT(doc.find("count.a ="), doc.find("count.b"));

  const auto top = emit_report(h, ReportFormat::table, 1);
  EXPECT_NE(top.find("aa"), std::string::npos);
  EXPECT_EQ(top.find("\nb "), std::string::npos);
}

TEST(EmitReport, Divergence) {
  PhonemeHistogram a, b;
  a.add(PhonemeSymbol("a"), 3);
  a.add(PhonemeSymbol("b"), 1);
  b.add(PhonemeSymbol("a"), 1);
  b.add(PhonemeSymbol("b"), 3);
  const auto doc = emit_report(compare_distributions(a, b), ReportFormat::kv);
  EXPECT_TRUE(has_line(doc, "total_variation = 0.5000")) << doc;
  EXPECT_TRUE(has_line(doc, "delta.a = 0.5000")) << doc;
  EXPECT_TRUE(has_line(doc, "delta.b = -0.5000")) << doc;
}

}  // namespace
}  // namespace mddkit

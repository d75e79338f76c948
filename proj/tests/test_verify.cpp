#include <gtest/gtest.h>

#include <json.hpp>

#include "skewrpp/errors.hpp"
#include "skewrpp/verify.hpp"

using namespace skewrpp;

TEST(FirstMismatch, ReportsPowerAndBothValues) {
  const QSeries a = QSeries::from_polynomial(3, {1, 2, 3, 4});
  const QSeries b = QSeries::from_polynomial(3, {1, 2, 5, 4});
  EXPECT_FALSE(first_mismatch(a, a).has_value());
  const auto m = first_mismatch(a, b);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->power, 2u);
  EXPECT_EQ(m->expected, 3);
  EXPECT_EQ(m->actual, 5);
}

TEST(VerifyMain, Passes) {
  EXPECT_TRUE(verify_main(1, 1, 12).passed);
  const VerificationReport r = verify_main(1, 2, 12);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.mismatch.has_value());
  const VerificationReport r22 = verify_main(2, 2, 10);
  EXPECT_TRUE(r22.passed);
  bool saw_lowest = false;
  for (const auto& [k, v] : r22.details) {
    if (k == "lowest term") {
      EXPECT_EQ(v, "1 q^9");
      saw_lowest = true;
    }
  }
  EXPECT_TRUE(saw_lowest);
  EXPECT_THROW(verify_main(4, 3, 5), ResourceError);
}

TEST(VerifyNaruse, StreamsFourPassingReports) {
  std::vector<std::string> streamed;
  const auto reports = verify_naruse(5, 6, [&](const VerificationReport& r) { streamed.push_back(r.check); });
  EXPECT_EQ(streamed, (std::vector<std::string>{"hook-length", "naruse", "ssyt-excited", "rpp-pleasant"}));
  for (const auto& r : reports) EXPECT_TRUE(r.passed) << to_text(r);
  EXPECT_THROW(verify_naruse(11, 6), UsageError);
}

TEST(VerifyInvolution, KOneIsAllFixed) {
  const VerificationReport r = verify_involution(1, 1, 6);
  EXPECT_TRUE(r.passed);
  std::string arrays, fixed;
  for (const auto& [k, v] : r.details) {
    if (k == "arrays") arrays = v;
    if (k == "fixed points") fixed = v;
  }
  EXPECT_EQ(arrays, fixed);
}

TEST(VerifyInvolution, ShiftedFixedSeries) {
  const VerificationReport r = verify_involution(1, 2, 8);
  EXPECT_TRUE(r.passed) << to_text(r);
  std::string shifted;
  for (const auto& [k, v] : r.details) {
    if (k == "fixed-point series times q^-N") shifted = v;
  }
  EXPECT_EQ(shifted, "1 4");
}

TEST(ReportFormats, TextAndJson) {
  VerificationReport r;
  r.check = "demo";
  r.parameters = {{"n", "1"}};
  r.passed = false;
  r.mismatch = Mismatch{3, 7, 8};
  r.witness = "2,1 / 1";
  const std::string text = to_text(r);
  EXPECT_NE(text.find("FAIL demo n=1"), std::string::npos);
  EXPECT_NE(text.find("first mismatch at q^3: expected 7, got 8"), std::string::npos);
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["mismatch"]["power"], 3);
  EXPECT_EQ(j["mismatch"]["expected"], "7");
  EXPECT_EQ(j["witness"], "2,1 / 1");
}

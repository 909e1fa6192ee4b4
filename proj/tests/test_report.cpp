#include <gtest/gtest.h>

#include "rsid/report.hpp"

using namespace rsid;

TEST(Report, AnalysisFields) {
  const auto r = lcs_code_bruteforce(RsCode(EvaluationVector(Field(7), {0, 1, 2, 5}), 2));
  const Json j = to_json(r);
  EXPECT_EQ(j["method"], "BruteForce");
  EXPECT_EQ(j["lcs_of_code"], 2);
  EXPECT_EQ(j["max_correctable"], 1);
  EXPECT_EQ(j["half_singleton"], 1);
  EXPECT_EQ(j["optimal"], true);
  EXPECT_EQ(j["witness"]["I"].size(), 2u);
}

TEST(Report, HeaderCarriesSchema) {
  const Json j = json_header("census");
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j.begin().key(), "schema");
}

TEST(Report, CensusRendering) {
  const Json j = to_json(census_2dim(Field(5)));
  EXPECT_EQ(j["classes_correcting_one"], 1);
  EXPECT_EQ(j["ratio"], "1/6");
  EXPECT_EQ(j["proportion"], "0.167");
  EXPECT_EQ(j["bad_classes"].size(), 5u);
}

TEST(Report, ByteIdenticalAcrossThreadCounts) {
  ConstructOptions c1, c4;
  c1.threads = 1;
  c4.threads = 4;
  EXPECT_EQ(to_json(construct_half_rate(Field(251), 3, c1)).dump(), to_json(construct_half_rate(Field(251), 3, c4)).dump());
  SampleOptions s1, s4;
  s1.threads = 1;
  s4.threads = 4;
  EXPECT_EQ(to_json(sample_orderings(Field::of_order(81), 0.5, 25, 7, s1)).dump(),
            to_json(sample_orderings(Field::of_order(81), 0.5, 25, 7, s4)).dump());
  CensusOptions k1, k4;
  k1.threads = 1;
  k4.threads = 4;
  EXPECT_EQ(to_json(census_2dim(Field::of_order(8), k1)).dump(), to_json(census_2dim(Field::of_order(8), k4)).dump());
}

TEST(Report, CertificateOmitsScheduleDependentCount) {
  const auto r = rank_certificate(RsCode(EvaluationVector(Field(7), {0, 1, 2, 3}), 2), 1);
  const Json j = to_json(r);
  EXPECT_EQ(j["verdict"], "Inconclusive");
  EXPECT_TRUE(j["pairs_checked"].is_null());
  EXPECT_FALSE(j["witness"].is_null());
}

TEST(Report, Claim8Rendering) {
  const Json j = to_json(claim8_bound(256, 0.25));
  EXPECT_EQ(j["precision_bits"], 250);
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["log_lhs"].get<std::string>().substr(0, 10), "33.2693503");
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "shimura/fixtures.hpp"

using namespace shimura;

namespace {

FixtureSet parse(const std::string& text) {
  std::istringstream in(text);
  return parse_fixtures(in);
}

}  // namespace

TEST(FixtureParser, AcceptsRecordsCommentsBlankLines) {
  const auto fx = parse(
      "# comment\n"
      "\n"
      "ALLOWED_D,6,Voight09\n"
      "HYPERELLIPTIC,26,1,Ogg83\n"
      "BIELLIPTIC_L1,57,Rotger02\n"
      "AUT_OVERRIDE,21,5,KMV11;FMZ18\n"
      "AIRR2_L1,57,Rotger02\n"
      "AIRR2_LIST,6,1,airr2-theorem\n"
      "RATIONALITY,6,17,2,yes,CM-points\n"
      "RANK,6,17,2,1,BD96\n");
  EXPECT_EQ(fx.allowed_d.at(6), "Voight09");
  EXPECT_TRUE(fx.is_hyperelliptic(CurveLabel(26, 1)));
  EXPECT_EQ(fx.automorphism_overrides.at(CurveLabel(21, 5)), "KMV11;FMZ18");
  EXPECT_EQ(fx.rationality_of({6, 17, 2}), Rationality::yes);
  EXPECT_EQ(fx.rank_of({6, 17, 2}), 1);
  EXPECT_EQ(fx.rank_of({6, 17, 51}), std::nullopt);
  EXPECT_EQ(fx.rationality_of({6, 17, 51}), Rationality::unknown);
}

TEST(FixtureParser, RejectsMalformedLines) {
  EXPECT_THROW(parse("ALLOWED_D,6\n"), FixtureError);                   // no citation
  EXPECT_THROW(parse("ALLOWED_D,6,\n"), FixtureError);                  // empty citation
  EXPECT_THROW(parse("ALLOWED_D,30,Voight09\n"), FixtureError);         // odd omega
  EXPECT_THROW(parse("ALLOWED_D,x6,Voight09\n"), FixtureError);         // not an integer
  EXPECT_THROW(parse("HYPERELLIPTIC,6,9,Ogg83\n"), FixtureError);       // gcd
  EXPECT_THROW(parse("RATIONALITY,6,17,4,yes,CM\n"), FixtureError);     // not a Hall divisor
  EXPECT_THROW(parse("RATIONALITY,6,17,2,maybe,CM\n"), FixtureError);   // bad value
  EXPECT_THROW(parse("RANK,6,17,2,-1,BD96\n"), FixtureError);
  EXPECT_THROW(parse("SOMETHING,6,1,x\n"), FixtureError);
}

TEST(FixtureParser, ErrorNamesLine) {
  try {
    parse("# header\nALLOWED_D,6,Voight09\nALLOWED_D,12,Voight09\n");
    FAIL() << "expected FixtureError";
  } catch (const FixtureError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(FixtureValidation, ShippedFileIsConsistent) {
  const auto fx = load_fixtures();
  EXPECT_EQ(fx.allowed_d.size(), 52u);
  EXPECT_EQ(fx.hyperelliptic.size(), 33u);
  EXPECT_EQ(fx.automorphism_overrides.size(), 2u);
  EXPECT_EQ(fx.airr2_level_one.size(), 17u);
  EXPECT_EQ(fx.rationality.size(), 82u);
  for (const auto& [d, cite] : fx.allowed_d) EXPECT_FALSE(cite.empty());
}

TEST(FixtureValidation, AllowedDMustMatchDerivedSet) {
  std::istringstream in("ALLOWED_D,6,Voight09\n");
  const auto fx = parse_fixtures(in);
  EXPECT_THROW(validate_fixtures(fx), FixtureError);
}

TEST(FixturePath, FlagOverridesEnvironment) {
  ::setenv("SHIMURA_FIXTURE_DIR", "/from/env", 1);
  EXPECT_EQ(fixture_path(std::nullopt), std::filesystem::path("/from/env/fixtures.txt"));
  EXPECT_EQ(fixture_path(std::string("/from/flag")), std::filesystem::path("/from/flag/fixtures.txt"));
  ::unsetenv("SHIMURA_FIXTURE_DIR");
  EXPECT_EQ(fixture_path(std::nullopt).filename(), "fixtures.txt");
  EXPECT_THROW(load_fixtures(std::filesystem::path("/nonexistent/fixtures.txt")), FixtureError);
}

#include <gtest/gtest.h>

#include "netshare/json_io.hpp"
#include "netshare/sharing.hpp"
#include "support.hpp"

using namespace netshare;
using netshare::testing::Gen;
using netshare::testing::kTable3;
using netshare::testing::kTable3Rows;

TEST(Presets, Table3MatrixCellByCell) {
  ASSERT_EQ(table3_preset_names().size(), 6u);
  for (std::size_t col = 0; col < kTable3.size(); ++col) {
    EXPECT_EQ(table3_preset_names()[col], kTable3[col].name);
    const auto cfg = preset(kTable3[col].name);
    for (std::size_t row = 0; row < kTable3Rows.size(); ++row)
      EXPECT_EQ(cfg.is_shared(kTable3Rows[row]), kTable3[col].marked[row]) << kTable3[col].name << " row " << row;
    // Nothing outside the six rows.
    for (auto c : kAllClasses)
      if (std::find(kTable3Rows.begin(), kTable3Rows.end(), c) == kTable3Rows.end()) EXPECT_FALSE(cfg.is_shared(c));
  }
}

TEST(Presets, DefaultsAndNames) {
  const auto names = preset_names();
  ASSERT_EQ(names.size(), 9u);
  for (auto n : names) {
    const auto cfg = preset(n);
    EXPECT_EQ(cfg.name(), n);
    EXPECT_EQ(cfg.operator_count(), 2);
    ASSERT_EQ(cfg.split_ratios().size(), 2u);
    EXPECT_DOUBLE_EQ(cfg.split_ratios()[0], 0.5);
    EXPECT_FALSE(cfg.intl_shared());
    EXPECT_EQ(preset(n), cfg);
  }
  EXPECT_EQ(preset("PassiveOnly").shared(), ClassSet({ElementClass::PassiveSite}));
  EXPECT_EQ(preset("SiteAntenna").shared(), ClassSet({ElementClass::PassiveSite, ElementClass::Antenna}));
  EXPECT_EQ(preset("GatewayRoaming").shared(),
            ClassSet({ElementClass::PassiveSite, ElementClass::NodeB, ElementClass::RNC, ElementClass::Backhaul,
                      ElementClass::SpectrumLicense}));
  EXPECT_EQ(preset("MORAN").shared(), ClassSet({ElementClass::PassiveSite, ElementClass::NodeB, ElementClass::RNC}));
  EXPECT_EQ(std::find(names.begin(), names.end(), "MORAN"), names.end());
}

TEST(Presets, UnknownName) {
  try {
    preset("GWCN+Backhaul");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPreset);
    EXPECT_NE(std::string(e.what()).find("GWCN+Backhaul"), std::string::npos);
  }
}

TEST(Presets, AllValidUnderPermissivePolicy) {
  for (auto n : preset_names()) EXPECT_TRUE(validate_configuration(preset(n)).valid()) << n;
  const auto passive = validate_configuration(preset("PassiveOnly"));
  EXPECT_TRUE(passive.errors.empty());
  EXPECT_TRUE(passive.warnings.empty());
}

TEST(Configuration, SplitValidation) {
  const ClassSet s{ElementClass::NodeB};
  EXPECT_THROW(SharingConfiguration("x", s, 1), Error);
  EXPECT_THROW(SharingConfiguration("x", s, 2, {0.6, 0.5}), Error);
  EXPECT_THROW(SharingConfiguration("x", s, 3, {0.5, 0.5}), Error);
  EXPECT_THROW(SharingConfiguration("x", s, 2, {1.0, 0.0}), Error);
  EXPECT_NO_THROW(SharingConfiguration("x", s, 2, {0.3, 0.7}));
  EXPECT_NO_THROW(SharingConfiguration("x", s, 3, {0.2, 0.3, 0.5 + 5e-10}));
  const SharingConfiguration four("x", s, 4);
  for (double r : four.split_ratios()) EXPECT_DOUBLE_EQ(r, 0.25);
}

TEST(Configuration, JsonRoundTrip) {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = g.integer(2, 6);
    RegulatoryPolicy p{g.uniform(), g.coin(), std::nullopt};
    if (g.coin()) p.max_level = static_cast<Level>(g.integer(1, 5));
    const SharingConfiguration cfg("cfg " + std::to_string(trial), g.subset(), n, g.split(n), g.coin(),
                                   g.coin() ? std::optional(p) : std::nullopt);
    const auto text = json_io::to_json(cfg).dump();
    EXPECT_EQ(json_io::configuration_from_json(json_io::parse(text, ErrorCode::MalformedDocument)), cfg);
  }
}

TEST(Level, Examples) {
  const auto gwcn = sharing_level(preset("GWCN"));
  EXPECT_EQ(gwcn.level, Level::Core);
  EXPECT_TRUE(gwcn.non_contiguous);
  const auto passive = sharing_level(preset("PassiveOnly"));
  EXPECT_EQ(passive.level, Level::Site);
  EXPECT_FALSE(passive.non_contiguous);
  const auto rnc = sharing_level(ClassSet{ElementClass::RNC});
  EXPECT_EQ(rnc.level, Level::RNC);
  EXPECT_TRUE(rnc.non_contiguous);
  EXPECT_EQ(sharing_level(ClassSet{}).level, Level::None);
  EXPECT_EQ(sharing_level(ClassSet{ElementClass::Backhaul}).level, Level::None);
  EXPECT_EQ(sharing_level(ClassSet{ElementClass::CoreGGSN}).level, Level::Core);
  EXPECT_EQ(to_string(Level::Core), "L5_Core");
  EXPECT_EQ(to_string(Level::None), "NoSharing");
}

TEST(Level, MonotoneUnderInclusion) {
  Gen g(22);
  for (int trial = 0; trial < 5000; ++trial) {
    ClassSet a = g.subset();
    ClassSet b = a;
    b.insert(kAllClasses[static_cast<std::size_t>(g.integer(0, kClassCount - 1))]);
    EXPECT_LE(static_cast<int>(sharing_level(a).level), static_cast<int>(sharing_level(b).level));
  }
}

TEST(Validation, GwcnWithoutRan) {
  const SharingConfiguration cfg("core only", {ElementClass::PassiveSite, ElementClass::CoreSGSN});
  const auto r = validate_configuration(cfg);
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(r.has_error(FindingCode::GwcnWithoutRan));
}

TEST(Validation, SpectrumPoolingForbidden) {
  RegulatoryPolicy p;
  p.spectrum_pooling_allowed = false;
  EXPECT_TRUE(validate_configuration(preset("MOCN"), {}, p).has_error(FindingCode::SpectrumPoolingForbidden));
  EXPECT_TRUE(validate_configuration(preset("MOCN - Spectrum"), {}, p).valid());
  // The configuration's own policy applies when no override is given.
  EXPECT_FALSE(validate_configuration(preset("MOCN").with_policy(p)).valid());
}

TEST(Validation, LevelExceedsPolicy) {
  RegulatoryPolicy p;
  p.max_level = Level::RNC;
  EXPECT_TRUE(validate_configuration(preset("GWCN"), {}, p).has_error(FindingCode::LevelExceedsPolicy));
  EXPECT_TRUE(validate_configuration(preset("MOCN"), {}, p).valid());
}

TEST(Validation, Warnings) {
  const auto gap = validate_configuration(SharingConfiguration("gap", {ElementClass::RNC}));
  EXPECT_TRUE(gap.valid());
  EXPECT_TRUE(gap.has_warning(FindingCode::NonContiguousLadder));

  RegulatoryPolicy p;
  p.min_own_coverage_fraction = 0.3;
  const std::vector<double> coverage{0.5, 0.2};
  const auto low = validate_configuration(preset("PassiveOnly"), coverage, p);
  EXPECT_TRUE(low.valid());
  EXPECT_TRUE(low.has_warning(FindingCode::CoverageBelowMinimum));

  const std::vector<double> three{0.5, 0.5, 0.5};
  EXPECT_TRUE(validate_configuration(preset("PassiveOnly"), three).has_error(FindingCode::CoverageCountMismatch));

  const auto five = validate_configuration(preset("PassiveOnly").with_operators(5));
  EXPECT_TRUE(five.has_warning(FindingCode::OperatorCountAboveNodeBLimit));
  EXPECT_FALSE(validate_configuration(preset("PassiveOnly").with_operators(4)).has_warning(
      FindingCode::OperatorCountAboveNodeBLimit));
}

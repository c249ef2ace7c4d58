#include <gtest/gtest.h>

#include <set>

#include "netshare/advisor.hpp"
#include "netshare/json_io.hpp"
#include "support.hpp"

using namespace netshare;

TEST(Recommend, VerdictTable) {
  struct Cell {
    AreaKind area;
    Technology tech;
    Verdict verdict;
  };
  const Cell table[] = {
      {AreaKind::Rural, Technology::G2, Verdict::StronglyRecommended},
      {AreaKind::Rural, Technology::G3, Verdict::StronglyRecommended},
      {AreaKind::Suburban, Technology::G2, Verdict::CaseByCase},
      {AreaKind::Suburban, Technology::G3, Verdict::CaseByCase},
      {AreaKind::Urban, Technology::G2, Verdict::NotRecommended},
      {AreaKind::Urban, Technology::G3, Verdict::CaseByCase},
  };
  for (const auto& c : table) {
    const auto r = recommend(c.area, c.tech);
    EXPECT_EQ(r.verdict, c.verdict) << to_string(c.area) << " " << to_string(c.tech);
    EXPECT_EQ(r.area, c.area);
    EXPECT_EQ(r.technology, c.tech);
    EXPECT_NE(std::find(r.notes.begin(), r.notes.end(), "Co-locate 3G sites with existing 2G infrastructure sites."),
              r.notes.end());
  }
  EXPECT_EQ(to_string(Verdict::StronglyRecommended), "StronglyRecommended");
}

TEST(Checklist, ExistingAndNew) {
  const auto existing = checklist(NetworkState::Existing);
  const auto fresh = checklist(NetworkState::New);
  auto has = [](const ConstraintChecklist& l, ChecklistDomain d, std::string_view text) {
    for (const auto& i : l.items)
      if (i.domain == d && i.text.find(text) != std::string::npos) return true;
    return false;
  };
  EXPECT_TRUE(has(existing, ChecklistDomain::Energy, "adapt the energy to the new requirements"));
  EXPECT_TRUE(has(existing, ChecklistDomain::Site, "Area of the site"));
  EXPECT_TRUE(has(existing, ChecklistDomain::Site, "dimensioned enough to receive new antennas"));
  EXPECT_TRUE(has(fresh, ChecklistDomain::Backhaul, "Choice of the type of backhaul: lines, Microwave, VSAT"));
  EXPECT_TRUE(has(fresh, ChecklistDomain::Site, "Choice of site or geographical splitting"));

  std::set<std::string> texts;
  std::set<ChecklistDomain> de, dn;
  for (const auto& i : existing.items) {
    texts.insert(i.text);
    de.insert(i.domain);
    EXPECT_FALSE(i.answered.has_value());
  }
  for (const auto& i : fresh.items) {
    EXPECT_EQ(texts.count(i.text), 0u) << i.text;
    dn.insert(i.domain);
  }
  EXPECT_EQ(de.size(), 4u);
  EXPECT_EQ(de, dn);
  EXPECT_EQ(existing.unanswered().size(), existing.items.size());
}

TEST(Checklist, AnswersRoundTrip) {
  auto list = checklist(NetworkState::Existing);
  list.items[0].answered = true;
  list.items[3].answered = false;
  const auto back = json_io::checklist_from_json(json_io::to_json(list));
  EXPECT_EQ(back, list);
  EXPECT_EQ(back.unanswered().size(), list.items.size() - 2);

  auto doc = json_io::to_json(list);
  doc["items"][0]["text"] = "Something the tables never asked";
  EXPECT_THROW(json_io::checklist_from_json(doc), Error);
}

TEST(Lte, RawMatrix) {
  const auto m = lte_matrix();
  ASSERT_EQ(m.size(), 5u);
  const std::pair<char, char> expected[] = {{'+', '-'}, {'+', '-'}, {'=', '='}, {'+', '-'}, {'-', '+'}};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(m[i].criterion, kLteCriteria[i]);
    EXPECT_EQ(symbol(m[i].mocn), expected[i].first);
    EXPECT_EQ(symbol(m[i].gwcn), expected[i].second);
    EXPECT_FALSE(m[i].remark.empty());
  }
}

TEST(Lte, Examples) {
  LteContext all{true, true, true, true, 0.0};
  const auto a = compare_lte(all);
  EXPECT_EQ(a.preferred, LteApproach::MOCN);
  EXPECT_DOUBLE_EQ(a.mocn_score, 3.0);

  LteContext cost_only{false, false, false, false, 1.0};
  EXPECT_EQ(compare_lte(cost_only).preferred, LteApproach::GWCN);

  const auto none = compare_lte(LteContext{});
  EXPECT_EQ(none.preferred, LteApproach::Tie);
  EXPECT_EQ(none.mocn_score, 0.0);
  EXPECT_EQ(none.gwcn_score, 0.0);

  LteContext bad;
  bad.cost_priority_weight = 1.5;
  EXPECT_THROW(compare_lte(bad), Error);
}

TEST(Lte, MatrixIndependentOfContextAndMonotoneInCost) {
  netshare::testing::Gen g(51);
  const auto reference = lte_matrix();
  for (int trial = 0; trial < 2000; ++trial) {
    LteContext ctx{g.coin(), g.coin(), g.coin(), g.coin(), g.uniform()};
    const auto r = compare_lte(ctx);
    ASSERT_EQ(r.rows.size(), reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
      EXPECT_EQ(r.rows[i].mocn, reference[i].mocn);
      EXPECT_EQ(r.rows[i].gwcn, reference[i].gwcn);
    }
    LteContext more = ctx;
    more.cost_priority_weight = g.uniform(ctx.cost_priority_weight, 1.0);
    const auto rm = compare_lte(more);
    if (r.preferred == LteApproach::GWCN) EXPECT_EQ(rm.preferred, LteApproach::GWCN);
    EXPECT_GE(rm.gwcn_score - rm.mocn_score, r.gwcn_score - r.mocn_score - 1e-12);
  }
}

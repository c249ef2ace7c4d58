#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netshare/element_class.hpp"

namespace netshare {

enum class Technology { G2, G3 };
enum class Verdict { StronglyRecommended, CaseByCase, NotRecommended };

std::string_view to_string(Technology t) noexcept;
std::optional<Technology> technology_from_string(std::string_view s) noexcept;
std::string_view to_string(Verdict v) noexcept;

struct Recommendation {
  AreaKind area;
  Technology technology;
  Verdict verdict;
  std::vector<std::string> notes;
};

Recommendation recommend(AreaKind area, Technology technology);

enum class NetworkState { Existing, New };
enum class ChecklistDomain { Site, Energy, RAN, Backhaul };

std::string_view to_string(NetworkState s) noexcept;
std::optional<NetworkState> network_state_from_string(std::string_view s) noexcept;
std::string_view to_string(ChecklistDomain d) noexcept;
std::optional<ChecklistDomain> checklist_domain_from_string(std::string_view s) noexcept;

struct ChecklistItem {
  ChecklistDomain domain;
  std::string text;
  std::optional<bool> answered;

  bool operator==(const ChecklistItem&) const = default;
};

struct ConstraintChecklist {
  NetworkState state;
  std::vector<ChecklistItem> items;

  std::vector<const ChecklistItem*> unanswered() const;
  bool operator==(const ConstraintChecklist&) const = default;
};

ConstraintChecklist checklist(NetworkState state);

// --- LTE MOCN vs GWCN ---------------------------------------------------------

enum class LteCriterion { Internetworking, CsFallback, ImsVoice, Roaming, Cost };
enum class Mark { Plus, Minus, Equal };
enum class LteApproach { MOCN, GWCN, Tie };

inline constexpr std::array<LteCriterion, 5> kLteCriteria = {
    LteCriterion::Internetworking, LteCriterion::CsFallback, LteCriterion::ImsVoice,
    LteCriterion::Roaming, LteCriterion::Cost};

std::string_view to_string(LteCriterion c) noexcept;
std::string_view to_string(LteApproach a) noexcept;
char symbol(Mark m) noexcept;

struct LteContext {
  bool needs_inter_rat_mobility = false;
  bool needs_cs_fallback = false;
  bool voice_via_ims = false;
  bool needs_roaming = false;
  double cost_priority_weight = 0.0;  // [0,1]

  void validate() const;
};

struct LteRow {
  LteCriterion criterion;
  Mark mocn;
  Mark gwcn;
  std::string remark;
};

struct LteComparisonReport {
  std::vector<LteRow> rows;  // fixed matrix, context independent
  double mocn_score = 0.0;
  double gwcn_score = 0.0;
  LteApproach preferred = LteApproach::Tie;
};

/// Raw comparison matrix, one row per criterion.
std::vector<LteRow> lte_matrix();

LteComparisonReport compare_lte(const LteContext& ctx);

}  // namespace netshare

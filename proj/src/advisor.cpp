#include "netshare/advisor.hpp"

#include "netshare/error.hpp"

namespace netshare {

std::string_view to_string(Technology t) noexcept { return t == Technology::G2 ? "2g" : "3g"; }

std::optional<Technology> technology_from_string(std::string_view s) noexcept {
  if (s == "2g" || s == "2G" || s == "G2") return Technology::G2;
  if (s == "3g" || s == "3G" || s == "G3") return Technology::G3;
  return std::nullopt;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::StronglyRecommended: return "StronglyRecommended";
    case Verdict::CaseByCase: return "CaseByCase";
    case Verdict::NotRecommended: return "NotRecommended";
  }
  return "CaseByCase";
}

Recommendation recommend(AreaKind area, Technology technology) {
  Recommendation r{area, technology, Verdict::CaseByCase, {}};
  switch (area) {
    case AreaKind::Rural:
      r.verdict = Verdict::StronglyRecommended;
      r.notes.emplace_back("Rural sharing is strongly recommended for both 2G and 3G.");
      break;
    case AreaKind::Suburban:
      r.verdict = Verdict::CaseByCase;
      r.notes.emplace_back("Suburban sharing can be recommended in some cases.");
      break;
    case AreaKind::Urban:
      if (technology == Technology::G2) {
        r.verdict = Verdict::NotRecommended;
        r.notes.emplace_back("Urban sharing is not recommended for 2G.");
      } else {
        r.verdict = Verdict::CaseByCase;
        r.notes.emplace_back("Urban 3G sharing can be recommended in some cases.");
      }
      break;
  }
  r.notes.emplace_back("Co-locate 3G sites with existing 2G infrastructure sites.");
  r.notes.emplace_back("Local parameters and constraints decide each case; review the constraint checklist.");
  return r;
}

std::string_view to_string(NetworkState s) noexcept { return s == NetworkState::Existing ? "existing" : "new"; }

std::optional<NetworkState> network_state_from_string(std::string_view s) noexcept {
  if (s == "existing") return NetworkState::Existing;
  if (s == "new") return NetworkState::New;
  return std::nullopt;
}

std::string_view to_string(ChecklistDomain d) noexcept {
  switch (d) {
    case ChecklistDomain::Site: return "site";
    case ChecklistDomain::Energy: return "energy";
    case ChecklistDomain::RAN: return "ran";
    case ChecklistDomain::Backhaul: return "backhaul";
  }
  return "site";
}

std::optional<ChecklistDomain> checklist_domain_from_string(std::string_view s) noexcept {
  for (auto d : {ChecklistDomain::Site, ChecklistDomain::Energy, ChecklistDomain::RAN, ChecklistDomain::Backhaul})
    if (to_string(d) == s) return d;
  return std::nullopt;
}

std::vector<const ChecklistItem*> ConstraintChecklist::unanswered() const {
  std::vector<const ChecklistItem*> out;
  for (const auto& item : items)
    if (!item.answered) out.push_back(&item);
  return out;
}

ConstraintChecklist checklist(NetworkState state) {
  using D = ChecklistDomain;
  ConstraintChecklist list{state, {}};
  auto add = [&](D d, std::string text) { list.items.push_back({d, std::move(text), std::nullopt}); };

  if (state == NetworkState::Existing) {
    add(D::Site, "Area of the site: is it sufficient for new equipment, or must additional site area be acquired");
    add(D::Site, "Mast of the site: is it dimensioned enough to receive new antennas");
    add(D::Energy, "Energy is usually dimensioned for current needs only: adapt the energy to the new requirements");
    add(D::Energy, "Electrical: change the standing charge");
    add(D::Energy, "Battery and emergency energy: add new batteries");
    add(D::Energy, "Diesel: replace the existing generators with new generators");
    add(D::Energy, "Solar: add new solar panels (site extension requirements)");
    add(D::RAN, "Add new radio components to meet additional traffic demands");
    add(D::RAN,
        "The network is already operating: accept the other operator's constraints on network design, radio "
        "optimization, software level and quality of service");
    add(D::Backhaul, "Microwave: dimensioned enough to carry the added traffic");
    add(D::Backhaul, "Capacity of the existing lines");
  } else {
    add(D::Site, "Choice of site or geographical splitting");
    add(D::Site, "Number of sites (coverage quality)");
    add(D::Energy, "Choice of power: electrical if possible, diesel, solar");
    add(D::RAN, "Technical complexity: agree on infrastructure manufacturers, technologies and frequencies");
    add(D::RAN,
        "Operational complexity: agree on network design, radio optimization, software level, release level, QoS");
    add(D::Backhaul, "Choice of the type of backhaul: lines, Microwave, VSAT (very small aperture terminals)");
    add(D::Backhaul, "Data traffic to carry");
  }
  return list;
}

std::string_view to_string(LteCriterion c) noexcept {
  switch (c) {
    case LteCriterion::Internetworking: return "internetworking_with_legacy_networks";
    case LteCriterion::CsFallback: return "voice_with_cs_fallback";
    case LteCriterion::ImsVoice: return "voice_with_ims";
    case LteCriterion::Roaming: return "roaming";
    case LteCriterion::Cost: return "cost";
  }
  return "cost";
}

std::string_view to_string(LteApproach a) noexcept {
  switch (a) {
    case LteApproach::MOCN: return "MOCN";
    case LteApproach::GWCN: return "GWCN";
    case LteApproach::Tie: return "Tie";
  }
  return "Tie";
}

char symbol(Mark m) noexcept {
  switch (m) {
    case Mark::Plus: return '+';
    case Mark::Minus: return '-';
    case Mark::Equal: return '=';
  }
  return '=';
}

void LteContext::validate() const {
  if (!(cost_priority_weight >= 0.0 && cost_priority_weight <= 1.0))
    throw Error(ErrorCode::InvalidConfiguration, "cost_priority_weight must lie in [0,1]");
}

std::vector<LteRow> lte_matrix() {
  return {
      {LteCriterion::Internetworking, Mark::Plus, Mark::Minus,
       "Inter-RAT mobility needs MME interfaces to legacy nodes (SGSN); a shared MME ties the shared eUTRAN "
       "tightly to every operator core"},
      {LteCriterion::CsFallback, Mark::Plus, Mark::Minus,
       "CS fallback needs the SGs interface between MMEs and MSCs; a shared MME ties the shared eUTRAN tightly to "
       "every operator core"},
      {LteCriterion::ImsVoice, Mark::Equal, Mark::Equal, "IMS is the long-term voice-over-LTE solution for both"},
      {LteCriterion::Roaming, Mark::Plus, Mark::Minus,
       "A shared MME must hold the HSS address of every roaming partner of every connected core"},
      {LteCriterion::Cost, Mark::Minus, Mark::Plus, "Sharing the MME shares its cost; the gain depends on context"},
  };
}

namespace {

double value(Mark m) {
  switch (m) {
    case Mark::Plus: return 1.0;
    case Mark::Minus: return -1.0;
    case Mark::Equal: return 0.0;
  }
  return 0.0;
}

double weight(LteCriterion c, const LteContext& ctx) {
  switch (c) {
    case LteCriterion::Internetworking: return ctx.needs_inter_rat_mobility ? 1.0 : 0.0;
    case LteCriterion::CsFallback: return ctx.needs_cs_fallback ? 1.0 : 0.0;
    case LteCriterion::ImsVoice: return ctx.voice_via_ims ? 1.0 : 0.0;
    case LteCriterion::Roaming: return ctx.needs_roaming ? 1.0 : 0.0;
    case LteCriterion::Cost: return ctx.cost_priority_weight;
  }
  return 0.0;
}

}  // namespace

LteComparisonReport compare_lte(const LteContext& ctx) {
  ctx.validate();
  LteComparisonReport report;
  report.rows = lte_matrix();
  for (const auto& row : report.rows) {
    const double w = weight(row.criterion, ctx);
    report.mocn_score += w * value(row.mocn);
    report.gwcn_score += w * value(row.gwcn);
  }
  if (report.mocn_score > report.gwcn_score)
    report.preferred = LteApproach::MOCN;
  else if (report.gwcn_score > report.mocn_score)
    report.preferred = LteApproach::GWCN;
  else
    report.preferred = LteApproach::Tie;
  return report;
}

}  // namespace netshare

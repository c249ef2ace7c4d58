#include "netshare/inventory.hpp"

#include <algorithm>
#include <string>

namespace netshare {

AreaProfile AreaProfile::reference(AreaKind kind) {
  AreaProfile p;
  p.kind = kind;
  p.subscriber_count = 17700;
  p.rnc_count = 1;
  p.sgsn_count = 1;
  p.ggsn_count = 1;
  switch (kind) {
    case AreaKind::Urban: p.nodeb_count = 78; break;
    case AreaKind::Suburban: p.nodeb_count = 58; break;
    case AreaKind::Rural: p.nodeb_count = 108; break;
  }
  return p;
}

void AreaProfile::validate() const {
  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw Error(ErrorCode::InvalidProfile, std::string(to_string(kind)) + " profile: " + what);
  };
  require(nodeb_count >= 1, "nodeb_count must be >= 1");
  require(rnc_count >= 1, "rnc_count must be >= 1");
  require(sgsn_count >= 1, "sgsn_count must be >= 1");
  require(ggsn_count >= 1, "ggsn_count must be >= 1");
  require(subscriber_count >= 0, "subscriber_count must be >= 0");
}

int quantity(ElementClass c, const AreaProfile& profile) {
  switch (c) {
    case ElementClass::NodeB:
    case ElementClass::PassiveSite:
    case ElementClass::Power:
    case ElementClass::SiteRent:
      return profile.nodeb_count;
    case ElementClass::RNC: return profile.rnc_count;
    case ElementClass::CoreSGSN: return profile.sgsn_count;
    case ElementClass::CoreGGSN: return profile.ggsn_count;
    default: return 1;
  }
}

bool requires_unit_cost(ElementClass c) {
  return c == ElementClass::NodeB || c == ElementClass::RNC || c == ElementClass::CoreSGSN ||
         c == ElementClass::CoreGGSN;
}

CostTable build_inventory(const AreaProfile& profile, const UnitCostMap& unit_costs, std::string currency) {
  profile.validate();
  CostTable::Amounts amounts = CostTable::Amounts::Zero();
  for (auto c : kAllClasses) {
    const auto it = unit_costs.find(c);
    if (it == unit_costs.end()) {
      if (requires_unit_cost(c))
        throw Error(ErrorCode::MissingCostEntry, "no unit cost for " + std::string(to_string(c)));
      continue;
    }
    const UnitCost& u = it->second;
    if (!(u.capex >= 0.0) || !(u.opex_annual >= 0.0))
      throw Error(ErrorCode::InvalidAmount, "negative unit cost for " + std::string(to_string(c)));
    const double q = quantity(c, profile);
    amounts(index_of(c), 0) = u.capex * q;
    amounts(index_of(c), 1) = u.opex_annual * q;
  }
  return CostTable(profile.kind, amounts, std::move(currency));
}

UnitCostMap unit_costs_from(const CostTable& table, const AreaProfile& profile) {
  profile.validate();
  UnitCostMap out;
  for (auto c : kAllClasses) {
    const double q = quantity(c, profile);
    out[c] = UnitCost{table.capex(c) / q, table.opex_annual(c) / q};
  }
  return out;
}

Interval Interval::around(double point, double half_width) {
  return Interval{std::max(0.0, point - half_width), std::min(1.0, point + half_width)};
}

RepartitionConstraintSet::RepartitionConstraintSet(std::vector<RepartitionConstraint> constraints)
    : constraints_(std::move(constraints)) {
  for (const auto& c : constraints_) {
    const auto& b = c.bound;
    if (!(b.lower >= 0.0 && b.upper <= 1.0 && b.lower <= b.upper))
      throw Error(ErrorCode::InvalidConfiguration,
                  "constraint '" + c.label + "' bound must satisfy 0 <= lower <= upper <= 1");
    if (c.classes.empty())
      throw Error(ErrorCode::InvalidConfiguration, "constraint '" + c.label + "' has an empty class set");
  }
}

RepartitionConstraintSet RepartitionConstraintSet::merged(const RepartitionConstraintSet& other) const {
  auto all = constraints_;
  all.insert(all.end(), other.constraints_.begin(), other.constraints_.end());
  return RepartitionConstraintSet(std::move(all));
}

RepartitionConstraintSet RepartitionConstraintSet::scoped_to(AreaKind area) const {
  std::vector<RepartitionConstraint> out;
  std::copy_if(constraints_.begin(), constraints_.end(), std::back_inserter(out),
               [&](const RepartitionConstraint& c) { return c.applies_to(area); });
  return RepartitionConstraintSet(std::move(out));
}

const RepartitionConstraint* RepartitionConstraintSet::find(Ledger ledger, const ClassSet& classes,
                                                            std::optional<AreaKind> area) const {
  for (const auto& c : constraints_) {
    if (c.ledger != ledger || !(c.classes == classes)) continue;
    if (area && !c.applies_to(*area)) continue;
    return &c;
  }
  return nullptr;
}

std::string_view to_string(Market m) noexcept { return m == Market::Emerging ? "emerging" : "developed"; }

std::optional<Market> market_from_string(std::string_view s) noexcept {
  if (s == "emerging") return Market::Emerging;
  if (s == "developed") return Market::Developed;
  return std::nullopt;
}

namespace {

using EC = ElementClass;

RepartitionConstraint point(Ledger l, ClassSet classes, double value, std::string label,
                            std::optional<AreaKind> scope = std::nullopt) {
  return {l, std::move(classes), Interval::around(value), scope, std::move(label)};
}

RepartitionConstraint range(Ledger l, ClassSet classes, double lo, double hi, std::string label,
                            std::optional<AreaKind> scope = std::nullopt) {
  return {l, std::move(classes), Interval{lo, hi}, scope, std::move(label)};
}

}  // namespace

RepartitionConstraintSet default_constraints(Market market, ConstraintLedger ledger) {
  std::vector<RepartitionConstraint> out;
  switch (ledger) {
    case ConstraintLedger::Capex:
      if (market == Market::Emerging) {
        out.push_back(point(Ledger::Capex, {EC::PassiveSite}, 0.41, "civil works and site acquisition"));
        out.push_back(point(Ledger::Capex, {EC::Power}, 0.31, "power"));
        out.push_back(point(Ledger::Capex, {EC::NodeB}, 0.15, "BTS/NodeB"));
      } else {
        out.push_back(point(Ledger::Capex, {EC::PassiveSite}, 0.52, "civil works and site acquisition"));
      }
      break;
    case ConstraintLedger::Opex:
      if (market == Market::Emerging) {
        out.push_back(point(Ledger::Opex, {EC::OAM}, 0.20, "hardware and software support"));
        out.push_back(point(Ledger::Opex, {EC::Power}, 0.20, "power"));
        out.push_back(point(Ledger::Opex, {EC::SiteRent}, 0.15, "land rent"));
        out.push_back(point(Ledger::Opex, {EC::Backhaul}, 0.14, "backhaul"));
      } else {
        out.push_back(point(Ledger::Opex, {EC::SiteRent}, 0.42, "land rent"));
      }
      break;
    case ConstraintLedger::UseCaseCapex:
      // Core and O&M are bounded together: separately their lower bounds
      // cannot coexist with the backhaul/RNC/NodeB floors.
      out.push_back(range(Ledger::Capex, {EC::CoreSGSN, EC::CoreGGSN, EC::OAM}, 0.08, 0.17, "core network and O&M"));
      out.push_back(range(Ledger::Capex, {EC::Backhaul}, 0.32, 0.41, "backhaul"));
      out.push_back(range(Ledger::Capex, {EC::NodeB}, 0.23, 0.29, "NodeB"));
      out.push_back(range(Ledger::Capex, {EC::RNC}, 0.32, 0.41, "RNC", AreaKind::Urban));
      out.push_back(range(Ledger::Capex, {EC::RNC}, 0.32, 0.41, "RNC", AreaKind::Suburban));
      out.push_back(point(Ledger::Capex, {EC::RNC}, 0.11, "RNC", AreaKind::Rural));
      break;
    case ConstraintLedger::UseCaseOpex:
      out.push_back(range(Ledger::Opex, {EC::InternationalConnectivity}, 0.50, 0.60, "international connectivity"));
      out.push_back(range(Ledger::Opex, {EC::SpectrumLicense, EC::CoreSGSN, EC::CoreGGSN}, 0.08, 0.12,
                          "licence and core network"));
      break;
  }
  return RepartitionConstraintSet(std::move(out));
}

CostTable default_market_table(Market market, AreaKind area) {
  // Named items carry the published shares; the remainder is spread over the
  // classes the market breakdown does not itemize.
  struct Row {
    EC c;
    double capex;
    double opex;
  };
  static constexpr Row kEmerging[] = {
      {EC::PassiveSite, 410, 0},  {EC::Power, 310, 200},   {EC::NodeB, 150, 80},  {EC::Antenna, 30, 0},
      {EC::RNC, 30, 30},          {EC::Backhaul, 40, 140}, {EC::CoreSGSN, 10, 10}, {EC::CoreGGSN, 10, 10},
      {EC::OAM, 10, 200},         {EC::SiteRent, 0, 150},  {EC::SpectrumLicense, 0, 40},
      {EC::InternationalConnectivity, 0, 80},              {EC::Staff, 0, 60},
  };
  static constexpr Row kDeveloped[] = {
      {EC::PassiveSite, 520, 0},  {EC::Power, 60, 100},    {EC::NodeB, 180, 80},  {EC::Antenna, 50, 0},
      {EC::RNC, 60, 20},          {EC::Backhaul, 70, 100}, {EC::CoreSGSN, 20, 10}, {EC::CoreGGSN, 20, 10},
      {EC::OAM, 20, 120},         {EC::SiteRent, 0, 420},  {EC::SpectrumLicense, 0, 40},
      {EC::InternationalConnectivity, 0, 20},              {EC::Staff, 0, 80},
  };
  CostTable::Amounts amounts = CostTable::Amounts::Zero();
  auto fill = [&](const auto& rows) {
    for (const auto& r : rows) {
      amounts(index_of(r.c), 0) = r.capex;
      amounts(index_of(r.c), 1) = r.opex;
    }
  };
  if (market == Market::Emerging)
    fill(kEmerging);
  else
    fill(kDeveloped);
  return CostTable(area, amounts, "index");
}

}  // namespace netshare

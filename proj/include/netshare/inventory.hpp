#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "netshare/class_set.hpp"
#include "netshare/element_class.hpp"
#include "netshare/error.hpp"

namespace netshare {

inline constexpr double kFractionTolerance = 1e-9;

/// Per element-class amounts for one operator in one area. Column 0 holds
/// CAPEX, column 1 annual OPEX. Amounts are unit-agnostic; `currency` is a
/// label carried through to reports.
template <class Scalar>
class BasicCostTable {
 public:
  using Amounts = Eigen::Array<Scalar, kClassCount, 2>;
  using ClassColumn = Eigen::Array<Scalar, kClassCount, 1>;

  explicit BasicCostTable(AreaKind area, std::string currency = {})
      : area_(area), currency_(std::move(currency)), amounts_(Amounts::Zero()) {}

  BasicCostTable(AreaKind area, const Amounts& amounts, std::string currency = {})
      : area_(area), currency_(std::move(currency)), amounts_(amounts) {
    for (int i = 0; i < kClassCount; ++i) {
      for (int l = 0; l < 2; ++l) {
        if (!(amounts_(i, l) >= Scalar(0)) || !std::isfinite(static_cast<double>(amounts_(i, l))))
          throw Error(ErrorCode::InvalidAmount,
                      std::string(to_string(kAllClasses[static_cast<std::size_t>(i)])) + " " +
                          std::string(to_string(static_cast<Ledger>(l))) + " amount must be finite and >= 0");
      }
    }
  }

  AreaKind area() const { return area_; }
  const std::string& currency() const { return currency_; }
  const Amounts& amounts() const { return amounts_; }

  Scalar capex(ElementClass c) const { return amounts_(index_of(c), 0); }
  Scalar opex_annual(ElementClass c) const { return amounts_(index_of(c), 1); }
  Scalar amount(Ledger l, ElementClass c) const { return amounts_(index_of(c), static_cast<int>(l)); }

  Scalar total(Ledger l) const { return amounts_.col(static_cast<int>(l)).sum(); }

  /// A table is usable when at least one ledger carries a positive total.
  bool usable() const { return total(Ledger::Capex) > Scalar(0) || total(Ledger::Opex) > Scalar(0); }

  ClassColumn fractions(Ledger l) const {
    const Scalar t = total(l);
    if (!(t > Scalar(0)))
      throw Error(ErrorCode::ZeroTotalLedger, std::string(to_string(l)) + " total is zero in " +
                                                  std::string(to_string(area_)) + " table");
    return amounts_.col(static_cast<int>(l)) / t;
  }

  Scalar fraction(Ledger l, ElementClass c) const { return fractions(l)(index_of(c)); }

  Scalar fraction(Ledger l, const ClassSet& set) const {
    return (fractions(l) * set.template indicator<Scalar>()).sum();
  }

  BasicCostTable with_entry(ElementClass c, Scalar capex, Scalar opex_annual) const {
    Amounts next = amounts_;
    next(index_of(c), 0) = capex;
    next(index_of(c), 1) = opex_annual;
    return BasicCostTable(area_, next, currency_);
  }

  BasicCostTable scaled(Scalar k) const { return BasicCostTable(area_, amounts_ * k, currency_); }

  bool operator==(const BasicCostTable& o) const {
    return area_ == o.area_ && currency_ == o.currency_ && (amounts_ == o.amounts_).all();
  }

 private:
  AreaKind area_;
  std::string currency_;
  Amounts amounts_;
};

using CostTable = BasicCostTable<double>;

/// Per-area network quantities. Defaults are the three-region study profiles.
struct AreaProfile {
  AreaKind kind = AreaKind::Urban;
  int nodeb_count = 1;
  int subscriber_count = 0;
  int rnc_count = 1;
  int sgsn_count = 1;
  int ggsn_count = 1;

  static AreaProfile reference(AreaKind kind);
  void validate() const;

  bool operator==(const AreaProfile&) const = default;
};

struct UnitCost {
  double capex = 0.0;
  double opex_annual = 0.0;
};

using UnitCostMap = std::map<ElementClass, UnitCost>;

/// Number of units of class `c` an operator deploys for `profile`.
/// NodeB and the site-level classes (PassiveSite, Power, SiteRent) follow the
/// NodeB count; RNC and core nodes follow their own counts; everything else is 1.
int quantity(ElementClass c, const AreaProfile& profile);

/// Classes whose unit cost must be present in build_inventory's input.
bool requires_unit_cost(ElementClass c);

CostTable build_inventory(const AreaProfile& profile, const UnitCostMap& unit_costs,
                          std::string currency = {});

/// Inverse of build_inventory: unit costs that rebuild `table` for `profile`.
UnitCostMap unit_costs_from(const CostTable& table, const AreaProfile& profile);

// --- repartition constraints -------------------------------------------------

struct Interval {
  double lower = 0.0;
  double upper = 1.0;

  static Interval around(double point, double half_width = 0.02);
  bool contains(double x, double tol = kFractionTolerance) const {
    return x >= lower - tol && x <= upper + tol;
  }
  bool operator==(const Interval&) const = default;
};

struct RepartitionConstraint {
  Ledger ledger = Ledger::Capex;
  ClassSet classes;
  Interval bound;
  std::optional<AreaKind> scope;  // nullopt: applies to every area
  std::string label;

  bool applies_to(AreaKind area) const { return !scope || *scope == area; }
  bool operator==(const RepartitionConstraint&) const = default;
};

class RepartitionConstraintSet {
 public:
  RepartitionConstraintSet() = default;
  explicit RepartitionConstraintSet(std::vector<RepartitionConstraint> constraints);

  const std::vector<RepartitionConstraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }

  RepartitionConstraintSet merged(const RepartitionConstraintSet& other) const;
  RepartitionConstraintSet scoped_to(AreaKind area) const;

  /// First constraint whose class-set equals `classes` on `ledger`, if any.
  const RepartitionConstraint* find(Ledger ledger, const ClassSet& classes,
                                    std::optional<AreaKind> area = std::nullopt) const;

 private:
  std::vector<RepartitionConstraint> constraints_;
};

struct ConstraintCheck {
  RepartitionConstraint constraint;
  double observed_fraction = 0.0;  // rounded to 4 decimals
  bool satisfied = false;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;
  bool overall = true;
};

enum class Market { Emerging, Developed };
enum class ConstraintLedger { Capex, Opex, UseCaseCapex, UseCaseOpex };

std::string_view to_string(Market m) noexcept;
std::optional<Market> market_from_string(std::string_view s) noexcept;

RepartitionConstraintSet default_constraints(Market market, ConstraintLedger ledger);

/// Market-level cost table whose fractions reproduce the published
/// market repartitions (amounts per 1000 units of CAPEX and OPEX).
CostTable default_market_table(Market market, AreaKind area = AreaKind::Urban);

/// Evaluates the constraints that apply to `table.area()`.
template <class Scalar>
ConstraintReport check_repartition(const BasicCostTable<Scalar>& table,
                                   const RepartitionConstraintSet& constraints) {
  ConstraintReport report;
  for (const auto& c : constraints.constraints()) {
    if (!c.applies_to(table.area())) continue;
    const double observed = static_cast<double>(table.fraction(c.ledger, c.classes));
    const bool ok = c.bound.contains(observed);
    report.checks.push_back({c, std::round(observed * 1e4) / 1e4, ok});
    report.overall = report.overall && ok;
  }
  return report;
}

}  // namespace netshare

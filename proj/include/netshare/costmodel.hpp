#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "netshare/inventory.hpp"
#include "netshare/sharing.hpp"

namespace netshare {

/// Costs accumulated over an amortization horizon. Column 0 is CAPEX (counted
/// once, undiscounted), column 1 is OPEX summed over `horizon_years`.
template <class Scalar>
class BasicCostBreakdown {
 public:
  using Amounts = Eigen::Array<Scalar, kClassCount, 2>;

  BasicCostBreakdown(AreaKind area, const Amounts& per_class, int horizon_years, std::string currency = {})
      : area_(area), currency_(std::move(currency)), per_class_(per_class), horizon_(horizon_years) {}

  AreaKind area() const { return area_; }
  const std::string& currency() const { return currency_; }
  int horizon_years() const { return horizon_; }
  const Amounts& per_class() const { return per_class_; }

  Scalar capex(ElementClass c) const { return per_class_(index_of(c), 0); }
  Scalar opex_cumulative(ElementClass c) const { return per_class_(index_of(c), 1); }

  Scalar capex_total() const { return per_class_.col(0).sum(); }
  Scalar opex_cumulative_total() const { return per_class_.col(1).sum(); }
  Scalar grand_total() const { return capex_total() + opex_cumulative_total(); }
  Scalar total(Ledger l) const { return per_class_.col(static_cast<int>(l)).sum(); }

 private:
  AreaKind area_;
  std::string currency_;
  Amounts per_class_;
  int horizon_;
};

using CostBreakdown = BasicCostBreakdown<double>;

template <class Scalar>
BasicCostBreakdown<Scalar> cumulative_cost(const BasicCostTable<Scalar>& table, int horizon_years) {
  if (horizon_years < 1)
    throw Error(ErrorCode::InvalidHorizon, "horizon_years must be >= 1, got " + std::to_string(horizon_years));
  typename BasicCostBreakdown<Scalar>::Amounts cumulative = table.amounts();
  cumulative.col(1) *= Scalar(horizon_years);
  return BasicCostBreakdown<Scalar>(table.area(), cumulative, horizon_years, table.currency());
}

/// Model knobs outside the shared/not-shared matrix.
struct SharingRules {
  // SiteRent and Power follow PassiveSite when it is shared.
  bool share_site_coupled = true;
  // NodeB CAPEX multiplier applied when spectrum is shared (fewer carrier units). 1.0 = off.
  double carrier_unit_factor = 1.0;
};

/// Classes whose cost is split under `cfg` once rules and the
/// international-connectivity flag are folded in.
ClassSet effective_shared(const SharingConfiguration& cfg, const SharingRules& rules = {});

/// The per-class multiplier an operator pays under `cfg`: its split ratio for
/// shared classes, 1 elsewhere.
Eigen::Array<double, kClassCount, 2> cost_factors(const SharingConfiguration& cfg, int my_index,
                                                  const SharingRules& rules = {});

template <class Scalar>
BasicCostBreakdown<Scalar> apply_sharing(const BasicCostBreakdown<Scalar>& breakdown,
                                         const SharingConfiguration& cfg, int my_index,
                                         const SharingRules& rules = {}) {
  const Eigen::Array<Scalar, kClassCount, 2> factors =
      cost_factors(cfg, my_index, rules).template cast<Scalar>();
  return BasicCostBreakdown<Scalar>(breakdown.area(), breakdown.per_class() * factors,
                                    breakdown.horizon_years(), breakdown.currency());
}

template <class Scalar>
struct BasicSavingsReport {
  BasicCostBreakdown<Scalar> baseline;
  BasicCostBreakdown<Scalar> shared_cost;
  std::string configuration;
  AreaKind area;
  Scalar capex_saving_pct;
  Scalar opex_saving_pct;
  Scalar total_saving_pct;
  Eigen::Array<Scalar, kClassCount, 2> per_class_saving;

  int horizon_years() const { return baseline.horizon_years(); }
  Scalar saving_pct(Ledger l) const { return l == Ledger::Capex ? capex_saving_pct : opex_saving_pct; }
};

using SavingsReport = BasicSavingsReport<double>;

namespace detail {
template <class Scalar>
Scalar saving_pct(Scalar base, Scalar shared) {
  return base > Scalar(0) ? Scalar(100) * (base - shared) / base : Scalar(0);
}
}  // namespace detail

template <class Scalar>
BasicSavingsReport<Scalar> savings_report(const BasicCostBreakdown<Scalar>& baseline,
                                          const BasicCostBreakdown<Scalar>& shared_cost,
                                          std::string configuration, AreaKind area) {
  if (!(baseline.grand_total() > Scalar(0)))
    throw Error(ErrorCode::ZeroBaseline, "baseline grand total is zero for " + configuration);
  if (baseline.horizon_years() != shared_cost.horizon_years())
    throw Error(ErrorCode::HorizonMismatch, "baseline horizon " + std::to_string(baseline.horizon_years()) +
                                                " vs shared horizon " + std::to_string(shared_cost.horizon_years()));
  const Eigen::Array<Scalar, kClassCount, 2> saving = baseline.per_class() - shared_cost.per_class();
  const Scalar slack = Scalar(kFractionTolerance) * baseline.grand_total();
  if ((saving < -slack).any())
    throw std::logic_error("sharing increased a class cost in " + configuration);

  return BasicSavingsReport<Scalar>{
      baseline,
      shared_cost,
      std::move(configuration),
      area,
      detail::saving_pct(baseline.capex_total(), shared_cost.capex_total()),
      detail::saving_pct(baseline.opex_cumulative_total(), shared_cost.opex_cumulative_total()),
      detail::saving_pct(baseline.grand_total(), shared_cost.grand_total()),
      saving,
  };
}

/// Percentage-point differences a - b per ledger.
struct SavingsDelta {
  double capex_pp = 0.0;
  double opex_pp = 0.0;
  double total_pp = 0.0;
};

template <class Scalar>
SavingsDelta config_delta(const BasicSavingsReport<Scalar>& a, const BasicSavingsReport<Scalar>& b) {
  if (a.area != b.area)
    throw Error(ErrorCode::AreaMismatch, std::string(to_string(a.area)) + " vs " + std::string(to_string(b.area)));
  if (a.horizon_years() != b.horizon_years())
    throw Error(ErrorCode::HorizonMismatch, std::to_string(a.horizon_years()) + " vs " +
                                                std::to_string(b.horizon_years()));
  return {static_cast<double>(a.capex_saving_pct - b.capex_saving_pct),
          static_cast<double>(a.opex_saving_pct - b.opex_saving_pct),
          static_cast<double>(a.total_saving_pct - b.total_saving_pct)};
}

/// Baseline -> shared -> report for one operator in one area.
SavingsReport evaluate(const CostTable& table, const SharingConfiguration& cfg, int horizon_years,
                       int my_index = 0, const SharingRules& rules = {});

}  // namespace netshare

#include "netshare/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

namespace netshare {

std::string_view to_string(TargetKind k) noexcept {
  switch (k) {
    case TargetKind::Point: return "point";
    case TargetKind::Delta: return "delta";
    case TargetKind::Band: return "band";
  }
  return "point";
}

std::string_view to_string(TargetLedger l) noexcept {
  switch (l) {
    case TargetLedger::Capex: return "capex";
    case TargetLedger::Opex: return "opex";
    case TargetLedger::Total: return "total";
  }
  return "total";
}

namespace {

double pick(const SavingsReport& r, TargetLedger l) {
  switch (l) {
    case TargetLedger::Capex: return r.capex_saving_pct;
    case TargetLedger::Opex: return r.opex_saving_pct;
    case TargetLedger::Total: return r.total_saving_pct;
  }
  return r.total_saving_pct;
}

// Resolves each target's configurations once, then scores cost tables.
class TargetEvaluator {
 public:
  TargetEvaluator(std::vector<CalibrationTarget> targets, int horizon, SharingRules rules)
      : targets_(std::move(targets)), horizon_(horizon), rules_(rules) {
    for (const auto& t : targets_) {
      if (t.kind == TargetKind::Band) {
        if (t.band_configurations.empty())
          for (auto name : table3_preset_names()) index_of(std::string(name));
        for (const auto& name : t.band_configurations) index_of(name);
      } else {
        index_of(t.configuration);
        if (t.kind == TargetKind::Delta) index_of(t.reference);
      }
    }
  }

  std::vector<TargetResidual> residuals(const CostTable& table) const {
    std::vector<SavingsReport> reports;
    reports.reserve(configs_.size());
    for (const auto& cfg : configs_) reports.push_back(evaluate(table, cfg, horizon_, 0, rules_));

    std::vector<TargetResidual> out;
    out.reserve(targets_.size());
    for (const auto& t : targets_) {
      TargetResidual r{t, 0.0, 0.0, 0.0};
      switch (t.kind) {
        case TargetKind::Point:
          r.achieved = pick(reports[lookup(t.configuration)], t.ledger);
          r.residual = std::abs(r.achieved - t.value);
          break;
        case TargetKind::Delta:
          r.achieved = pick(reports[lookup(t.configuration)], t.ledger) - pick(reports[lookup(t.reference)], t.ledger);
          r.residual = std::abs(r.achieved - t.value);
          break;
        case TargetKind::Band: {
          double lo = INFINITY, hi = -INFINITY;
          auto visit = [&](const std::string& name) {
            const double v = pick(reports[lookup(name)], t.ledger);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
          };
          if (t.band_configurations.empty())
            for (auto name : table3_preset_names()) visit(std::string(name));
          for (const auto& name : t.band_configurations) visit(name);
          r.achieved = lo;
          r.achieved_max = hi;
          r.residual = std::max({0.0, t.lower - lo, hi - t.upper});
          break;
        }
      }
      if (t.kind != TargetKind::Band) r.achieved_max = r.achieved;
      out.push_back(std::move(r));
    }
    return out;
  }

  double objective(const CostTable& table) const {
    double j = 0.0;
    for (const auto& r : residuals(table)) j += r.residual * r.residual;
    return j;
  }

 private:
  std::size_t index_of(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    configs_.push_back(preset(name));
    index_.emplace(name, configs_.size() - 1);
    return configs_.size() - 1;
  }
  std::size_t lookup(const std::string& name) const { return index_.at(name); }

  std::vector<CalibrationTarget> targets_;
  int horizon_;
  SharingRules rules_;
  std::vector<SharingConfiguration> configs_;
  std::map<std::string, std::size_t> index_;
};

using Column = Eigen::Array<double, kClassCount, 1>;

// Search state: CAPEX and OPEX class weights plus the CAPEX share of the
// grand total at the calibration horizon.
struct State {
  Column capex = Column::Zero();
  Column opex = Column::Zero();
  double capex_share = 0.3;
};

CostTable table_from(const State& s, AreaKind area, const CalibrationOptions& o) {
  const Column x = s.capex / s.capex.sum();
  const Column y = s.opex / s.opex.sum();
  const double opex_annual_total = o.capex_scale * (1.0 - s.capex_share) / (s.capex_share * o.horizon_years);
  CostTable::Amounts amounts;
  amounts.col(0) = x * o.capex_scale;
  amounts.col(1) = y * opex_annual_total;
  return CostTable(area, amounts, o.currency);
}

// Constraint violation measured against bounds pulled in by `margin`, so the
// rounded fixture stays inside the published bounds.
double violation(const State& s, const std::vector<RepartitionConstraint>& constraints) {
  constexpr double kMargin = 1e-6;
  const Column x = s.capex / s.capex.sum();
  const Column y = s.opex / s.opex.sum();
  double v = 0.0;
  for (const auto& c : constraints) {
    const Column& f = c.ledger == Ledger::Capex ? x : y;
    const double observed = (f * c.classes.indicator()).sum();
    const double m = std::min(kMargin, 0.5 * (c.bound.upper - c.bound.lower));
    v += std::max(0.0, c.bound.lower + m - observed) + std::max(0.0, observed - (c.bound.upper - m));
  }
  return v;
}

struct StepControl {
  double step = 0.05;
  int proposed = 0;
  int accepted = 0;

  void record(bool ok) {
    ++proposed;
    if (ok) ++accepted;
    if (proposed == 100) {
      const double rate = accepted / 100.0;
      if (rate < 0.15) step *= 0.6;
      if (rate > 0.40) step *= 1.5;
      step = std::clamp(step, 1e-10, 0.5);
      proposed = accepted = 0;
    }
  }
};

double round_cents(double v) { return std::round(v * 100.0) / 100.0; }

struct AreaSearchResult {
  State state;
  double violation;
  double objective;
};

AreaSearchResult search_area(AreaKind area, const std::vector<RepartitionConstraint>& constraints,
                             const TargetEvaluator& evaluator, const CalibrationOptions& o, std::mt19937_64& rng) {
  const auto capex_active = o.capex_classes.members();
  const auto opex_active = o.opex_classes.members();
  if (capex_active.size() < 2 || opex_active.size() < 2)
    throw Error(ErrorCode::InfeasibleCalibration, "calibration needs at least two active classes per ledger");

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto score = [&](const State& s) {
    return AreaSearchResult{s, violation(s, constraints), evaluator.objective(table_from(s, area, o))};
  };
  auto better = [](const AreaSearchResult& a, const AreaSearchResult& b) {
    if (a.violation < b.violation) return true;
    if (a.violation > b.violation) return false;
    return a.objective <= b.objective;
  };

  AreaSearchResult best{State{}, INFINITY, INFINITY};
  for (int restart = 0; restart < std::max(1, o.restarts); ++restart) {
    State s;
    for (auto c : capex_active) s.capex(index_of(c)) = restart == 0 ? 1.0 : 0.05 + unit(rng);
    for (auto c : opex_active) s.opex(index_of(c)) = restart == 0 ? 1.0 : 0.05 + unit(rng);
    s.capex /= s.capex.sum();
    s.opex /= s.opex.sum();
    s.capex_share = restart == 0 ? 0.3 : 0.1 + 0.5 * unit(rng);

    AreaSearchResult current = score(s);
    StepControl capex_step, opex_step, share_step;

    for (int it = 0; it < o.iterations; ++it) {
      State next = current.state;
      const double move = unit(rng);
      StepControl* control;
      if (move < 0.8) {
        const bool capex_move = move < 0.4;
        const auto& active = capex_move ? capex_active : opex_active;
        Column& w = capex_move ? next.capex : next.opex;
        control = capex_move ? &capex_step : &opex_step;
        const auto n = active.size();
        const auto i = static_cast<std::size_t>(unit(rng) * static_cast<double>(n)) % n;
        auto j = static_cast<std::size_t>(unit(rng) * static_cast<double>(n - 1)) % (n - 1);
        if (j >= i) ++j;
        const int from = index_of(active[i]);
        const int to = index_of(active[j]);
        const double delta = unit(rng) < 0.02 ? w(from) : std::min(w(from), control->step * unit(rng));
        w(from) -= delta;
        w(to) += delta;
      } else {
        control = &share_step;
        next.capex_share = std::clamp(next.capex_share + control->step * gauss(rng), 0.01, 0.99);
      }
      const AreaSearchResult candidate = score(next);
      const bool ok = better(candidate, current);
      if (ok) current = candidate;
      control->record(ok);
    }
    if (better(current, best)) best = current;
  }
  return best;
}

std::string describe(const CalibrationTarget& t) {
  if (!t.label.empty()) return t.label;
  std::string s = std::string(to_string(t.area)) + " " + std::string(to_string(t.kind)) + " " +
                  std::string(to_string(t.ledger));
  if (!t.configuration.empty()) s += " " + t.configuration;
  if (!t.reference.empty()) s += " vs " + t.reference;
  return s;
}

}  // namespace

std::vector<TargetResidual> evaluate_targets(const CostTable& table, std::span<const CalibrationTarget> targets,
                                             int horizon_years, const SharingRules& rules) {
  std::vector<CalibrationTarget> mine;
  for (const auto& t : targets)
    if (t.area == table.area()) mine.push_back(t);
  return TargetEvaluator(std::move(mine), horizon_years, rules).residuals(table);
}

CalibrationResult calibrate_reference(const RepartitionConstraintSet& constraints,
                                      std::span<const CalibrationTarget> targets, const CalibrationOptions& options) {
  if (targets.empty()) throw Error(ErrorCode::InfeasibleCalibration, "no calibration targets");
  if (options.horizon_years < 1)
    throw Error(ErrorCode::InvalidHorizon, "calibration horizon must be >= 1");

  CalibrationResult result;
  result.method = "projected random search: pairwise mass transfers on the class simplex, adaptive steps, "
                  "lexicographic (constraint violation, squared residual) acceptance";
  result.seed = options.seed;
  result.iterations = options.iterations;
  result.restarts = options.restarts;
  result.horizon_years = options.horizon_years;

  std::mt19937_64 rng(options.seed);
  for (auto area : kAllAreas) {
    std::vector<CalibrationTarget> area_targets;
    for (const auto& t : targets)
      if (t.area == area) area_targets.push_back(t);
    if (area_targets.empty()) continue;

    const RepartitionConstraintSet scoped = constraints.scoped_to(area);
    const TargetEvaluator evaluator(area_targets, options.horizon_years, options.rules);
    const AreaSearchResult found = search_area(area, scoped.constraints(), evaluator, options, rng);

    // Freeze to whole cents and re-verify everything on the frozen table.
    CostTable exact = table_from(found.state, area, options);
    CostTable::Amounts rounded = exact.amounts().unaryExpr([](double v) { return round_cents(v); });
    CalibratedArea out{CostTable(area, rounded, options.currency), {}, {}, 0.0};
    out.constraints = check_repartition(out.table, scoped);
    if (!out.constraints.overall) {
      std::string violated;
      for (const auto& c : out.constraints.checks)
        if (!c.satisfied)
          violated += (violated.empty() ? "" : ", ") + c.constraint.label + " (" + std::string(to_string(c.constraint.ledger)) +
                      " observed " + std::to_string(c.observed_fraction) + ")";
      throw Error(ErrorCode::InfeasibleCalibration,
                  std::string(to_string(area)) + ": constraints cannot all be met: " + violated);
    }
    out.residuals = evaluator.residuals(out.table);
    std::string missed;
    for (const auto& r : out.residuals)
      if (r.residual > r.target.tolerance_pp)
        missed += (missed.empty() ? "" : "; ") + describe(r.target) + " residual " + std::to_string(r.residual) +
                  " pp > " + std::to_string(r.target.tolerance_pp);
    if (!missed.empty())
      throw Error(ErrorCode::InfeasibleCalibration, std::string(to_string(area)) + ": " + missed);

    const CostBreakdown b = cumulative_cost(out.table, options.horizon_years);
    out.capex_share = b.capex_total() / b.grand_total();
    result.areas.push_back(std::move(out));
  }
  return result;
}

}  // namespace netshare

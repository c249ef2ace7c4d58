#pragma once

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "netshare/costmodel.hpp"
#include "netshare/inventory.hpp"
#include "netshare/sharing.hpp"

namespace netshare::testing {

inline std::string fixtures() { return NETSHARE_TEST_FIXTURES; }

// Table 3 rows (passive, NodeB, RNC, backhaul, spectrum, SGSN) by column,
// copied from the source table independently of the preset code.
inline constexpr std::array<ElementClass, 6> kTable3Rows = {
    ElementClass::PassiveSite, ElementClass::NodeB,           ElementClass::RNC,
    ElementClass::Backhaul,    ElementClass::SpectrumLicense, ElementClass::CoreSGSN};

struct Table3Column {
  const char* name;
  std::array<bool, 6> marked;
};

inline constexpr std::array<Table3Column, 6> kTable3 = {{
    {"MOCN", {true, true, true, false, true, false}},
    {"MOCN + Backhaul", {true, true, true, true, true, false}},
    {"MOCN - Spectrum", {true, true, true, true, false, false}},
    {"GWCN", {true, true, true, false, true, true}},
    {"GWCN + Backhaul", {true, true, true, true, true, true}},
    {"GWCN - Spectrum", {true, true, true, true, false, true}},
}};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return uniform() < p; }

  /// Strictly positive totals on both ledgers; roughly a third of the entries are zero.
  CostTable table(AreaKind area = AreaKind::Urban) {
    CostTable::Amounts a;
    for (int i = 0; i < kClassCount; ++i)
      for (int l = 0; l < 2; ++l) a(i, l) = coin(0.3) ? 0.0 : std::pow(10.0, uniform(-1.0, 4.0));
    a(index_of(ElementClass::NodeB), 0) += 1.0;
    a(index_of(ElementClass::OAM), 1) += 1.0;
    return CostTable(area, a, "CU");
  }

  ClassSet subset() {
    ClassSet s;
    for (auto c : kAllClasses)
      if (coin()) s.insert(c);
    return s;
  }

  std::vector<double> split(int n) {
    std::vector<double> w(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (auto& x : w) sum += (x = uniform(0.05, 1.0));
    for (auto& x : w) x /= sum;
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) rest -= w[i];
    w.back() = rest;
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

struct OracleSavings {
  double capex = 0.0;
  double opex = 0.0;
  double total = 0.0;
};

/// Class-by-class enumeration with plain loops: which classes an operator
/// pays only its share of, and the resulting ledger sums.
inline OracleSavings brute_force(const CostTable& t, const SharingConfiguration& cfg, int horizon, int me,
                                 bool site_coupled = true) {
  double base_c = 0, base_o = 0, mine_c = 0, mine_o = 0;
  const bool site = cfg.is_shared(ElementClass::PassiveSite);
  for (auto c : kAllClasses) {
    bool shared = cfg.is_shared(c);
    if (c == ElementClass::InternationalConnectivity && cfg.intl_shared()) shared = true;
    if (site_coupled && site && (c == ElementClass::SiteRent || c == ElementClass::Power)) shared = true;
    const double r = shared ? cfg.split_ratios()[static_cast<std::size_t>(me)] : 1.0;
    const double capex = t.capex(c);
    const double opex = t.opex_annual(c) * horizon;
    base_c += capex;
    base_o += opex;
    mine_c += capex * r;
    mine_o += opex * r;
  }
  auto pct = [](double b, double s) { return b > 0 ? 100.0 * (b - s) / b : 0.0; };
  return {pct(base_c, mine_c), pct(base_o, mine_o), pct(base_c + base_o, mine_c + mine_o)};
}

inline bool close_rel(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace netshare::testing

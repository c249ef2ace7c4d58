#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace netshare {

/// Network element classes a cost entry can belong to. The enumeration is
/// closed; `kClassCount` sizes every per-class array in the library.
enum class ElementClass : int {
  PassiveSite = 0,
  Antenna,
  NodeB,
  RNC,
  Backhaul,
  CoreSGSN,
  CoreGGSN,
  OAM,
  SpectrumLicense,
  InternationalConnectivity,
  SiteRent,
  Power,
  Staff,
};

inline constexpr int kClassCount = 13;

inline constexpr std::array<ElementClass, kClassCount> kAllClasses = {
    ElementClass::PassiveSite, ElementClass::Antenna,   ElementClass::NodeB,
    ElementClass::RNC,         ElementClass::Backhaul,  ElementClass::CoreSGSN,
    ElementClass::CoreGGSN,    ElementClass::OAM,       ElementClass::SpectrumLicense,
    ElementClass::InternationalConnectivity,            ElementClass::SiteRent,
    ElementClass::Power,       ElementClass::Staff,
};

enum class ClassGroup { RAN, Transport, Core, Overhead };

constexpr int index_of(ElementClass c) noexcept { return static_cast<int>(c); }

constexpr ClassGroup group_of(ElementClass c) noexcept {
  switch (c) {
    case ElementClass::PassiveSite:
    case ElementClass::Antenna:
    case ElementClass::NodeB:
    case ElementClass::RNC:
      return ClassGroup::RAN;
    case ElementClass::Backhaul:
    case ElementClass::InternationalConnectivity:
      return ClassGroup::Transport;
    case ElementClass::CoreSGSN:
    case ElementClass::CoreGGSN:
      return ClassGroup::Core;
    default:
      return ClassGroup::Overhead;
  }
}

/// snake_case label used in every JSON/CSV document ("passive_site", "core_sgsn", ...).
std::string_view to_string(ElementClass c) noexcept;
std::optional<ElementClass> element_class_from_string(std::string_view label) noexcept;

enum class AreaKind { Urban, Suburban, Rural };

inline constexpr std::array<AreaKind, 3> kAllAreas = {AreaKind::Urban, AreaKind::Suburban,
                                                      AreaKind::Rural};

std::string_view to_string(AreaKind a) noexcept;
std::optional<AreaKind> area_from_string(std::string_view label) noexcept;

enum class Ledger { Capex = 0, Opex = 1 };

std::string_view to_string(Ledger l) noexcept;

}  // namespace netshare

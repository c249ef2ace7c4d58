#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netshare {

enum class ErrorCode {
  MissingCostEntry,
  InvalidAmount,
  InvalidProfile,
  ZeroTotalLedger,
  UnknownElementClass,
  UnknownArea,
  UnknownPreset,
  InvalidConfiguration,
  InvalidOperatorIndex,
  InvalidHorizon,
  ZeroBaseline,
  HorizonMismatch,
  AreaMismatch,
  MalformedScenario,
  InvalidScenario,
  InvalidSweepParameter,
  InfeasibleCalibration,
  MalformedDocument,
  IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for every domain failure; the code tells callers which.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netshare

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordkit {

// Domain error kinds. The enumerator name is what the CLI reports.
enum class Errc {
  NotFiniteIndex,
  NotNormal,
  SpecInvalid,
  OrderBudgetExceeded,
  NotUnimodular,
  ShapeMismatch,
  EigenvalueOnePresent,
  InconsistentInput,
  DimensionUnsupported,
  InvalidArgument,
  Overflow,
  ParseError,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::NotFiniteIndex: return "NotFiniteIndex";
    case Errc::NotNormal: return "NotNormal";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::OrderBudgetExceeded: return "OrderBudgetExceeded";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::EigenvalueOnePresent: return "EigenvalueOnePresent";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace jordkit

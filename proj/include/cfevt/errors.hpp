#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfevt {

/// Base of every error raised by the library. `kind()` is a stable,
/// machine-readable identifier used by the CLI's error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CFEVT_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

CFEVT_DEFINE_ERROR(InvalidArgument);
CFEVT_DEFINE_ERROR(PrecisionExhausted);
CFEVT_DEFINE_ERROR(ExactZero);
CFEVT_DEFINE_ERROR(DigitOverflow);
CFEVT_DEFINE_ERROR(ReconstructionDivergence);
CFEVT_DEFINE_ERROR(RegionViolation);
CFEVT_DEFINE_ERROR(OutsideDomain);
CFEVT_DEFINE_ERROR(InsufficientMass);
CFEVT_DEFINE_ERROR(MissingConstants);
CFEVT_DEFINE_ERROR(DualityViolation);

#undef CFEVT_DEFINE_ERROR

}  // namespace cfevt

#pragma once

#include <stdexcept>
#include <string>

namespace minkowski {

/// Broad failure class, used by the CLI to pick an exit status.
enum class ErrorCategory {
  kInput,    // bad argument, out of range, malformed file
  kNumeric,  // the computation itself broke down
};

class Error : public std::runtime_error {
 public:
  Error(std::string kind, ErrorCategory category, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)), category_(category) {}

  /// Stable machine-readable name, e.g. "SingularMatrix".
  const std::string& kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  std::string kind_;
  ErrorCategory category_;
};

#define MINKOWSKI_DEFINE_ERROR(Name, Category)                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what)                      \
        : Error(#Name, ErrorCategory::Category, what) {}        \
  };

MINKOWSKI_DEFINE_ERROR(InvalidArgument, kInput)
MINKOWSKI_DEFINE_ERROR(ParseError, kInput)
MINKOWSKI_DEFINE_ERROR(DimensionMismatch, kInput)
MINKOWSKI_DEFINE_ERROR(OutOfRange, kInput)
MINKOWSKI_DEFINE_ERROR(EmptyInterval, kInput)
MINKOWSKI_DEFINE_ERROR(LevelTooLarge, kInput)
MINKOWSKI_DEFINE_ERROR(DegreeTooLarge, kInput)
MINKOWSKI_DEFINE_ERROR(InsufficientMoments, kInput)
MINKOWSKI_DEFINE_ERROR(NonPositiveOffdiagonal, kInput)
MINKOWSKI_DEFINE_ERROR(SingularMatrix, kNumeric)
MINKOWSKI_DEFINE_ERROR(LostOrthogonality, kNumeric)

#undef MINKOWSKI_DEFINE_ERROR

}  // namespace minkowski

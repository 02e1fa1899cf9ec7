#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringcent {

enum class ErrorKind {
  NonAbelianAddition,
  NotAssociative,
  NotDistributive,
  NoAdditiveInverse,
  BadIdentityConvention,
  IndexOutOfRange,
  NotAdditiveSubgroup,
  NotPrime,
  NotOddPrime,
  TooLarge,
  PartialUniverse,
  UnknownSuite,
  EmptyUniverse,
  MalformedSpec,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonAbelianAddition: return "NonAbelianAddition";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NoAdditiveInverse: return "NoAdditiveInverse";
    case ErrorKind::BadIdentityConvention: return "BadIdentityConvention";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAdditiveSubgroup: return "NotAdditiveSubgroup";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PartialUniverse: return "PartialUniverse";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::EmptyUniverse: return "EmptyUniverse";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on the category rather than the message.
class RingError : public std::runtime_error {
 public:
  RingError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ringcent

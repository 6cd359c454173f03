#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace liouville {

// Base of every error raised by the library. name() is the stable identifier
// surfaced by the command-line front end ("SingularMatrix", ...).
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define LIOUVILLE_DEFINE_ERROR(Type)                                           \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string& what) : Error(#Type, what) {}             \
  }

LIOUVILLE_DEFINE_ERROR(InvalidArgument);
LIOUVILLE_DEFINE_ERROR(SingularMatrix);
LIOUVILLE_DEFINE_ERROR(TooManyLevels);
LIOUVILLE_DEFINE_ERROR(OutOfRange);
LIOUVILLE_DEFINE_ERROR(UnalignedExponent);
LIOUVILLE_DEFINE_ERROR(CoefficientOverflow);
LIOUVILLE_DEFINE_ERROR(ZeroMass);
LIOUVILLE_DEFINE_ERROR(NegativeRho);
LIOUVILLE_DEFINE_ERROR(HypothesisViolation);
LIOUVILLE_DEFINE_ERROR(PreconditionFailed);
LIOUVILLE_DEFINE_ERROR(DegenerateDirection);
LIOUVILLE_DEFINE_ERROR(NegativeGamma);
LIOUVILLE_DEFINE_ERROR(ZeroMassDensity);
LIOUVILLE_DEFINE_ERROR(NoConvergence);
LIOUVILLE_DEFINE_ERROR(StepFailure);

#undef LIOUVILLE_DEFINE_ERROR

// Raised when a normalized energy sits on a critical level; the degree is not
// defined there.
class OnCriticalSurface : public Error {
public:
  OnCriticalSurface(std::size_t index, double level, const std::string& what)
      : Error("OnCriticalSurface", what), index_(index), level_(level) {}

  // 1-based index k of the level n_k that was hit.
  std::size_t index() const noexcept { return index_; }
  double level() const noexcept { return level_; }

private:
  std::size_t index_;
  double level_;
};

} // namespace liouville

// Exception types thrown by the library. Each corresponds to a distinct
// rejection reason so callers can map failures to exit codes.
#pragma once

#include <stdexcept>
#include <string>

#include "ssdg/types.hpp"

namespace ssdg {

struct InvalidGrid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateExponent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InadmissibleParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSimplFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutsideSupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisconnectedSupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooFewSnapshots : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Blow-up detector: carries the simulation time at which the step failed
// (negative when unknown, i.e. thrown from a bare step()).
struct UnstableStep : std::runtime_error {
  explicit UnstableStep(const std::string& what, Real time = -1.0)
      : std::runtime_error(what), time(time) {}
  Real time;
};

}  // namespace ssdg

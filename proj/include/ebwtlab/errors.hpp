#pragma once

#include <stdexcept>
#include <string>

namespace ebwtlab {

/// A request exceeds a configured size or work guard. Never silently truncated.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A long-running computation observed a stop request.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

}  // namespace ebwtlab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// A requested construction or brute-force scan would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : std::runtime_error(what + ": requested " + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Two routes that must agree by theory produced different answers.
class InternalDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Tables that do not describe a commutative unital ring.
class InvalidRing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ringlab

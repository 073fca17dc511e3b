#pragma once

#include <stdexcept>
#include <string>

namespace onlinecut {

/// An input exceeded an enumeration or oracle capacity limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A guarantee that a construction or algorithm is supposed to uphold was
/// broken. Seeing one of these means a bug (or a false theorem).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An online algorithm tried to read past the end of its advice tape.
class TapeExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace onlinecut

#pragma once

#include <stdexcept>
#include <string>

namespace uacg {

// Input outside an operation's mathematical domain (even order where odd is
// required, non-prime modulus, reducible polynomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element tuple or vertex set does not fit the ring / graph it is used with.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance larger than the configured cap of an operation.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed descriptor or interchange file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coloring does not partition the vertex set (overlap, gap, empty class,
// duplicate label). Kept apart from color violations on purpose.
class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certificate failed its own check; raised by constructors that verify
// their output before returning it.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uacg

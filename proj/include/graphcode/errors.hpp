#pragma once

#include <stdexcept>
#include <string>

namespace graphcode {

/// Malformed or out-of-range input (bad endpoints, unknown ids, bad parameters).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation was refused because its input exceeds an enumeration cap.
class SizeError : public std::length_error {
 public:
  explicit SizeError(const std::string& what) : std::length_error(what) {}
};

/// Two independent routes disagreed, or a checked invariant failed.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace graphcode

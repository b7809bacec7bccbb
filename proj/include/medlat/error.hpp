#pragma once

#include <stdexcept>
#include <string>

namespace medlat {

/// Malformed or out-of-range user input (indices, files, formula text).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size or evaluation budget would be exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied to a structure that lacks a required property.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace medlat

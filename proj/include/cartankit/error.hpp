#pragma once

#include <stdexcept>
#include <string>

namespace cartankit {

/// Malformed input: bad JSON, dimension mismatch, violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Signals an implementation bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact search gave up (integer factoring beyond the trial-division bound).
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cartankit

#pragma once

#include <stdexcept>
#include <string>

namespace wcr {

enum class ErrorKind {
  parse,
  validation,
  key_mismatch,
  mode,
  infeasible,
  size_limit,
  search_limit,
  isolated_vertex,
  heterogeneous_ranges,
  dialect,
  not_enough_satisfied,
  inconsistent_solution,
  unsatisfied_clause,
  not_a_solution,
  not_gadget_instance,
  property_violation,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace wcr

#pragma once

#include <stdexcept>
#include <string>

namespace corepath {

// Failure reasons carried by every corepath::error. Each public precondition
// has its own code so callers (notably the CLI) can report and exit precisely.
enum class errc {
  invalid_argument,
  invalid_partition,
  invalid_beta_set,
  not_a_gap,
  outside_poset,
  not_an_order_ideal,
  adjacent_elements,
  wrong_side,
  index_out_of_range,
  invalid_height_sequence,
  length_mismatch,
  endpoint_not_positive,
  not_a_core,
  parts_not_distinct,
  guard_exceeded,
  verification_failed,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace corepath

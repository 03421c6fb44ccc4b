#ifndef SVRCAST_ERRORS_HPP
#define SVRCAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace svrcast {

// Stable error codes. The CLI maps these to exit codes and prints the
// symbolic name, so scripts can match on them.
enum class errc {
  degenerate_range,
  non_finite,
  series_too_short,
  empty_partition,
  dimension_mismatch,
  invalid_space,
  objective_non_finite,
  length_mismatch,
  empty_input,
  zero_actual,
  degenerate_variance,
  parse_error,
  non_monotonic_dates,
  non_positive_price,
  unsupported_algorithm,
  invalid_config,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace svrcast

#endif  // SVRCAST_ERRORS_HPP

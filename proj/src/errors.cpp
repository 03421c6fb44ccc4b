#include "svrcast/errors.hpp"

namespace svrcast {

const char* errc_name(errc code) {
  switch (code) {
    case errc::degenerate_range: return "DegenerateRange";
    case errc::non_finite: return "NonFinite";
    case errc::series_too_short: return "SeriesTooShort";
    case errc::empty_partition: return "EmptyPartition";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_space: return "InvalidSpace";
    case errc::objective_non_finite: return "ObjectiveNonFinite";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::empty_input: return "Empty";
    case errc::zero_actual: return "ZeroActual";
    case errc::degenerate_variance: return "DegenerateVariance";
    case errc::parse_error: return "ParseError";
    case errc::non_monotonic_dates: return "NonMonotonicDates";
    case errc::non_positive_price: return "NonPositivePrice";
    case errc::unsupported_algorithm: return "UnsupportedAlgorithm";
    case errc::invalid_config: return "InvalidConfig";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace svrcast

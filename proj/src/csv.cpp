#include "svrcast/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "svrcast/errors.hpp"

namespace svrcast {

namespace {

bool valid_iso_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  const int month = (s[5] - '0') * 10 + (s[6] - '0');
  const int day = (s[8] - '0') * 10 + (s[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

PriceSeries parse_price_csv(std::istream& in, const std::string& name) {
  PriceSeries out;
  out.series.name = name;

  std::string line;
  std::size_t row = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) {
      if (header_seen) continue;  // trailing blank lines are fine
      fail(errc::parse_error, "row 1: missing header line");
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      fail(errc::parse_error, "row " + std::to_string(row) + ": expected exactly 2 columns");
    }
    if (!header_seen) {
      header_seen = true;  // header content is free-form, two columns required
      continue;
    }

    const std::string date = line.substr(0, comma);
    const std::string value = line.substr(comma + 1);
    if (!valid_iso_date(date)) {
      fail(errc::parse_error,
           "row " + std::to_string(row) + ", column 1: '" + date + "' is not an ISO date");
    }
    if (!out.dates.empty() && date <= out.dates.back()) {
      fail(errc::non_monotonic_dates,
           "row " + std::to_string(row) + ": date " + date + " does not increase");
    }

    double close = 0.0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, close);
    if (ec != std::errc() || ptr != end) {
      fail(errc::parse_error,
           "row " + std::to_string(row) + ", column 2: '" + value + "' is not a number");
    }
    if (!std::isfinite(close) || close <= 0.0) {
      fail(errc::non_positive_price,
           "row " + std::to_string(row) + ": close must be a positive finite number");
    }

    out.dates.push_back(date);
    out.series.values.push_back(close);
  }
  if (!header_seen) fail(errc::parse_error, "file is empty, header required");
  if (out.series.values.empty()) fail(errc::empty_input, "no data rows after the header");
  return out;
}

PriceSeries load_price_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path.string());
  return parse_price_csv(in, path.stem().string());
}

TimeSeries load_csv(const std::filesystem::path& path) {
  return load_price_csv(path).series;
}

}  // namespace svrcast

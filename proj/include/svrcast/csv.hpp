#ifndef SVRCAST_CSV_HPP
#define SVRCAST_CSV_HPP

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "svrcast/phase_space.hpp"

namespace svrcast {

// Daily closes with their dates. Input format: a header line followed by
// `YYYY-MM-DD,close` rows with strictly increasing dates and positive,
// finite closes.
struct PriceSeries {
  TimeSeries series;
  std::vector<std::string> dates;
};

PriceSeries parse_price_csv(std::istream& in, const std::string& name);
PriceSeries load_price_csv(const std::filesystem::path& path);
TimeSeries load_csv(const std::filesystem::path& path);

}  // namespace svrcast

#endif  // SVRCAST_CSV_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "svrcast/errors.hpp"
#include "svrcast/phase_space.hpp"
#include "svrcast/rng.hpp"

using namespace svrcast;

namespace {

std::vector<double> logistic_map(double x0, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    x = 4.0 * x * (1.0 - x);
    out.push_back(x);
  }
  return out;
}

std::vector<double> sine_series(std::size_t n, double samples_per_period) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::sin(2.0 * std::acos(-1.0) * static_cast<double>(i) / samples_per_period);
  }
  return out;
}

}  // namespace

TEST_CASE("normalize maps endpoints and rejects degenerate input") {
  const auto [scaled, params] = normalize(TimeSeries{"t", {2.0, 4.0, 6.0}});
  CHECK(params.min == 2.0);
  CHECK(params.max == 6.0);
  CHECK(scaled.values == std::vector<double>{0.0, 0.5, 1.0});

  const auto [unit, up] = normalize(TimeSeries{"u", {0.0, 1.0}});
  CHECK(unit.values == std::vector<double>{0.0, 1.0});
  CHECK(up.min == 0.0);
  CHECK(up.max == 1.0);

  CHECK_THROWS_AS((void)normalize(TimeSeries{"c", {5.0, 5.0, 5.0}}), Error);
  CHECK_THROWS_AS((void)normalize(TimeSeries{"s", {5.0}}), Error);
  CHECK_THROWS_AS((void)normalize(TimeSeries{"n", {1.0, std::nan("")}}), Error);
}

TEST_CASE("denormalize inverts the normalization") {
  const NormalizationParams params{2.0, 6.0};
  CHECK(denormalize(0.5, params) == 4.0);
  CHECK(denormalize(0.0, params) == 2.0);
  CHECK(denormalize(1.0, params) == 6.0);

  Rng rng(5);
  std::vector<double> values(64);
  for (auto& v : values) v = rng.range(50.0, 300.0);
  const TimeSeries series{"rt", values};
  const auto [scaled, p] = normalize(series);
  const auto restored = denormalize(scaled.values, p);
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(restored[i] == doctest::Approx(values[i]).epsilon(1e-12));
  }

  // order preservation
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] <= values[i + 1]) {
      CHECK(scaled.values[i] <= scaled.values[i + 1]);
    } else {
      CHECK(scaled.values[i] >= scaled.values[i + 1]);
    }
  }
}

TEST_CASE("mutual information of a constant series is zero") {
  const std::vector<double> constant{3.0, 3.0, 3.0, 3.0, 3.0};
  CHECK(mutual_information(constant, 1, 2) == 0.0);
  CHECK(mutual_information(constant, 2, 8) == 0.0);
}

TEST_CASE("mutual information of the alternating series is exactly one bit") {
  const std::vector<double> alternating{0, 1, 0, 1, 0, 1, 0, 1, 0};
  CHECK(mutual_information(alternating, 1, 2) == 1.0);
}

TEST_CASE("mutual information drops from lag zero on the logistic map") {
  const auto series = logistic_map(0.3, 2000);
  const double mi0 = mutual_information(series, 0, 16);
  const double mi1 = mutual_information(series, 1, 16);
  CHECK(mi1 > 0.0);
  CHECK(mi1 < mi0);
}

TEST_CASE("mutual information estimator is symmetric under pair swap") {
  // Reversing the series turns each lagged pair (x_j, x_{j+tau}) into its
  // swap, so the estimate must match bit for bit (transposed histogram).
  Rng rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> series(120);
    for (auto& v : series) v = rng.range(-1.0, 1.0);
    std::vector<double> reversed(series.rbegin(), series.rend());
    const int tau = 1 + static_cast<int>(rng.index(6));
    const int bins = 2 + static_cast<int>(rng.index(10));
    CHECK(mutual_information(series, tau, bins) == mutual_information(reversed, tau, bins));
    CHECK(mutual_information(series, tau, bins) >= 0.0);
  }
}

TEST_CASE("mutual information rejects short series") {
  const std::vector<double> tiny{1.0, 2.0};
  CHECK_THROWS_AS((void)mutual_information(tiny, 2, 2), Error);
  CHECK_THROWS_AS((void)mutual_information(tiny, 5, 2), Error);
}

TEST_CASE("first_local_minimum follows the first-minimum rule") {
  const std::vector<double> curve{2.1, 1.0, 1.4, 0.8};
  const CurveMinimum m = first_local_minimum(curve);
  CHECK(m.index == 1);
  CHECK(m.is_local_minimum);

  // ties with the right neighbour count as a minimum
  const std::vector<double> tie{2.0, 1.0, 1.0, 1.5};
  CHECK(first_local_minimum(tie).index == 1);
  CHECK(first_local_minimum(tie).is_local_minimum);

  // strictly decreasing: argmin fallback lands on the last point
  const std::vector<double> falling{5.0, 4.0, 3.0, 2.0, 1.0};
  const CurveMinimum f = first_local_minimum(falling);
  CHECK(f.index == 4);
  CHECK_FALSE(f.is_local_minimum);
}

TEST_CASE("select_delay is deterministic and bounded") {
  const auto series = logistic_map(0.41, 600);
  const DelaySelection a = select_delay(series, 8, 12);
  const DelaySelection b = select_delay(series, 8, 12);
  CHECK(a.tau == b.tau);
  CHECK(a.mi_curve == b.mi_curve);
  CHECK(a.tau >= 1);
  CHECK(a.tau <= 8);
  CHECK(a.mi_curve.size() == 9);
}

TEST_CASE("select_delay finds the quarter-period minimum region of a sine") {
  const auto series = sine_series(480, 40.0);
  const DelaySelection d = select_delay(series, 15);
  CHECK(d.tau >= 1);
  CHECK(d.tau <= 15);
}

TEST_CASE("false nearest neighbors selects m=2 for a planar orbit") {
  const auto series = sine_series(480, 40.0);
  const DimensionSelection d = select_dimension(series, 10, 5);
  CHECK(d.m == 2);
  CHECK(d.converged);
  for (double f : d.fnn_fractions) {
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
}

TEST_CASE("false nearest neighbors does not converge on iid noise") {
  Rng rng(2024);
  std::vector<double> noise(500);
  for (auto& v : noise) v = rng.unit();
  const DimensionSelection d = select_dimension(noise, 1, 6);
  CHECK(d.m == 6);
  CHECK_FALSE(d.converged);
  CHECK(d.fnn_fractions.size() == 6);
  for (double f : d.fnn_fractions) CHECK(f > 0.01);
}

TEST_CASE("embed lays out the delay matrix and targets") {
  std::vector<double> ramp(10);
  std::iota(ramp.begin(), ramp.end(), 1.0);

  const EmbeddedDataset d = embed(ramp, EmbeddingSpec{2, 3});
  REQUIRE(d.rows() == 6);
  const std::vector<std::vector<double>> want_x{{1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}, {6, 9}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(d.X[i][0] == want_x[i][0]);
    CHECK(d.X[i][1] == want_x[i][1]);
  }
  CHECK(d.Y == std::vector<double>{5, 6, 7, 8, 9, 10});

  const EmbeddedDataset lag1 = embed(std::vector<double>{1, 2, 3, 4, 5}, EmbeddingSpec{1, 1});
  REQUIRE(lag1.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(lag1.X[i][0] == static_cast<double>(i + 1));
  CHECK(lag1.Y == std::vector<double>{2, 3, 4, 5});

  CHECK_THROWS_AS((void)embed(ramp, EmbeddingSpec{4, 3}), Error);  // 10 - 1 - 9 = 0 rows
}

TEST_CASE("embedding shape law holds across a parameter sweep") {
  for (int n = 5; n <= 32; ++n) {
    std::vector<double> ramp(static_cast<std::size_t>(n));
    std::iota(ramp.begin(), ramp.end(), 1.0);
    for (int m = 1; m <= 4; ++m) {
      for (int tau = 1; tau <= 5; ++tau) {
        const int rows = n - 1 - (m - 1) * tau;
        if (rows < 1) {
          CHECK_THROWS_AS((void)embed(ramp, EmbeddingSpec{m, tau}), Error);
          continue;
        }
        const EmbeddedDataset d = embed(ramp, EmbeddingSpec{m, tau});
        REQUIRE(d.rows() == static_cast<std::size_t>(rows));
        REQUIRE(d.Y.size() == d.rows());
        for (int i = 0; i < rows; ++i) {
          for (int j = 0; j < m; ++j) {
            // 1-based: X[i][j] = x_{(i+1) + j*tau}
            CHECK(d.X[static_cast<std::size_t>(i)][j] == static_cast<double>(i + 1 + j * tau));
          }
          CHECK(d.Y[static_cast<std::size_t>(i)] ==
                static_cast<double>(i + 1 + (m - 1) * tau + 1));
        }
      }
    }
  }
}

TEST_CASE("split keeps chronology and rejects empty sides") {
  std::vector<double> ramp(12);
  std::iota(ramp.begin(), ramp.end(), 1.0);
  const EmbeddedDataset d = embed(ramp, EmbeddingSpec{2, 1});  // 10 rows

  const auto [train, test] = split(d, 0.8);
  CHECK(train.rows() == 8);
  CHECK(test.rows() == 2);
  CHECK(train.Y.front() == d.Y.front());
  CHECK(test.Y.back() == d.Y.back());
  CHECK(test.X[0][0] == d.X[8][0]);

  std::vector<double> five(7);
  std::iota(five.begin(), five.end(), 1.0);
  const EmbeddedDataset d5 = embed(five, EmbeddingSpec{2, 1});  // 5 rows
  const auto [t5, e5] = split(d5, 0.8);
  CHECK(t5.rows() == 4);
  CHECK(e5.rows() == 1);

  std::vector<double> three{1.0, 2.0, 3.0};
  const EmbeddedDataset d1 = embed(three, EmbeddingSpec{2, 1});  // 1 row
  CHECK_THROWS_AS((void)split(d1, 0.8), Error);
}

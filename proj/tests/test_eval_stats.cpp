#include <cmath>
#include <vector>

#include <doctest.h>

#include "svrcast/errors.hpp"
#include "svrcast/eval_stats.hpp"
#include "svrcast/rng.hpp"

using namespace svrcast;

TEST_CASE("mse hand examples") {
  const std::vector<double> y{1.0, 2.0};
  CHECK(mse(y, y) == 0.0);
  CHECK(mse(std::vector<double>{1.0, 2.0}, std::vector<double>{0.0, 2.0}) ==
        doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS((void)mse(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}), Error);
  CHECK_THROWS_AS((void)mse(std::vector<double>{}, std::vector<double>{}), Error);
}

TEST_CASE("mse is symmetric and zero only on identical vectors") {
  Rng rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      a[i] = rng.range(-10, 10);
      b[i] = rng.range(-10, 10);
    }
    CHECK(mse(a, b) == mse(b, a));
    if (a != b) CHECK(mse(a, b) > 0.0);
  }
}

TEST_CASE("mape hand examples") {
  CHECK(mape(std::vector<double>{2.0}, std::vector<double>{1.0}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  const std::vector<double> y{3.0, 4.0, 5.0};
  CHECK(mape(y, y) == 0.0);
  CHECK_THROWS_AS((void)mape(std::vector<double>{0.0, 1.0}, std::vector<double>{1.0, 1.0}),
                  Error);
}

TEST_CASE("mape is invariant under positive scaling") {
  Rng rng(7);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<double> y(4), f(4);
    for (int i = 0; i < 4; ++i) {
      y[i] = rng.range(0.5, 20.0);
      f[i] = rng.range(0.5, 20.0);
    }
    // Power-of-two factors keep the scaling exact in floating point.
    const int e = static_cast<int>(rng.index(17)) - 8;
    const double k = std::ldexp(1.0, e);
    std::vector<double> ys(4), fs(4);
    for (int i = 0; i < 4; ++i) {
      ys[i] = k * y[i];
      fs[i] = k * f[i];
    }
    CHECK(mape(ys, fs) == mape(y, f));

    // Arbitrary factors agree within rounding.
    const double k2 = rng.range(0.1, 9.0);
    for (int i = 0; i < 4; ++i) {
      ys[i] = k2 * y[i];
      fs[i] = k2 * f[i];
    }
    CHECK(mape(ys, fs) == doctest::Approx(mape(y, f)).epsilon(1e-12));
  }
}

TEST_CASE("dm_test hand computation") {
  // errors chosen so the squared-loss differential is d = [1, 2, 3, 4]:
  // mean 2.5, unbiased variance 5/3, statistic 2.5 / sqrt((5/3)/4) = sqrt(15).
  const std::vector<double> a{1.0, std::sqrt(2.0), std::sqrt(3.0), 2.0};
  const std::vector<double> b{0.0, 0.0, 0.0, 0.0};
  const DmResult r = dm_test(a, b);
  CHECK(r.statistic == doctest::Approx(3.872983346207417).epsilon(1e-12));
  CHECK(r.significant);
}

TEST_CASE("dm_test zero-mean differential is not significant") {
  // d = [1, -1, 1, -1]
  const std::vector<double> a{1.0, 0.0, 1.0, 0.0};
  const std::vector<double> b{0.0, 1.0, 0.0, 1.0};
  const DmResult r = dm_test(a, b);
  CHECK(r.statistic == 0.0);
  CHECK_FALSE(r.significant);
}

TEST_CASE("dm_test degenerate cases") {
  const std::vector<double> a{0.5, -0.25, 0.125};
  CHECK_THROWS_AS((void)dm_test(a, a), Error);  // identical losses
  // constant nonzero differential also has zero variance
  const std::vector<double> b{1.0, 1.0, 1.0};
  const std::vector<double> c{0.0, 0.0, 0.0};
  CHECK_THROWS_WITH_AS((void)dm_test(b, c), doctest::Contains("zero variance"), Error);
  CHECK_THROWS_AS((void)dm_test(std::vector<double>{1.0}, std::vector<double>{2.0}), Error);
}

TEST_CASE("dm_test antisymmetry and permutation invariance") {
  Rng rng(1234);
  int tested = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 2 + rng.index(30);
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng.range(-2, 2);
      b[i] = rng.range(-2, 2);
    }
    DmResult fwd;
    try {
      fwd = dm_test(a, b);
    } catch (const Error&) {
      continue;  // degenerate draw
    }
    const DmResult rev = dm_test(b, a);
    CHECK(fwd.statistic == -rev.statistic);
    CHECK(fwd.significant == rev.significant);

    // joint permutation of the time index leaves the statistic unchanged
    std::vector<double> ap(a), bp(b);
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = rng.index(i);
      std::swap(ap[i - 1], ap[j]);
      std::swap(bp[i - 1], bp[j]);
    }
    const DmResult perm = dm_test(ap, bp);
    CHECK(perm.statistic == doctest::Approx(fwd.statistic).epsilon(1e-9));
    ++tested;
  }
  CHECK(tested > 900);
}

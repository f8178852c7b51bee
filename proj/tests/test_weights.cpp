#include <doctest.h>

#include <cmath>

#include "seqspace/error.hpp"
#include "seqspace/orlicz.hpp"
#include "seqspace/weights.hpp"

using namespace seqspace;

TEST_SUITE("weights") {
  TEST_CASE("power sums agree with direct summation") {
    for (long double s : {0.5L, 1.0L, 1.5L, -0.5L}) {
      const auto W = PowerSums::power(s);
      long double acc = 0.0L;
      for (std::uint64_t m = 1; m <= 200000; ++m) {
        acc += std::pow(static_cast<long double>(m), -s);
        if (m % 9973 == 0 || m == 200000)
          CHECK(static_cast<double>(W->prefix(m)) == doctest::Approx(static_cast<double>(acc)).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("power sums far out match zeta differences") {
    // zeta(s) - zeta(s, m + 1), mpmath at 30 digits
    const long double m = std::exp2(40.0L);
    CHECK(static_cast<double>(PowerSums::power(0.5L)->prefix(m)) ==
          doctest::Approx(2097150.53964596802757139).epsilon(1e-13));
    CHECK(static_cast<double>(PowerSums::power(1.5L)->prefix(m)) ==
          doctest::Approx(2.612373441336855531282248).epsilon(1e-13));
  }

  TEST_CASE("weights of every form") {
    const auto w = WeightSeq::power(0.25);
    CHECK(w(16) == doctest::Approx(0.5));
    CHECK(w.log2_at_pow2(400) == doctest::Approx(-100.0));
    const auto a = WeightSeq::array({1.0, 0.5, 0.5});
    CHECK(a.length() == 3);
    CHECK_FALSE(a.unbounded());
    CHECK_THROWS_AS(a.require_unbounded("test"), Error);
    CHECK_THROWS_AS(WeightSeq::array({1.0, 2.0}), Error);
    const auto g = WeightSeq::generator([](std::uint64_t k) { return 1.0 / std::log2(2.0 * k); }, "1/log2(2k)");
    CHECK(g(4) == doctest::Approx(1.0 / 3.0));
    CHECK(static_cast<double>(PowerSums::of(g, 1.0, 64)->prefix(2)) == doctest::Approx(1.5));
    CHECK_THROWS_AS(WeightSeq::generator([](std::uint64_t k) { return static_cast<double>(k); }, "up"), Error);
  }

  TEST_CASE("orlicz inverse") {
    CHECK(orlicz_inverse(OrliczFn::power(2.0), 9.0) == doctest::Approx(3.0));
    CHECK(orlicz_inverse(OrliczFn::power(2.0), 1.0 / 16.0) == doctest::Approx(0.25));
    CHECK(orlicz_inverse(OrliczFn::power(2.0), 0.0) == 0.0);
    const auto N = OrliczFn::power_log(2.0, 0.5);
    for (double s : {1e-12, 1e-3, 0.3, 1.0, 7.0, 1e6}) CHECK(N(orlicz_inverse(N, s)) == doctest::Approx(s).epsilon(1e-10));
    CHECK(N(1.0) == doctest::Approx(1.0));
  }

  TEST_CASE("delta2 margin") {
    for (double p : {1.0, 2.0, 3.5}) CHECK(delta2_margin(OrliczFn::power(p), 1e-8, 200) == doctest::Approx(std::pow(2.0, p)));
    const auto E = OrliczFn::custom([](double t) { return t * t * std::exp(t - 1.0); }, "t^2 e^{t-1}");
    const double m = delta2_margin(E, 1e-8, 200);
    CHECK(m <= 4.0 * std::exp(1.0));
    CHECK(m >= 4.0);
    CHECK_THROWS_AS(OrliczFn::custom([](double t) { return std::sqrt(t); }, "sqrt"), Error);
  }
}

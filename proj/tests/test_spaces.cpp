#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "seqspace/error.hpp"
#include "seqspace/random.hpp"
#include "seqspace/spaces.hpp"

using namespace seqspace;

namespace {

std::vector<SpaceSpec> variants() {
  return {SpaceSpec::lp(1.0),
          SpaceSpec::lp(2.0),
          SpaceSpec::lp(3.5),
          SpaceSpec::lp(kInf),
          SpaceSpec::lpq(2.0, 1.0),
          SpaceSpec::lpq(3.0, 2.0),
          SpaceSpec::lpq(2.0, kInf),
          SpaceSpec::lorentz(1.0, WeightSeq::power(0.3)),
          SpaceSpec::lorentz(2.0, WeightSeq::power(0.25)),
          SpaceSpec::orlicz(OrliczFn::power(3.0)),
          SpaceSpec::orlicz(OrliczFn::power_log(2.0, 0.5))};
}

}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("worked norm values") {
    CHECK(norm(SpaceSpec::lp(2.0), Seq{3.0, 4.0}) == doctest::Approx(5.0));
    CHECK(norm(SpaceSpec::lp(kInf), Seq{3.0, -4.0}) == doctest::Approx(4.0));
    CHECK(norm(SpaceSpec::lorentz(1.0, WeightSeq::array({1.0, 0.5, 0.25})), Seq{1.0, 1.0, 1.0}) ==
          doctest::Approx(1.75));
    CHECK(norm(SpaceSpec::orlicz(OrliczFn::power(3.0)), Seq{1.0, 1.0}) ==
          doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
    CHECK(norm(SpaceSpec::lpq(2.0, kInf), Seq{1.0, 1.0, 1.0, 1.0}) == doctest::Approx(2.0));
    CHECK(fundamental_function(SpaceSpec::lp(3.0), 8.0L) == doctest::Approx(2.0));
  }

  TEST_CASE("oracle values") {
    // mpmath at 30 digits
    CHECK(norm(SpaceSpec::lpq(2.0, 1.0), Seq{3.0, 1.0, 2.0}) == doctest::Approx(4.99156383156272081).epsilon(1e-13));
    CHECK(norm(SpaceSpec::orlicz(OrliczFn::power_log(2.0, 0.5)), Seq{1.0, 0.5, 0.25}) ==
          doctest::Approx(1.26326102617896052).epsilon(1e-10));
    CHECK(fundamental_function(SpaceSpec::orlicz(OrliczFn::power_log(2.0, 0.5)), 16.0L) ==
          doctest::Approx(5.43538848375794977).epsilon(1e-10));
    CHECK(norm(SpaceSpec::lorentz(2.0, WeightSeq::power(0.25)), Seq{1.0, 0.5}) ==
          doctest::Approx(1.08479338829872893).epsilon(1e-13));
    CHECK(fundamental_function(SpaceSpec::lorentz(2.0, WeightSeq::power(0.25)), 4.0L) ==
          doctest::Approx(1.66866924534977071).epsilon(1e-13));
  }

  TEST_CASE("fundamental function at astronomical n") {
    const long double n = std::exp2(100.0L);
    CHECK(log2_fundamental(SpaceSpec::lp(2.0), n) == doctest::Approx(50.0));
    CHECK(log2_fundamental(SpaceSpec::lpq(4.0, 2.0), n) == doctest::Approx(25.5).epsilon(1e-9));
    CHECK(log2_fundamental(SpaceSpec::orlicz(OrliczFn::power(3.0)), n) == doctest::Approx(100.0 / 3.0).epsilon(1e-9));
    CHECK(std::isfinite(log2_fundamental(SpaceSpec::lorentz(2.0, WeightSeq::power(0.25)), n)));
  }

  TEST_CASE("runs and huge counts") {
    const Runs r = runs_of(std::vector<double>{1.0, -3.0, 1.0, 0.0, 2.0});
    REQUIRE(r.size() == 3);
    CHECK(r[0].value == 3.0);
    CHECK(r[2].count == 2.0L);
    const Runs big{{1.0, std::exp2(60.0L)}};
    CHECK(norm_of_runs(SpaceSpec::lp(2.0), big) == doctest::Approx(std::exp2(30.0)));
    CHECK(norm_of_runs(SpaceSpec::lp(kInf), big) == doctest::Approx(1.0));
  }

  TEST_CASE("rejects invalid parameters") {
    CHECK_THROWS_AS(SpaceSpec::lp(0.5), Error);
    CHECK_THROWS_AS(SpaceSpec::lpq(1.0, 2.0), Error);
    CHECK_THROWS_AS(SpaceSpec::lorentz(0.5, WeightSeq::power(0.2)), Error);
    CHECK_THROWS_AS(WeightSeq::power(-0.1), Error);
    CHECK_THROWS_AS(norm(SpaceSpec::lorentz(1.0, WeightSeq::array({1.0, 0.5})), Seq{1.0, 1.0, 1.0}), Error);
  }

  TEST_CASE("norm axioms and symmetry on random vectors") {
    Rng rng(kDefaultSeed);
    std::normal_distribution<double> g;
    for (const auto& X : variants()) {
      CAPTURE(X.describe());
      for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 64);
        std::vector<double> a(n), b(n);
        for (auto& v : a) v = g(rng);
        for (auto& v : b) v = g(rng);
        const double na = norm(X, Seq(a));
        const double nb = norm(X, Seq(b));
        std::vector<double> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = a[i] + b[i];
        CHECK(norm(X, Seq(s)) <= (na + nb) * (1 + 1e-9));
        std::vector<double> c = a;
        for (auto& v : c) v *= -2.5;
        CHECK(norm(X, Seq(c)) == doctest::Approx(2.5 * na).epsilon(1e-9));
        std::vector<double> p = a;
        std::shuffle(p.begin(), p.end(), rng);
        for (std::size_t i = 0; i < n; i += 2) p[i] = -p[i];
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(rng() % (n + 1)), 0.0);
        CHECK(norm(X, Seq(p)) == doctest::Approx(na).epsilon(1e-12));
        std::vector<double> m = a;
        for (auto& v : m) v *= 0.5 + 0.5 * std::fabs(std::sin(v));
        CHECK(norm(X, Seq(m)) <= na * (1 + 1e-12));
      }
      CHECK(norm(X, Seq::unit(1)) == doctest::Approx(1.0));
      CHECK(norm(X, Seq{}) == 0.0);
    }
  }

  TEST_CASE("fundamental function is increasing and quasi-concave") {
    for (const auto& X : variants()) {
      CAPTURE(X.describe());
      double prev = 0.0;
      for (int n = 1; n <= 512; ++n) {
        const double f = fundamental_function(X, n);
        CHECK(f >= prev * (1 - 1e-12));
        CHECK(f / n <= prev / std::max(n - 1, 1) * (1 + 1e-12) + (n == 1 ? 1.0 : 0.0));
        CHECK(f == doctest::Approx(norm(X, Seq::indicator(static_cast<std::size_t>(n)))).epsilon(1e-10));
        prev = f;
      }
    }
  }
}

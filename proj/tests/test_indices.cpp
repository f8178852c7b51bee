#include <doctest.h>

#include <cmath>

#include "seqspace/error.hpp"
#include "seqspace/indices.hpp"

using namespace seqspace;

TEST_SUITE("indices") {
  TEST_CASE("closed forms") {
    for (double p : {1.0, 2.0, 4.0}) {
      const auto r = index_report(SpaceSpec::lp(p));
      CHECK(r.alpha_point == doctest::Approx(1.0 / p));
      CHECK(r.beta_point == doctest::Approx(1.0 / p));
      CHECK(r.mu == doctest::Approx(1.0 / p));
      CHECK(r.nu == doctest::Approx(1.0 / p));
      CHECK(r.f_interval.first == doctest::Approx(p));
      CHECK(r.f_interval.second == doctest::Approx(p));
    }
    const auto inf = index_report(SpaceSpec::lp(kInf));
    CHECK(inf.alpha_point == 0.0);
    CHECK(std::isinf(inf.f_interval.second));
    const auto weak = boyd_indices(SpaceSpec::lpq(3.0, kInf));
    CHECK(weak.alpha.point == doctest::Approx(1.0 / 3.0));
    CHECK(weak.alpha.method == "closed_form");
  }

  TEST_CASE("Lorentz indices against frozen oracle values") {
    // mpmath, sup over all j <= 2^14, slope between n = 47 and 48
    struct Case {
      double q, theta, alpha, beta;
    };
    for (const Case& c : {Case{1.0, 0.3, 0.700000000000049, 0.700000000043815},
                          Case{2.0, 0.25, 0.250000000101594, 0.250000013004009},
                          Case{2.0, 0.4, 0.100017616819605, 0.100122819916346}}) {
      CAPTURE(c.theta);
      const auto ip = boyd_indices(SpaceSpec::lorentz(c.q, WeightSeq::power(c.theta)));
      CHECK(ip.alpha.point == doctest::Approx(c.alpha).epsilon(1e-8));
      CHECK(ip.beta.point == doctest::Approx(c.beta).epsilon(1e-8));
      CHECK(ip.alpha.method == "truncated_sup");
    }
  }

  TEST_CASE("Orlicz indices against frozen oracle values") {
    const auto r = index_report(SpaceSpec::orlicz(OrliczFn::power_log(2.0, 0.5)));
    CHECK(r.alpha_point == doctest::Approx(0.503147952721328636).epsilon(1e-9));
    CHECK(r.beta_point == doctest::Approx(0.527660812594510669).epsilon(1e-9));
    CHECK(r.mu == doctest::Approx(0.503147952721328636).epsilon(1e-9));
    CHECK(r.nu == doctest::Approx(0.527660812594510669).epsilon(1e-9));
    for (double p : {1.0, 2.0, 3.0}) {
      const auto ip = orlicz_indices(OrliczFn::power(p), 20, 200);
      CHECK(ip.alpha.point == doctest::Approx(1.0 / p).epsilon(1e-12));
      CHECK(ip.beta.point == doctest::Approx(1.0 / p).epsilon(1e-12));
    }
  }

  TEST_CASE("l^{p,q} indices approach 1/p") {
    for (auto [p, q] : {std::pair{2.0, 1.0}, std::pair{3.0, 2.0}, std::pair{2.0, 4.0}}) {
      const auto ip = boyd_indices(SpaceSpec::lpq(p, q));
      CHECK(ip.alpha.point == doctest::Approx(1.0 / p).epsilon(1e-2));
      CHECK(ip.beta.point == doctest::Approx(1.0 / p).epsilon(1e-2));
    }
  }

  TEST_CASE("boundary Lorentz weight") {
    const auto ip = boyd_indices(SpaceSpec::lorentz(2.0, WeightSeq::power(0.5)));
    CHECK(ip.alpha.point < 2e-2);
    CHECK(ip.alpha.point >= 0.0);
  }

  TEST_CASE("simplified route needs the dyadic condition") {
    const auto ok = lorentz_indices(2.0, WeightSeq::power(0.25), 48, std::uint64_t{1} << 14, true);
    CHECK(ok.alpha.point == doctest::Approx(0.25).epsilon(1e-9));
    CHECK_THROWS_AS(lorentz_indices(2.0, WeightSeq::power(0.5), 48, std::uint64_t{1} << 14, true), Error);
    CHECK_THROWS_AS(lorentz_indices(2.0, WeightSeq::array({1.0, 0.5}), 48, 64, false), Error);
  }

  TEST_CASE("ordering chain and F interval") {
    for (const auto& X : {SpaceSpec::lp(1.5), SpaceSpec::lpq(3.0, 2.0), SpaceSpec::lorentz(1.0, WeightSeq::power(0.3)),
                          SpaceSpec::lorentz(2.0, WeightSeq::power(0.4)), SpaceSpec::orlicz(OrliczFn::power(3.0)),
                          SpaceSpec::orlicz(OrliczFn::power_log(2.0, 0.5))}) {
      CAPTURE(X.describe());
      const auto r = index_report(X);
      CHECK(ordering_chain_holds(r, 1e-6));
      const auto f = f_interval(r);
      CHECK(f.first == doctest::Approx(1.0 / r.beta_point));
      CHECK(f.second == doctest::Approx(1.0 / r.alpha_point));
      CHECK(r.alpha.lo <= r.alpha_point);
      CHECK(r.alpha_point <= r.alpha.hi);
    }
    const auto t = fundamental_type_check(index_report(SpaceSpec::lorentz(2.0, WeightSeq::power(0.25))));
    CHECK(t.evidence);
  }
}

#include <doctest.h>

#include <cmath>

#include "seqspace/error.hpp"
#include "seqspace/norm_search.hpp"

using namespace seqspace;

TEST_SUITE("norm_search") {
  TEST_CASE("doubling norm on l^p") {
    for (double p : {1.0, 2.0, 3.0}) {
      for (auto s : {SearchStrategy::structured, SearchStrategy::random, SearchStrategy::optimize}) {
        const auto c = operator_norm_lower(SpaceSpec::lp(p), OperatorSpec::doubling(), 256, s);
        CHECK(c.value <= std::exp2(1.0 / p) * (1 + 1e-12));
        if (s == SearchStrategy::structured) CHECK(c.value == doctest::Approx(std::exp2(1.0 / p)));
        CHECK(c.output_length <= 256);
      }
    }
  }

  TEST_CASE("certificates are reproducible") {
    const auto X = SpaceSpec::orlicz(OrliczFn::power_log(2.0, 0.5));
    const auto a = operator_norm_lower(X, OperatorSpec::dilate_up(3), 300, SearchStrategy::optimize);
    const auto b = operator_norm_lower(X, OperatorSpec::dilate_up(3), 300, SearchStrategy::optimize);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    const double direct = norm(X, seqspace::apply(OperatorSpec::dilate_up(3), a.witness)) / norm(X, a.witness);
    CHECK(a.value == doctest::Approx(direct).epsilon(1e-12));
  }

  TEST_CASE("spectral radius of the doubling operator and its inverse") {
    for (double p : {1.0, 2.0}) {
      const auto up = spectral_radius_estimate(SpaceSpec::lp(p), OperatorSpec::doubling(), 6, 1024);
      CHECK(up.at_n_max == doctest::Approx(std::exp2(1.0 / p)).epsilon(1e-9));
      const auto down = spectral_radius_estimate(SpaceSpec::lp(p), OperatorSpec::doubling_inverse(), 6, 1024);
      CHECK(down.at_n_max == doctest::Approx(std::exp2(-1.0 / p)).epsilon(1e-9));
    }
  }

  TEST_CASE("Lorentz dilation sups") {
    // mpmath: sup_j sqrt(H(2j)/H(j)) = sqrt(3/2) at j = 1
    const auto h = lorentz_dilation_norm(2.0, WeightSeq::power(0.5), 1, 256);
    CHECK(h.value == doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
    CHECK(h.argmax_j == 1);
    // q = 2, w = k^{-1/4}, n = 3: sup at j = 1, well above the limit 2^{3/4}
    const auto d = lorentz_dilation_norm(2.0, WeightSeq::power(0.25), 3, 4096);
    CHECK(d.value == doctest::Approx(2.0907981251).epsilon(1e-10));
    CHECK(d.value > std::exp2(0.75));
    const auto c = lorentz_contraction_norm(2.0, WeightSeq::power(0.25), 3, 4096);
    CHECK(c.value <= 1.0 + 1e-12);
    CHECK(c.value < std::exp2(-0.75));
    CHECK(c.value > 0.59);
  }

  TEST_CASE("strategy names") {
    CHECK(parse_strategy("optimize") == SearchStrategy::optimize);
    CHECK(std::string(strategy_name(SearchStrategy::random)) == "random");
    CHECK_THROWS_AS(parse_strategy("greedy"), Error);
  }
}

#include <doctest.h>

#include <cmath>

#include "seqspace/error.hpp"
#include "seqspace/lattices.hpp"
#include "seqspace/operators.hpp"

using namespace seqspace;

TEST_SUITE("lattices") {
  TEST_CASE("unit vector norms") {
    for (double p : {1.0, 2.0, 3.0}) {
      const auto E = LatticeSpec::ex(SpaceSpec::lp(p));
      for (std::size_t k = 1; k <= 10; ++k)
        CHECK(lattice_norm(E, Seq::unit(k)) == doctest::Approx(std::pow(2.0, (k - 1.0) / p)).epsilon(1e-13));
      const auto U = LatticeSpec::un(OrliczFn::power(p));
      for (std::size_t k = 1; k <= 10; ++k)
        CHECK(lattice_norm(U, Seq::unit(k)) == doctest::Approx(std::pow(2.0, (k - 1.0) / p)).epsilon(1e-12));
    }
    const auto W = LatticeSpec::wlq(2.0, MuSeq::array({1.0, 3.0, 5.0}));
    CHECK(lattice_norm(W, Seq::unit(2)) == doctest::Approx(3.0));
    CHECK(lattice_norm(W, Seq{1.0, 1.0}) == doctest::Approx(std::sqrt(10.0)));
  }

  TEST_CASE("unit_norms of E_{l^2}") {
    const auto s = unit_norms(LatticeSpec::ex(SpaceSpec::lp(2.0)), 4);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(s[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK(s[2] == doctest::Approx(2.0));
    CHECK(s[3] == doctest::Approx(2.0 * std::sqrt(2.0)));
  }

  TEST_CASE("E_X of a Lorentz space is the fundamental function at 2^{k-1}") {
    const auto X = SpaceSpec::lorentz(2.0, WeightSeq::power(0.25));
    const auto s = unit_norms(LatticeSpec::ex(X), 6);
    for (std::size_t k = 1; k <= 6; ++k) {
      double w = 0.0;
      for (std::size_t i = 1; i <= (std::size_t{1} << (k - 1)); ++i) w += std::pow(static_cast<double>(i), -0.5);
      CHECK(s[k - 1] == doctest::Approx(std::sqrt(w)).epsilon(1e-12));
    }
  }

  TEST_CASE("E_X norm is the X norm of the block embedding") {
    const auto X = SpaceSpec::orlicz(OrliczFn::power_log(2.0, 0.5));
    const auto E = LatticeSpec::ex(X);
    const Seq a{0.3, -1.0, 0.0, 2.0, 0.5};
    CHECK(lattice_norm(E, a) == doctest::Approx(norm(X, seqspace::apply(OperatorSpec::block_embed(), a))).epsilon(1e-13));
  }

  TEST_CASE("Lorentz mu weights") {
    const auto mu = MuSeq::from_lorentz(2.0, WeightSeq::power(0.25));
    for (std::uint64_t k = 1; k <= 12; ++k)
      CHECK(mu(k) == doctest::Approx(std::exp2((static_cast<double>(k) - 1.0) * 0.25)).epsilon(1e-13));
    CHECK(MuSeq::geometric(3.0)(4) == doctest::Approx(27.0));
  }

  TEST_CASE("shift exponents") {
    for (double q : {1.0, 2.0, 4.0}) {
      const auto se = shift_exponents(LatticeSpec::wlq(q, MuSeq::geometric(std::exp2(1.0 / q))), 20, 64);
      CHECK(se.k_plus == doctest::Approx(std::exp2(1.0 / q)).epsilon(1e-6));
      CHECK(se.k_minus == doctest::Approx(std::exp2(-1.0 / q)).epsilon(1e-6));
      CHECK(1.0 / se.k_minus <= se.k_plus * (1 + 1e-12));
      const auto su = shift_exponents(LatticeSpec::un(OrliczFn::power(q)), 20, 64);
      CHECK(su.k_plus == doctest::Approx(std::exp2(1.0 / q)).epsilon(1e-6));
      CHECK(su.k_minus == doctest::Approx(std::exp2(-1.0 / q)).epsilon(1e-6));
    }
    const auto lor = shift_exponents(LatticeSpec::ex(SpaceSpec::lorentz(2.0, WeightSeq::power(0.3))), 40, 120);
    CHECK(1.0 / lor.k_minus <= lor.k_plus * (1 + 1e-9));
    CHECK_THROWS_AS(shift_exponents(LatticeSpec::ex(SpaceSpec::lp(2.0)), 10, 10), Error);
  }

  TEST_CASE("dyadic samples and the sandwich") {
    CHECK(dyadic_samples(Seq{1.0, -5.0, 3.0, 2.0, 4.0}) == Seq{5.0, 4.0, 2.0});
    CHECK(sandwich_ratio(SpaceSpec::lp(1.0), Seq::unit(1)) == doctest::Approx(1.0));
    for (double p : {1.0, 2.0, 5.0})
      for (int m = 0; m <= 12; ++m) {
        const double r = sandwich_ratio(SpaceSpec::lp(p), Seq::indicator(std::size_t{1} << m));
        CHECK(r >= 1.0 - 1e-12);
        CHECK(r <= 5.0 + 1e-12);
      }
  }

  TEST_CASE("equivalence reports") {
    EquivalenceParams ep;
    ep.N = OrliczFn::power(2.0);
    const auto o = ex_equivalence_report(EquivalenceKind::orlicz_dyadic, ep, 100);
    CHECK(o.min_ratio >= 1.0 - 1e-10);
    CHECK(o.max_ratio <= 4.0 + 1e-10);
    CHECK(o.proven_hi == doctest::Approx(4.0));
    const auto l = ex_equivalence_report(EquivalenceKind::lorentz_dyadic, ep, 100);
    CHECK(l.min_ratio >= l.proven_lo - 1e-10);
    CHECK(l.max_ratio <= l.proven_hi + 1e-10);
    CHECK(parse_equivalence_kind("lorentz_dyadic") == EquivalenceKind::lorentz_dyadic);
    CHECK_THROWS_AS(parse_equivalence_kind("nope"), Error);
  }

  TEST_CASE("dyadic weight condition") {
    const auto ok = dyadic_weight_condition(2.0, WeightSeq::power(0.25), 20, 60);
    CHECK(ok.holds);
    CHECK(ok.estimate == doctest::Approx(std::exp2(0.25)).epsilon(1e-9));
    const auto flat = dyadic_weight_condition(1.0, WeightSeq::power(0.0), 20, 60);
    CHECK(flat.holds);
    CHECK(flat.estimate == doctest::Approx(1.0));
    const auto edge = dyadic_weight_condition(2.0, WeightSeq::power(0.5), 20, 60);
    CHECK_FALSE(edge.holds);
    CHECK(std::fabs(edge.margin) < 1e-9);
  }
}

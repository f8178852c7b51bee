#include <doctest.h>

#include <algorithm>
#include <random>

#include "seqspace/error.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/random.hpp"

using namespace seqspace;

namespace {

std::vector<mpq_class> rationals(std::initializer_list<int> xs) {
  std::vector<mpq_class> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("examples") {
    CHECK(seqspace::apply(OperatorSpec::dilate_up(2), Seq{1.0, 2.0}) == Seq{1.0, 1.0, 2.0, 2.0});
    CHECK(seqspace::apply(OperatorSpec::doubling(), Seq::unit(1)) == Seq{0.0, 1.0, 1.0});
    CHECK(seqspace::apply(OperatorSpec::dilate_down(2), Seq{1.0, 3.0, 5.0, 7.0}) == Seq{2.0, 6.0});
    CHECK(seqspace::apply(OperatorSpec::avg_project(), Seq{1.0, 2.0, 4.0}) == Seq{1.0, 3.0, 3.0});
    CHECK(seqspace::apply(OperatorSpec::block_embed(), Seq{1.0, 2.0}) == Seq{1.0, 2.0, 2.0});
    CHECK(seqspace::apply(OperatorSpec::shift(2), Seq{1.0}) == Seq{0.0, 0.0, 1.0});
    CHECK(seqspace::apply(OperatorSpec::shift(-1), Seq{1.0, 2.0}) == Seq{2.0});
    CHECK(seqspace::apply(OperatorSpec::avg_project_n(1), Seq{1.0, 3.0, 5.0}) == Seq{2.0, 2.0, 2.5, 2.5});
  }

  TEST_CASE("partial last block of sigma_{1/m} counts missing entries as zeros") {
    CHECK(seqspace::apply(OperatorSpec::dilate_down(2), Seq{2.0, 4.0, 6.0}) == Seq{3.0, 3.0});
  }

  TEST_CASE("D^{-1} D = I and D^{-n} = sigma_{1/2^n} tau_{-(2^n-1)}") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      const Seq x(random_signed(rng, 1 + i));
      CHECK(seqspace::apply(OperatorSpec::doubling_inverse(), seqspace::apply(OperatorSpec::doubling(), x)) == x);
      const Seq d3 = apply_power(OperatorSpec::doubling_inverse(), x, 3);
      const Seq e3 = seqspace::apply(OperatorSpec::dilate_down(8), seqspace::apply(OperatorSpec::shift(-7), x));
      for (std::size_t k = 0; k < std::max(d3.size(), e3.size()); ++k) CHECK(d3[k] == doctest::Approx(e3[k]).epsilon(1e-14));
    }
  }

  TEST_CASE("exact rational action") {
    const auto T = OperatorSpec::shift_minus_lambda(mpq_class(3, 2));
    CHECK(seqspace::apply(T, rationals({2})) == std::vector<mpq_class>{mpq_class(-3), mpq_class(2)});
    const auto Q = OperatorSpec::avg_project();
    const auto x = rationals({1, 2, 5, 7, 1});
    CHECK(seqspace::apply(Q, seqspace::apply(Q, x)) == seqspace::apply(Q, x));
  }

  TEST_CASE("parsing") {
    CHECK(OperatorSpec::parse("sigma_up:3").kind == OperatorSpec::Kind::dilate_up);
    CHECK(OperatorSpec::parse("tau:-2").param == -2);
    CHECK(OperatorSpec::parse("T:3/2").lambda == mpq_class(3, 2));
    CHECK(OperatorSpec::parse("Dl:0.75").lambda == mpq_class(3, 4));
    CHECK(parse_rational("1.25") == mpq_class(5, 4));
    CHECK_THROWS_AS(OperatorSpec::parse("bogus"), Error);
    CHECK_THROWS_AS(OperatorSpec::dilate_up(0), Error);
    CHECK_THROWS_AS(OperatorSpec::shift_minus_lambda(mpq_class(-1)), Error);
  }

  TEST_CASE("output lengths") {
    CHECK(OperatorSpec::doubling().output_length(5) == 11);
    CHECK(OperatorSpec::block_embed().output_length(3) == 7);
    CHECK(OperatorSpec::avg_project().output_length(5) == 7);
    CHECK(program_output_length({OperatorSpec::dilate_up(2), OperatorSpec::shift(1)}, 4) == 9);
    CHECK_THROWS_AS(seqspace::apply(OperatorSpec::block_embed(), Seq(std::vector<double>(25, 1.0))), Error);
  }
}

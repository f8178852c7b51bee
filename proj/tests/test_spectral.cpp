#include <doctest.h>

#include <cmath>
#include <utility>

#include "seqspace/error.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/random.hpp"
#include "seqspace/spectral.hpp"

using namespace seqspace;

namespace {

// Direct evaluation: build v_n entrywise and apply D - lambda densely.
double dense_vn_residual(double p, int n) {
  const std::size_t len = (std::size_t{1} << n) - 1;
  std::vector<double> v(len);
  for (int k = 1; k <= n; ++k)
    for (std::size_t i = (std::size_t{1} << (k - 1)) - 1; i < (std::size_t{1} << k) - 1; ++i)
      v[i] = std::pow(n, -1.0 / p) * std::pow(2.0, (1.0 - k) / p);
  const double lambda = std::exp2(1.0 / p);
  const Seq out = seqspace::apply(OperatorSpec::doubling(), Seq(v));
  long double s = 0.0L;
  for (std::size_t i = 0; i < out.size() || i < v.size(); ++i)
    s += std::pow(std::fabs(static_cast<long double>(out[i]) - lambda * (i < v.size() ? v[i] : 0.0)), p);
  return static_cast<double>(std::pow(s, 1.0L / p));
}

std::vector<mpq_class> random_rationals(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<mpq_class> v(n);
  for (auto& x : v) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  strip_trailing_zeros(v);
  return v;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("v_n in l^p matches direct evaluation and the rate (4/n)^{1/p}") {
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0})
      for (int n : {1, 2, 3, 5, 8, 12}) {
        CAPTURE(p);
        CAPTURE(n);
        const auto w = doubling_witness_vn(SpaceSpec::lp(p), p, n);
        CHECK(w.norm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(w.residual_raw == doctest::Approx(std::pow(4.0 / n, 1.0 / p)).epsilon(1e-9));
        CHECK(w.residual_raw == doctest::Approx(dense_vn_residual(p, n)).epsilon(1e-9));
        REQUIRE(w.predicted.has_value());
        CHECK(*w.predicted == doctest::Approx(w.residual).epsilon(1e-9));
      }
    CHECK(doubling_witness_vn(SpaceSpec::lp(2.0), 2.0, 1).residual == doctest::Approx(2.0));
  }

  TEST_CASE("v_n residuals decrease to zero in other spaces") {
    const std::pair<SpaceSpec, double> cases[] = {{SpaceSpec::lorentz(2.0, WeightSeq::power(0.25)), 4.0},
                                                  {SpaceSpec::orlicz(OrliczFn::power(3.0)), 3.0}};
    for (const auto& [X, p] : cases) {
      double prev = INFINITY;
      for (int n = 2; n <= 1024; n *= 2) {
        const double r = doubling_witness_vn(X, p, n).residual;
        CHECK(r <= prev + 1e-9);
        prev = r;
      }
      CHECK(prev < 0.5);
    }
  }

  TEST_CASE("dense seed path agrees with the level representation") {
    const auto X = SpaceSpec::lp(2.0);
    const auto a = doubling_witness_vn(X, 2.0, 6, Seq{0.0, 3.0});
    const auto b = doubling_witness_vn(X, 2.0, 6, Seq{0.0, 3.0, 0.0, 0.0});
    CHECK(a.method == "level_runs");
    const auto c = doubling_witness_vn(X, 2.0, 6, Seq{1.0, 1.0});
    CHECK(c.method == "dense");
    CHECK(a.residual == doctest::Approx(b.residual));
    CHECK_THROWS_AS(doubling_witness_vn(X, 2.0, 30, Seq{1.0, 1.0}), Error);
    CHECK_THROWS_AS(doubling_witness_vn(X, 2.0, 3, Seq{1.0, -1.0}), Error);
  }

  TEST_CASE("residual scan") {
    ScanOptions so;
    so.dim = 255;
    so.restarts = 3;
    const auto pts = residual_scan(SpaceSpec::lp(2.0), {std::sqrt(2.0), 2.5}, so);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].levels == 8);
    CHECK(pts[0].estimate <= std::sqrt(4.0 / 8.0) + 1e-12);
    CHECK(pts[0].estimate < pts[1].estimate);
    CHECK_THROWS_AS(residual_scan(SpaceSpec::lp(2.0), {0.0}), Error);
    CHECK_THROWS_AS(residual_scan(SpaceSpec::lp(2.0), {-1.0}), Error);
    // More room gives smaller estimates at the spectral endpoint.
    ScanOptions big = so;
    big.dim = 4095;
    CHECK(residual_scan(SpaceSpec::lp(2.0), {std::sqrt(2.0)}, big)[0].estimate < pts[0].estimate);
  }

  TEST_CASE("scan grid parsing") {
    const auto g = parse_grid("1:2:5");
    CHECK(g == std::vector<double>{1.0, 1.25, 1.5, 1.75, 2.0});
    CHECK_THROWS_AS(parse_grid("1:2"), Error);
    CHECK_THROWS_AS(parse_grid("1:2:0"), Error);
  }

  TEST_CASE("shift witness identity") {
    CHECK(shift_witness_identity(mpq_class(1), 2, 1).holds());
    CHECK(shift_witness_identity(mpq_class(3, 2), 5, 3).holds());
    CHECK(shift_witness_identity(0.7, 6, 2).holds());
    CHECK(shift_witness_identity(2.0, 9, 1).holds());
  }

  TEST_CASE("moment functional") {
    CHECK(moment_functional(2.0, Seq::unit(1)) == 2.0);
    const mpq_class lambda(5, 3);
    // e_{n+1} - lambda^n e_1 is in the range.
    for (int n = 1; n <= 6; ++n) {
      std::vector<mpq_class> a(n + 1, 0);
      mpq_class pw = 1;
      for (int i = 0; i < n; ++i) pw *= lambda;
      a[0] = -pw;
      a[n] = 1;
      CHECK(moment_functional(lambda, a) == 0);
    }
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_rationals(rng, 1 + i % 15);
      CHECK(moment_functional(lambda, seqspace::apply(OperatorSpec::shift_minus_lambda(lambda), a)) == 0);
    }
  }

  TEST_CASE("solving T_lambda a = b") {
    const mpq_class lambda(7, 4);
    std::vector<mpq_class> b{-lambda * lambda, 0, 1};
    CHECK(solve_T_lambda(lambda, b) == std::vector<mpq_class>{lambda, 1});
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_rationals(rng, 1 + i % 12);
      CHECK(solve_T_lambda(lambda, seqspace::apply(OperatorSpec::shift_minus_lambda(lambda), a)) == a);
    }
    CHECK_THROWS_WITH_AS(solve_T_lambda(lambda, std::vector<mpq_class>{1}), "b not in Im T_λ", Error);
    const Seq bd{-4.0, 0.0, 1.0};
    const Seq ad = solve_T_lambda(2.0, bd);
    CHECK(ad == Seq{2.0, 1.0});
    CHECK_THROWS_AS(solve_T_lambda(2.0, Seq::unit(1)), Error);
  }
}

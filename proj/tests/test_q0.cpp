#include <doctest.h>

#include <cmath>

#include "seqspace/error.hpp"
#include "seqspace/q0.hpp"

using namespace seqspace;

namespace {

QSeq unit(long num, long den) { return QSeq::unit(mpq_class(num, den)); }

std::vector<mpq_class> keys(const QSeq& x) {
  std::vector<mpq_class> k;
  for (const auto& [q, c] : x.entries()) k.push_back(q);
  return k;
}

}  // namespace

TEST_SUITE("q0") {
  TEST_CASE("D_2 and D_3 on unit vectors") {
    CHECK(keys(apply_q0(Q0Op::D3, unit(1, 6))) ==
          std::vector<mpq_class>{mpq_class(1, 18), mpq_class(7, 18), mpq_class(13, 18)});
    CHECK(keys(apply_q0(Q0Op::D2, unit(1, 2))) == std::vector<mpq_class>{mpq_class(1, 4), mpq_class(3, 4)});
    const QSeq six = apply_q0(Q0Op::D2, apply_q0(Q0Op::D3, unit(1, 6)));
    CHECK(six.size() == 6);
    for (const auto& [q, c] : six.entries()) CHECK(c == 1.0);
  }

  TEST_CASE("D_2 and D_3 commute") {
    const QSeq x = unit(2, 7);
    const auto a = apply_q0(Q0Op::D2, apply_q0(Q0Op::D3, x));
    const auto b = apply_q0(Q0Op::D3, apply_q0(Q0Op::D2, x));
    CHECK(a.entries() == b.entries());
  }

  TEST_CASE("keys stay reduced and inside (0,1)") {
    QSeq x;
    x.add(mpq_class(2, 4), 1.0);
    CHECK(x.entries().begin()->first.get_den() == 2);
    CHECK_THROWS_AS(x.add(mpq_class(1), 1.0), Error);
    x.add(mpq_class(1, 2), -1.0);
    CHECK(x.size() == 0);
  }

  TEST_CASE("exhaustive disjointness") {
    const auto one = verify_q0_disjointness(1, 1);
    CHECK(one.ok);
    REQUIRE(one.supports.size() == 1);
    CHECK(one.supports[0].second == 6);
    const auto d = verify_q0_disjointness(4, 4);
    CHECK(d.ok);
    CHECK_FALSE(d.collision.has_value());
    for (const auto& [lm, size] : d.supports)
      CHECK(size == static_cast<std::size_t>(std::pow(2, lm.first) * std::pow(3, lm.second)));
    bool saw72 = false;
    for (const auto& [lm, size] : d.supports) saw72 = saw72 || (lm == std::pair{3, 2} && size == 72);
    CHECK(saw72);
  }

  TEST_CASE("u_n residuals telescope to (2/n)^{1/p}") {
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0})
      for (int n = 1; n <= 10; ++n) {
        CAPTURE(p);
        CAPTURE(n);
        const auto u = q0_witness_un(p, n);
        CHECK(u.norm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(u.d2_residual == doctest::Approx(std::pow(2.0 / n, 1.0 / p)).epsilon(1e-10));
        CHECK(u.d3_residual == doctest::Approx(std::pow(2.0 / n, 1.0 / p)).epsilon(1e-10));
        CHECK(u.d3_telescoped == doctest::Approx(u.d3_residual).epsilon(1e-10));
        if (n <= 5) {
          CHECK(u.explicit_check);
          CHECK(u.explicit_max_deviation < 1e-12);
        }
      }
    const auto u = q0_witness_un(2.0, 4);
    CHECK(u.d2_residual == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
    CHECK(q0_witness_un(1.0, 9).d3_residual == doctest::Approx(2.0 / 9.0).epsilon(1e-10));
  }

  TEST_CASE("u_n errors") {
    CHECK_THROWS_AS(q0_witness_un(2.0, 13), Error);
    CHECK_THROWS_AS(q0_witness_un(0.5, 2), Error);
    CHECK_NOTHROW(q0_witness_un(2.0, 20, 20, 0));
  }
}

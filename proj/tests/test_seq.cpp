#include <doctest.h>

#include "seqspace/seq.hpp"

using namespace seqspace;

TEST_SUITE("seq") {
  TEST_CASE("storage drops trailing zeros") {
    const Seq x{1.0, 0.0, 2.0, 0.0, 0.0};
    CHECK(x.size() == 3);
    CHECK(x[5] == 0.0);
    CHECK(Seq{0.0, 0.0}.empty());
  }

  TEST_CASE("unit and indicator") {
    CHECK(Seq::unit(3) == Seq{0.0, 0.0, 1.0});
    CHECK(Seq::indicator(2) == Seq{1.0, 1.0});
  }

  TEST_CASE("rearrangement") {
    CHECK(rearrange(Seq{1.0, -3.0, 0.0, 2.0}) == Seq{3.0, 2.0, 1.0});
    const std::vector<double> v{0.5, -2.0, 0.0};
    CHECK(sorted_abs(v) == std::vector<double>{2.0, 0.5, 0.0});
  }

  TEST_CASE("disjoint sum and ordered distribution") {
    const Seq x{1.0, 2.0}, y{0.0, -1.0};
    CHECK(disjoint_sum(x, y) == Seq{1.0, 2.0, 0.0, -1.0});
    CHECK(same_ordered_distribution(Seq{2.0, 0.0, 1.0}, Seq{1.0, 2.0}));
    CHECK_FALSE(same_ordered_distribution(Seq{2.0, 1.0}, Seq{-2.0, 1.0}));
  }
}

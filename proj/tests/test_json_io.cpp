#include <doctest.h>

#include <cmath>

#include "seqspace/error.hpp"
#include "seqspace/json_io.hpp"

using namespace seqspace;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    space_from_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{0};
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("space kinds") {
    CHECK(space_from_text(R"({"kind":"lp","p":2})").name() == "lp");
    CHECK(std::isinf(space_from_text(R"({"kind":"lp","p":"inf"})").as<LpSpace>()->p));
    CHECK(space_from_text(R"({"kind":"lpq","p":2,"q":"inf"})").name() == "lpq");
    const auto lor = space_from_text(R"({"kind":"lorentz","q":2,"w":{"form":"power","theta":0.25}})");
    CHECK(lor.as<LorentzSpace>()->w.theta() == 0.25);
    const auto arr = space_from_text(R"({"kind":"lorentz","q":1,"w":{"form":"array","values":[1,0.5,0.25]}})");
    CHECK(norm(arr, Seq{1.0, 1.0, 1.0}) == doctest::Approx(1.75));
    const auto orl = space_from_text(R"({"kind":"orlicz","N":{"form":"power_log","p":2,"a":0.5}})");
    CHECK(orl.as<OrliczSpace>()->N.a() == 0.5);
  }

  TEST_CASE("errors") {
    CHECK(code_of("{\"kind\":") == ErrorCode::parse_error);
    CHECK(code_of(R"({"kind":"sobolev"})") == ErrorCode::unknown_kind);
    CHECK(code_of(R"({"kind":"lp","p":0.5})") == ErrorCode::range_error);
    CHECK(code_of(R"({"kind":"lp"})") != ErrorCode{0});
  }

  TEST_CASE("lattices") {
    const auto ex = lattice_from_text(R"({"kind":"ex","base":{"kind":"lp","p":2}})");
    CHECK(lattice_norm(ex, Seq::unit(3)) == doctest::Approx(2.0));
    const auto w = lattice_from_text(R"({"kind":"wlq","q":2,"mu":{"form":"geometric","ratio":2}})");
    CHECK(lattice_norm(w, Seq::unit(3)) == doctest::Approx(4.0));
    const auto wl = lattice_from_text(R"({"kind":"wlq","q":2,"mu":{"form":"lorentz","theta":0.25}})");
    CHECK(lattice_norm(wl, Seq::unit(5)) == doctest::Approx(2.0));
    CHECK(lattice_from_text(R"({"kind":"un","N":{"form":"power","p":3}})").name() == "un");
    CHECK_THROWS_AS(lattice_from_text(R"({"kind":"zz"})"), Error);
  }

  TEST_CASE("sequences and numbers") {
    const Seq x = seq_from_json(Json::parse("[1, -2.5, 0]"));
    CHECK(x == Seq{1.0, -2.5});
    CHECK(seq_from_json(to_json(Seq{0.1, 3.0})) == Seq{0.1, 3.0});
    CHECK(number(kInf) == "inf");
    CHECK(number(-kInf) == "-inf");
    CHECK(number(1.5) == 1.5);
  }

  TEST_CASE("report serialisation carries method tags") {
    const auto r = index_report(SpaceSpec::lp(2.0));
    const Json j = to_json(r);
    CHECK(j.contains("f_interval"));
    CHECK(j.dump().find("closed_form") != std::string::npos);
    const auto s = to_json(ScanPoint{1.5, 0.3, "block_profile", -1.0, 10});
    CHECK(s.dump().find("heuristic") != std::string::npos);
  }
}

#include <doctest.h>

#include "cmkit/errors.hpp"
#include "cmkit/serialize.hpp"

using namespace cmkit;

TEST_CASE("curve spec parsing") {
  CurveDescriptor c = parse_curve_spec(
      R"({"p": "5", "e": "1", "model": "short-weierstrass", "A": "1", "B": "0"})");
  REQUIRE(c.elliptic.has_value());
  CHECK(c.elliptic->trace == 2);
  CHECK(c.genus == 1);

  CurveDescriptor a = parse_curve_spec(R"({"q": "5", "zeta_numerator": ["1", "-2", "5"]})");
  CHECK(!a.elliptic.has_value());
  CHECK(a.genus == 1);

  CurveDescriptor p1 = parse_curve_spec(R"({"q": "5", "zeta_numerator": ["1"]})");
  CHECK(p1.genus == 0);

  // unknown keys are rejected
  CHECK_THROWS_AS(parse_curve_spec(
                      R"({"p": "5", "e": "1", "model": "short-weierstrass", "A": "1", "B": "0", "x": "1"})"),
                  DomainError);
  // integers must be decimal strings
  CHECK_THROWS_AS(parse_curve_spec(
                      R"({"p": 5, "e": "1", "model": "short-weierstrass", "A": "1", "B": "0"})"),
                  DomainError);
  CHECK_THROWS_AS(parse_curve_spec(R"({"p": "5"})"), DomainError);
  CHECK_THROWS_AS(parse_curve_spec("not json"), DomainError);
  CHECK_THROWS_AS(parse_curve_spec(R"({"q": "5", "zeta_numerator": ["1", "-6", "5"]})"),
                  DomainError);
}

TEST_CASE("classify report fields") {
  CurveDescriptor c = parse_curve_spec(
      R"({"p": "5", "e": "1", "model": "short-weierstrass", "A": "1", "B": "0"})");
  std::string rep = classify_report(*c.elliptic);
  CHECK(rep.find("\"ordinary\":true") != std::string::npos);
  CHECK(rep.find("\"trace\":\"2\"") != std::string::npos);
  CHECK(rep.find("\"cm_m\":\"-1\"") != std::string::npos);
  CHECK(rep.find("\"x\":\"1\"") != std::string::npos);
  CHECK(rep.find("\"y\":\"2\"") != std::string::npos);
}

TEST_CASE("decomposition reports round-trip") {
  for (unsigned g = 0; g <= 6; ++g)
    for (Level level : {Level::F, Level::Q}) {
      SummandMultiset expect = cm_tensor_decompose(g, level);
      SummandMultiset parsed = parse_summand_multiset(decompose_report(g, level));
      CHECK(parsed == expect);
    }
}

TEST_CASE("the g=3 report flags the multiplicity discrepancy") {
  std::string rep = decompose_report(3, Level::Q);
  CHECK(rep.find("notes") != std::string::npos);
  CHECK(rep.find("printed recurrence gives 2") != std::string::npos);
  // the F-level view agrees with the recurrence, so no note fires
  std::string frep = decompose_report(3, Level::F);
  CHECK(frep.find("\"notes\":[]") != std::string::npos);
}

TEST_CASE("match input parsing") {
  MatchInput in = parse_match_input(
      R"({"q": "113", "left": [{"m": "-1", "r": "2", "s": "0"}], "right": [{"m": "-1", "r": "2", "s": "0"}]})");
  CHECK(in.q == 113);
  CHECK(in.p == 113);
  REQUIRE(in.left.size() == 1);
  CHECK(in.left[0].m == -1);
  CHECK(in.left[0].r == 2);
  CHECK(in.left[0].s == 0);
}

#include <doctest.h>

#include "lcy/serialization.hpp"

using namespace lcy;
using namespace lcy::io;

TEST_CASE("rational values") {
  CHECK(rat_json(Rat(2, 3)) == json("2/3"));
  CHECK(rat_json(Rat(4)) == json("4"));
  CHECK(rat_from_json(json("2/3")) == Rat(2, 3));
  CHECK(rat_from_json(json(5)) == Rat(5));
  CHECK_THROWS_AS(rat_from_json(json("x")), ParseError);
  CHECK_THROWS_AS(rat_from_json(json::array()), ParseError);
}

TEST_CASE("curve divisor round-trip") {
  curves::CurveDivisor d = curves::make_curve_divisor(
      0, {{"p", Rat(1, 2)}, {"q", Rat(2, 3)}});
  CHECK(curve_divisor_from_json(to_json(d)) == d);
  CHECK_THROWS_AS(curve_divisor_from_json(json{{"genus", 0}}), ParseError);
  CHECK_THROWS_AS(curve_divisor_from_json(json{{"genus", 0}, {"points", json::array({json{{"label", "p"}}})}}),
                  ParseError);
}

TEST_CASE("presentation round-trip through both mirrors") {
  fp::Presentation p = fp::parse_presentation("<a,b,c | [a,b]c^-3, [a,c], [b,c]>");
  fp::Presentation q = presentation_from_json(to_json(p));
  CHECK(q.relators == p.relators);
  fp::Presentation r = presentation_from_json(json{{"generators", {"a", "b"}},
                                                   {"relators", {{1, 1}, {2, 2, 2}}}});
  CHECK(r.generator_count == 2);
  CHECK(r.relators[1] == fp::Word{2, 2, 2});
  CHECK_THROWS_AS(presentation_from_json(json{{"generators", {"a"}}}), ParseError);
}

TEST_CASE("coset tables are one-based in JSON") {
  fp::CosetTable t = fp::coset_enumerate(fp::parse_presentation("<a | a^3>"), {}, 100);
  json j = to_json(t);
  CHECK(j["status"] == "complete");
  CHECK(j["index"] == 3);
  CHECK(j["table"][0][0] == 2);  // coset 1 . a = coset 2
}

TEST_CASE("fan round-trip and both accepted spellings") {
  fan::Fan2D f = fan::make_fan({{1, 0}, {0, 1}, {-2, -3}});
  CHECK(fan_from_json(to_json(f)) == f);
  CHECK(fan_from_json(json::parse("[[1,0],[0,1],[-2,-3]]")) == f);
  CHECK_THROWS_AS(fan_from_json(json::parse("{\"rays\":[[1,0],[2]]}")), ParseError);
}

TEST_CASE("serialized output is byte-stable") {
  curves::CurveDivisor d = curves::make_curve_divisor(0, {{"z", Rat(1, 2)}, {"a", Rat(2, 3)}});
  auto cls = curves::classify_trichotomy(d);
  std::string once = to_json(cls).dump(2);
  std::string twice = to_json(curves::classify_trichotomy(d)).dump(2);
  CHECK(once == twice);
}

TEST_CASE("abelian invariants carry torsion as strings") {
  fp::AbelianInvariants inv = fp::abelianization(fp::parse_presentation("<a,b | a^2, b^4, [a,b]>"));
  json j = to_json(inv);
  CHECK(j["torsion"] == json::array({"2", "4"}));
  CHECK(j["free_rank"] == 0);
  CHECK(j["rank"] == 2);
}

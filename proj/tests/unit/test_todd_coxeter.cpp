#include <doctest.h>

#include <algorithm>
#include <random>

#include "lcy/todd_coxeter.hpp"

using namespace lcy;
using namespace lcy::fp;

TEST_CASE("triangle group orders") {
  // von Dyck order 2 / (1/2 + 1/q + 1/r - 1), asserted on the three
  // spherical cases used downstream
  CHECK(coset_enumerate(parse_presentation("<x,y | x^2, y^3, (xy)^3>"), {}, 10000).index() == 12);
  CHECK(coset_enumerate(parse_presentation("<x,y | x^2, y^3, (xy)^4>"), {}, 10000).index() == 24);
  CHECK(coset_enumerate(parse_presentation("<x,y | x^2, y^3, (xy)^5>"), {}, 10000).index() == 60);
}

TEST_CASE("dihedral family against the order-2n oracle") {
  for (int n = 1; n <= 8; ++n) {
    Presentation p = parse_presentation("<a,b | a^2, b^2>");
    p.add_relator(word_pow({1, 2}, n));
    CosetTable t = coset_enumerate(p, {}, 10000);
    REQUIRE(t.status == CosetTable::Status::Complete);
    CHECK(t.index() == 2 * n);
  }
}

TEST_CASE("subgroup enumeration") {
  // <a,b | a^2, b^2> has the normal subgroup <ab> = Z of index two
  Presentation dinf = parse_presentation("<a,b | a^2, b^2>");
  CosetTable t = coset_enumerate(dinf, {{1, 2}}, 1000);
  REQUIRE(t.status == CosetTable::Status::Complete);
  CHECK(t.index() == 2);
  CHECK_FALSE(t.over_trivial_subgroup);
}

TEST_CASE("euclidean triangle group exceeds any budget up to 10^4") {
  Presentation p = parse_presentation("<x,y | x^2, y^3, (xy)^6>");
  for (int budget : {10, 100, 10000}) {
    CosetTable t = coset_enumerate(p, {}, budget);
    CHECK(t.status == CosetTable::Status::Exceeded);
  }
}

TEST_CASE("trivial group") {
  CosetTable t = coset_enumerate(parse_presentation("<a | a>"), {}, 100);
  CHECK(t.index() == 1);
  CHECK(t.status == CosetTable::Status::Complete);
}

TEST_CASE("result independent of relator order") {
  std::vector<Word> rels{parse_word(parse_presentation("<x,y | >"), "x^2"),
                         parse_word(parse_presentation("<x,y | >"), "y^3"),
                         parse_word(parse_presentation("<x,y | >"), "(xy)^4")};
  std::sort(rels.begin(), rels.end());
  CosetTable reference;
  bool first = true;
  do {
    Presentation p(2, rels, {"x", "y"});
    CosetTable t = coset_enumerate(p, {}, 10000);
    REQUIRE(t.status == CosetTable::Status::Complete);
    CHECK(t.index() == 24);
    if (first) {
      reference = t;
      first = false;
    } else {
      // the breadth-first renumbering makes the table canonical
      CHECK(t == reference);
    }
  } while (std::next_permutation(rels.begin(), rels.end()));
}

TEST_CASE("table is a permutation action") {
  CosetTable t = coset_enumerate(parse_presentation("<x,y | x^2, y^3, (xy)^5>"), {}, 10000);
  REQUIRE(t.status == CosetTable::Status::Complete);
  for (int g = 1; g <= 2; ++g) {
    std::vector<bool> hit(static_cast<std::size_t>(t.index()), false);
    for (int c = 0; c < t.index(); ++c) {
      int img = t.action(c, g);
      CHECK(t.action(img, -g) == c);
      hit[static_cast<std::size_t>(img)] = true;
    }
    CHECK(std::count(hit.begin(), hit.end(), true) == t.index());
  }
}

TEST_CASE("word tracing fixes the subgroup coset") {
  Presentation p = parse_presentation("<a,b | a^2, b^2>");
  Word ab{1, 2};
  CosetTable t = coset_enumerate(p, {ab}, 1000);
  REQUIRE(t.status == CosetTable::Status::Complete);
  CHECK(t.trace(0, ab) == 0);
}

TEST_CASE("budget precondition") {
  CHECK_THROWS_AS(coset_enumerate(parse_presentation("<a | a^2>"), {}, 0), PreconditionError);
}

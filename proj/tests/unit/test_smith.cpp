#include <doctest.h>

#include <random>

#include "lcy/oracles.hpp"
#include "lcy/smith.hpp"

using namespace lcy;
using namespace lcy::fp;

TEST_CASE("abelianization of the bundle group presentation") {
  // <a,b,c | [a,b]c^-k, [a,c], [b,c]>: commutators contribute zero rows and
  // the first relator forces c^k = 0
  Presentation p = parse_presentation("<a,b,c | [a,b]c^-6, [a,c], [b,c]>");
  AbelianInvariants inv = abelianization(p);
  CHECK(inv.torsion == std::vector<Int>{6});
  CHECK(inv.free_rank == 2);
  CHECK(inv.rank() == 3);
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization(parse_presentation("<a | a^5>")).torsion == std::vector<Int>{5});
  CHECK(abelianization(parse_presentation("<a | a^5>")).free_rank == 0);

  // A5 is perfect
  AbelianInvariants a5 = abelianization(parse_presentation("<x,y | x^2, y^3, (xy)^5>"));
  CHECK(a5.torsion.empty());
  CHECK(a5.free_rank == 0);

  // free group
  AbelianInvariants f2 = abelianization(parse_presentation("<a,b | >"));
  CHECK(f2.free_rank == 2);
  CHECK(f2.torsion.empty());

  // Z/2 x Z/4 from a redundant presentation
  AbelianInvariants v = abelianization(parse_presentation("<a,b | a^2, b^4, [a,b]>"));
  CHECK(v.torsion == std::vector<Int>{2, 4});
}

TEST_CASE("divisibility chain") {
  // matrix with entangled factors: invariant factors must divide in turn
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 6;
  m.at(1, 1) = 8;
  auto d = smith_normal_form(m);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);
  CHECK(d[1] % d[0] == 0);
}

TEST_CASE("smith normal form matches the determinantal-divisor oracle") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
    Presentation p(m.cols, {});
    for (int i = 0; i < m.rows; ++i) {
      Word w;
      for (int j = 0; j < m.cols; ++j) {
        int e = static_cast<int>(m.at(i, j));
        for (int t = 0; t < std::abs(e); ++t) w.push_back(e > 0 ? j + 1 : -(j + 1));
      }
      p.add_relator(std::move(w));
    }
    AbelianInvariants fast = abelianization(p);
    AbelianInvariants slow = oracle::abelian_invariants_by_minors(exponent_matrix(p));
    CHECK(fast == slow);
  }
}

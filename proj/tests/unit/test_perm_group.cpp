#include <doctest.h>

#include "lcy/perm_group.hpp"

using namespace lcy;
using namespace lcy::fp;

namespace {
int perm_order(const Perm& p) {
  Perm q = p;
  int n = 1;
  while (q != perm_identity(static_cast<int>(p.size()))) {
    q = perm_compose(q, p);
    ++n;
  }
  return n;
}
}  // namespace

TEST_CASE("regular representation of the dihedral table") {
  Presentation p = parse_presentation("<a,b | a^2, b^2, (ab)^4>");
  CosetTable t = coset_enumerate(p, {}, 1000);
  PermGroup g = regular_representation(t);
  CHECK(g.degree == 8);
  CHECK(analyze(g).order == 8);
}

TEST_CASE("regular representation of the trivial group") {
  CosetTable t = coset_enumerate(parse_presentation("<a | a>"), {}, 100);
  PermGroup g = regular_representation(t);
  CHECK(g.degree == 1);
  CHECK(analyze(g).order == 1);
  CHECK(analyze(g).nilpotency_class == 0);
}

TEST_CASE("icosahedral table: degree 60, generator orders 2 and 3") {
  CosetTable t = coset_enumerate(parse_presentation("<x,y | x^2, y^3, (xy)^5>"), {}, 10000);
  PermGroup g = regular_representation(t);
  CHECK(g.degree == 60);
  CHECK(perm_order(g.gens[0]) == 2);
  CHECK(perm_order(g.gens[1]) == 3);
  GroupAnalysis a = analyze(g);
  CHECK(a.order == 60);
  CHECK(a.derived_series_orders == std::vector<unsigned long long>{60});  // perfect
  CHECK_FALSE(a.is_metabelian);
  CHECK_FALSE(a.nilpotency_class.has_value());
}

TEST_CASE("incomplete or subgroup tables are rejected") {
  CosetTable bad = coset_enumerate(parse_presentation("<x,y | x^2, y^3, (xy)^6>"), {}, 100);
  CHECK_THROWS_AS(regular_representation(bad), PreconditionError);
  CosetTable sub = coset_enumerate(parse_presentation("<a,b | a^2, b^2>"), {{1, 2}}, 100);
  CHECK_THROWS_AS(regular_representation(sub), PreconditionError);
}

TEST_CASE("cyclic group analysis") {
  PermGroup z4(4, {perm_from_cycles(4, {{0, 1, 2, 3}})});
  GroupAnalysis a = analyze(z4);
  CHECK(a.order == 4);
  CHECK(a.is_abelian);
  CHECK(a.is_metabelian);
  CHECK(a.nilpotency_class == 1);
}

TEST_CASE("symmetric group on 4 letters: solvable but not metabelian") {
  PermGroup s4(4, {perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{0, 1, 2, 3}})});
  GroupAnalysis a = analyze(s4);
  CHECK(a.order == 24);
  CHECK(a.derived_series_orders == std::vector<unsigned long long>{24, 12, 4, 1});
  CHECK_FALSE(a.is_metabelian);
  CHECK_FALSE(a.nilpotency_class.has_value());
}

TEST_CASE("quaternion-free nilpotence sample: dihedral of order 8 has class 2") {
  PermGroup d4(4, {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{1, 3}})});
  GroupAnalysis a = analyze(d4);
  CHECK(a.order == 8);
  CHECK(a.nilpotency_class == 2);
  CHECK(a.is_metabelian);
}

TEST_CASE("order bound is enforced") {
  PermGroup a5(5, {perm_from_cycles(5, {{0, 1, 2, 3, 4}}), perm_from_cycles(5, {{0, 1, 2}})});
  CHECK_THROWS_AS(analyze(a5, 10), BudgetError);
  CHECK(analyze(a5).order == 60);
}

TEST_CASE("enumeration index equals the analyzed order") {
  for (const char* text : {"<a | a^7>", "<a,b | a^2, b^2, (ab)^3>", "<x,y | x^2, y^3, (xy)^3>",
                           "<a,b | a^3, b^3, [a,b]>"}) {
    CosetTable t = coset_enumerate(parse_presentation(text), {}, 10000);
    REQUIRE(t.status == CosetTable::Status::Complete);
    CHECK(analyze(regular_representation(t)).order ==
          static_cast<unsigned long long>(t.index()));
  }
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(PermGroup(3, {{0, 0, 1}}), PreconditionError);
  CHECK_THROWS_AS(perm_from_cycles(3, {{0, 1}, {1, 2}}), PreconditionError);
}

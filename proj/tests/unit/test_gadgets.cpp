#include <doctest.h>

#include "lcy/gadgets.hpp"

using namespace lcy;
using namespace lcy::heis;

TEST_CASE("index-4N gadget") {
  for (long long k = 0; k <= 5; ++k) {
    Lemma42Report r = lemma_42_gadget(k, 1);
    CHECK(r.passed());
    CHECK(r.subgroup_index == 4);
    CHECK(r.parameter == 4 * k);
    CHECK(r.comm == HeisenbergElement{k, 0, 0, 4 * k});
  }
  // [a^2, b^2] = c^12 at k = 3, the squared-generator instance
  CHECK(lemma_42_gadget(3).comm.z == 12);
  // general N scales the index
  Lemma42Report r5 = lemma_42_gadget(1, 5);
  CHECK(r5.subgroup_index == 20);
  CHECK_THROWS_AS(lemma_42_gadget(1, 0), PreconditionError);
}

TEST_CASE("index-144N gadget") {
  Lemma43Report r = lemma_43_gadget();
  CHECK(r.passed());
  CHECK(r.subgroup_index == 4);
  CHECK(r.subgroup_abelianization.rank() == 4);
  CHECK(r.subgroup_abelianization.free_rank == 2);
  CHECK(r.subgroup_abelianization.torsion == std::vector<Int>{2, 2});
  CHECK(r.total_index == 144);
  CHECK(lemma_43_gadget(2).total_index == 288);
  CHECK_THROWS_AS(lemma_43_gadget(1, 2), BudgetError);
}

TEST_CASE("the kernel group presentation") {
  // K = <s,t,b,c | s^2, t^2, [s,t], [b,s], [b,t], [c,s], [c,t], [b,c]s^-1>
  fp::Presentation k = lemma_43_group();
  CHECK(k.generator_count == 4);
  CHECK(k.relators.size() == 8);
  // abelianization: s dies (it is a commutator), leaving Z/2 x Z^2
  fp::AbelianInvariants inv = fp::abelianization(k);
  CHECK(inv.torsion == std::vector<Int>{2});
  CHECK(inv.free_rank == 2);
}

TEST_CASE("index-8N gadget") {
  Lemma44Report r = lemma_44_gadget();
  CHECK(r.passed());
  CHECK(r.subgroup_index == 8);
  CHECK(r.s_abelianization.torsion == std::vector<Int>{2});
  CHECK(r.s_abelianization.free_rank == 2);
  // the named checks are all present
  std::vector<std::string> names;
  for (const auto& c : r.checks) names.push_back(c.name);
  CHECK(std::find(names.begin(), names.end(), "characteristic kernel") != names.end());
  CHECK(std::find(names.begin(), names.end(), "commutator in kernel") != names.end());
}

TEST_CASE("dihedral normal forms") {
  DihedralElement u{1, false}, s{0, true};
  CHECK(d_mul(s, s) == DihedralElement{0, false});
  CHECK(d_mul(d_mul(s, u), s) == d_inv(u));  // s u s = u^-1
  CHECK(d_has_finite_order(s));
  CHECK(d_has_finite_order(DihedralElement{7, true}));
  CHECK_FALSE(d_has_finite_order(u));
}

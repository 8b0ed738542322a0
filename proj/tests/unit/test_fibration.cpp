#include <doctest.h>

#include "lcy/fibration.hpp"

using namespace lcy;
using namespace lcy::fib;

TEST_CASE("adjunction coefficients") {
  CHECK(adjunction_coefficient({3, {}}) == Rat(2, 3));
  CHECK(adjunction_coefficient({1, {{Rat(1), 1}}}) == Rat(1));
  CHECK(adjunction_coefficient({2, {{Rat(1, 2), 1}}}) == Rat(3, 4));
  CHECK(adjunction_coefficient({2, {{Rat(1, 2), 1}, {Rat(1, 3), 2}}}) == Rat(3, 4) + Rat(1, 3));
  CHECK_THROWS_AS(adjunction_coefficient({0, {}}), PreconditionError);
  CHECK_THROWS_AS(adjunction_coefficient({2, {{Rat(3, 2), 1}}}), PreconditionError);
}

TEST_CASE("base pair coefficients") {
  CHECK(base_pair_coefficient({1, Rat(2, 3)}) == Rat(2, 3));
  CHECK(base_pair_coefficient({2, Rat(0)}) == Rat(1, 2));
  CHECK(base_pair_coefficient({2, Rat(1, 2)}) == Rat(3, 4));
  CHECK(base_pair_coefficient({4, Rat(1)}) == Rat(1));
  CHECK_THROWS_AS(base_pair_coefficient({2, Rat(2, 5)}), PreconditionError);  // not standard
  CHECK_THROWS_AS(base_pair_coefficient({0, Rat(0)}), PreconditionError);
}

TEST_CASE("compatibility") {
  CHECK(check_compatible({2, Rat(3, 4), Rat(1, 2)}));
  CHECK(check_compatible({3, Rat(2, 3), Rat(0)}));
  CHECK_FALSE(check_compatible({2, Rat(1, 2), Rat(1, 2)}));
  // non-standard inputs pass through the standard approximation first
  CHECK(check_compatible({3, Rat(7, 10), Rat(2, 5)}));  // 7/10 -> 2/3, 2/5 -> 0
  CHECK_THROWS_AS(check_compatible({0, Rat(1, 2), Rat(1, 2)}), PreconditionError);
}

TEST_CASE("ramification pullback") {
  CHECK(ramification_pullback(Rat(1), 5) == Rat(1));
  CHECK(ramification_pullback(Rat(3, 4), 2) == Rat(1, 2));
  CHECK(ramification_pullback(Rat(5, 6), 3) == Rat(1, 2));
  CHECK_THROWS_AS(ramification_pullback(Rat(1, 2), 3), PreconditionError);
  CHECK_THROWS_AS(ramification_pullback(Rat(1, 2), 0), PreconditionError);
}

TEST_CASE("bundle group presentations") {
  fp::Presentation p0 = bundle_pi1(0);
  fp::AbelianInvariants inv0 = fp::abelianization(p0);
  CHECK(inv0.free_rank == 3);
  CHECK(inv0.torsion.empty());

  fp::Presentation p6 = bundle_pi1(6);
  fp::AbelianInvariants inv6 = fp::abelianization(p6);
  CHECK(inv6.free_rank == 2);
  CHECK(inv6.torsion == std::vector<Int>{6});

  fp::Presentation neg = bundle_pi1(-4);
  fp::AbelianInvariants invn = fp::abelianization(neg);
  CHECK(invn.torsion == std::vector<Int>{4});

  // killing c^m interacts with [a,b] = c^k: the abelianized torsion is
  // gcd(k, m), since c already dies by the commutator relation at k = 1
  fp::Presentation q14 = bundle_quotient_pi1(1, 4);
  CHECK(q14.relators.size() == 4);
  fp::AbelianInvariants i14 = fp::abelianization(q14);
  CHECK(i14.free_rank == 2);
  CHECK(i14.torsion.empty());
  fp::AbelianInvariants i46 = fp::abelianization(bundle_quotient_pi1(4, 6));
  CHECK(i46.free_rank == 2);
  CHECK(i46.torsion == std::vector<Int>{2});
  CHECK_THROWS_AS(bundle_quotient_pi1(1, 0), PreconditionError);
}

TEST_CASE("certificate table") {
  using K = curves::PairKind;
  using SK = StructureCertificate::SubgroupKind;

  StructureCertificate ee = nori_certificate(K::Elliptic, K::Elliptic);
  CHECK(ee.kind == SK::Abelian);
  CHECK(ee.rank_bound == 4);
  CHECK(ee.index_bound == 3840);

  StructureCertificate se = nori_certificate(K::Sporadic, K::Elliptic);
  CHECK(se.kind == SK::Abelian);
  CHECK(se.rank_bound == 2);
  CHECK(se.index_bound == 360);

  StructureCertificate te = nori_certificate(K::Toric, K::Elliptic);
  CHECK(te.kind == SK::HeisenbergQuotient);
  CHECK(te.index_bound == 864);

  StructureCertificate st = nori_certificate(K::Sporadic, K::Toric);
  CHECK(st.kind == SK::Abelian);
  CHECK(st.rank_bound == 2);
  CHECK(st.index_bound == 7200);

  StructureCertificate et = nori_certificate(K::Elliptic, K::Toric);
  CHECK(et.kind == SK::AbelianOrHeisenbergQuotient);
  CHECK(et.index_bound == 7200);

  CHECK(ee.table_version == StructureCertificate::kCertificateTableVersion);
  CHECK_FALSE(ee.statement.empty());
}

#include <doctest.h>

#include "lcy/curve_pairs.hpp"

using namespace lcy;
using namespace lcy::curves;

namespace {
CurveDivisor genus0(std::vector<Rat> coeffs) {
  std::vector<MarkedPoint> pts;
  int i = 0;
  for (auto& c : coeffs) pts.push_back({"p" + std::to_string(++i), c});
  return make_curve_divisor(0, std::move(pts));
}
}  // namespace

TEST_CASE("canonicalization") {
  CurveDivisor d = make_curve_divisor(0, {{"a", Rat(0)}, {"b", Rat(1, 2)}});
  CHECK(d.points.size() == 1);  // zero coefficients are dropped
  CHECK(d.points[0].label == "b");
  CHECK_THROWS_AS(make_curve_divisor(0, {{"a", Rat(1, 2)}, {"a", Rat(1, 3)}}), PreconditionError);
  CHECK_THROWS_AS(make_curve_divisor(0, {{"a", Rat(3, 2)}}), PreconditionError);
  CHECK_THROWS_AS(make_curve_divisor(2, {}), PreconditionError);
}

TEST_CASE("pair degree") {
  CHECK(pair_degree(genus0({Rat(1), Rat(1)})) == 0);
  CHECK(pair_degree(genus0({Rat(1, 2), Rat(2, 3), Rat(4, 5)})) == Rat(-1, 30));
  CHECK(pair_degree(make_curve_divisor(1, {})) == 0);
}

TEST_CASE("trichotomy classification examples") {
  CurvePairClass c1 = classify_trichotomy(genus0({Rat(1, 2), Rat(2, 3), Rat(3, 4)}));
  CHECK(c1.kind == PairKind::Sporadic);
  CHECK(c1.sporadic->n == 4);

  CurvePairClass c2 = classify_trichotomy(genus0({Rat(1, 2), Rat(2, 3), Rat(5, 6)}));
  CHECK(c2.kind == PairKind::Elliptic);
  CHECK(*c2.elliptic == EllipticFamily::HalfTwoThirdsFiveSixths);

  CurvePairClass c3 = classify_trichotomy(genus0({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(c3.kind == PairKind::Toric);
  REQUIRE(c3.toric_witness);
  CHECK(c3.toric_witness->n == 2);
  std::vector<Rat> w;
  for (const auto& p : c3.toric_witness->gamma_plus.points) w.push_back(p.coeff);
  CHECK(w == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 2)});

  CHECK(classify_trichotomy(make_curve_divisor(1, {})).kind == PairKind::Elliptic);
  CHECK(classify_trichotomy(genus0({})).kind == PairKind::Toric);

  CHECK_THROWS_AS(classify_trichotomy(genus0({Rat(2, 5)})), PreconditionError);
  CHECK_THROWS_AS(classify_trichotomy(genus0({Rat(1), Rat(1), Rat(1, 2)})), PreconditionError);
}

TEST_CASE("complement search examples") {
  auto c1 = find_complement(genus0({Rat(1, 2)}), false);
  REQUIRE(c1);
  CHECK(c1->n == 1);
  REQUIRE(c1->gamma_plus.points.size() == 2);
  CHECK(c1->gamma_plus.points[0].coeff == 1);
  CHECK(c1->gamma_plus.points[1].coeff == 1);
  CHECK(c1->gamma_plus.points[1].label == "new1");

  CHECK_FALSE(find_complement(genus0({Rat(1, 2), Rat(2, 3), Rat(2, 3)}), true));
  auto c2 = find_complement(genus0({Rat(1, 2), Rat(2, 3), Rat(2, 3)}), false);
  REQUIRE(c2);
  CHECK(c2->n == 3);

  auto c3 = find_complement(genus0({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}), false);
  REQUIRE(c3);
  CHECK(c3->n == 2);
  CHECK(c3->gamma_plus == genus0({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}));

  // elliptic curve: 1-complement of itself, never with a coefficient-one point
  auto e = find_complement(make_curve_divisor(1, {}), false);
  REQUIRE(e);
  CHECK(e->n == 1);
  CHECK_FALSE(find_complement(make_curve_divisor(1, {}), true));
}

TEST_CASE("complement certificates satisfy their invariants") {
  for (auto& coeffs : std::vector<std::vector<Rat>>{{Rat(1, 2)},
                                                    {Rat(1, 2), Rat(2, 3), Rat(2, 3)},
                                                    {Rat(5, 6)},
                                                    {Rat(1), Rat(1, 2)},
                                                    {}}) {
    CurveDivisor d = genus0(coeffs);
    for (bool flag : {false, true}) {
      auto cert = find_complement(d, flag);
      if (!cert) continue;
      Rat total(0);
      bool has_one = false;
      for (const auto& p : cert->gamma_plus.points) {
        CHECK(p.coeff <= 1);
        CHECK(is_integer(p.coeff * cert->n));
        has_one = has_one || p.coeff == 1;
        total += p.coeff;
      }
      CHECK(total == 2);  // deg(K + gamma_plus) = 0
      if (flag) CHECK(has_one);
      // gamma_plus >= gamma pointwise
      for (const auto& p : d.points) {
        bool found = false;
        for (const auto& q : cert->gamma_plus.points)
          if (q.label == p.label) {
            CHECK(q.coeff >= p.coeff);
            found = true;
          }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("toric classification beyond the denominator-60 policy window") {
  // a standard index beyond 60 is still realized by the search: rounding
  // coefficients up at small N absorbs large denominators
  CurveDivisor d = genus0({Rat(66, 67), Rat(1, 2)});
  auto cert = find_complement(d, true);
  REQUIRE(cert);
  CurvePairClass cls = classify_trichotomy(d);
  CHECK(cls.kind == PairKind::Toric);
  REQUIRE(cls.toric_witness);
  Rat total(0);
  bool has_one = false;
  for (const auto& p : cls.toric_witness->gamma_plus.points) {
    total += p.coeff;
    has_one = has_one || p.coeff == 1;
    CHECK(is_integer(p.coeff * cls.toric_witness->n));
  }
  CHECK(total == 2);
  CHECK(has_one);
}

TEST_CASE("orbifold presentations") {
  // two coefficient-one points: Z
  auto t1 = orbifold_presentation(genus0({Rat(1), Rat(1)}));
  CHECK(fp::to_text(t1.presentation) == "<g1,g2 | g1g2>");
  auto inv1 = fp::abelianization(t1.presentation);
  CHECK(inv1.free_rank == 1);
  CHECK(inv1.torsion.empty());

  // infinite dihedral: two involutions
  auto t2 = orbifold_presentation(genus0({Rat(1, 2), Rat(1, 2), Rat(1)}));
  CHECK(t2.presentation.relators.size() == 3);  // product, g1^2, g2^2
  fp::CosetTable tab = fp::coset_enumerate(t2.presentation, {}, 2000);
  CHECK(tab.status == fp::CosetTable::Status::Exceeded);

  // genus one, empty boundary: Z^2
  auto t3 = orbifold_presentation(make_curve_divisor(1, {}));
  CHECK(fp::to_text(t3.presentation) == "<a,b | aba^-1b^-1>");
  auto inv3 = fp::abelianization(t3.presentation);
  CHECK(inv3.free_rank == 2);

  // point loops are labeled
  auto t4 = orbifold_presentation(genus0({Rat(1, 2), Rat(2, 3)}));
  CHECK(t4.point_loops.at("p1") == 1);
  CHECK(t4.point_loops.at("p2") == 2);

  CHECK_THROWS_AS(orbifold_presentation(genus0({Rat(2, 5)})), PreconditionError);
}

TEST_CASE("abelianization covers") {
  auto s = abelianization_cover(genus0({Rat(1, 2), Rat(2, 3), Rat(4, 5)}));
  CHECK(s.degree == 60);
  CHECK(s.target == genus0({}));

  auto d = abelianization_cover(genus0({Rat(1, 2), Rat(1, 2), Rat(4, 5)}));
  CHECK(d.degree == 2);
  CHECK(d.target.genus == 0);
  REQUIRE(d.target.points.size() == 2);
  CHECK(d.target.points[0].coeff == Rat(4, 5));
  CHECK(d.target.points[1].coeff == Rat(4, 5));

  // the double cover duplicates a coefficient-one third point as well
  auto dd = abelianization_cover(genus0({Rat(1, 2), Rat(1, 2), Rat(1)}));
  CHECK(dd.degree == 2);

  // three halves: the group is already abelian (Klein four)
  auto v4 = abelianization_cover(genus0({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(v4.degree == 1);

  auto e = abelianization_cover(make_curve_divisor(1, {}));
  CHECK(e.degree == 1);
  CHECK(e.target == make_curve_divisor(1, {}));

  CHECK(abelianization_cover(genus0({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)})).degree == 2);
  CHECK(abelianization_cover(genus0({Rat(2, 3), Rat(2, 3), Rat(2, 3)})).degree == 3);
  CHECK(abelianization_cover(genus0({Rat(1, 2), Rat(2, 3), Rat(5, 6)})).degree == 6);
  CHECK(abelianization_cover(genus0({Rat(1, 2), Rat(3, 4), Rat(3, 4)})).degree == 4);
}

TEST_CASE("group identification and the cyclic-or-dihedral expectation") {
  GroupId z = identify_curve_group(genus0({Rat(1), Rat(1)}));
  CHECK(z.kind == GroupId::Kind::InfiniteCyclic);
  CHECK(z.consistent);

  GroupId dinf = identify_curve_group(genus0({Rat(1, 2), Rat(1, 2), Rat(1)}));
  CHECK(dinf.kind == GroupId::Kind::InfiniteDihedral);
  CHECK(dinf.consistent);  // certified by the index-2 Z subgroup

  GroupId d3 = identify_curve_group(genus0({Rat(1, 2), Rat(1, 2), Rat(2, 3)}));
  CHECK(d3.kind == GroupId::Kind::FiniteDihedral);
  CHECK(*d3.order == 6);

  GroupId zn = identify_curve_group(genus0({Rat(1), Rat(4, 5)}));
  CHECK(zn.kind == GroupId::Kind::FiniteCyclic);
  CHECK(*zn.order == 5);

  GroupId triv = identify_curve_group(genus0({}));
  CHECK(triv.kind == GroupId::Kind::Trivial);

  GroupId a5 = identify_curve_group(genus0({Rat(1, 2), Rat(2, 3), Rat(4, 5)}));
  CHECK(a5.kind == GroupId::Kind::Alternating5);
  CHECK(a5.consistent);

  GroupId ell = identify_curve_group(genus0({Rat(1, 2), Rat(3, 4), Rat(3, 4)}));
  CHECK(ell.kind == GroupId::Kind::VirtuallyAbelianRank2);
}

#pragma once

#include <string>
#include <vector>

#include "lcy/heisenberg.hpp"
#include "lcy/presentation.hpp"
#include "lcy/reidemeister_schreier.hpp"
#include "lcy/smith.hpp"

namespace lcy::heis {

struct GadgetCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GadgetReport {
  std::string gadget;
  std::vector<GadgetCheck> checks;
  Int subgroup_index = 0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void check(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
  }
};

/// Index-4N construction inside an extension 1 -> Z -> G -> Q -> 1 with
/// Q containing Z^2 of index N: the preimage of the doubled lattice is
/// Heisenberg.  Concretely on H_k (the N = 1 extension): the subgroup
/// <a^2, b^2, c> has index 4 and commutator [a^2, b^2] = c^{4k}, so its
/// Heisenberg parameter is 4k.
struct Lemma42Report : GadgetReport {
  Int k;
  Int n;
  Int parameter;  // 4k
  HeisenbergElement comm{0, 0, 0, 0};
};

inline Lemma42Report lemma_42_gadget(const Int& k, const Int& n = 1) {
  if (n < 1) throw PreconditionError("N must be a positive integer");
  Lemma42Report rep;
  rep.gadget = "index-4N Heisenberg subgroup";
  rep.k = k;
  rep.n = n;

  // doubling an index-N sublattice of Z^2 quadruples the index
  LatticeSubgroupDatum lat{{{{n, Int(0)}, {Int(0), Int(1)}}}};  // index N representative
  LatticeSubgroupDatum doubled{{{{2 * n, Int(0)}, {Int(0), Int(2)}}}};
  rep.subgroup_index = doubled.det();
  rep.check("index", rep.subgroup_index == 4 * n,
            "[Z^2 : 2L] = " + rep.subgroup_index.str() + " for [Z^2 : L] = " + lat.det().str());

  rep.comm = h_commutator(h_pow(h_a(k), 2), h_pow(h_b(k), 2));
  rep.parameter = rep.comm.z;
  rep.check("commutator", rep.comm == HeisenbergElement{k, 0, 0, 4 * k},
            "[a^2, b^2] = c^" + rep.comm.z.str());
  rep.check("parameter", rep.parameter == 4 * k,
            "Heisenberg parameter of <a^2, b^2, c> is " + rep.parameter.str() +
                (k == 0 ? " (abelian)" : ""));

  // normality of the preimage subgroup under conjugation by a and b
  LatticeSubgroupDatum even{{{{Int(2), Int(0)}, {Int(0), Int(2)}}}};
  rep.check("normality", witness_is_normal(k, even),
            "conjugates of the generators stay in the subgroup");
  return rep;
}

/// Index-144N construction for kernel Z/2 x Z/2: the group
/// K = <s,t,b,c | s^2, t^2, [s,t], [b,s], [b,t], [c,s], [c,t], [b,c] s^-1>
/// contains <s, t, b^2, c^2> as an index-4 subgroup that is abelian of
/// rank 4; combined with the index-36N passage to K the total is 144N.
struct Lemma43Report : GadgetReport {
  Int n;
  fp::AbelianInvariants subgroup_abelianization;
  Int total_index = 0;
};

inline fp::Presentation lemma_43_group() {
  return fp::parse_presentation(
      "<s,t,b,c | s^2, t^2, [s,t], [b,s], [b,t], [c,s], [c,t], [b,c]s^-1>");
}

inline Lemma43Report lemma_43_gadget(const Int& n = 1, int max_cosets = 100000) {
  if (n < 1) throw PreconditionError("N must be a positive integer");
  Lemma43Report rep;
  rep.gadget = "index-144N abelian rank-4 subgroup";
  rep.n = n;

  fp::Presentation k = lemma_43_group();
  std::vector<fp::Word> gens{{1}, {2}, {3, 3}, {4, 4}};  // s, t, b^2, c^2
  fp::CosetTable t = fp::coset_enumerate(k, gens, max_cosets);
  if (t.status != fp::CosetTable::Status::Complete)
    throw BudgetError("enumeration budget exceeded in the index-144N gadget");
  rep.subgroup_index = t.index();
  rep.check("index", t.index() == 4, "[K : <s,t,b^2,c^2>] = " + std::to_string(t.index()));

  rep.subgroup_abelianization = fp::abelianization(fp::subgroup_presentation(k, t));
  bool rank4 = rep.subgroup_abelianization.rank() == 4;
  bool shape = rep.subgroup_abelianization.free_rank == 2 &&
               rep.subgroup_abelianization.torsion == std::vector<Int>{2, 2};
  rep.check("abelian rank", rank4 && shape,
            "subgroup abelianization " + rep.subgroup_abelianization.to_string());

  // degenerate check via the finite quotient G_{2,1}: [b^2, c^2] collapses
  // to s^4 = 1
  QuotientElement bq{1, 2, 1, 0, 0}, cq{1, 2, 0, 1, 0};
  QuotientElement comm = q_commutator(q_mul(bq, bq), q_mul(cq, cq));
  rep.check("degenerate commutator", comm.is_identity(), "[b^2, c^2] = s^4 = 1 in K");

  // s, t generate Z/2 x Z/2: K maps onto the concrete model G_{2,1} x Z/2
  // (s the central commutator, t the second factor); every relator dies in
  // the model and the images of s, t, st are three distinct involutions,
  // so <s,t> surjects onto V4, while s^2 = t^2 = [s,t] = 1 bound it above.
  struct ModelEl {
    QuotientElement h;
    int t2;
    bool is_identity() const { return h.is_identity() && t2 == 0; }
  };
  auto model_mul = [](const ModelEl& u, const ModelEl& v) {
    return ModelEl{q_mul(u.h, v.h), (u.t2 + v.t2) % 2};
  };
  auto model_inv = [](const ModelEl& u) { return ModelEl{q_inv(u.h), u.t2 % 2}; };
  const ModelEl ident{QuotientElement{1, 2, 0, 0, 0}, 0};
  const ModelEl img[4] = {
      {QuotientElement{1, 2, 0, 0, 1}, 0},  // s -> central c of G_{2,1}
      {QuotientElement{1, 2, 0, 0, 0}, 1},  // t -> generator of the Z/2 factor
      {QuotientElement{1, 2, 1, 0, 0}, 0},  // b -> a of G_{2,1}
      {QuotientElement{1, 2, 0, 1, 0}, 0},  // c -> b of G_{2,1}
  };
  bool hom_ok = true;
  for (const fp::Word& r : k.relators) {
    ModelEl acc = ident;
    for (int letter : r) {
      int g = letter > 0 ? letter : -letter;
      ModelEl m = img[static_cast<std::size_t>(g - 1)];
      acc = model_mul(acc, letter > 0 ? m : model_inv(m));
    }
    hom_ok = hom_ok && acc.is_identity();
  }
  ModelEl st = model_mul(img[0], img[1]);
  bool v4_ok = !img[0].is_identity() && !img[1].is_identity() && !st.is_identity() &&
               model_mul(img[0], img[0]).is_identity() && model_mul(img[1], img[1]).is_identity();
  rep.check("kernel factor", hom_ok && v4_ok, "<s,t> maps isomorphically onto Z/2 x Z/2");

  rep.total_index = 144 * n;
  rep.check("total index", Int(36) * n * t.index() == rep.total_index,
            "[G : K] [K : H] = 36N * 4 = " + rep.total_index.str());
  return rep;
}

// --- infinite dihedral normal forms, for the index-8N gadget ---------------

/// Element u^m s^eps of the infinite dihedral group <u, s | s^2, s u s u>.
struct DihedralElement {
  Int m;
  bool reflected = false;

  bool operator==(const DihedralElement& o) const {
    return m == o.m && reflected == o.reflected;
  }
};

inline DihedralElement d_mul(const DihedralElement& a, const DihedralElement& b) {
  return {a.m + (a.reflected ? -b.m : b.m), a.reflected != b.reflected};
}

inline DihedralElement d_inv(const DihedralElement& a) {
  return a.reflected ? a : DihedralElement{-a.m, false};
}

inline bool d_has_finite_order(const DihedralElement& a) {
  return a.reflected || a.m == 0;  // reflections are involutions
}

/// Index-8N construction for kernel Z x| Z/2: splitting off the
/// characteristic Z leaves 1 -> Z/2 -> R -> Q -> 1; the preimage of the
/// doubled lattice is S = Z/2 x Z^2, and the preimage in G of its
/// torsion-free part is Heisenberg of index 8N.
struct Lemma44Report : GadgetReport {
  fp::AbelianInvariants s_abelianization;
};

inline Lemma44Report lemma_44_gadget() {
  Lemma44Report rep;
  rep.gadget = "index-8N Heisenberg subgroup over dihedral kernel";

  // S = <s, b, c | s^2, [b,s], [c,s], [b,c]> is Z/2 x Z^2
  fp::Presentation s = fp::parse_presentation("<s,b,c | s^2, [b,s], [c,s], [b,c]>");
  rep.s_abelianization = fp::abelianization(s);
  bool s_ok = rep.s_abelianization.free_rank == 2 &&
              rep.s_abelianization.torsion == std::vector<Int>{2};
  rep.check("S structure", s_ok, "S abelianizes to " + rep.s_abelianization.to_string());

  // Z = <u> is characteristic in Z x| Z/2: any surjective endomorphism
  // must send u to an infinite-order element u^j with <u^j, image of s>
  // the whole group, forcing j = +-1.  Enumerate candidate images with
  // |m| <= 4 in normal form.
  bool characteristic = true;
  int surjective_candidates = 0;
  for (long long mu = -4; mu <= 4; ++mu)
    for (int ru = 0; ru <= 1; ++ru)
      for (long long ms = -4; ms <= 4; ++ms)
        for (int rs = 0; rs <= 1; ++rs) {
          DihedralElement fu{Int(mu), ru == 1}, fs{Int(ms), rs == 1};
          // relations: fs^2 = 1, fs fu fs = fu^-1
          if (!(d_mul(fs, fs) == DihedralElement{0, false})) continue;
          if (!(d_mul(d_mul(fs, fu), fs) == d_inv(fu))) continue;
          if (d_has_finite_order(fu)) continue;  // u must keep infinite order
          // surjectivity: translations in the image subgroup form fu.m * Z
          Int span = fu.m < 0 ? Int(-fu.m) : fu.m;
          bool surjective = span == 1 && fs.reflected;
          if (!surjective) continue;
          ++surjective_candidates;
          // the image of u must stay in <u>
          characteristic = characteristic && !fu.reflected;
        }
  rep.check("characteristic kernel", characteristic && surjective_candidates > 0,
            "all " + std::to_string(surjective_candidates) +
                " surjective candidate images send u into <u>");

  // squares act trivially on <u>: conjugation by any w^2 fixes u
  bool squares_trivial = true;
  for (long long m = -3; m <= 3; ++m)
    for (int r = 0; r <= 1; ++r) {
      DihedralElement w{Int(m), r == 1};
      DihedralElement sq = d_mul(w, w);
      DihedralElement conj = d_mul(d_mul(sq, DihedralElement{1, false}), d_inv(sq));
      squares_trivial = squares_trivial && conj == DihedralElement{1, false};
    }
  rep.check("trivial square action", squares_trivial,
            "w^2 u w^-2 = u for all w, so the lifted subgroup is class-2 nilpotent");

  // commutator of the lifted generators lands in the Z factor: their
  // images in S commute, and in the Heisenberg model <B, C | [B,C] = u^j>
  // the commutator is central of the shape (0, 0, j)
  bool comm_central = true;
  for (long long j = 0; j <= 3; ++j) {
    HeisenbergElement comm = h_commutator(h_a(Int(j)), h_b(Int(j)));
    comm_central = comm_central && comm.x == 0 && comm.y == 0 && comm.z == j;
  }
  rep.check("commutator in kernel", comm_central,
            "[B, C] lies in <u> for every parameter value tested");

  // index bookkeeping: [R : S] = 4 (doubled lattice), [S : Z^2] = 2
  LatticeSubgroupDatum doubled{{{{Int(2), Int(0)}, {Int(0), Int(2)}}}};
  rep.subgroup_index = doubled.det() * 2;
  rep.check("index", rep.subgroup_index == 8,
            "[G : H] = [Q : (2Z)^2] * [S : Z^2] = 4 * 2 = " + rep.subgroup_index.str());
  return rep;
}

}  // namespace lcy::heis

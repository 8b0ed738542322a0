#pragma once

#include <string>
#include <vector>

#include "lcy/curve_pairs.hpp"
#include "lcy/errors.hpp"
#include "lcy/presentation.hpp"
#include "lcy/rational.hpp"
#include "lcy/std_coeff.hpp"

namespace lcy::fib {

// --- adjunction ---------------------------------------------------------------

/// Local data at a point of the divisor S: the orbifold index m_P of the
/// germ and the coefficients/multiplicities of the other boundary
/// components through the point.
struct AdjunctionPointDatum {
  Int m_p = 1;
  std::vector<std::pair<Rat, Int>> contributions;  // (b_j, m_{j,P})
};

/// Coefficient of the adjoint boundary at the point:
/// 1 - 1/m_P + sum_j m_{j,P} b_j / m_P.
inline Rat adjunction_coefficient(const AdjunctionPointDatum& d) {
  if (d.m_p < 1) throw PreconditionError("orbifold index must be >= 1");
  Rat out = Rat(1) - Rat(1, d.m_p);
  for (const auto& [b, mult] : d.contributions) {
    if (b < 0 || b > 1) throw PreconditionError("contribution coefficient outside [0,1]");
    if (mult < 1) throw PreconditionError("multiplicity must be >= 1");
    out += Rat(mult) * b / Rat(d.m_p);
  }
  return out;
}

// --- multiple fibers ------------------------------------------------------------

/// Fiber of multiplicity m_p whose reduction carries the standard
/// horizontal coefficient a_p.
struct FibrationFiberDatum {
  Int m_p = 1;
  Rat a_p = Rat(0);
};

/// delta(p) = 1 - (1 - a_p) / m_p; standard whenever a_p is standard.
inline Rat base_pair_coefficient(const FibrationFiberDatum& f) {
  if (f.m_p < 1) throw PreconditionError("fiber multiplicity must be >= 1");
  if (!curves::is_standard(f.a_p))
    throw PreconditionError("fiber coefficient must be its own standard approximation");
  return Rat(1) - (Rat(1) - f.a_p) / Rat(f.m_p);
}

// --- compatible covers ------------------------------------------------------------

/// Coefficients across one ramified component: degree m downstairs
/// coefficient b, upstairs coefficient a.
struct CoverCoeffDatum {
  Int m = 1;
  Rat b = Rat(0);
  Rat a = Rat(0);
};

/// Compatibility identity m (1 - b^st) = 1 - a^st.
inline bool check_compatible(const CoverCoeffDatum& c) {
  if (c.m < 1) throw PreconditionError("ramification degree must be >= 1");
  if (c.b < 0 || c.b > 1 || c.a < 0 || c.a > 1)
    throw PreconditionError("cover coefficients must lie in [0,1]");
  Rat bst = curves::standard_approximation(c.b).value();
  Rat ast = curves::standard_approximation(c.a).value();
  return Rat(c.m) * (Rat(1) - bst) == Rat(1) - ast;
}

/// Upstairs coefficient a = m b - (m - 1); a result outside [0,1] signals
/// an inconsistent cover datum.
inline Rat ramification_pullback(const Rat& b, const Int& m) {
  if (m < 1) throw PreconditionError("ramification degree must be >= 1");
  if (b < 0 || b > 1) throw PreconditionError("coefficient must lie in [0,1]");
  Rat a = Rat(m) * b - Rat(m - 1);
  if (a < 0 || a > 1)
    throw PreconditionError("pullback coefficient " + rat_to_string(a) +
                            " outside [0,1]: inconsistent cover datum");
  return a;
}

// --- the two bundle groups --------------------------------------------------------

/// pi_1 of the complement of two disjoint sections in the projectivized
/// rank-two bundle of degree k over an elliptic curve:
/// <a,b,c | [a,b]c^-k, [a,c], [b,c]>.
inline fp::Presentation bundle_pi1(const Int& k) {
  long long kk = static_cast<long long>(k);
  fp::Presentation p(3, {}, {"a", "b", "c"});
  fp::Word r = fp::commutator({1}, {2});
  fp::Word ck = fp::word_pow({3}, -kk);
  r.insert(r.end(), ck.begin(), ck.end());
  p.add_relator(r);
  p.add_relator(fp::commutator({1}, {3}));
  p.add_relator(fp::commutator({2}, {3}));
  return p;
}

/// The same group with the section coefficient raised to 1 - 1/m: the loop
/// around it acquires order m, killing c^m.
inline fp::Presentation bundle_quotient_pi1(const Int& k, const Int& m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  fp::Presentation p = bundle_pi1(k);
  p.add_relator(fp::word_pow({3}, static_cast<long long>(m)));
  return p;
}

// --- structure certificates --------------------------------------------------------

/// Conclusion shape attached to a fibration with classified fiber and base
/// pairs: the kind of normal subgroup guaranteed and the index bound.  The
/// table deliberately stores only the conclusion shape; no presentation is
/// synthesized outside the two bundle examples.
struct StructureCertificate {
  enum class SubgroupKind { Abelian, HeisenbergQuotient, AbelianOrHeisenbergQuotient };

  std::string case_label;
  SubgroupKind kind = SubgroupKind::Abelian;
  int rank_bound = 0;
  Int index_bound = 0;
  std::string statement;  // human-readable row provenance
  int table_version = kCertificateTableVersion;

  static constexpr int kCertificateTableVersion = 1;
};

inline const char* subgroup_kind_name(StructureCertificate::SubgroupKind k) {
  switch (k) {
    case StructureCertificate::SubgroupKind::Abelian: return "abelian";
    case StructureCertificate::SubgroupKind::HeisenbergQuotient: return "heisenberg_quotient";
    case StructureCertificate::SubgroupKind::AbelianOrHeisenbergQuotient:
      return "abelian_or_heisenberg_quotient";
  }
  return "?";
}

/// Case table for a Mori fiber space onto a curve, keyed by the trichotomy
/// classes of the general fiber and of the induced base pair.
inline StructureCertificate nori_certificate(curves::PairKind fiber, curves::PairKind base) {
  using K = curves::PairKind;
  using SK = StructureCertificate::SubgroupKind;
  StructureCertificate c;
  if (base == K::Elliptic) {
    switch (fiber) {
      case K::Elliptic:
        c.case_label = "fiber elliptic / base elliptic";
        c.kind = SK::Abelian;
        c.rank_bound = 4;
        c.index_bound = 3840;
        c.statement =
            "normal abelian subgroup of rank at most 4 and index at most 3840";
        return c;
      case K::Sporadic:
        c.case_label = "fiber sporadic / base elliptic";
        c.kind = SK::Abelian;
        c.rank_bound = 2;
        c.index_bound = 360;
        c.statement = "normal abelian subgroup of rank 2 and index at most 360";
        return c;
      case K::Toric:
        c.case_label = "fiber toric / base elliptic";
        c.kind = SK::HeisenbergQuotient;
        c.rank_bound = 3;
        c.index_bound = 864;
        c.statement =
            "normal subgroup of index at most 864 isomorphic to a quotient of a "
            "discrete Heisenberg-style group";
        return c;
    }
  }
  if (fiber == K::Elliptic) {
    c.case_label = "fiber elliptic / base not elliptic";
    c.kind = SK::AbelianOrHeisenbergQuotient;
    c.rank_bound = 4;
    c.index_bound = 7200;
    c.statement =
        "normal abelian subgroup of rank at most 4 and index at most 7200, or the "
        "whole group is a quotient of a discrete Heisenberg-style group";
    return c;
  }
  c.case_label = "neither fiber nor base elliptic";
  c.kind = SK::Abelian;
  c.rank_bound = 2;
  c.index_bound = 7200;
  c.statement =
      "residually finite with a normal abelian subgroup of rank at most 2 and index "
      "at most 7200";
  return c;
}

}  // namespace lcy::fib

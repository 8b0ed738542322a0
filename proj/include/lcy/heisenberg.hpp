#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lcy/errors.hpp"
#include "lcy/rational.hpp"

namespace lcy::heis {

/// Element of H_k = <a,b,c | [a,b] = c^k, [a,c] = [b,c] = 1> in the normal
/// form a^x b^y c^z (c central).  The same group is often presented with
/// the commutator target as the first generator and central; the
/// relabeling a -> c, b -> a, c -> b identifies the two conventions.
///
/// Multiplication law, derived from b a = a b c^-k:
///   (x1,y1,z1) (x2,y2,z2) = (x1+x2, y1+y2, z1+z2 - k x2 y1).
struct HeisenbergElement {
  Int k;
  Int x, y, z;

  bool operator==(const HeisenbergElement& o) const {
    return k == o.k && x == o.x && y == o.y && z == o.z;
  }

  bool is_identity() const { return x == 0 && y == 0 && z == 0; }

  std::string to_string() const { return x.str() + "," + y.str() + "," + z.str(); }
};

inline HeisenbergElement h_identity(const Int& k) { return {k, 0, 0, 0}; }
inline HeisenbergElement h_a(const Int& k) { return {k, 1, 0, 0}; }
inline HeisenbergElement h_b(const Int& k) { return {k, 0, 1, 0}; }
inline HeisenbergElement h_c(const Int& k) { return {k, 0, 0, 1}; }

inline void require_same_k(const HeisenbergElement& u, const HeisenbergElement& v) {
  if (u.k != v.k) throw PreconditionError("Heisenberg elements with different parameters k");
}

inline HeisenbergElement h_mul(const HeisenbergElement& u, const HeisenbergElement& v) {
  require_same_k(u, v);
  return {u.k, u.x + v.x, u.y + v.y, u.z + v.z - u.k * v.x * u.y};
}

inline HeisenbergElement h_inv(const HeisenbergElement& u) {
  return {u.k, -u.x, -u.y, -u.z - u.k * u.x * u.y};
}

inline HeisenbergElement h_pow(HeisenbergElement u, Int n) {
  if (n < 0) {
    u = h_inv(u);
    n = -n;
  }
  HeisenbergElement acc = h_identity(u.k);
  while (n > 0) {
    if (n % 2 == 1) acc = h_mul(acc, u);
    u = h_mul(u, u);
    n /= 2;
  }
  return acc;
}

/// u v u^-1 v^-1, computed through the multiplication law.  In closed form
/// the result is (0, 0, k (x1 y2 - x2 y1)).
inline HeisenbergElement h_commutator(const HeisenbergElement& u, const HeisenbergElement& v) {
  require_same_k(u, v);
  return h_mul(h_mul(u, v), h_mul(h_inv(u), h_inv(v)));
}

inline HeisenbergElement parse_heisenberg(const Int& k, const std::string& triple) {
  std::vector<Int> parts;
  std::string cur;
  for (char ch : triple) {
    if (ch == ',') {
      auto v = parse_int(cur);
      if (!v) throw ParseError("bad Heisenberg coordinate '" + cur + "'");
      parts.push_back(*v);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  auto v = parse_int(cur);
  if (!v) throw ParseError("bad Heisenberg coordinate '" + cur + "'");
  parts.push_back(*v);
  if (parts.size() != 3) throw ParseError("Heisenberg element needs exactly three coordinates");
  return {k, parts[0], parts[1], parts[2]};
}

// --- finite quotients G_{m,k} ------------------------------------------------

/// Element of G_{m,k} = <a,b,c | [a,b] = c^k, c central, c^m = 1>: the
/// z-coordinate lives in Z/m.
struct QuotientElement {
  Int k, m;
  Int x, y, z;  // 0 <= z < m

  bool operator==(const QuotientElement& o) const {
    return k == o.k && m == o.m && x == o.x && y == o.y && z == o.z;
  }

  bool is_identity() const { return x == 0 && y == 0 && z == 0; }
};

inline Int mod_reduce(Int v, const Int& m) {
  v %= m;
  if (v < 0) v += m;
  return v;
}

inline QuotientElement project(const HeisenbergElement& u, const Int& m) {
  if (m < 1) throw PreconditionError("quotient modulus must be >= 1");
  return {u.k, m, u.x, u.y, mod_reduce(u.z, m)};
}

inline QuotientElement q_mul(const QuotientElement& u, const QuotientElement& v) {
  if (u.k != v.k || u.m != v.m) throw PreconditionError("quotient elements from different groups");
  return {u.k, u.m, u.x + v.x, u.y + v.y, mod_reduce(u.z + v.z - u.k * v.x * u.y, u.m)};
}

inline QuotientElement q_inv(const QuotientElement& u) {
  return {u.k, u.m, -u.x, -u.y, mod_reduce(-u.z - u.k * u.x * u.y, u.m)};
}

inline QuotientElement q_commutator(const QuotientElement& u, const QuotientElement& v) {
  return q_mul(q_mul(u, v), q_mul(q_inv(u), q_inv(v)));
}

// --- virtual abelianity -------------------------------------------------------

/// H_k is virtually abelian exactly when k = 0.  For k != 0 the witness is
/// the family [a^l, b^l] = c^{k l^2}: any finite-index subgroup contains
/// a^l c^u and b^l c^v for some l >= 1, and their commutator c^{k l^2} is
/// nontrivial.
struct VirtualAbelianityReport {
  Int k;
  bool virtually_abelian = false;
  std::string witness;                    // empty when virtually abelian
  std::optional<HeisenbergElement> sample;  // [a, b] = c^k, the l = 1 case
};

inline VirtualAbelianityReport is_virtually_abelian(const Int& k) {
  VirtualAbelianityReport rep;
  rep.k = k;
  if (k == 0) {
    rep.virtually_abelian = true;
    return rep;
  }
  rep.virtually_abelian = false;
  rep.witness = "[a^l, b^l] = c^(" + k.str() + "*l^2) != 1 for every l >= 1";
  rep.sample = h_commutator(h_a(k), h_b(k));
  return rep;
}

// --- minimal abelian normal index in G_{m,k} ---------------------------------

/// Basis of a finite-index sublattice of Z^2 = <a,b>-exponents; rows are
/// the images of the subgroup generators.  The subgroup of G_{m,k} is the
/// preimage (it always contains the full center <c>), and its index equals
/// |det|.
struct LatticeSubgroupDatum {
  std::array<std::array<Int, 2>, 2> basis;  // rows

  Int det() const { return basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]; }

  /// Does (x, y) lie in the row span over Z?  Hermite-shaped bases only.
  bool contains(const Int& x, const Int& y) const {
    const Int &d1 = basis[0][0], &e = basis[1][0], &d2 = basis[1][1];
    if (basis[0][1] != 0) throw PreconditionError("basis not in Hermite shape");
    if (y % d2 != 0) return false;
    Int beta = y / d2;
    Int rem = x - beta * e;
    return rem % d1 == 0;
  }
};

struct MinIndexResult {
  Int index;
  LatticeSubgroupDatum witness;
  Int lower_bound;  // ceil(sqrt(m/|k|)), from the commutator obstruction
};

/// Minimal index of an abelian normal finite-index subgroup of G_{m,k}
/// among subgroups containing the center, by exhaustive search over
/// Hermite-form sublattice bases [[d1,0],[e,d2]] with d1 d2 <= det_bound.
/// The abelianity test is the commutator condition m | k det.  Any abelian
/// normal subgroup extends to one containing the center without raising
/// the index (the center is central), so the restriction loses nothing;
/// the value is a derived quantity of the search, reported as such.
inline MinIndexResult min_abelian_normal_index(const Int& m, const Int& k, Int det_bound = 0) {
  if (m < 1) throw PreconditionError("m must be a positive integer");
  if (k == 0)
    throw PreconditionError("k = 0 makes G_{m,k} abelian; the index bound degenerates");
  if (det_bound == 0) det_bound = m * 4;
  if (det_bound < m) throw PreconditionError("det_bound must be at least m");
  Int ka = k < 0 ? Int(-k) : k;

  // Determinants ascending; within one determinant the Hermite bases
  // [[d1,0],[e,d2]] are ordered by (d1, e), so the first feasible basis is
  // always [[1,0],[0,d]].  The abelianity test depends on the determinant
  // alone: the commutator of two subgroup elements is c^{k (x1 y2 - x2 y1)}
  // and the pairings x1 y2 - x2 y1 over the sublattice are exactly det * Z.
  for (Int d = 1; d <= det_bound; ++d) {
    if ((ka * d) % m != 0) continue;  // need m | k det
    MinIndexResult res;
    res.index = d;
    res.witness.basis = {{{Int(1), Int(0)}, {Int(0), d}}};
    res.lower_bound = ceil_sqrt_quotient(m, ka);
    return res;
  }
  throw Error("internal: no sublattice found below det_bound >= m");
}

/// Conjugation of the preimage subgroup generators by a and b stays inside
/// the subgroup: in normal form, conjugation only shifts the central
/// coordinate (which the subgroup contains in full), so membership reduces
/// to the lattice test.
inline bool witness_is_normal(const Int& k, const LatticeSubgroupDatum& w) {
  for (const auto& row : w.basis) {
    HeisenbergElement g{k, row[0], row[1], 0};
    for (const HeisenbergElement& t : {h_a(k), h_b(k)}) {
      HeisenbergElement conj = h_mul(h_mul(t, g), h_inv(t));
      if (!w.contains(conj.x, conj.y)) return false;
    }
  }
  return true;
}

}  // namespace lcy::heis

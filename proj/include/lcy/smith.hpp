#pragma once

#include <string>
#include <vector>

#include "lcy/presentation.hpp"
#include "lcy/rational.hpp"

namespace lcy::fp {

/// Dense integer matrix over arbitrary-precision integers.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// Invariant factors d_1 | d_2 | ... (each >= 2) plus the free rank of a
/// finitely generated abelian group.  rank() is the least number of
/// generators.
struct AbelianInvariants {
  std::vector<Int> torsion;
  int free_rank = 0;

  int rank() const { return static_cast<int>(torsion.size()) + free_rank; }

  bool operator==(const AbelianInvariants& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }

  std::string to_string() const {
    std::string s = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) s += " + Z/" + d.str();
    return s;
  }
};

namespace detail {

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Pivot choice: minimal nonzero |entry| in the working block, ties broken
// by row-major position.
inline bool find_pivot(const IntMatrix& m, int start, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = start; i < m.rows; ++i)
    for (int j = start; j < m.cols; ++j) {
      const Int& v = m.at(i, j);
      if (v == 0) continue;
      Int av = abs_int(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace detail

/// Smith normal form: returns the diagonal d_1 | d_2 | ... | d_r of
/// nonnegative invariant factors (including any equal to 1, excluding the
/// zero tail).  Exact arithmetic throughout.
inline std::vector<Int> smith_normal_form(IntMatrix m) {
  using detail::abs_int;
  std::vector<Int> diag;
  int t = 0;
  const int bound = std::min(m.rows, m.cols);
  while (t < bound) {
    int pi = 0, pj = 0;
    if (!detail::find_pivot(m, t, pi, pj)) break;
    std::swap_ranges(m.a.begin() + static_cast<std::ptrdiff_t>(t) * m.cols,
                     m.a.begin() + static_cast<std::ptrdiff_t>(t + 1) * m.cols,
                     m.a.begin() + static_cast<std::ptrdiff_t>(pi) * m.cols);
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool clean = true;
    for (int i = t + 1; i < m.rows; ++i) {
      Int q = m.at(i, t) / m.at(t, t);
      if (q != 0)
        for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
      if (m.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m.cols; ++j) {
      Int q = m.at(t, j) / m.at(t, t);
      if (q != 0)
        for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; re-pick the pivot

    // Divisibility: fold in any entry the pivot does not divide yet.
    bool divides_all = true;
    for (int i = t + 1; i < m.rows && divides_all; ++i)
      for (int j = t + 1; j < m.cols && divides_all; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          for (int jj = t; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
          divides_all = false;
        }
    if (!divides_all) continue;

    if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
    diag.push_back(m.at(t, t));
    ++t;
  }
  return diag;
}

/// Relator exponent matrix of a presentation: one row per relator, one
/// column per generator, entries are exponent sums.
inline IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), p.generator_count);
  for (int r = 0; r < m.rows; ++r)
    for (int letter : p.relators[static_cast<std::size_t>(r)]) {
      int g = letter > 0 ? letter : -letter;
      m.at(r, g - 1) += letter > 0 ? 1 : -1;
    }
  return m;
}

/// Abelianization via Smith normal form of the relator exponent matrix.
inline AbelianInvariants abelianization(const Presentation& p) {
  auto diag = smith_normal_form(exponent_matrix(p));
  AbelianInvariants inv;
  for (const auto& d : diag)
    if (d >= 2) inv.torsion.push_back(d);
  inv.free_rank = p.generator_count - static_cast<int>(diag.size());
  return inv;
}

/// Finite order of the abelian group, if it is finite.
inline std::optional<Int> abelian_order(const AbelianInvariants& inv) {
  if (inv.free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const auto& d : inv.torsion) n *= d;
  return n;
}

}  // namespace lcy::fp

#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "lcy/fan.hpp"
#include "lcy/heisenberg.hpp"
#include "lcy/rational.hpp"
#include "lcy/smith.hpp"

// Independent reference implementations used to cross-check the main
// algorithms.  Each one follows a different route than the code it checks
// and stays deliberately naive.
namespace lcy::oracle {

/// Abelian invariants through determinantal divisors: the k-th invariant
/// factor is gcd(k-minors) / gcd((k-1)-minors).  Exponential in the matrix
/// size; meant for small presentations only.
inline fp::AbelianInvariants abelian_invariants_by_minors(const fp::IntMatrix& m) {
  int rank_bound = std::min(m.rows, m.cols);
  std::vector<Int> d(static_cast<std::size_t>(rank_bound) + 1);
  d[0] = 1;
  int rank = 0;
  for (int k = 1; k <= rank_bound; ++k) {
    // gcd over all k x k minors
    std::vector<int> rsel(static_cast<std::size_t>(k)), csel(static_cast<std::size_t>(k));
    Int g = 0;
    std::function<void(int, int)> rows = [&](int start, int depth) {
      if (depth == k) {
        std::function<void(int, int)> cols = [&](int cstart, int cdepth) {
          if (cdepth == k) {
            // Laplace expansion determinant of the selected submatrix
            std::function<Int(std::vector<int>, std::vector<int>)> det2 =
                [&](std::vector<int> rs, std::vector<int> cs) -> Int {
              if (rs.size() == 1) return m.at(rs[0], cs[0]);
              Int acc = 0;
              for (std::size_t j = 0; j < cs.size(); ++j) {
                std::vector<int> rs2(rs.begin() + 1, rs.end());
                std::vector<int> cs2 = cs;
                cs2.erase(cs2.begin() + static_cast<std::ptrdiff_t>(j));
                Int term = m.at(rs[0], cs[j]) * det2(rs2, cs2);
                acc += (j % 2 == 0) ? term : -term;
              }
              return acc;
            };
            Int v = det2(rsel, csel);
            if (v < 0) v = -v;
            g = boost::multiprecision::gcd(g, v);
            return;
          }
          for (int c = cstart; c < m.cols; ++c) {
            csel[static_cast<std::size_t>(cdepth)] = c;
            cols(c + 1, cdepth + 1);
          }
        };
        cols(0, 0);
        return;
      }
      for (int r = start; r < m.rows; ++r) {
        rsel[static_cast<std::size_t>(depth)] = r;
        rows(r + 1, depth + 1);
      }
    };
    rows(0, 0);
    if (g == 0) break;
    d[static_cast<std::size_t>(k)] = g;
    rank = k;
  }
  fp::AbelianInvariants inv;
  for (int k = 1; k <= rank; ++k) {
    Int f = d[static_cast<std::size_t>(k)] / d[static_cast<std::size_t>(k - 1)];
    if (f >= 2) inv.torsion.push_back(f);
  }
  inv.free_rank = m.cols - rank;
  return inv;
}

namespace detail {

// (x, y) in the span of the rows (p,q), (r,s) over Z, by Cramer's rule.
inline bool in_lattice(const Int& p, const Int& q, const Int& r, const Int& s, const Int& x,
                       const Int& y) {
  Int d = p * s - q * r;
  Int alpha = x * s - y * r;
  Int beta = p * y - q * x;
  return alpha % d == 0 && beta % d == 0;
}

}  // namespace detail

/// Brute-force minimal abelian normal index in G_{m,k}: enumerate all
/// pairs of integer vectors with coordinates bounded by `coord_bound`
/// (covering every sublattice of determinant <= coord_bound via its
/// Hermite basis), test commutativity of the generated subgroup with
/// quotient arithmetic, and normality by conjugating the generator lifts
/// with a and b.
inline std::optional<Int> min_abelian_index_brute(const Int& m, const Int& k,
                                                  long long coord_bound) {
  std::optional<Int> best;
  for (long long p = -coord_bound; p <= coord_bound; ++p)
    for (long long q = -coord_bound; q <= coord_bound; ++q)
      for (long long r = -coord_bound; r <= coord_bound; ++r)
        for (long long s = -coord_bound; s <= coord_bound; ++s) {
          Int d = Int(p) * s - Int(q) * r;
          if (d == 0) continue;
          if (d < 0) d = -d;
          if (best && d >= *best) continue;
          // abelian test on the generated subgroup: commutators of the
          // basis lifts and a mixed combination, in quotient arithmetic
          heis::QuotientElement u{k, m, Int(p), Int(q), 0};
          heis::QuotientElement v{k, m, Int(r), Int(s), 0};
          bool abelian = heis::q_commutator(u, v).is_identity();
          heis::QuotientElement uv = heis::q_mul(u, v);
          abelian = abelian && heis::q_commutator(uv, u).is_identity() &&
                    heis::q_commutator(uv, v).is_identity();
          if (!abelian) continue;
          // normality: conjugates of the generator lifts by a and b stay in
          // the subgroup (the subgroup contains the full center)
          bool normal = true;
          for (const auto& g : {heis::HeisenbergElement{k, Int(p), Int(q), 0},
                                heis::HeisenbergElement{k, Int(r), Int(s), 0}})
            for (const auto& t : {heis::h_a(k), heis::h_b(k)}) {
              heis::HeisenbergElement conj = heis::h_mul(heis::h_mul(t, g), heis::h_inv(t));
              normal = normal && detail::in_lattice(Int(p), Int(q), Int(r), Int(s), conj.x, conj.y);
            }
          if (!normal) continue;
          best = d;
        }
  return best;
}

/// Rational self-intersection of an invariant curve from the three-ray
/// determinant identity, with no resolution step.
inline Rat self_intersection_by_determinants(const fan::Fan2D& f, int i) {
  const fan::Ray& prev = f.ray(i - 1);
  const fan::Ray& here = f.ray(i);
  const fan::Ray& next = f.ray(i + 1);
  return Rat(-fan::det(prev, next)) / Rat(fan::det(prev, here) * fan::det(here, next));
}

/// All smooth complete fans reachable from the projective plane and the
/// first few Hirzebruch surfaces by smooth star subdivisions, up to the
/// given ray count.  Duplicates are removed by canonical-form equality.
inline std::vector<fan::Fan2D> enumerate_smooth_fans(int max_rays) {
  std::vector<fan::Fan2D> seeds;
  seeds.push_back(fan::make_fan({{1, 0}, {0, 1}, {-1, -1}}));
  for (long long n = 0; n <= 3; ++n)
    seeds.push_back(fan::make_fan({{1, 0}, {0, 1}, {-1, n}, {0, -1}}));

  std::set<std::vector<fan::Ray>> seen;
  std::vector<fan::Fan2D> out, frontier;
  for (const auto& s : seeds)
    if (seen.insert(s.rays).second) {
      out.push_back(s);
      frontier.push_back(s);
    }
  while (!frontier.empty()) {
    std::vector<fan::Fan2D> next;
    for (const auto& f : frontier) {
      if (f.ray_count() >= max_rays) continue;
      for (int i = 0; i < f.ray_count(); ++i) {
        // the unique smooth subdivision of a smooth cone inserts the sum
        fan::Ray v{f.ray(i).x + f.ray(i + 1).x, f.ray(i).y + f.ray(i + 1).y};
        fan::Fan2D g = fan::star_subdivide(f, v);
        if (seen.insert(g.rays).second) {
          out.push_back(g);
          next.push_back(g);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace lcy::oracle

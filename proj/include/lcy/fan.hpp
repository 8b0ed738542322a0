#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "lcy/errors.hpp"
#include "lcy/rational.hpp"

namespace lcy::fan {

struct Ray {
  long long x = 0, y = 0;

  bool operator==(const Ray& o) const { return x == o.x && y == o.y; }
  bool operator<(const Ray& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Int det(const Ray& v, const Ray& w) { return Int(v.x) * w.y - Int(v.y) * w.x; }

inline bool is_primitive(const Ray& v) {
  if (v.x == 0 && v.y == 0) return false;
  return std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y) == 1;
}

namespace detail {

// strict angular order starting at the positive x-axis, counterclockwise
inline bool angle_less(const Ray& a, const Ray& b) {
  auto half = [](const Ray& r) { return (r.y > 0 || (r.y == 0 && r.x > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return det(a, b) > 0;
}

}  // namespace detail

/// Complete fan in the rank-2 lattice: primitive rays in counterclockwise
/// cyclic order with strictly convex consecutive cones.  Rays are stored
/// in canonical rotation (lexicographically smallest ray first) so fan
/// equality is structural equality.
struct Fan2D {
  std::vector<Ray> rays;

  int ray_count() const { return static_cast<int>(rays.size()); }
  const Ray& ray(int i) const {
    int r = ray_count();
    return rays[static_cast<std::size_t>(((i % r) + r) % r)];
  }

  bool operator==(const Fan2D& o) const { return rays == o.rays; }
};

inline Fan2D make_fan(std::vector<Ray> rays) {
  if (rays.size() < 3) throw PreconditionError("a complete fan needs at least three rays");
  for (const Ray& r : rays)
    if (!is_primitive(r))
      throw PreconditionError("ray (" + std::to_string(r.x) + "," + std::to_string(r.y) +
                              ") is not primitive");
  int wraps = 0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Ray& a = rays[i];
    const Ray& b = rays[(i + 1) % rays.size()];
    if (det(a, b) <= 0)
      throw PreconditionError("rays are not in strictly counterclockwise cyclic order");
    if (!detail::angle_less(a, b)) ++wraps;
  }
  if (wraps != 1) throw PreconditionError("rays wind around the origin more than once");
  auto smallest = std::min_element(rays.begin(), rays.end());
  std::rotate(rays.begin(), smallest, rays.end());
  Fan2D f;
  f.rays = std::move(rays);
  return f;
}

/// |det| of the two spanning rays; the local index of the cone's
/// singularity.
inline Int cone_index(const Ray& v, const Ray& w) {
  Int d = det(v, w);
  if (d == 0) throw PreconditionError("degenerate cone");
  return d < 0 ? Int(-d) : d;
}

// --- cyclic quotient type -----------------------------------------------------

/// Type of the two-dimensional cyclic quotient singularity of a cone: the
/// lattice-normalized model sends the first ray to (0,1) and the second to
/// (n,-q) with q in [0, n-1]; that cone is the 1/n(1,q) model.  Labels:
/// Smooth (n = 1), A_{n-1} (q = n-1), C_n (q = 1), Other otherwise.
struct ConeReport {
  Int index = 1;
  Int n = 1, q = 0;
  enum class Label { Smooth, A, C, Other } label = Label::Smooth;

  std::string label_text() const {
    switch (label) {
      case Label::Smooth: return "Smooth";
      case Label::A: return "A_" + (n - 1).str();
      case Label::C: return "C_" + n.str();
      case Label::Other: return "1/" + n.str() + "(1," + q.str() + ")";
    }
    return "?";
  }
};

namespace detail {

// 2x2 integer matrix helpers (row-major)
using Mat = std::array<std::array<Int, 2>, 2>;

inline std::array<Int, 2> mat_apply(const Mat& m, const Ray& v) {
  return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
}

inline Mat mat_inverse_unimodular(const Mat& m) {
  Int d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (d != 1 && d != -1) throw Error("internal: matrix is not unimodular");
  Mat adj{{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}};
  if (d == -1)
    for (auto& row : adj)
      for (auto& e : row) e = -e;
  return adj;
}

inline void ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return;
  }
  long long x1, y1;
  ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

// Normalization of the cone (v, w) with det(v, w) = n > 0: a GL_2(Z) map
// (determinant -1) sending v to (0,1) and w to (n,-q), q in [0,n-1].
inline Mat normalize_cone(const Ray& v, const Ray& w, Int& n, Int& q) {
  n = det(v, w);
  if (n <= 0) throw PreconditionError("cone rays must be counterclockwise");
  long long g, dlt;
  ext_gcd(v.x, v.y, g, dlt);  // g v.x + dlt v.y = 1 (v primitive)
  Mat m{{{Int(-v.y), Int(v.x)}, {Int(g), Int(dlt)}}};
  auto mw = mat_apply(m, w);  // = (n, mm)
  Int mm = mw[1];
  q = (-mm) % n;
  if (q < 0) q += n;
  // shear fixing (0,1): second row += s * first row, with s n + mm = -q
  Int s = (-q - mm) / n;
  m[1][0] += s * m[0][0];
  m[1][1] += s * m[0][1];
  return m;
}

inline Ray to_ray(const std::array<Int, 2>& v) {
  return Ray{static_cast<long long>(v[0]), static_cast<long long>(v[1])};
}

}  // namespace detail

inline ConeReport cone_report(const Ray& v, const Ray& w) {
  ConeReport rep;
  Int n, q;
  detail::normalize_cone(v, w, n, q);
  rep.index = n;
  rep.n = n;
  rep.q = q;
  if (n == 1)
    rep.label = ConeReport::Label::Smooth;
  else if (q == n - 1)
    rep.label = ConeReport::Label::A;
  else if (q == 1)
    rep.label = ConeReport::Label::C;
  else
    rep.label = ConeReport::Label::Other;
  return rep;
}

// --- star subdivision ----------------------------------------------------------

/// Inserts a primitive ray lying strictly inside one cone of the fan.
inline Fan2D star_subdivide(const Fan2D& f, const Ray& v) {
  if (!is_primitive(v)) throw PreconditionError("subdivision ray must be primitive");
  for (const Ray& r : f.rays)
    if (r == v) throw PreconditionError("subdivision ray already lies in the fan");
  for (int i = 0; i < f.ray_count(); ++i) {
    const Ray& a = f.ray(i);
    const Ray& b = f.ray(i + 1);
    if (det(a, v) > 0 && det(v, b) > 0) {
      std::vector<Ray> rays = f.rays;
      rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, v);
      return make_fan(std::move(rays));
    }
  }
  throw PreconditionError("subdivision ray lies on a wall of the fan");
}

// --- Hirzebruch-Jung resolution -------------------------------------------------

struct ResolutionStep {
  Ray ray;
  Rat self_intersection;  // of the exceptional curve, always <= -2
};

/// Minimal resolution of the cone (v, w): the inserted rays of the
/// Hirzebruch-Jung chain, ordered from the v side to the w side, each with
/// the self-intersection -a_i of its exceptional curve, where
/// n/q = a_1 - 1/(a_2 - 1/(...)).
inline std::vector<ResolutionStep> hj_resolve(const Ray& v, const Ray& w) {
  Int n, q;
  detail::Mat m = detail::normalize_cone(v, w, n, q);
  if (n == 1) return {};
  detail::Mat minv = detail::mat_inverse_unimodular(m);

  std::vector<Int> entries;
  Int a = n, b = q;
  while (b > 0) {
    Int e = (a + b - 1) / b;  // ceil(a/b)
    entries.push_back(e);
    Int next = e * b - a;
    a = b;
    b = next;
  }

  std::array<Int, 2> prev{0, 1}, cur{1, 0};
  std::vector<ResolutionStep> out;
  for (const Int& e : entries) {
    out.push_back({detail::to_ray(detail::mat_apply(minv, detail::to_ray(cur))),
                   Rat(-e)});
    std::array<Int, 2> next{e * cur[0] - prev[0], e * cur[1] - prev[1]};
    prev = cur;
    cur = next;
  }
  if (cur != std::array<Int, 2>{n, -q}) throw Error("internal: continued fraction did not close");
  return out;
}

/// Every singular cone resolved; the result is a smooth complete fan.
inline Fan2D resolve_fan(const Fan2D& f) {
  std::vector<Ray> rays;
  for (int i = 0; i < f.ray_count(); ++i) {
    rays.push_back(f.ray(i));
    for (const auto& step : hj_resolve(f.ray(i), f.ray(i + 1))) rays.push_back(step.ray);
  }
  return make_fan(std::move(rays));
}

// --- self-intersections ---------------------------------------------------------

namespace detail {

// Coefficients of the exceptional chain in the pullback of the invariant
// curve: tridiagonal system  a_{j-1} - alpha_j a_j + a_{j+1} = -delta_{j,hit},
// where `hit` marks the chain end adjacent to the curve.
inline std::vector<Rat> chain_coefficients(const std::vector<ResolutionStep>& chain,
                                           bool curve_at_front) {
  const std::size_t r = chain.size();
  std::vector<Rat> rhs(r, Rat(0));
  if (r == 0) return rhs;
  rhs[curve_at_front ? 0 : r - 1] = Rat(-1);
  std::vector<Rat> diag(r), sub(r, Rat(1)), sup(r, Rat(1));
  for (std::size_t j = 0; j < r; ++j) diag[j] = chain[j].self_intersection;  // -alpha_j
  // Thomas elimination
  for (std::size_t j = 1; j < r; ++j) {
    Rat w = sub[j] / diag[j - 1];
    diag[j] -= w * sup[j - 1];
    rhs[j] -= w * rhs[j - 1];
  }
  std::vector<Rat> a(r);
  a[r - 1] = rhs[r - 1] / diag[r - 1];
  for (std::size_t j = r - 1; j-- > 0;) a[j] = (rhs[j] - sup[j] * a[j + 1]) / diag[j];
  return a;
}

}  // namespace detail

/// Rational self-intersection of the invariant curve of ray i, computed on
/// the minimal resolution of the two adjacent cones and pushed down by the
/// exceptional correction (the pullback's chain coefficients).
inline Rat self_intersection(const Fan2D& f, int i) {
  const Ray& prev = f.ray(i - 1);
  const Ray& here = f.ray(i);
  const Ray& next = f.ray(i + 1);

  auto left = hj_resolve(prev, here);    // chain from prev toward here
  auto right = hj_resolve(here, next);   // chain from here toward next
  Ray nl = left.empty() ? prev : left.back().ray;
  Ray nr = right.empty() ? next : right.front().ray;
  Rat tilde_sq(-det(nl, nr));

  Rat correction(0);
  if (!left.empty()) correction += detail::chain_coefficients(left, false).back();
  if (!right.empty()) correction += detail::chain_coefficients(right, true).front();
  return tilde_sq + correction;
}

// --- complexity ------------------------------------------------------------------

/// Picard rank plus dimension minus the boundary coefficient sum.
struct BoundarySum {
  Int picard_rank = 0;
  Rat coeff_sum = Rat(0);
};

struct ComplexityReport {
  Rat value;
  bool toric_flag = false;  // complexity < 1 forces a toric pair
};

inline ComplexityReport complexity(const BoundarySum& b) {
  ComplexityReport rep;
  rep.value = Rat(b.picard_rank) + 2 - b.coeff_sum;
  rep.toric_flag = rep.value < 1;
  return rep;
}

inline Int fan_picard_rank(const Fan2D& f) { return Int(f.ray_count()) - 2; }

/// The toric boundary with all coefficients one: complexity is always 0.
inline BoundarySum toric_boundary_sum(const Fan2D& f) {
  return {fan_picard_rank(f), Rat(f.ray_count())};
}

// --- recognition ------------------------------------------------------------------

struct SurfaceId {
  enum class Kind { P2, P11n, P123, Hirzebruch, Unrecognized } kind = Kind::Unrecognized;
  Int n = 0;  // parameter of P(1,1,n) or Sigma_n

  std::string text() const {
    switch (kind) {
      case Kind::P2: return "P^2";
      case Kind::P11n: return "P(1,1," + n.str() + ")";
      case Kind::P123: return "P(1,2,3)";
      case Kind::Hirzebruch: return "Sigma_" + n.str();
      case Kind::Unrecognized: return "unrecognized";
    }
    return "?";
  }
};

namespace detail {

// GL_2(Z)-equivalence of fans: some matrix maps the ray set bijectively,
// preserving the cyclic structure up to rotation and reflection.
inline bool fans_isomorphic(const Fan2D& a, const Fan2D& b) {
  if (a.ray_count() != b.ray_count()) return false;
  const int r = a.ray_count();
  auto try_map = [&](const Ray& a0, const Ray& a1, const Ray& b0, const Ray& b1) {
    // solve M [a0 a1] = [b0 b1] over Q, require integrality and |det| = 1
    Int d = det(a0, a1);
    if (d == 0) return false;
    // M = [b0 b1] adj([a0 a1]) / d, columns
    Int m00 = b0.x * Int(a1.y) - b1.x * Int(a0.y);
    Int m01 = -b0.x * Int(a1.x) + b1.x * Int(a0.x);
    Int m10 = b0.y * Int(a1.y) - b1.y * Int(a0.y);
    Int m11 = -b0.y * Int(a1.x) + b1.y * Int(a0.x);
    for (Int* e : {&m00, &m01, &m10, &m11}) {
      if (*e % d != 0) return false;
      *e /= d;
    }
    Int md = m00 * m11 - m01 * m10;
    if (md != 1 && md != -1) return false;
    std::vector<Ray> mapped;
    for (const Ray& v : a.rays)
      mapped.push_back(Ray{static_cast<long long>(m00 * v.x + m01 * v.y),
                           static_cast<long long>(m10 * v.x + m11 * v.y)});
    std::vector<Ray> sorted_mapped = mapped, sorted_b = b.rays;
    std::sort(sorted_mapped.begin(), sorted_mapped.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    return sorted_mapped == sorted_b;
  };
  for (int j = 0; j < r; ++j) {
    if (try_map(a.ray(0), a.ray(1), b.ray(j), b.ray(j + 1))) return true;
    if (try_map(a.ray(0), a.ray(1), b.ray(j + 1), b.ray(j))) return true;  // reflection
  }
  return false;
}

}  // namespace detail

/// Recognition of the named surfaces among complete fans with at most four
/// rays, by lattice-equivalence against normalized models.
inline SurfaceId recognize(const Fan2D& f) {
  if (f.ray_count() > 4)
    throw PreconditionError("recognition is implemented for fans with at most four rays");
  SurfaceId id;
  if (f.ray_count() == 3) {
    // positive weights from the linear relation between the three rays
    Int w0 = det(f.ray(1), f.ray(2));
    Int w1 = det(f.ray(2), f.ray(0));
    Int w2 = det(f.ray(0), f.ray(1));
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(w0, w1), w2);
    std::vector<Int> ws{w0 / g, w1 / g, w2 / g};
    std::sort(ws.begin(), ws.end());
    auto model = [&](std::vector<Ray> rays) { return make_fan(std::move(rays)); };
    if (ws == std::vector<Int>{1, 1, 1} &&
        detail::fans_isomorphic(f, model({{1, 0}, {0, 1}, {-1, -1}}))) {
      id.kind = SurfaceId::Kind::P2;
      return id;
    }
    if (ws == std::vector<Int>{1, 2, 3} &&
        detail::fans_isomorphic(f, model({{1, 0}, {0, 1}, {-2, -3}}))) {
      id.kind = SurfaceId::Kind::P123;
      return id;
    }
    if (ws[0] == 1 && ws[1] == 1) {
      long long n = static_cast<long long>(ws[2]);
      if (detail::fans_isomorphic(f, model({{1, 0}, {0, 1}, {-1, -n}}))) {
        id.kind = SurfaceId::Kind::P11n;
        id.n = ws[2];
        return id;
      }
    }
    return id;
  }
  // four rays: Hirzebruch surfaces are the smooth complete fans
  for (int i = 0; i < 4; ++i)
    if (cone_index(f.ray(i), f.ray(i + 1)) != 1) return id;
  Rat minsq(0);
  for (int i = 0; i < 4; ++i) minsq = std::min(minsq, self_intersection(f, i));
  Int n = -rat_num(minsq);
  long long nn = static_cast<long long>(n);
  if (detail::fans_isomorphic(
          f, make_fan({{1, 0}, {0, 1}, {-1, nn}, {0, -1}}))) {
    id.kind = SurfaceId::Kind::Hirzebruch;
    id.n = n;
  }
  return id;
}

}  // namespace lcy::fan

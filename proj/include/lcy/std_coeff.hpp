#pragma once

#include <string>

#include "lcy/errors.hpp"
#include "lcy/rational.hpp"

namespace lcy::curves {

/// A standard coefficient 1 - 1/m, carried together with its orbifold
/// index m.  Coefficient 1 is represented by an infinite index (a
/// distinguished sentinel), never by a large integer.
struct StdCoeff {
  bool infinite = false;
  Int index = 1;  // valid only when !infinite; always >= 1

  static StdCoeff finite(Int m) {
    if (m < 1) throw PreconditionError("orbifold index must be >= 1");
    StdCoeff c;
    c.index = std::move(m);
    return c;
  }

  static StdCoeff inf() {
    StdCoeff c;
    c.infinite = true;
    return c;
  }

  Rat value() const {
    if (infinite) return Rat(1);
    return Rat(index - 1, index);
  }

  bool operator==(const StdCoeff& o) const {
    return infinite == o.infinite && (infinite || index == o.index);
  }

  std::string to_string() const {
    return infinite ? std::string("inf") : index.str();
  }
};

/// Largest standard value 1 - 1/m <= q, over m in {1,2,...} or infinity.
inline StdCoeff standard_approximation(const Rat& q) {
  if (q < 0 || q > 1) throw PreconditionError("coefficient outside [0,1]");
  if (q == 1) return StdCoeff::inf();
  // 1 - 1/m <= q  <=>  m <= 1/(1-q); the maximizer is floor of that.
  Int m = rat_floor(Rat(1) / (Rat(1) - q));
  if (m < 1) m = 1;
  return StdCoeff::finite(m);
}

inline bool is_standard(const Rat& q) {
  if (q < 0 || q > 1) return false;
  return standard_approximation(q).value() == q;
}

/// Orbifold index of a standard coefficient; precondition: is_standard(q).
inline StdCoeff orbifold_index(const Rat& q) {
  StdCoeff c = standard_approximation(q);
  if (c.value() != q)
    throw PreconditionError("coefficient " + rat_to_string(q) + " is not standard");
  return c;
}

}  // namespace lcy::curves

#pragma once

#include <vector>

#include "lcy/heisenberg.hpp"
#include "lcy/rational.hpp"

namespace lcy::heis {

// Confluent rewriting oracle for H_k, independent of the closed-form
// multiplication law.  Words are letter sequences over {a, b, c} and their
// inverses; the rules sort a's before b's before c's, collecting central
// correction letters from b a = a b c^-k and its inverse variants:
//
//   b    a    -> a    b    c^-k        b    a^-1 -> a^-1 b    c^k
//   b^-1 a    -> a    b^-1 c^k         b^-1 a^-1 -> a^-1 b^-1 c^-k
//   c^s  a^t  -> a^t  c^s              c^s  b^t  -> b^t  c^s
//   x x^-1   -> (empty)
//
// The terminal words are exactly the normal forms a^x b^y c^z.

enum : int { LA = 1, LB = 2, LC = 3 };  // letters; negatives are inverses

using LetterWord = std::vector<int>;

namespace detail {

inline void push_c_letters(LetterWord& w, const Int& count) {
  Int n = count < 0 ? Int(-count) : count;
  int letter = count < 0 ? -LC : LC;
  for (Int i = 0; i < n; ++i) w.push_back(letter);
}

}  // namespace detail

/// One pass: apply the leftmost applicable rule; returns false at a normal
/// form.
inline bool rewrite_step(LetterWord& w, const Int& k) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int u = w[i], v = w[i + 1];
    if (u == -v) {  // free cancellation
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      return true;
    }
    bool u_is_b = u == LB || u == -LB;
    bool v_is_a = v == LA || v == -LA;
    if (u_is_b && v_is_a) {
      // b^s a^t -> a^t b^s c^(-k s t) with s, t in {+1, -1}
      int s = u == LB ? 1 : -1;
      int t = v == LA ? 1 : -1;
      LetterWord repl{v, u};
      detail::push_c_letters(repl, -k * s * t);
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
      return true;
    }
    bool u_is_c = u == LC || u == -LC;
    if (u_is_c && !(v == LC || v == -LC)) {  // c commutes past a and b
      std::swap(w[i], w[i + 1]);
      return true;
    }
  }
  return false;
}

/// Normal form of a letter word by exhaustive rewriting.
inline HeisenbergElement rewrite_normal_form(LetterWord w, const Int& k) {
  while (rewrite_step(w, k)) {
  }
  HeisenbergElement out = h_identity(k);
  for (int letter : w) {
    switch (letter) {
      case LA: ++out.x; break;
      case -LA: --out.x; break;
      case LB: ++out.y; break;
      case -LB: --out.y; break;
      case LC: ++out.z; break;
      case -LC: --out.z; break;
      default: throw Error("internal: bad letter in rewriting oracle");
    }
  }
  return out;
}

/// Normal form of the same word through the closed-form multiplication.
inline HeisenbergElement fold_normal_form(const LetterWord& w, const Int& k) {
  HeisenbergElement acc = h_identity(k);
  for (int letter : w) {
    HeisenbergElement g = h_identity(k);
    switch (letter) {
      case LA: g = h_a(k); break;
      case -LA: g = h_inv(h_a(k)); break;
      case LB: g = h_b(k); break;
      case -LB: g = h_inv(h_b(k)); break;
      case LC: g = h_c(k); break;
      case -LC: g = h_inv(h_c(k)); break;
      default: throw Error("internal: bad letter");
    }
    acc = h_mul(acc, g);
  }
  return acc;
}

/// Checks h_mul against the rewriting oracle on every word of length at
/// most `max_len` over the six letters.  Returns the number of words
/// compared; throws on the first disagreement.
inline unsigned long long validate_multiplication_law(const Int& k, int max_len) {
  const int letters[6] = {LA, -LA, LB, -LB, LC, -LC};
  unsigned long long count = 0;
  LetterWord w;
  // depth-first enumeration of words of length 1..max_len
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int& idx = stack.back();
    if (idx >= 6) {
      stack.pop_back();
      if (!w.empty()) w.pop_back();
      if (!stack.empty()) ++stack.back();
      continue;
    }
    w.push_back(letters[idx]);
    HeisenbergElement via_oracle = rewrite_normal_form(w, k);
    HeisenbergElement via_mul = fold_normal_form(w, k);
    ++count;
    if (!(via_oracle == via_mul))
      throw Error("multiplication law disagrees with the rewriting oracle on a word of length " +
                  std::to_string(w.size()));
    if (static_cast<int>(w.size()) < max_len) {
      stack.push_back(0);
    } else {
      w.pop_back();
      ++idx;
    }
  }
  return count;
}

}  // namespace lcy::heis

#pragma once

#include <vector>

namespace lcy::fp {

// A word is a sequence of signed 1-based generator indices: +i is the i-th
// generator, -i its inverse.
using Word = std::vector<int>;

/// Removes adjacent inverse pairs until none remain.  The result is equal
/// to the input in the free group.
inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) continue;
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

inline Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word word_pow(const Word& w, long long n) {
  Word base = n >= 0 ? w : word_inverse(w);
  long long reps = n >= 0 ? n : -n;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (long long i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

/// [u,v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) {
  return free_reduce(word_concat(word_concat(u, v), word_concat(word_inverse(u), word_inverse(v))));
}

}  // namespace lcy::fp

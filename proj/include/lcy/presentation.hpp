#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "lcy/errors.hpp"
#include "lcy/word.hpp"

namespace lcy::fp {

/// A finitely presented group.  Relators are stored freely reduced;
/// generator indices are 1-based and must stay in range.
struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;  // optional; defaults to a, b, c, ...

  Presentation() = default;
  Presentation(int gens, std::vector<Word> rels, std::vector<std::string> nm = {})
      : generator_count(gens), names(std::move(nm)) {
    if (gens < 1) throw PreconditionError("presentation needs at least one generator");
    for (auto& r : rels) add_relator(std::move(r));
    if (names.empty()) default_names();
    if (static_cast<int>(names.size()) != gens)
      throw PreconditionError("generator name count mismatch");
  }

  void add_relator(Word r) {
    r = free_reduce(r);
    for (int letter : r) {
      int g = letter > 0 ? letter : -letter;
      if (g < 1 || g > generator_count)
        throw PreconditionError("relator uses generator index out of range");
    }
    relators.push_back(std::move(r));
  }

  const std::string& name_of(int gen) const { return names[static_cast<std::size_t>(gen - 1)]; }

 private:
  void default_names() {
    for (int i = 0; i < generator_count; ++i)
      names.push_back(std::string(1, static_cast<char>('a' + (i % 26))));
  }
};

// --- text format -----------------------------------------------------------
//
//   presentation := '<' names '|' relator-list '>'
//   names        := name (',' name)*
//   relator-list := (empty) | relator (',' relator)*
//   relator      := term+
//   term         := atom ('^' integer)?
//   atom         := name | '(' relator ')' | '[' relator ',' relator ']'
//   name         := single lowercase letter
//
// '[u,v]' abbreviates the commutator u v u^-1 v^-1.  Whitespace is ignored.
// Example: <a,b,c | [a,b]c^-3, [a,c], [b,c]>

namespace detail {

struct PresParser {
  const std::string& s;
  std::size_t i = 0;
  std::map<char, int> gen_index;

  explicit PresParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("presentation parse error at position " + std::to_string(i) + ": " + msg);
  }

  long long parse_integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++i;
    }
    return neg ? -v : v;
  }

  Word parse_atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Word w = parse_relator();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (c == '[') {
      eat('[');
      Word u = parse_relator();
      if (!eat(',')) fail("expected ',' in commutator");
      Word v = parse_relator();
      if (!eat(']')) fail("expected ']'");
      return commutator(u, v);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      ++i;
      auto it = gen_index.find(c);
      if (it == gen_index.end()) fail(std::string("unknown generator '") + c + "'");
      return Word{it->second};
    }
    fail("expected generator, '(' or '['");
  }

  Word parse_term() {
    Word atom = parse_atom();
    if (peek() == '^') {
      eat('^');
      long long e = parse_integer();
      return word_pow(atom, e);
    }
    return atom;
  }

  bool at_relator_start() {
    char c = peek();
    return c == '(' || c == '[' || std::islower(static_cast<unsigned char>(c));
  }

  Word parse_relator() {
    Word w = parse_term();
    while (at_relator_start()) {
      Word t = parse_term();
      w.insert(w.end(), t.begin(), t.end());
    }
    return free_reduce(w);
  }
};

}  // namespace detail

inline Presentation parse_presentation(const std::string& text) {
  detail::PresParser p(text);
  if (!p.eat('<')) p.fail("expected '<'");
  std::vector<std::string> names;
  while (true) {
    char c = p.peek();
    if (!std::islower(static_cast<unsigned char>(c))) p.fail("expected generator name");
    if (p.gen_index.count(c)) p.fail("duplicate generator name");
    p.gen_index[c] = static_cast<int>(names.size()) + 1;
    names.push_back(std::string(1, c));
    ++p.i;
    if (!p.eat(',')) break;
  }
  if (!p.eat('|')) p.fail("expected '|'");
  std::vector<Word> relators;
  if (p.peek() != '>') {
    relators.push_back(p.parse_relator());
    while (p.eat(',')) relators.push_back(p.parse_relator());
  }
  if (!p.eat('>')) p.fail("expected '>'");
  p.skip_ws();
  if (p.i != p.s.size()) p.fail("trailing input");
  const int gen_count = static_cast<int>(names.size());
  return Presentation(gen_count, std::move(relators), std::move(names));
}

/// Parses a single word over the presentation's generator names, with the
/// same power/commutator syntax as relators.
inline Word parse_word(const Presentation& p, const std::string& text) {
  detail::PresParser parser(text);
  for (int g = 1; g <= p.generator_count; ++g) {
    const std::string& nm = p.name_of(g);
    if (nm.size() != 1) throw ParseError("word parsing needs single-letter generator names");
    parser.gen_index[nm[0]] = g;
  }
  Word w = parser.parse_relator();
  parser.skip_ws();
  if (parser.i != text.size()) parser.fail("trailing input in word");
  return w;
}

inline std::string word_to_string(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    int letter = w[i];
    std::size_t j = i;
    while (j < w.size() && w[j] == letter) ++j;
    long long e = static_cast<long long>(j - i) * (letter > 0 ? 1 : -1);
    out += p.name_of(letter > 0 ? letter : -letter);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

inline std::string to_text(const Presentation& p) {
  std::string out = "<";
  for (int g = 1; g <= p.generator_count; ++g) {
    if (g > 1) out += ",";
    out += p.name_of(g);
  }
  out += " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) out += ", ";
    out += word_to_string(p, p.relators[r]);
  }
  out += ">";
  return out;
}

}  // namespace lcy::fp

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcy/errors.hpp"
#include "lcy/rational.hpp"
#include "lcy/smith.hpp"
#include "lcy/todd_coxeter.hpp"

namespace lcy::fp {

/// Reidemeister-Schreier rewriting: a presentation of the finite-index
/// subgroup described by a complete coset table.  Generators are the
/// Schreier generators of the non-tree edges of a breadth-first spanning
/// tree; relators are the rewritten conjugates t_c r t_c^-1.
inline Presentation subgroup_presentation(const Presentation& p, const CosetTable& t) {
  if (t.status != CosetTable::Status::Complete)
    throw PreconditionError("subgroup presentation needs a complete coset table");
  const int n = t.index();
  const int g = p.generator_count;

  // breadth-first spanning tree rooted at the subgroup coset
  std::vector<bool> tree_edge(static_cast<std::size_t>(n) * static_cast<std::size_t>(g), false);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  seen[0] = true;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int col = 0; col < 2 * g; ++col) {
      int letter = (col % 2 == 0) ? col / 2 + 1 : -(col / 2 + 1);
      int d = t.action(c, letter);
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = true;
        order.push_back(d);
        // record the tree edge in positive direction
        if (letter > 0)
          tree_edge[static_cast<std::size_t>(c) * g + (letter - 1)] = true;
        else
          tree_edge[static_cast<std::size_t>(d) * g + (-letter - 1)] = true;
      }
    }
  }

  // Schreier generator numbering for non-tree positive edges
  std::vector<int> schreier_index(static_cast<std::size_t>(n) * static_cast<std::size_t>(g), 0);
  int next = 1;
  for (int c = 0; c < n; ++c)
    for (int x = 1; x <= g; ++x)
      if (!tree_edge[static_cast<std::size_t>(c) * g + (x - 1)])
        schreier_index[static_cast<std::size_t>(c) * g + (x - 1)] = next++;
  const int sub_gens = next - 1;

  auto rewrite = [&](int start, const Word& w) {
    Word out;
    int c = start;
    for (int letter : w) {
      if (letter > 0) {
        int idx = schreier_index[static_cast<std::size_t>(c) * g + (letter - 1)];
        if (idx > 0) out.push_back(idx);
        c = t.action(c, letter);
      } else {
        int d = t.action(c, letter);
        int idx = schreier_index[static_cast<std::size_t>(d) * g + (-letter - 1)];
        if (idx > 0) out.push_back(-idx);
        c = d;
      }
    }
    return free_reduce(out);
  };

  std::vector<Word> relators;
  for (int c = 0; c < n; ++c)
    for (const Word& r : p.relators) {
      Word w = rewrite(c, r);
      if (!w.empty()) relators.push_back(std::move(w));
    }
  if (sub_gens == 0)
    // index equals the group order: the subgroup is trivial
    return Presentation(1, {Word{1}});
  return Presentation(sub_gens, std::move(relators));
}

/// Certifies a subgroup claim: the enumeration over `gens` must close with
/// exactly `claimed_index` cosets and, when `claimed_abelian_rank` is
/// given, the Reidemeister-Schreier abelianization of the subgroup must
/// have exactly that rank (torsion factors plus free rank).  Throws
/// BudgetError when the enumeration does not close within `max_cosets`.
inline bool verify_subgroup_claim(const Presentation& p, const std::vector<Word>& gens,
                                  int claimed_index, std::optional<int> claimed_abelian_rank,
                                  int max_cosets = 100000) {
  CosetTable t = coset_enumerate(p, gens, max_cosets);
  if (t.status != CosetTable::Status::Complete)
    throw BudgetError("coset enumeration budget exceeded while certifying a subgroup claim");
  if (t.index() != claimed_index) return false;
  if (claimed_abelian_rank) {
    AbelianInvariants inv = abelianization(subgroup_presentation(p, t));
    if (inv.rank() != *claimed_abelian_rank) return false;
  }
  return true;
}

/// Schreier generators of the kernel of the character G -> Z/d sending
/// generator i to phi[i-1].  The coset graph is the cyclic group Z/d; the
/// transversal is a breadth-first tree from 0.
inline std::vector<Word> cyclic_character_kernel_gens(const Presentation& p,
                                                      const std::vector<Int>& phi, const Int& d) {
  if (d < 1) throw PreconditionError("character modulus must be >= 1");
  if (static_cast<int>(phi.size()) != p.generator_count)
    throw PreconditionError("character value count mismatch");
  long long dd = static_cast<long long>(d);
  auto value = [&](int gen) {
    Int v = phi[static_cast<std::size_t>(gen - 1)] % d;
    if (v < 0) v += d;
    return static_cast<long long>(v);
  };

  // transversal words t_j with phi(t_j) = j
  std::vector<Word> transversal(static_cast<std::size_t>(dd));
  std::vector<bool> have(static_cast<std::size_t>(dd), false);
  have[0] = true;
  std::vector<long long> frontier{0};
  while (!frontier.empty()) {
    std::vector<long long> next_frontier;
    for (long long j : frontier)
      for (int gen = 1; gen <= p.generator_count; ++gen)
        for (int sign : {+1, -1}) {
          long long v = value(gen) * sign;
          long long k = ((j + v) % dd + dd) % dd;
          if (!have[static_cast<std::size_t>(k)]) {
            have[static_cast<std::size_t>(k)] = true;
            transversal[static_cast<std::size_t>(k)] = transversal[static_cast<std::size_t>(j)];
            transversal[static_cast<std::size_t>(k)].push_back(sign * gen);
            next_frontier.push_back(k);
          }
        }
    frontier = std::move(next_frontier);
  }
  for (bool h : have)
    if (!h) throw PreconditionError("character is not surjective onto Z/d");

  std::vector<Word> kernel_gens;
  for (long long j = 0; j < dd; ++j)
    for (int gen = 1; gen <= p.generator_count; ++gen) {
      long long k = (j + value(gen)) % dd;
      Word w = transversal[static_cast<std::size_t>(j)];
      w.push_back(gen);
      Word back = word_inverse(transversal[static_cast<std::size_t>(k)]);
      w.insert(w.end(), back.begin(), back.end());
      w = free_reduce(w);
      if (!w.empty()) kernel_gens.push_back(std::move(w));
    }
  return kernel_gens;
}

}  // namespace lcy::fp

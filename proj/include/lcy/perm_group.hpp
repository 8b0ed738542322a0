#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lcy/errors.hpp"
#include "lcy/todd_coxeter.hpp"

namespace lcy::fp {

// Permutations act on {0,...,n-1}; composition is left-to-right:
// (p*q)(i) = q[p[i]], matching the right action of words on cosets.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

inline Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_identity(degree);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i)
      p[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
  if (!is_permutation(p)) throw PreconditionError("overlapping or out-of-range cycles");
  return p;
}

struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;

  PermGroup() = default;
  PermGroup(int deg, std::vector<Perm> generators) : degree(deg), gens(std::move(generators)) {
    for (const Perm& p : gens)
      if (static_cast<int>(p.size()) != degree || !is_permutation(p))
        throw PreconditionError("generator is not a permutation of the stated degree");
  }
};

/// Permutation action of the generators on the cosets of a completed
/// enumeration over the trivial subgroup (the regular representation).
inline PermGroup regular_representation(const CosetTable& t) {
  if (t.status != CosetTable::Status::Complete)
    throw PreconditionError("regular representation needs a complete coset table");
  if (!t.over_trivial_subgroup)
    throw PreconditionError("regular representation needs enumeration over the trivial subgroup");
  std::vector<Perm> gens;
  for (int g = 1; g <= t.generator_count; ++g) {
    Perm p(static_cast<std::size_t>(t.index()));
    for (int c = 0; c < t.index(); ++c) p[static_cast<std::size_t>(c)] = t.action(c, g);
    if (!is_permutation(p)) throw PreconditionError("coset table does not define a permutation");
    gens.push_back(std::move(p));
  }
  return PermGroup(t.index(), std::move(gens));
}

namespace detail {

// All elements of <gens>; throws BudgetError past max_order.
inline std::set<Perm> closure(int degree, const std::vector<Perm>& gens,
                              unsigned long long max_order) {
  std::set<Perm> elems;
  std::vector<Perm> frontier;
  elems.insert(perm_identity(degree));
  frontier.push_back(perm_identity(degree));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& g : gens) {
        Perm prod = perm_compose(e, g);
        if (elems.insert(prod).second) {
          if (elems.size() > max_order) throw BudgetError("group order exceeds configured bound");
          next.push_back(std::move(prod));
        }
      }
    frontier = std::move(next);
  }
  return elems;
}

// Deterministic small generating set extracted from an element list.
inline std::vector<Perm> reduce_generators(int degree, const std::set<Perm>& elems,
                                           unsigned long long max_order) {
  std::vector<Perm> gens;
  std::set<Perm> have;
  have.insert(perm_identity(degree));
  for (const Perm& e : elems) {
    if (have.count(e)) continue;
    gens.push_back(e);
    have = closure(degree, gens, max_order);
    if (have.size() == elems.size()) break;
  }
  return gens;
}

// Smallest subgroup containing `seeds` that is closed under conjugation by
// the ambient generators.
inline std::set<Perm> normal_closure(int degree, const std::vector<Perm>& ambient_gens,
                                     std::vector<Perm> seeds, unsigned long long max_order) {
  std::vector<Perm> T;
  for (Perm& s : seeds)
    if (s != perm_identity(degree)) T.push_back(std::move(s));
  std::set<Perm> E = closure(degree, T, max_order);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> add;
    for (const Perm& g : ambient_gens) {
      Perm gi = perm_inverse(g);
      for (const Perm& t : T) {
        Perm c = perm_compose(perm_compose(gi, t), g);
        if (!E.count(c)) add.push_back(std::move(c));
      }
    }
    if (!add.empty()) {
      grew = true;
      for (Perm& c : add) T.push_back(std::move(c));
      E = closure(degree, T, max_order);
    }
  }
  return E;
}

inline std::set<Perm> derived_subgroup(int degree, const std::vector<Perm>& gens,
                                       unsigned long long max_order) {
  std::vector<Perm> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Perm &u = gens[i], &v = gens[j];
      seeds.push_back(
          perm_compose(perm_compose(u, v), perm_compose(perm_inverse(u), perm_inverse(v))));
    }
  return normal_closure(degree, gens, std::move(seeds), max_order);
}

}  // namespace detail

struct GroupAnalysis {
  unsigned long long order = 0;
  // |G|, |G'|, |G''|, ... down to 1 or to the first repetition
  std::vector<unsigned long long> derived_series_orders;
  bool is_abelian = false;
  bool is_metabelian = false;  // second derived subgroup trivial
  std::optional<int> nilpotency_class;
};

/// Order, derived series, and nilpotency data by explicit element
/// enumeration.  Configured bound guards the closure computations.
inline GroupAnalysis analyze(const PermGroup& g, unsigned long long max_order = 1'000'000) {
  using detail::closure;
  using detail::derived_subgroup;
  using detail::normal_closure;
  using detail::reduce_generators;

  GroupAnalysis res;
  std::set<Perm> elems = closure(g.degree, g.gens, max_order);
  res.order = elems.size();
  res.derived_series_orders.push_back(res.order);

  std::vector<Perm> current_gens = g.gens;
  while (true) {
    std::set<Perm> derived = derived_subgroup(g.degree, current_gens, max_order);
    unsigned long long n = derived.size();
    if (n == res.derived_series_orders.back()) break;  // stabilized (perfect tail)
    res.derived_series_orders.push_back(n);
    if (n == 1) break;
    current_gens = reduce_generators(g.degree, derived, max_order);
  }
  // The series is computed until it reaches 1 or repeats; a repeated tail
  // (perfect derived subgroup) never reaches 1.
  bool reached_one = res.derived_series_orders.back() == 1;
  res.is_abelian = res.order == 1 || (reached_one && res.derived_series_orders.size() <= 2);
  res.is_metabelian = res.order == 1 || (reached_one && res.derived_series_orders.size() <= 3);

  // lower central series for the nilpotency class
  std::vector<Perm> gamma_gens = g.gens;
  unsigned long long prev = res.order;
  int cls = 0;
  while (true) {
    std::vector<Perm> seeds;
    for (const Perm& a : g.gens)
      for (const Perm& b : gamma_gens)
        seeds.push_back(
            perm_compose(perm_compose(a, b), perm_compose(perm_inverse(a), perm_inverse(b))));
    std::set<Perm> next = normal_closure(g.degree, g.gens, std::move(seeds), max_order);
    ++cls;
    if (next.size() == 1) {
      res.nilpotency_class = (res.order == 1) ? 0 : cls;
      break;
    }
    if (next.size() == prev) break;  // stabilized above 1: not nilpotent
    prev = next.size();
    gamma_gens = reduce_generators(g.degree, next, max_order);
  }
  return res;
}

}  // namespace lcy::fp

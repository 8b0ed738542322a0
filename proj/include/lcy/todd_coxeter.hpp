#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "lcy/errors.hpp"
#include "lcy/presentation.hpp"

namespace lcy::fp {

/// Outcome of a coset enumeration.  When complete, row c and column x give
/// the right action of signed generator x on coset c; cosets are numbered
/// in breadth-first order from the subgroup coset (row 0), so the table is
/// byte-stable for a given input.  Row 0 is the subgroup coset.
struct CosetTable {
  enum class Status { Complete, Exceeded };

  int generator_count = 0;
  Status status = Status::Exceeded;
  bool over_trivial_subgroup = false;
  std::vector<std::vector<int>> table;  // rows x 2g; entry -1 = undefined

  int index() const { return static_cast<int>(table.size()); }

  static int column(int signed_gen) {
    int g = signed_gen > 0 ? signed_gen : -signed_gen;
    return 2 * (g - 1) + (signed_gen > 0 ? 0 : 1);
  }

  int action(int coset, int signed_gen) const {
    return table[static_cast<std::size_t>(coset)][static_cast<std::size_t>(column(signed_gen))];
  }

  /// Image of a coset under a word; requires a complete table.
  int trace(int coset, const Word& w) const {
    for (int letter : w) coset = action(coset, letter);
    return coset;
  }

  bool operator==(const CosetTable& o) const {
    return generator_count == o.generator_count && status == o.status && table == o.table;
  }
};

namespace detail {

// Felsch-style enumerator: cosets are defined at the first undefined table
// entry (cosets ascending, columns in order x1, x1^-1, x2, ...), and every
// deduction is processed immediately against all relator rotations through
// the deduced letter.  Coincidences go through union-find with path
// compression.
class Felsch {
 public:
  Felsch(const Presentation& p, const std::vector<Word>& subgroup_gens, int max_cosets)
      : pres_(p), subgens_(subgroup_gens), max_cosets_(max_cosets) {
    if (max_cosets < 1) throw PreconditionError("max_cosets must be >= 1");
    ncols_ = 2 * p.generator_count;
    rotations_.resize(static_cast<std::size_t>(ncols_));
    for (const Word& r : p.relators) {
      if (r.empty()) continue;
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        Word rot(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        rotations_[static_cast<std::size_t>(CosetTable::column(rot[0]))].push_back(std::move(rot));
      }
    }
  }

  CosetTable run() {
    alloc_coset();
    bool ok = true;
    for (const Word& w : subgens_) {
      if (!scan_and_fill(0, w)) {
        ok = false;
        break;
      }
      process_queues();
    }
    while (ok) {
      process_queues();
      int coset = -1, col = -1;
      if (!next_undefined(coset, col)) break;
      int fresh = alloc_coset();
      if (fresh < 0) {
        ok = false;
        break;
      }
      set_entry(coset, col_letter(col), fresh);
    }

    CosetTable out;
    out.generator_count = pres_.generator_count;
    out.over_trivial_subgroup = subgens_.empty();
    out.status = ok ? CosetTable::Status::Complete : CosetTable::Status::Exceeded;
    renumber(out);
    return out;
  }

 private:
  const Presentation& pres_;
  const std::vector<Word>& subgens_;
  int max_cosets_;
  int ncols_ = 0;

  std::vector<std::vector<int>> tab_;
  std::vector<int> rep_;
  std::vector<std::vector<Word>> rotations_;
  std::deque<std::pair<int, int>> deductions_;  // (coset, signed letter)
  std::deque<std::pair<int, int>> coincidences_;
  // scan cursor: table entries are never erased, so the first-undefined
  // search can resume where it left off
  int cur_coset_ = 0;
  int cur_col_ = 0;

  static int col_letter(int col) { return (col % 2 == 0) ? col / 2 + 1 : -(col / 2 + 1); }

  int find(int c) {
    while (rep_[static_cast<std::size_t>(c)] != c) {
      rep_[static_cast<std::size_t>(c)] =
          rep_[static_cast<std::size_t>(rep_[static_cast<std::size_t>(c)])];
      c = rep_[static_cast<std::size_t>(c)];
    }
    return c;
  }

  bool alive(int c) { return find(c) == c; }

  int alloc_coset() {
    if (static_cast<int>(tab_.size()) >= max_cosets_) return -1;
    tab_.emplace_back(static_cast<std::size_t>(ncols_), -1);
    rep_.push_back(static_cast<int>(tab_.size()) - 1);
    return static_cast<int>(tab_.size()) - 1;
  }

  int lookup(int coset, int letter) {
    int v = tab_[static_cast<std::size_t>(coset)][static_cast<std::size_t>(CosetTable::column(letter))];
    return v < 0 ? -1 : find(v);
  }

  void set_entry(int a, int letter, int b) {
    a = find(a);
    b = find(b);
    int existing = lookup(a, letter);
    if (existing >= 0) {
      if (existing != b) coincidences_.emplace_back(existing, b);
      return;
    }
    int back = lookup(b, -letter);
    if (back >= 0 && back != a) coincidences_.emplace_back(back, a);
    tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(CosetTable::column(letter))] = b;
    tab_[static_cast<std::size_t>(b)][static_cast<std::size_t>(CosetTable::column(-letter))] = a;
    deductions_.emplace_back(a, letter);
    deductions_.emplace_back(b, -letter);
  }

  // Trace relation w(start) = start as far as the table allows; derive a
  // deduction when exactly one entry is missing, a coincidence when none is.
  void scan(int start, const Word& w) {
    int f = find(start);
    std::size_t fi = 0;
    while (fi < w.size()) {
      int next = lookup(f, w[fi]);
      if (next < 0) break;
      f = next;
      ++fi;
    }
    if (fi == w.size()) {
      if (f != find(start)) coincidences_.emplace_back(f, find(start));
      return;
    }
    int b = find(start);
    std::size_t bi = w.size();
    while (bi > fi) {
      int prev = lookup(b, -w[bi - 1]);
      if (prev < 0) break;
      b = prev;
      --bi;
    }
    if (bi == fi) {
      if (f != b) coincidences_.emplace_back(f, b);
    } else if (bi == fi + 1) {
      set_entry(f, w[fi], b);
    }
  }

  bool scan_and_fill(int start, const Word& word) {
    Word w = free_reduce(word);
    if (w.empty()) return true;
    std::size_t i = 0;
    int c = find(start);
    while (i + 1 < w.size()) {
      int next = lookup(c, w[i]);
      if (next < 0) {
        next = alloc_coset();
        if (next < 0) return false;
        set_entry(c, w[i], next);
        process_queues();
        c = find(c);
        continue;  // re-read the (possibly merged) entry
      }
      c = next;
      ++i;
    }
    set_entry(find(c), w.back(), find(start));
    return true;
  }

  void process_queues() {
    while (!coincidences_.empty() || !deductions_.empty()) {
      if (!coincidences_.empty()) {
        auto [a, b] = coincidences_.front();
        coincidences_.pop_front();
        merge(a, b);
        continue;
      }
      auto [c, letter] = deductions_.front();
      deductions_.pop_front();
      c = find(c);
      for (const Word& rot : rotations_[static_cast<std::size_t>(CosetTable::column(letter))])
        scan(c, rot);
    }
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller id alive
    rep_[static_cast<std::size_t>(b)] = a;
    for (int col = 0; col < ncols_; ++col) {
      int v = tab_[static_cast<std::size_t>(b)][static_cast<std::size_t>(col)];
      if (v < 0) continue;
      int letter = col_letter(col);
      int target = find(v);
      int cur = lookup(a, letter);
      if (cur < 0)
        set_entry(a, letter, target);
      else if (cur != target)
        coincidences_.emplace_back(cur, target);
    }
    // table entries are only ever added, never cleared, so the definition
    // cursor stays valid across merges
  }

  bool next_undefined(int& coset, int& col) {
    while (cur_coset_ < static_cast<int>(tab_.size())) {
      if (!alive(cur_coset_)) {
        ++cur_coset_;
        cur_col_ = 0;
        continue;
      }
      while (cur_col_ < ncols_) {
        if (lookup(cur_coset_, col_letter(cur_col_)) < 0) {
          coset = cur_coset_;
          col = cur_col_;
          return true;
        }
        ++cur_col_;
      }
      ++cur_coset_;
      cur_col_ = 0;
    }
    return false;
  }

  // Compact to a breadth-first numbering from the subgroup coset so the
  // output does not depend on the enumeration history.
  void renumber(CosetTable& out) {
    std::vector<int> order;
    std::vector<int> newid(tab_.size(), -1);
    int root = find(0);
    newid[static_cast<std::size_t>(root)] = 0;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int c = order[head];
      for (int k = 0; k < ncols_; ++k) {
        int v = lookup(c, col_letter(k));
        if (v >= 0 && newid[static_cast<std::size_t>(v)] < 0) {
          newid[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
          order.push_back(v);
        }
      }
    }
    out.table.assign(order.size(), std::vector<int>(static_cast<std::size_t>(ncols_), -1));
    for (std::size_t n = 0; n < order.size(); ++n)
      for (int k = 0; k < ncols_; ++k) {
        int v = lookup(order[n], col_letter(k));
        out.table[n][static_cast<std::size_t>(k)] = v < 0 ? -1 : newid[static_cast<std::size_t>(v)];
      }
  }
};

}  // namespace detail

/// Todd-Coxeter coset enumeration of the subgroup generated by
/// `subgroup_gens` (empty list: trivial subgroup).  `max_cosets` bounds the
/// total number of cosets ever allocated; hitting it yields status
/// Exceeded, a normal outcome distinguishable from malformed input.
inline CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens,
                                  int max_cosets) {
  detail::Felsch f(p, subgroup_gens, max_cosets);
  return f.run();
}

}  // namespace lcy::fp

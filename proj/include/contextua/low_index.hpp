#pragma once

// Conjugacy-class enumeration of index-n subgroups of a two-generator
// finitely presented group: backtracking over coset tables in standard form
// with first-in-class canonicity pruning.
//
// A complete table is emitted iff it is the lexicographically least among
// the standard relabelings rooted at every coset, which makes emitted tables
// canonical conjugacy-class representatives.  Partial tables are pruned as
// soon as some alternative root is provably lexicographically smaller on the
// commonly defined prefix.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contextua/coset_table.hpp"
#include "contextua/word.hpp"

namespace contextua {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(long long nodes, long long found)
      : std::runtime_error("low-index node budget exceeded after " +
                           std::to_string(nodes) + " nodes (" +
                           std::to_string(found) + " classes found)"),
        found_(found) {}
  long long found() const { return found_; }

 private:
  long long found_;
};

struct LowIndexOptions {
  long long node_budget = 1'000'000'000;
};

namespace detail {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& pres, int index, LowIndexOptions opts,
                 const std::function<void(CosetTable&&)>& emit)
      : pres_(pres), n_(index), opts_(opts), emit_(emit) {
    if (index < 1) throw std::invalid_argument("index must be >= 1");
    for (const Word& r : pres.relators) {
      const auto& ls = r.letters();
      for (std::size_t k = 0; k < ls.size(); ++k) {
        std::vector<Letter> rot;
        rot.reserve(ls.size());
        for (std::size_t j = 0; j < ls.size(); ++j)
          rot.push_back(ls[(k + j) % ls.size()]);
        rotations_[rot[0]].push_back(std::move(rot));
      }
    }
    tab_.assign(static_cast<std::size_t>(n_) * 4, -1);
    lab_.resize(n_);
    ord_.resize(n_);
  }

  void run() {
    ncur_ = 1;
    dfs();
  }

 private:
  int& at(int c, int x) { return tab_[static_cast<std::size_t>(c) * 4 + x]; }
  int get(int c, int x) const {
    return tab_[static_cast<std::size_t>(c) * 4 + x];
  }

  void set_entry(int c, Letter x, int d) {
    at(c, x) = d;
    undo_.push_back(c * 4 + x);
    int e = d * 4 + inverse_letter(x);
    if (tab_[e] < 0) {
      tab_[e] = c;
      undo_.push_back(e);
    }
  }

  // Bidirectional scan of a relator rotation starting at coset c; deduces
  // single gaps, reports contradictions.  Newly deduced edges are queued.
  bool scan(int c, const std::vector<Letter>& w) {
    int f = c, i = 0;
    int b = c, r = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= r && get(f, w[i]) >= 0) f = get(f, w[i]), ++i;
      if (i > r) return f == b;
      while (r >= i && get(b, inverse_letter(w[r])) >= 0)
        b = get(b, inverse_letter(w[r])), --r;
      if (r < i) return f == b;
      if (r == i) {
        int partner = get(b, inverse_letter(w[i]));
        if (partner >= 0 && partner != f) return false;
        set_entry(f, w[i], b);
        queue_.push_back(f * 4 + w[i]);
        return true;
      }
      return true;  // gap of two or more: nothing to deduce yet
    }
  }

  // Drains the deduction queue; false on contradiction.
  bool drain() {
    while (qhead_ < queue_.size()) {
      int pos = queue_[qhead_++];
      int c = pos / 4;
      Letter x = static_cast<Letter>(pos % 4);
      int d = get(c, x);
      for (const auto& w : rotations_[x])
        if (!scan(c, w)) return false;
      for (const auto& w : rotations_[inverse_letter(x)])
        if (!scan(d, w)) return false;
    }
    return true;
  }

  // Standard relabeling rooted at tau compared against the current table.
  // -1: strictly smaller exists (prune);  0: indeterminate or equal;
  // +1: tau's relabeling is larger.
  int compare_root(int tau) {
    for (int i = 0; i < ncur_; ++i) lab_[i] = -1;
    lab_[tau] = 0;
    ord_[0] = tau;
    int cnt = 1;
    for (int m = 0; m < cnt; ++m) {
      int o = ord_[m];
      for (int x = 0; x < 4; ++x) {
        int e = get(o, x);
        int cur = get(m, x);
        if (e < 0 || cur < 0) return 0;
        if (lab_[e] < 0) {
          lab_[e] = cnt;
          ord_[cnt++] = e;
        }
        if (lab_[e] < cur) return -1;
        if (lab_[e] > cur) return 1;
      }
    }
    return 0;
  }

  bool is_pruned_by_conjugate() {
    for (int tau = 1; tau < ncur_; ++tau)
      if (compare_root(tau) < 0) return true;
    return false;
  }

  void dfs() {
    if (++nodes_ > opts_.node_budget) throw BudgetExceeded(nodes_, found_);

    // locate the first undefined entry in row-major order
    int pos = -1;
    for (int i = scan_hint_; i < ncur_ * 4; ++i)
      if (tab_[i] < 0) {
        pos = i;
        break;
      }
    if (pos < 0) {
      if (ncur_ == n_) emit_table();
      return;
    }
    int c = pos / 4;
    Letter x = static_cast<Letter>(pos % 4);

    int cap = ncur_ < n_ ? ncur_ + 1 : ncur_;
    for (int d = 0; d < cap; ++d) {
      if (d < ncur_ && get(d, inverse_letter(x)) >= 0) continue;
      std::size_t undo_mark = undo_.size();
      std::size_t queue_mark = queue_.size();
      std::size_t qhead_mark = qhead_;
      int saved_hint = scan_hint_;
      bool grew = (d == ncur_);
      if (grew) ++ncur_;

      set_entry(c, x, d);
      queue_.push_back(c * 4 + x);
      bool ok = drain();
      if (ok && !is_pruned_by_conjugate()) {
        scan_hint_ = pos;
        dfs();
      }

      // rollback
      while (undo_.size() > undo_mark) {
        tab_[undo_.back()] = -1;
        undo_.pop_back();
      }
      queue_.resize(queue_mark);
      qhead_ = qhead_mark;
      scan_hint_ = saved_hint;
      if (grew) --ncur_;
    }
  }

  void emit_table() {
    // exact canonicity: no root may give a strictly smaller relabeling
    for (int tau = 1; tau < ncur_; ++tau)
      if (compare_root(tau) < 0) return;
    ++found_;
    CosetTable t;
    t.n = n_;
    t.origin = pres_;
    t.act.resize(n_);
    for (int cc = 0; cc < n_; ++cc)
      for (int x = 0; x < 4; ++x) t.act[cc][x] = get(cc, x);
    emit_(std::move(t));
  }

  const Presentation& pres_;
  int n_;
  LowIndexOptions opts_;
  const std::function<void(CosetTable&&)>& emit_;

  std::array<std::vector<std::vector<Letter>>, 4> rotations_;
  std::vector<int> tab_;
  std::vector<int> undo_;
  std::vector<int> queue_;
  std::size_t qhead_ = 0;
  std::vector<int> lab_, ord_;
  int ncur_ = 1;
  int scan_hint_ = 0;
  long long nodes_ = 0;
  long long found_ = 0;
};

}  // namespace detail

// Streams one canonical coset table per conjugacy class of index-exactly-n
// subgroups, in ascending order of the canonical encoding.
inline void low_index_stream(const Presentation& pres, int index,
                             const std::function<void(CosetTable&&)>& emit,
                             LowIndexOptions opts = {}) {
  detail::LowIndexSearch(pres, index, opts, emit).run();
}

inline std::vector<CosetTable> low_index_classes(const Presentation& pres,
                                                 int index,
                                                 LowIndexOptions opts = {}) {
  std::vector<CosetTable> out;
  low_index_stream(
      pres, index, [&](CosetTable&& t) { out.push_back(std::move(t)); }, opts);
  return out;
}

// Lexicographically least relabeling over all roots; two tables are
// conjugate iff their canonical forms coincide.
inline CosetTable canonical_form(const CosetTable& t) {
  int n = t.n;
  std::vector<int> best;
  std::vector<int> lab(n), ord(n);
  for (int tau = 0; tau < n; ++tau) {
    std::fill(lab.begin(), lab.end(), -1);
    lab[tau] = 0;
    ord[0] = tau;
    int cnt = 1;
    std::vector<int> enc;
    enc.reserve(static_cast<std::size_t>(n) * 4);
    for (int m = 0; m < cnt; ++m) {
      int o = ord[m];
      for (int x = 0; x < 4; ++x) {
        int e = t.act[o][x];
        if (lab[e] < 0) {
          lab[e] = cnt;
          ord[cnt++] = e;
        }
        enc.push_back(lab[e]);
      }
    }
    if (best.empty() || enc < best) best = std::move(enc);
  }
  CosetTable out;
  out.n = n;
  out.origin = t.origin;
  out.act.resize(n);
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < 4; ++x) out.act[c][x] = best[static_cast<std::size_t>(c) * 4 + x];
  return out;
}

}  // namespace contextua

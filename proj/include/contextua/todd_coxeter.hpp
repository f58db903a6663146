#pragma once

// Todd-Coxeter coset enumeration, HLT strategy with eager coincidence
// handling and a lookahead collapse pass when the coset allowance runs out.
// The definition order is fixed (cosets ascending, relators in presentation
// order, letters a < a^-1 < b < b^-1), so results are deterministic.

#include <array>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "contextua/coset_table.hpp"
#include "contextua/word.hpp"

namespace contextua {

class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(long defined)
      : std::runtime_error("coset limit exceeded after defining " +
                           std::to_string(defined) + " cosets"),
        defined_(defined) {}
  long defined() const { return defined_; }

 private:
  long defined_;
};

inline constexpr long kDefaultCosetLimit = 1l << 20;

namespace detail {

class TcEnumerator {
 public:
  TcEnumerator(const Presentation& pres, const std::vector<Word>& subgens,
               long limit)
      : pres_(pres), subgens_(subgens), limit_(limit) {
    for (const Word& r : pres.relators) rels_.push_back(r.letters());
    new_coset();
  }

  CosetTable run() {
    for (const Word& s : subgens_) scan_and_fill(0, s.letters());
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : rels_) {
        scan_and_fill(static_cast<int>(c), r);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (int x = 0; x < kNumLetters && alive(c); ++x)
        if (tab_[c][x] < 0) {
          int d = new_coset();
          set_edge(static_cast<int>(c), static_cast<Letter>(x), d);
        }
    }
    return compress();
  }

 private:
  bool alive(std::size_t c) const { return p_[c] == static_cast<int>(c); }

  int rep(int c) {
    while (p_[c] != c) {
      p_[c] = p_[p_[c]];
      c = p_[c];
    }
    return c;
  }

  int new_coset() {
    if (defined_ >= limit_) {
      lookahead();
      if (defined_ >= limit_) throw LimitExceeded(defined_);
    }
    ++defined_;
    tab_.push_back({-1, -1, -1, -1});
    p_.push_back(static_cast<int>(tab_.size()) - 1);
    return static_cast<int>(tab_.size()) - 1;
  }

  void set_edge(int c, Letter x, int d) {
    c = rep(c);
    d = rep(d);
    int ex = tab_[c][x];
    if (ex >= 0) {
      if (rep(ex) != d) coincidence(rep(ex), d);
      return;
    }
    int ey = tab_[d][inverse_letter(x)];
    if (ey >= 0 && rep(ey) != c) {
      coincidence(rep(ey), c);
      c = rep(c);
      d = rep(d);
      if (tab_[c][x] >= 0) {
        if (rep(tab_[c][x]) != d) coincidence(rep(tab_[c][x]), d);
        return;
      }
    }
    tab_[c][x] = d;
    tab_[d][inverse_letter(x)] = c;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      std::array<int, 4> row = tab_[y];
      for (int x = 0; x < kNumLetters; ++x) tab_[y][x] = -1;
      for (int x = 0; x < kNumLetters; ++x) {
        int d = row[x];
        if (d < 0) continue;
        // delete y --x--> d and reinstall it between representatives
        int dr = rep(d);
        if (tab_[dr][inverse_letter(static_cast<Letter>(x))] == y)
          tab_[dr][inverse_letter(static_cast<Letter>(x))] = -1;
        int mu = rep(y);
        int ex = tab_[mu][x];
        if (ex >= 0) {
          merge(dr, rep(ex), queue);
        } else {
          int ey = tab_[dr][inverse_letter(static_cast<Letter>(x))];
          if (ey >= 0) {
            merge(mu, rep(ey), queue);
          } else {
            tab_[mu][x] = dr;
            tab_[dr][inverse_letter(static_cast<Letter>(x))] = mu;
          }
        }
      }
    }
  }

  void scan_and_fill(int start, const std::vector<Letter>& w, bool fill = true) {
    if (w.empty()) return;
    int f = rep(start);
    int b = f;
    int i = 0;
    int r = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= r && tab_[f][w[i]] >= 0) f = rep(tab_[f][w[i]]), ++i;
      if (i > r) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (r >= i && tab_[b][inverse_letter(w[r])] >= 0)
        b = rep(tab_[b][inverse_letter(w[r])]), --r;
      if (r < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (r == i) {
        set_edge(f, w[i], b);
        return;
      }
      if (!fill) return;
      int d = new_coset();
      set_edge(f, w[i], d);  // both entries fresh, cannot coincide
      f = d;
      ++i;
    }
  }

  // Collapse pass without new definitions; reclaims dead cosets.
  void lookahead() {
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : rels_) {
        scan_and_fill(static_cast<int>(c), r, /*fill=*/false);
        if (!alive(c)) break;
      }
    }
    long live = 0;
    for (std::size_t c = 0; c < tab_.size(); ++c)
      if (alive(c)) ++live;
    defined_ = live;  // allowance measured against the surviving table
  }

  CosetTable compress() {
    std::vector<int> newid(tab_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < tab_.size(); ++c)
      if (alive(c)) newid[c] = n++;
    CosetTable out;
    out.n = n;
    out.origin = pres_;
    out.subgroup_gens = subgens_;
    out.act.resize(n);
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < kNumLetters; ++x) {
        int d = tab_[c][x];
        if (d < 0) throw std::logic_error("incomplete table after enumeration");
        out.act[newid[c]][x] = newid[rep(d)];
      }
    }
    out.validate();
    return out;
  }

  const Presentation& pres_;
  const std::vector<Word>& subgens_;
  long limit_;
  std::vector<std::vector<Letter>> rels_;
  std::vector<std::array<int, 4>> tab_;
  std::vector<int> p_;
  long defined_ = 0;
};

}  // namespace detail

// Enumerates the cosets of <subgens> in the presented group.  Throws
// LimitExceeded when more than `limit` cosets are alive at once and the
// lookahead collapse cannot reclaim space.
inline CosetTable todd_coxeter(const Presentation& pres,
                               const std::vector<Word>& subgens,
                               long limit = kDefaultCosetLimit) {
  return detail::TcEnumerator(pres, subgens, limit).run();
}

struct NormalClosureResult {
  enum class Kind { Yes, No, Undetermined } kind;
  long quotient_index = 0;  // [G : N] when kind == No

  bool yes() const { return kind == Kind::Yes; }
};

// Axiom 2 test: the normal closure N of <subgens> equals G exactly when the
// group presented by the relators plus the subgroup words is trivial.
inline NormalClosureResult normal_closure_is_full(const Presentation& pres,
                                                  const std::vector<Word>& subgens,
                                                  long limit = kDefaultCosetLimit) {
  Presentation quotient = pres;
  quotient.name.clear();
  for (const Word& s : subgens)
    if (!s.is_identity()) quotient.relators.push_back(s);
  try {
    CosetTable t = todd_coxeter(quotient, {}, limit);
    if (t.n == 1) return {NormalClosureResult::Kind::Yes, 1};
    return {NormalClosureResult::Kind::No, t.n};
  } catch (const LimitExceeded&) {
    return {NormalClosureResult::Kind::Undetermined, 0};
  }
}

}  // namespace contextua

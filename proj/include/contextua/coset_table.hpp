#pragma once

// Complete coset tables: the right action of the generators on the cosets of
// a finite-index subgroup, coset 0 being the subgroup itself.  Tables are
// produced by Todd-Coxeter enumeration or by the low-index search and are
// immutable once built.

#include <array>
#include <stdexcept>
#include <vector>

#include "contextua/perm.hpp"
#include "contextua/word.hpp"

namespace contextua {

struct CosetTable {
  int n = 0;
  std::vector<std::array<int, 4>> act;  // act[coset][letter]
  Presentation origin;
  std::vector<Word> subgroup_gens;

  int apply(int coset, Letter x) const { return act[coset][x]; }

  int apply_word(int coset, const Word& w) const {
    for (Letter x : w.letters()) coset = act[coset][x];
    return coset;
  }

  Perm alpha() const { return letter_perm(kLetterA); }
  Perm beta() const { return letter_perm(kLetterB); }

  Perm letter_perm(Letter x) const {
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = act[c][x];
    return Perm(std::move(img));
  }

  // Row-major flattening; total order on tables of equal index.
  std::vector<int> encode() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) * 4);
    for (int c = 0; c < n; ++c)
      for (int x = 0; x < kNumLetters; ++x) out.push_back(act[c][x]);
    return out;
  }

  // Checks the table invariants; throws std::logic_error on violation.
  void validate() const {
    if (n <= 0 || static_cast<int>(act.size()) != n)
      throw std::logic_error("coset table has wrong size");
    for (int c = 0; c < n; ++c)
      for (int x = 0; x < kNumLetters; ++x) {
        int d = act[c][x];
        if (d < 0 || d >= n) throw std::logic_error("entry out of range");
        if (act[d][inverse_letter(static_cast<Letter>(x))] != c)
          throw std::logic_error("inverse action mismatch");
      }
    for (const Word& r : origin.relators)
      for (int c = 0; c < n; ++c)
        if (apply_word(c, r) != c)
          throw std::logic_error("relator does not act trivially");
    for (const Word& s : subgroup_gens)
      if (apply_word(0, s) != 0)
        throw std::logic_error("subgroup generator does not fix coset 0");
    // transitivity
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int x = 0; x < kNumLetters; ++x) {
        int d = act[queue[k]][x];
        if (!seen[d]) {
          seen[d] = 1;
          queue.push_back(d);
        }
      }
    if (static_cast<int>(queue.size()) != n)
      throw std::logic_error("action is not transitive");
  }

  bool operator==(const CosetTable& rhs) const {
    return n == rhs.n && act == rhs.act;
  }
};

// Builds the table of a permutation pair acting on 0..n-1 (the dessin view).
inline CosetTable table_from_perms(const Perm& alpha, const Perm& beta) {
  CosetTable t;
  t.n = alpha.degree();
  if (beta.degree() != t.n) throw std::invalid_argument("degree mismatch");
  Perm ai = alpha.inverse(), bi = beta.inverse();
  t.act.resize(t.n);
  for (int c = 0; c < t.n; ++c)
    t.act[c] = {alpha[c], ai[c], beta[c], bi[c]};
  return t;
}

// BFS-shortest coset representatives; ties broken by the canonical letter
// order a < a^-1 < b < b^-1.  reps[0] = e.
inline std::vector<Word> transversal(
    const CosetTable& t,
    const std::array<Letter, 4>& letter_order = {kLetterA, kLetterAInv,
                                                 kLetterB, kLetterBInv}) {
  std::vector<Word> reps(t.n);
  std::vector<char> seen(t.n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int c = queue[k];
    for (Letter x : letter_order) {
      int d = t.act[c][x];
      if (!seen[d]) {
        seen[d] = 1;
        reps[d] = reps[c] * Word::single(x);
        queue.push_back(d);
      }
    }
  }
  return reps;
}

// Nontrivial Schreier generators reps[i] * x * reps[i·x]^-1, deduplicated,
// in table order.  Each one fixes coset 0.
inline std::vector<Word> schreier_generator_words(const CosetTable& t) {
  auto reps = transversal(t);
  std::vector<Word> out;
  for (int c = 0; c < t.n; ++c)
    for (int x = 0; x < kNumLetters; x += 1) {
      if (x == kLetterAInv || x == kLetterBInv) continue;  // a, b suffice
      int d = t.act[c][x];
      Word u = reps[c] * Word::single(static_cast<Letter>(x)) * reps[d].inverse();
      if (u.is_identity()) continue;
      bool dup = false;
      for (const Word& e : out)
        if (e == u) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(u));
    }
  return out;
}

}  // namespace contextua

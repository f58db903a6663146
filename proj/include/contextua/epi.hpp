#pragma once

// Counts the classes of relator-respecting generating pairs of a permutation
// group modulo its automorphisms.  Two pairs are equivalent exactly when the
// subgroup of P x P generated by the paired generators has order |P| (the
// graph of an automorphism).  The homomorphism from the presented group is
// unique precisely when there is one class.

#include <algorithm>
#include <vector>

#include "contextua/group_iso.hpp"
#include "contextua/permgroup.hpp"
#include "contextua/word.hpp"

namespace contextua {

inline constexpr long kDefaultEpiBound = 2000;

struct EpiClassReport {
  int class_count = 0;
  std::vector<std::pair<Perm, Perm>> representatives;
  bool truncated = false;
};

namespace detail {

// net exponent when the word uses a single generator; 0 means mixed or empty
inline long long single_letter_exponent(const Word& w, Letter plain, Letter inv) {
  long long k = 0;
  for (Letter x : w.letters()) {
    if (x == plain)
      ++k;
    else if (x == inv)
      --k;
    else
      return 0;
  }
  return k < 0 ? -k : k;
}

inline bool pair_transitive(const Perm& x, const Perm& y) {
  int n = x.degree();
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int q : {x[queue[k]], y[queue[k]]})
      if (!seen[q]) {
        seen[q] = 1;
        queue.push_back(q);
      }
  return static_cast<int>(queue.size()) == n;
}

}  // namespace detail

inline EpiClassReport epi_classes(const Presentation& pres, const PermGroup& p,
                                  long bound = kDefaultEpiBound) {
  if (p.order() > bound)
    throw OrderTooLarge("group order " + p.order().str() +
                        " exceeds the epimorphism bound " + std::to_string(bound));
  int n = p.degree();
  std::vector<Perm> elements = p.elements();
  std::sort(elements.begin(), elements.end());
  BigInt p_order = p.order();

  // order constraints from single-generator relators
  long long ka = 0, kb = 0;
  std::vector<const Word*> mixed;
  for (const Word& r : pres.relators) {
    if (long long e = detail::single_letter_exponent(r, kLetterA, kLetterAInv)) {
      ka = std::gcd(ka, e);
    } else if (long long f = detail::single_letter_exponent(r, kLetterB, kLetterBInv)) {
      kb = std::gcd(kb, f);
    } else {
      mixed.push_back(&r);
    }
  }

  auto order_ok = [](long long ord, long long k) { return k == 0 || k % ord == 0; };

  // candidate first components: one representative per conjugacy class (a
  // simultaneous conjugation moves any pair onto one of these)
  auto classes = detail::conjugacy_classes(n, p.generators(), elements);
  std::vector<Perm> xs;
  for (const auto& cls : classes) {
    Perm rep = *std::min_element(cls.begin(), cls.end());
    if (order_ok(rep.order(), ka)) xs.push_back(rep);
  }
  std::sort(xs.begin(), xs.end());

  std::vector<Perm> ys;
  for (const Perm& e : elements)
    if (order_ok(e.order(), kb)) ys.push_back(e);

  bool p_transitive = p.transitive();
  EpiClassReport out;
  for (const Perm& x : xs) {
    for (const Perm& y : ys) {
      bool ok = true;
      for (const Word* r : mixed)
        if (!eval_word(*r, x, y).is_identity()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (p_transitive && !detail::pair_transitive(x, y)) continue;
      if (PermGroup(n, {x, y}).order() != p_order) continue;
      // classify against the known class representatives
      bool matched = false;
      for (const auto& [rx, ry] : out.representatives) {
        PermGroup diag(2 * n, {pair_perm(x, rx), pair_perm(y, ry)});
        if (diag.order() == p_order) {
          matched = true;
          break;
        }
      }
      if (!matched) out.representatives.emplace_back(x, y);
    }
  }
  out.class_count = static_cast<int>(out.representatives.size());
  return out;
}

}  // namespace contextua

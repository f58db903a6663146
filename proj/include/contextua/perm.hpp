#pragma once

// Permutations of {0, ..., n-1}.  Composition is left-to-right:
// (p * q)(i) = q(p(i)), so evaluating a word letter by letter matches
// multiplying the letters' permutations in reading order.
//
// Points are 0-based internally; all file formats and reports use 1-based
// points.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "contextua/word.hpp"

namespace contextua {

class Perm {
 public:
  Perm() = default;

  explicit Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
#ifndef NDEBUG
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = 1;
    }
#endif
  }

  // cycles use 0-based points; fixed points may be omitted
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm p(degree);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i];
        int to = c[(i + 1) % c.size()];
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw std::invalid_argument("cycle point out of range");
        p.img_[from] = to;
      }
    }
    // validate bijectivity after stitching the cycles together
    std::vector<char> seen(degree, 0);
    for (int v : p.img_) {
      if (seen[v]) throw std::invalid_argument("cycles overlap");
      seen[v] = 1;
    }
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& rhs) const {
    Perm out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[i] = rhs.img_[img_[i]];
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<int>(i);
    return out;
  }

  bool commutes_with(const Perm& rhs) const {
    for (int i = 0; i < degree(); ++i)
      if (rhs.img_[img_[i]] != img_[rhs.img_[i]]) return false;
    return true;
  }

  long long order() const {
    std::vector<char> seen(img_.size(), 0);
    long long ord = 1;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        c.push_back(j);
      }
      if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
    }
    return out;
  }

  int num_cycles() const {  // counting fixed points as 1-cycles
    std::vector<char> seen(img_.size(), 0);
    int k = 0;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      ++k;
      for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return k;
  }

  int num_fixed_points() const {
    int k = 0;
    for (int i = 0; i < degree(); ++i)
      if (img_[i] == i) ++k;
    return k;
  }

  std::string cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i] + 1);
      }
      out += ')';
    }
    return out;
  }

  auto operator<=>(const Perm& rhs) const = default;

 private:
  std::vector<int> img_;
};

// Evaluates a word under a |-> alpha, b |-> beta.
inline Perm eval_word(const Word& w, const Perm& alpha, const Perm& beta) {
  int n = alpha.degree();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  const Perm* table[4] = {nullptr, nullptr, nullptr, nullptr};
  Perm alpha_inv = alpha.inverse();
  Perm beta_inv = beta.inverse();
  table[kLetterA] = &alpha;
  table[kLetterAInv] = &alpha_inv;
  table[kLetterB] = &beta;
  table[kLetterBInv] = &beta_inv;
  for (Letter x : w.letters()) {
    const Perm& p = *table[x];
    for (int i = 0; i < n; ++i) img[i] = p[img[i]];
  }
  return Perm(std::move(img));
}

// Image of a single point under a word (cheaper than eval_word when only one
// trajectory is needed).
inline int apply_word(int point, const Word& w, const Perm& alpha,
                      const Perm& beta, const Perm& alpha_inv,
                      const Perm& beta_inv) {
  const Perm* table[4] = {&alpha, &alpha_inv, &beta, &beta_inv};
  for (Letter x : w.letters()) point = (*table[x])[point];
  return point;
}

}  // namespace contextua

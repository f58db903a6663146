#pragma once

// Base-and-strong-generating-set machinery for permutation groups:
// deterministic Schreier-Sims, exact order, membership, orbits and
// point stabilizers.
//
// All iteration orders are fixed so that identical inputs produce
// identical chains, orders and element sequences.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contextua/perm.hpp"

namespace contextua {

using BigInt = boost::multiprecision::cpp_int;

// Orbits of <gens> on {0..degree-1}, each orbit sorted, orbits ordered by
// smallest element.
inline std::vector<std::vector<int>> orbits_of(int degree,
                                               const std::vector<Perm>& gens) {
  std::vector<int> owner(degree, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < degree; ++s) {
    if (owner[s] >= 0) continue;
    // forward closure is enough: generators have finite order
    int id = static_cast<int>(out.size());
    std::vector<int> orbit{s};
    owner[s] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& g : gens) {
        int q = g[orbit[k]];
        if (owner[q] < 0) {
          owner[q] = id;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

class PermGroup {
 public:
  PermGroup() : degree_(0), order_(1) {}

  // base_prefix points are placed at the front of the base in the given
  // order (even if fixed by the whole group), so that stabilizer_gens(k)
  // yields the pointwise stabilizer of base_prefix[0..k-1].
  PermGroup(int degree, std::vector<Perm> generators,
            std::vector<int> base_prefix = {})
      : degree_(degree), gens_(std::move(generators)) {
    for (auto it = gens_.begin(); it != gens_.end();) {
      if (it->is_identity())
        it = gens_.erase(it);
      else
        ++it;
    }
    for (int b : base_prefix) add_level(b);
    for (const Perm& g : gens_) place_generator(g, 0);
    schreier_sims();
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  const std::vector<int>& base() const { return base_; }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [res, lev] = sift_from(p, 0);
    (void)lev;
    return res.is_identity();
  }

  // Strong generators fixing base[0..k-1]; generates the k-th stabilizer.
  std::vector<Perm> stabilizer_gens(std::size_t k) const {
    if (k > chain_.size())
      throw std::out_of_range("stabilizer level beyond base length");
    if (k == chain_.size()) return {};
    return chain_[k].gens;
  }

  std::vector<std::vector<int>> point_orbits() const {
    return orbits_of(degree_, gens_);
  }

  bool transitive() const {
    if (degree_ <= 1) return true;
    auto o = point_orbits();
    return o.size() == 1;
  }

  // Fundamental orbit of the top level (orbit of base[0] under the group).
  const std::vector<int>& top_orbit() const {
    static const std::vector<int> empty;
    return chain_.empty() ? empty : chain_[0].orbit;
  }

  // All elements in a deterministic order.  Caller is responsible for
  // keeping |G| within reason.
  std::vector<Perm> elements() const {
    std::vector<Perm> out{Perm(degree_)};
    for (int i = static_cast<int>(chain_.size()) - 1; i >= 0; --i) {
      std::vector<Perm> next;
      next.reserve(out.size() * chain_[i].orbit.size());
      for (const Perm& x : out)
        for (int p : chain_[i].orbit) next.push_back(x * chain_[i].transversal[p]);
      out = std::move(next);
    }
    return out;
  }

 private:
  struct Level {
    int beta = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;          // discovery order, orbit[0] == beta
    std::vector<Perm> transversal;   // by point; degree 0 marks "absent"
  };

  void add_level(int beta) {
    Level lv;
    lv.beta = beta;
    chain_.push_back(std::move(lv));
    base_.push_back(beta);
  }

  // Adds g to the gen lists of every level whose base prefix it fixes,
  // starting at `from` (caller guarantees g fixes base[0..from-1]).
  // Returns the deepest level index that received g.
  int place_generator(const Perm& g, std::size_t from) {
    std::size_t i = from;
    while (true) {
      if (i == chain_.size()) {
        int moved = -1;
        for (int p = 0; p < degree_; ++p)
          if (g[p] != p) {
            moved = p;
            break;
          }
        if (moved < 0) return static_cast<int>(i) - 1;  // identity
        add_level(moved);
      }
      chain_[i].gens.push_back(g);
      if (g[chain_[i].beta] != chain_[i].beta) return static_cast<int>(i);
      ++i;
    }
  }

  void rebuild_level(std::size_t i) {
    Level& lv = chain_[i];
    lv.orbit.clear();
    lv.transversal.assign(degree_, Perm());
    lv.orbit.push_back(lv.beta);
    lv.transversal[lv.beta] = Perm(degree_);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      int p = lv.orbit[k];
      for (const Perm& g : lv.gens) {
        int q = g[p];
        if (lv.transversal[q].degree() == 0) {
          lv.transversal[q] = lv.transversal[p] * g;
          lv.orbit.push_back(q);
        }
      }
    }
  }

  std::pair<Perm, std::size_t> sift_from(Perm g, std::size_t start) const {
    for (std::size_t j = start; j < chain_.size(); ++j) {
      int p = g[chain_[j].beta];
      if (p == chain_[j].beta) continue;
      if (chain_[j].transversal.empty() ||
          chain_[j].transversal[p].degree() == 0)
        return {std::move(g), j};
      g = g * chain_[j].transversal[p].inverse();
    }
    return {std::move(g), chain_.size()};
  }

  void schreier_sims() {
    if (chain_.empty()) {
      order_ = 1;
      return;
    }
    for (std::size_t i = 0; i < chain_.size(); ++i) rebuild_level(i);
    int i = static_cast<int>(chain_.size()) - 1;
    while (i >= 0) {
      bool clean = true;
      for (std::size_t oi = 0; oi < chain_[i].orbit.size() && clean; ++oi) {
        int p = chain_[i].orbit[oi];
        for (std::size_t gi = 0; gi < chain_[i].gens.size() && clean; ++gi) {
          const Perm& g = chain_[i].gens[gi];
          int q = g[p];
          Perm u = chain_[i].transversal[p] * g * chain_[i].transversal[q].inverse();
          if (u.is_identity()) continue;
          auto [h, lev] = sift_from(std::move(u), i + 1);
          if (!h.is_identity()) {
            int placed = place_generator(h, i + 1);
            for (int j = i + 1; j <= placed; ++j) rebuild_level(j);
            i = placed;
            clean = false;
          }
        }
      }
      if (clean) --i;
    }
    order_ = 1;
    for (const Level& lv : chain_) order_ *= static_cast<long>(lv.orbit.size());
  }

  int degree_;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<Level> chain_;
  BigInt order_;
};

// Pointwise stabilizer of the given points, as a group on the same points.
inline PermGroup point_stabilizer(const PermGroup& g,
                                  const std::vector<int>& points) {
  PermGroup rebased(g.degree(), g.generators(), points);
  return PermGroup(g.degree(), rebased.stabilizer_gens(points.size()));
}

inline bool subgroups_equal(const PermGroup& g1, const PermGroup& g2) {
  if (g1.degree() != g2.degree()) return false;
  if (g1.order() != g2.order()) return false;
  for (const Perm& g : g1.generators())
    if (!g2.contains(g)) return false;
  return true;
}

// Generators of Stab(point) in <gens> obtained from Schreier's lemma over a
// BFS orbit tree.  Identity generators are dropped; duplicates kept out.
inline std::vector<Perm> schreier_stabilizer_gens(int degree,
                                                  const std::vector<Perm>& gens,
                                                  int point) {
  std::vector<Perm> transversal(degree);
  std::vector<int> orbit{point};
  std::vector<char> seen(degree, 0);
  seen[point] = 1;
  transversal[point] = Perm(degree);
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    int p = orbit[k];
    for (const Perm& g : gens) {
      int q = g[p];
      if (!seen[q]) {
        seen[q] = 1;
        transversal[q] = transversal[p] * g;
        orbit.push_back(q);
      }
    }
  }
  std::vector<Perm> out;
  for (int p : orbit) {
    for (const Perm& g : gens) {
      int q = g[p];
      Perm u = transversal[p] * g * transversal[q].inverse();
      if (u.is_identity()) continue;
      bool dup = false;
      for (const Perm& ex : out)
        if (ex == u) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(u));
    }
  }
  return out;
}

// Rank of the transitive group <alpha, beta>: number of orbits of the
// one-point stabilizer of point 0, counting the fixed orbit {0}.
inline int suborbit_count(const Perm& alpha, const Perm& beta) {
  int n = alpha.degree();
  if (n == 0) throw std::invalid_argument("empty degree");
  std::vector<Perm> gens{alpha, beta};
  if (orbits_of(n, gens).size() != 1)
    throw std::invalid_argument("group is not transitive");
  auto stab = schreier_stabilizer_gens(n, gens, 0);
  return static_cast<int>(orbits_of(n, stab).size());
}

}  // namespace contextua

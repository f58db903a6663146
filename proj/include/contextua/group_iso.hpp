#pragma once

// Abstract isomorphism of small permutation groups and the two-point
// stabilizer classification that drives Axiom 1.
//
// Isomorphism is decided exactly: cheap invariant fingerprints first, then a
// generator-image backtracking search whose consistency check is the order of
// the diagonal subgroup in the direct product (the subgroup generated by
// pairs (g_i, h_i) has order |G| exactly when g_i -> h_i extends to a
// homomorphism).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contextua/permgroup.hpp"

namespace contextua {

class OrderTooLarge : public std::runtime_error {
 public:
  explicit OrderTooLarge(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long kDefaultIsoBound = 10000;

// Embeds (p, q) acting on disjoint copies of the two domains.
inline Perm pair_perm(const Perm& p, const Perm& q) {
  int n1 = p.degree(), n2 = q.degree();
  std::vector<int> img(n1 + n2);
  for (int i = 0; i < n1; ++i) img[i] = p[i];
  for (int i = 0; i < n2; ++i) img[n1 + i] = n1 + q[i];
  return Perm(std::move(img));
}

struct GroupProfile {
  BigInt order;
  std::vector<Perm> elements;                    // sorted
  std::map<long long, int> order_histogram;      // element order -> count
  std::vector<std::pair<long long, int>> class_profile;  // (elt order, size), sorted
  int center_order = 0;
  std::vector<BigInt> derived_orders;            // |G|, |G'|, |G''|, ... until stable
};

namespace detail {

inline std::vector<std::vector<Perm>> conjugacy_classes(
    int degree, const std::vector<Perm>& gens, const std::vector<Perm>& elements) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  std::vector<char> seen(elements.size(), 0);
  std::vector<Perm> inv_gens;
  for (const Perm& g : gens) inv_gens.push_back(g.inverse());
  std::vector<std::vector<Perm>> classes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Perm> cls{elements[i]};
    seen[i] = 1;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Perm c = inv_gens[gi] * cls[k] * gens[gi];
        auto it = index.find(c);
        if (it != index.end() && !seen[it->second]) {
          seen[it->second] = 1;
          cls.push_back(std::move(c));
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Perm> dgens;
  auto add_unique = [&](Perm p) {
    if (p.is_identity()) return;
    for (const Perm& q : dgens)
      if (q == p) return;
    dgens.push_back(std::move(p));
  };
  for (const Perm& x : gens)
    for (const Perm& y : gens)
      add_unique(x.inverse() * y.inverse() * x * y);
  // normal closure under conjugation by the group's generators
  PermGroup d(g.degree(), dgens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> extra;
    for (const Perm& s : dgens)
      for (const Perm& c : gens) {
        Perm t = c.inverse() * s * c;
        if (!d.contains(t)) extra.push_back(std::move(t));
      }
    if (!extra.empty()) {
      for (Perm& t : extra) add_unique(std::move(t));
      d = PermGroup(g.degree(), dgens);
      grew = true;
    }
  }
  return d;
}

}  // namespace detail

inline GroupProfile group_profile(const PermGroup& g, long bound = kDefaultIsoBound) {
  if (g.order() > bound)
    throw OrderTooLarge("group order " + g.order().str() +
                        " exceeds isomorphism bound " + std::to_string(bound));
  GroupProfile p;
  p.order = g.order();
  p.elements = g.elements();
  std::sort(p.elements.begin(), p.elements.end());
  for (const Perm& e : p.elements) ++p.order_histogram[e.order()];
  auto classes = detail::conjugacy_classes(g.degree(), g.generators(), p.elements);
  for (const auto& cls : classes)
    p.class_profile.emplace_back(cls[0].order(), static_cast<int>(cls.size()));
  std::sort(p.class_profile.begin(), p.class_profile.end());
  for (const Perm& e : p.elements) {
    bool central = true;
    for (const Perm& gen : g.generators())
      if (!e.commutes_with(gen)) {
        central = false;
        break;
      }
    if (central) ++p.center_order;
  }
  PermGroup cur(g.degree(), g.generators());
  p.derived_orders.push_back(cur.order());
  while (cur.order() > 1) {
    PermGroup next = detail::derived_subgroup(cur);
    if (next.order() == cur.order()) break;  // perfect group
    p.derived_orders.push_back(next.order());
    cur = std::move(next);
  }
  return p;
}

namespace detail {

// Greedy minimal generating subsequence of the group's generators.
inline std::vector<Perm> reduced_generators(const PermGroup& g) {
  std::vector<Perm> picked;
  PermGroup cur(g.degree(), {});
  for (const Perm& gen : g.generators()) {
    if (cur.contains(gen)) continue;
    picked.push_back(gen);
    cur = PermGroup(g.degree(), picked);
    if (cur.order() == g.order()) break;
  }
  return picked;
}

}  // namespace detail

// Exact abstract-isomorphism test for groups of order <= bound.
inline bool small_group_isomorphic(const PermGroup& g1, const PermGroup& g2,
                                   long bound = kDefaultIsoBound) {
  if (g1.order() != g2.order()) return false;
  if (g1.order() > bound || g2.order() > bound)
    throw OrderTooLarge("group order " + g1.order().str() +
                        " exceeds isomorphism bound " + std::to_string(bound));
  if (g1.order() == 1) return true;

  GroupProfile p1 = group_profile(g1, bound);
  GroupProfile p2 = group_profile(g2, bound);
  if (p1.order_histogram != p2.order_histogram) return false;
  if (p1.class_profile != p2.class_profile) return false;
  if (p1.center_order != p2.center_order) return false;
  if (p1.derived_orders != p2.derived_orders) return false;

  std::vector<Perm> gens1 = detail::reduced_generators(g1);

  // subgroup orders along the generating sequence, for the level-wise check
  std::vector<BigInt> level_orders;
  for (std::size_t k = 1; k <= gens1.size(); ++k)
    level_orders.push_back(
        PermGroup(g1.degree(), std::vector<Perm>(gens1.begin(), gens1.begin() + k))
            .order());

  auto classes2 = detail::conjugacy_classes(g2.degree(), g2.generators(), p2.elements);

  // candidate images per level; level 0 may use class representatives only
  // (composing with an inner automorphism of g2 is free)
  std::vector<std::vector<Perm>> candidates(gens1.size());
  for (std::size_t k = 0; k < gens1.size(); ++k) {
    long long want = gens1[k].order();
    if (k == 0) {
      for (const auto& cls : classes2)
        if (cls[0].order() == want) candidates[k].push_back(cls[0]);
    } else {
      for (const Perm& e : p2.elements)
        if (e.order() == want) candidates[k].push_back(e);
    }
  }

  std::vector<Perm> images(gens1.size());
  std::vector<Perm> diag_gens;

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens1.size()) {
      PermGroup img(g2.degree(), images);
      return img.order() == g2.order();
    }
    for (const Perm& cand : candidates[k]) {
      images[k] = cand;
      diag_gens.clear();
      for (std::size_t j = 0; j <= k; ++j)
        diag_gens.push_back(pair_perm(gens1[j], images[j]));
      PermGroup diag(g1.degree() + g2.degree(), diag_gens);
      if (diag.order() == level_orders[k] && rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// ---------------------------------------------------------------------------
// Two-point stabilizer classification (the s of Axiom 1)

struct StabClass {
  int id = 0;
  PermGroup representative;
  BigInt stab_order;
  std::vector<int> orbitals;       // suborbit indices whose pairs fall in this class
  long long ordered_pairs = 0;     // number of ordered point pairs in the class
  bool contains_diagonal = false;  // the class of the one-point stabilizer itself
};

struct TwoPointClasses {
  int s = 0;                 // number of abstract isomorphism classes
  bool exact = true;         // false when some bucket was decided by fingerprint only
  std::vector<StabClass> classes;
  std::vector<int> suborbit_of_point;   // Stab(0)-suborbit index of each point
  std::vector<int> class_of_suborbit;   // suborbit index -> class id
  std::vector<Perm> to_base;            // to_base[p] maps p to 0 (for pair lookup)
  int rank = 0;

  // class of the ordered pair (p, q); pairs are mapped to (0, x) first
  int pair_class(int p, int q) const {
    int x = to_base[p][q];
    return class_of_suborbit[suborbit_of_point[x]];
  }
};

// Classifies the two-point stabilizers Stab(0, x) over representatives x of
// every Stab(0)-suborbit, including x = 0 (whose "pair" stabilizer is the
// one-point stabilizer itself).  Buckets are abstract isomorphism classes;
// above the bound only the invariant fingerprint is compared and `exact` is
// cleared.
inline TwoPointClasses two_point_classes(const Perm& alpha, const Perm& beta,
                                         long iso_bound = kDefaultIsoBound) {
  int n = alpha.degree();
  std::vector<Perm> gens{alpha, beta};
  TwoPointClasses out;

  // transversal mapping 0 -> p, inverted for pair lookups
  std::vector<Perm> transversal(n);
  {
    std::vector<char> seen(n, 0);
    std::vector<int> orbit{0};
    seen[0] = 1;
    transversal[0] = Perm(n);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const Perm& g : gens) {
        int q = g[orbit[k]];
        if (!seen[q]) {
          seen[q] = 1;
          transversal[q] = transversal[orbit[k]] * g;
          orbit.push_back(q);
        }
      }
    if (static_cast<int>(orbit.size()) != n)
      throw std::invalid_argument("group is not transitive");
  }
  out.to_base.resize(n);
  for (int p = 0; p < n; ++p) out.to_base[p] = transversal[p].inverse();

  std::vector<Perm> stab1 = schreier_stabilizer_gens(n, gens, 0);
  auto suborbits = orbits_of(n, stab1);
  out.rank = static_cast<int>(suborbits.size());
  out.suborbit_of_point.assign(n, -1);
  for (std::size_t i = 0; i < suborbits.size(); ++i)
    for (int p : suborbits[i]) out.suborbit_of_point[p] = static_cast<int>(i);

  // representative stabilizer per suborbit
  std::vector<PermGroup> reps;
  std::vector<int> rep_points;
  for (const auto& so : suborbits) {
    int x = so[0];
    rep_points.push_back(x);
    if (x == 0)
      reps.emplace_back(n, stab1);
    else
      reps.emplace_back(n, schreier_stabilizer_gens(n, stab1, x));
  }

  // bucket by abstract isomorphism
  out.class_of_suborbit.assign(suborbits.size(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (out.class_of_suborbit[i] >= 0) continue;
    int cid = static_cast<int>(out.classes.size());
    StabClass cls;
    cls.id = cid;
    cls.representative = reps[i];
    cls.stab_order = reps[i].order();
    out.class_of_suborbit[i] = cid;
    cls.orbitals.push_back(static_cast<int>(i));
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (out.class_of_suborbit[j] >= 0) continue;
      if (reps[j].order() != reps[i].order()) continue;
      bool same;
      try {
        same = small_group_isomorphic(reps[i], reps[j], iso_bound);
      } catch (const OrderTooLarge&) {
        // fall back to invariants that need no element enumeration
        same = true;
        PermGroup a(reps[i].degree(), reps[i].generators());
        PermGroup b(reps[j].degree(), reps[j].generators());
        std::vector<BigInt> da{a.order()}, db{b.order()};
        PermGroup ca = a, cb = b;
        while (ca.order() > 1) {
          PermGroup nx = detail::derived_subgroup(ca);
          if (nx.order() == ca.order()) break;
          da.push_back(nx.order());
          ca = std::move(nx);
        }
        while (cb.order() > 1) {
          PermGroup nx = detail::derived_subgroup(cb);
          if (nx.order() == cb.order()) break;
          db.push_back(nx.order());
          cb = std::move(nx);
        }
        same = (da == db);
        out.exact = false;
      }
      if (same) {
        out.class_of_suborbit[j] = cid;
        cls.orbitals.push_back(static_cast<int>(j));
      }
    }
    out.classes.push_back(std::move(cls));
  }

  for (auto& cls : out.classes) {
    for (int so : cls.orbitals) {
      cls.ordered_pairs +=
          static_cast<long long>(n) * static_cast<long long>(suborbits[so].size());
      if (rep_points[so] == 0) cls.contains_diagonal = true;
    }
  }
  out.s = static_cast<int>(out.classes.size());
  return out;
}

}  // namespace contextua

#pragma once

// Hyperplanes of point-line geometries: the standard predicate (every line
// is contained or met in exactly one point), distance-based seed hyperplanes,
// Veldkamp sums (complement of the symmetric difference), closure, and the
// class signatures used for reporting.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "contextua/geometry.hpp"
#include "contextua/graph.hpp"

namespace contextua {

struct PointSet {
  int n = 0;
  std::vector<std::uint64_t> w;

  PointSet() = default;
  explicit PointSet(int points) : n(points), w((points + 63) / 64, 0) {}

  static PointSet full(int points) {
    PointSet s(points);
    for (int i = 0; i < points; ++i) s.set(i);
    return s;
  }

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ull; }

  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }

  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }

  bool is_full() const { return count() == n; }

  // complement of the symmetric difference
  PointSet vsum(const PointSet& rhs) const {
    PointSet out(n);
    for (std::size_t i = 0; i < w.size(); ++i) out.w[i] = ~(w[i] ^ rhs.w[i]);
    out.trim();
    return out;
  }

  void trim() {
    int extra = static_cast<int>(w.size()) * 64 - n;
    if (extra > 0 && !w.empty()) w.back() &= ~0ull >> extra;
  }

  auto operator<=>(const PointSet&) const = default;
};

inline std::vector<PointSet> line_masks(const Geometry& geom) {
  std::vector<PointSet> out;
  for (const auto& line : geom.lines) {
    PointSet m(geom.n_points);
    for (int p : line) m.set(p);
    out.push_back(std::move(m));
  }
  return out;
}

// Proper nonempty subset meeting every line in one point or containing it.
inline bool is_hyperplane(const std::vector<PointSet>& lines, const PointSet& h) {
  if (h.empty() || h.is_full()) return false;
  for (const auto& l : lines) {
    int inter = 0;
    bool contained = true;
    for (std::size_t i = 0; i < h.w.size(); ++i) {
      std::uint64_t both = h.w[i] & l.w[i];
      inter += __builtin_popcountll(both);
      if (both != l.w[i]) contained = false;
    }
    if (!contained && inter != 1) return false;
  }
  return true;
}

inline bool is_hyperplane(const Geometry& geom, const PointSet& h) {
  return is_hyperplane(line_masks(geom), h);
}

// Candidate hyperplanes from each vertex of the collinearity graph: the perp
// {v} + neighbors, and the perp extended by the points at maximal distance
// from v.  Candidates failing the predicate are dropped.
inline std::vector<PointSet> seed_hyperplanes(const Geometry& geom) {
  Graph col = geom.collinearity();
  if (!col.connected())
    throw std::invalid_argument("collinearity graph is not connected");
  auto lines = line_masks(geom);
  std::set<PointSet> seeds;
  for (int v = 0; v < geom.n_points; ++v) {
    auto dist = col.bfs_distances(v);
    int ecc = *std::max_element(dist.begin(), dist.end());
    PointSet perp(geom.n_points);
    perp.set(v);
    for (int u = 0; u < geom.n_points; ++u)
      if (dist[u] == 1) perp.set(u);
    if (is_hyperplane(lines, perp)) seeds.insert(perp);
    if (ecc > 1) {
      PointSet far = perp;
      for (int u = 0; u < geom.n_points; ++u)
        if (dist[u] == ecc) far.set(u);
      if (is_hyperplane(lines, far)) seeds.insert(far);
    }
  }
  return {seeds.begin(), seeds.end()};
}

// [|H|; n0, ..., nd]: ni = points of H lying on exactly i fully contained
// lines, d = the geometry's maximum number of lines through a point.
inline std::vector<long long> hyperplane_signature(const Geometry& geom,
                                                   const PointSet& h) {
  long long d = 0;
  for (int p = 0; p < geom.n_points; ++p) d = std::max(d, geom.lines_through(p));
  std::vector<long long> on_contained(geom.n_points, 0);
  auto lines = line_masks(geom);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    bool contained = true;
    for (std::size_t i = 0; i < h.w.size(); ++i)
      if ((h.w[i] & lines[li].w[i]) != lines[li].w[i]) contained = false;
    if (contained)
      for (int p : geom.lines[li]) ++on_contained[p];
  }
  std::vector<long long> sig(static_cast<std::size_t>(d) + 2, 0);
  sig[0] = h.count();
  for (int p = 0; p < geom.n_points; ++p)
    if (h.test(p)) ++sig[1 + on_contained[p]];
  return sig;
}

struct HyperplaneClass {
  int size = 0;             // points
  int contained_lines = 0;  // lines fully inside
  long long copies = 0;
  std::vector<long long> signature;

  bool operator==(const HyperplaneClass&) const = default;
};

struct VeldkampResult {
  std::vector<HyperplaneClass> classes;  // sorted by (size, signature)
  long long total = 0;
  long long discarded = 0;  // closure members failing the predicate
  bool truncated = false;   // closure larger than the cap; classes partial
};

// Closure of the seeds under the Veldkamp sum.  The sum is an affine
// operation over GF(2) (H + H' = complement of the symmetric difference), so
// the closure is seed0 + span{seed0 + seed_i} and can be enumerated from a
// basis; members failing the hyperplane predicate are discarded and counted.
// A closure larger than the cap is reported truncated, with classes from the
// first `cap` members only.
inline VeldkampResult veldkamp_closure(const Geometry& geom,
                                       const std::vector<PointSet>& seeds,
                                       long long cap = 1ll << 20) {
  VeldkampResult out;
  if (seeds.empty()) return out;
  int words = static_cast<int>(seeds[0].w.size());
  int bits = words * 64;

  // GF(2) echelon basis of the differences seed0 xor seed_i, by leading bit
  std::vector<std::vector<std::uint64_t>> by_lead(bits);
  auto lead_of = [&](const std::vector<std::uint64_t>& v) {
    for (int i = words - 1; i >= 0; --i)
      if (v[i]) return i * 64 + 63 - __builtin_clzll(v[i]);
    return -1;
  };
  for (std::size_t s = 1; s < seeds.size(); ++s) {
    std::vector<std::uint64_t> v(words);
    for (int i = 0; i < words; ++i) v[i] = seeds[0].w[i] ^ seeds[s].w[i];
    int lead;
    while ((lead = lead_of(v)) >= 0 && !by_lead[lead].empty())
      for (int i = 0; i < words; ++i) v[i] ^= by_lead[lead][i];
    if (lead >= 0) by_lead[lead] = std::move(v);
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (auto& v : by_lead)
    if (!v.empty()) basis.push_back(std::move(v));

  int dim = static_cast<int>(basis.size());
  long long total = dim >= 62 ? -1 : (1ll << dim);
  long long budget = total;
  if (total < 0 || total > cap) {
    out.truncated = true;
    budget = cap;
  }

  auto lines = line_masks(geom);
  std::map<std::pair<std::vector<long long>, int>, long long> by_signature;
  PointSet cur = seeds[0];
  for (long long code = 0;; ++code) {
    if (is_hyperplane(lines, cur)) {
      auto sig = hyperplane_signature(geom, cur);
      int contained = 0;
      for (const auto& l : lines) {
        bool inside = true;
        for (std::size_t i = 0; i < cur.w.size(); ++i)
          if ((cur.w[i] & l.w[i]) != l.w[i]) inside = false;
        if (inside) ++contained;
      }
      ++by_signature[{sig, contained}];
      ++out.total;
    } else {
      ++out.discarded;
    }
    if (code + 1 >= budget) break;
    // Gray-code step: flip the basis vector at the lowest set bit of code+1
    int bit = __builtin_ctzll(static_cast<unsigned long long>(code + 1));
    for (int i = 0; i < words; ++i) cur.w[i] ^= basis[bit][i];
  }

  for (const auto& [key, copies] : by_signature) {
    HyperplaneClass cls;
    cls.size = static_cast<int>(key.first[0]);
    cls.contained_lines = key.second;
    cls.copies = copies;
    cls.signature = key.first;
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const HyperplaneClass& a, const HyperplaneClass& b) {
              if (a.size != b.size) return a.size < b.size;
              return a.signature < b.signature;
            });
  return out;
}

}  // namespace contextua

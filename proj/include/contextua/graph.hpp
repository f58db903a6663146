#pragma once

// Small-graph utilities for collinearity analysis: bitset adjacency,
// Bron-Kerbosch clique enumeration, exact integral spectra via Newton's
// identities over big integers, short-cycle counting, and a backtracking
// isomorphism test with color refinement.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace contextua {

using boost::multiprecision::cpp_int;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), words_((n + 63) / 64), adj_(n, std::vector<std::uint64_t>(words_, 0)) {}

  int size() const { return n_; }

  void add_edge(int u, int v) {
    if (u == v) return;
    adj_[u][v >> 6] |= 1ull << (v & 63);
    adj_[v][u >> 6] |= 1ull << (u & 63);
  }

  bool has_edge(int u, int v) const {
    return (adj_[u][v >> 6] >> (v & 63)) & 1ull;
  }

  int degree(int v) const {
    int d = 0;
    for (auto w : adj_[v]) d += __builtin_popcountll(w);
    return d;
  }

  long long edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  const std::vector<std::uint64_t>& row(int v) const { return adj_[v]; }

  Graph complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (has_edge(v, u)) out.push_back(u);
    return out;
  }

  std::vector<int> bfs_distances(int src) const {
    std::vector<int> dist(n_, -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      int u = queue[k];
      for (int v = 0; v < n_; ++v)
        if (has_edge(u, v) && dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    return dist;
  }

  bool connected() const {
    if (n_ == 0) return true;
    auto d = bfs_distances(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::vector<std::uint64_t>> adj_;
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += __builtin_popcountll(w);
  return c;
}

inline bool bit_test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1ull; }
inline void bit_set(Bits& b, int i) { b[i >> 6] |= 1ull << (i & 63); }
inline void bit_clear(Bits& b, int i) { b[i >> 6] &= ~(1ull << (i & 63)); }

inline bool bits_empty(const Bits& b) {
  for (auto w : b)
    if (w) return false;
  return true;
}

inline void bk_pivot(const Graph& g, Bits& R, Bits P, Bits X,
                     std::vector<std::vector<int>>& out) {
  if (bits_empty(P) && bits_empty(X)) {
    std::vector<int> clique;
    for (int v = 0; v < g.size(); ++v)
      if (bit_test(R, v)) clique.push_back(v);
    out.push_back(std::move(clique));
    return;
  }
  // pivot: vertex of P | X with most neighbors in P
  int pivot = -1, best = -1;
  for (int v = 0; v < g.size(); ++v) {
    if (!bit_test(P, v) && !bit_test(X, v)) continue;
    int cnt = 0;
    for (std::size_t w = 0; w < P.size(); ++w)
      cnt += __builtin_popcountll(P[w] & g.row(v)[w]);
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  for (int v = 0; v < g.size(); ++v) {
    if (!bit_test(P, v) || g.has_edge(pivot, v)) continue;
    Bits P2(P.size()), X2(P.size());
    for (std::size_t w = 0; w < P.size(); ++w) {
      P2[w] = P[w] & g.row(v)[w];
      X2[w] = X[w] & g.row(v)[w];
    }
    bit_set(R, v);
    bk_pivot(g, R, P2, X2, out);
    bit_clear(R, v);
    bit_clear(P, v);
    bit_set(X, v);
  }
}

}  // namespace detail

// All maximal cliques (each sorted; list sorted for determinism).
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  int words = (g.size() + 63) / 64;
  detail::Bits R(words, 0), P(words, 0), X(words, 0);
  for (int v = 0; v < g.size(); ++v) detail::bit_set(P, v);
  std::vector<std::vector<int>> out;
  detail::bk_pivot(g, R, std::move(P), std::move(X), out);
  std::sort(out.begin(), out.end());
  return out;
}

// Maximal cliques of the largest size.
inline std::vector<std::vector<int>> maximum_cliques(const Graph& g) {
  auto all = maximal_cliques(g);
  std::size_t best = 0;
  for (const auto& c : all) best = std::max(best, c.size());
  std::vector<std::vector<int>> out;
  for (auto& c : all)
    if (c.size() == best) out.push_back(std::move(c));
  return out;
}

struct Spectrum {
  bool integral = false;
  // (eigenvalue, multiplicity), descending by eigenvalue; only when integral
  std::vector<std::pair<long long, int>> eigenvalues;
  std::vector<double> floating;  // always populated, descending
};

// Exact characteristic polynomial via Newton's identities when n <= 64 and
// all roots are integers; otherwise a floating symmetric eigensolver with
// integral = false.
inline Spectrum adjacency_spectrum(const Graph& g) {
  int n = g.size();
  Spectrum out;
  {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.has_edge(i, j)) a(i, j) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    for (int i = n - 1; i >= 0; --i) out.floating.push_back(es.eigenvalues()[i]);
  }
  if (n == 0 || n > 64) return out;

  // power traces p_k = tr(A^k)
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n, 0)), pw = {};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, j)) a[i][j] = 1;
  std::vector<cpp_int> traces(n + 1, 0);  // traces[k] = tr(A^k), k >= 1
  std::vector<std::vector<cpp_int>> cur = a;
  for (int k = 1; k <= n; ++k) {
    cpp_int tr = 0;
    for (int i = 0; i < n; ++i) tr += cur[i][i];
    traces[k] = tr;
    if (k == n) break;
    std::vector<std::vector<cpp_int>> nxt(n, std::vector<cpp_int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (cur[i][l] == 0) continue;
        const cpp_int& c = cur[i][l];
        for (int j = 0; j < n; ++j)
          if (a[l][j] != 0) nxt[i][j] += c;
      }
    cur = std::move(nxt);
  }
  // elementary symmetric functions of the eigenvalues
  std::vector<cpp_int> e(n + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    cpp_int acc = 0;
    for (int i = 1; i <= k; ++i) {
      cpp_int term = e[k - i] * traces[i];
      if (i % 2 == 0) acc -= term;
      else acc += term;
    }
    e[k] = acc / k;
  }
  // char poly coefficients of x^n - e1 x^(n-1) + e2 x^(n-2) - ...
  std::vector<cpp_int> poly(n + 1);  // poly[i] = coefficient of x^(n-i)
  for (int i = 0; i <= n; ++i) poly[i] = (i % 2 == 0) ? e[i] : -e[i];

  int maxdeg = 0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  std::map<long long, int, std::greater<>> roots;
  std::vector<cpp_int> p = poly;
  int deg = n;
  for (long long lambda = maxdeg; deg > 0 && lambda >= -maxdeg;) {
    // synthetic division by (x - lambda)
    std::vector<cpp_int> q(deg);
    cpp_int rem = p[0];
    q[0] = p[0];
    for (int i = 1; i <= deg; ++i) {
      rem = p[i] + rem * lambda;
      if (i < deg) q[i] = rem;
    }
    if (rem == 0) {
      ++roots[lambda];
      p.assign(q.begin(), q.end());
      --deg;
    } else {
      --lambda;
    }
  }
  if (deg == 0) {
    out.integral = true;
    for (auto [v, m] : roots) out.eigenvalues.emplace_back(v, m);
  }
  return out;
}

struct CycleCounts {
  long long triangles = 0;
  long long quadrilaterals = 0;
  long long pentagons = 0;
  long long hexagons = 0;
  long long heptagons = 0;

  long long of_length(int k) const {
    switch (k) {
      case 3: return triangles;
      case 4: return quadrilaterals;
      case 5: return pentagons;
      case 6: return hexagons;
      case 7: return heptagons;
      default: return 0;
    }
  }
};

namespace detail {

// counts simple cycles of length k through DFS; each cycle found exactly once
// (smallest vertex first, orientation fixed by second < last)
inline long long count_cycles_dfs(const Graph& g, int k) {
  long long count = 0;
  int n = g.size();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> rec = [&](int start, int v) {
    if (static_cast<int>(path.size()) == k) {
      if (g.has_edge(v, start) && path[1] < path.back()) ++count;
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (u <= start || used[u] || !g.has_edge(v, u)) continue;
      used[u] = 1;
      path.push_back(u);
      rec(start, u);
      path.pop_back();
      used[u] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    used.assign(n, 0);
    used[s] = 1;
    rec(s, s);
  }
  return count;
}

}  // namespace detail

// Triangles and quadrilaterals via trace identities, longer cycles by
// bounded enumeration.
inline CycleCounts count_cycles(const Graph& g) {
  int n = g.size();
  CycleCounts out;
  // closed-walk traces up to length 4
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, j)) a[i][j] = 1;
  auto mul = [&](const std::vector<std::vector<long long>>& x,
                 const std::vector<std::vector<long long>>& y) {
    std::vector<std::vector<long long>> z(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (!x[i][l]) continue;
        long long c = x[i][l];
        for (int j = 0; j < n; ++j) z[i][j] += c * y[l][j];
      }
    return z;
  };
  auto a2 = mul(a, a);
  auto a3 = mul(a2, a);
  auto a4 = mul(a2, a2);
  long long tr3 = 0, tr4 = 0, sumd2 = 0;
  for (int i = 0; i < n; ++i) {
    tr3 += a3[i][i];
    tr4 += a4[i][i];
    long long d = g.degree(i);
    sumd2 += d * d;
  }
  long long m = g.edge_count();
  out.triangles = tr3 / 6;
  out.quadrilaterals = (tr4 - 2 * sumd2 + 2 * m) / 8;
  out.pentagons = detail::count_cycles_dfs(g, 5);
  out.hexagons = detail::count_cycles_dfs(g, 6);
  out.heptagons = detail::count_cycles_dfs(g, 7);
  return out;
}

// Pentagon count from the closed-walk trace identity (test oracle for the
// DFS path).
inline long long pentagons_by_trace(const Graph& g) {
  int n = g.size();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, j)) a[i][j] = 1;
  auto mul = [&](const std::vector<std::vector<long long>>& x,
                 const std::vector<std::vector<long long>>& y) {
    std::vector<std::vector<long long>> z(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (!x[i][l]) continue;
        long long c = x[i][l];
        for (int j = 0; j < n; ++j) z[i][j] += c * y[l][j];
      }
    return z;
  };
  auto a2 = mul(a, a);
  auto a3 = mul(a2, a);
  auto a5 = mul(a3, a2);
  long long tr5 = 0, tr3 = 0, mixed = 0;
  for (int i = 0; i < n; ++i) {
    tr5 += a5[i][i];
    tr3 += a3[i][i];
    mixed += (g.degree(i) - 2) * a3[i][i];
  }
  return (tr5 - 5 * tr3 - 5 * mixed) / 10;
}

// Colored-graph isomorphism: 1-dimensional color refinement plus
// backtracking.  Intended for graphs of a few dozen vertices.
inline bool graphs_isomorphic(const Graph& g1, const Graph& g2,
                              std::vector<int> colors1 = {},
                              std::vector<int> colors2 = {}) {
  int n = g1.size();
  if (g2.size() != n) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  if (colors1.empty()) colors1.assign(n, 0);
  if (colors2.empty()) colors2.assign(n, 0);

  // simultaneous refinement so color ids stay comparable across graphs
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> next_ids;
    auto refine = [&](const Graph& g, const std::vector<int>& cols) {
      std::vector<std::pair<int, std::vector<int>>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
          if (g.has_edge(v, u)) nb.push_back(cols[u]);
        std::sort(nb.begin(), nb.end());
        sig[v] = {cols[v], std::move(nb)};
      }
      return sig;
    };
    auto s1 = refine(g1, colors1);
    auto s2 = refine(g2, colors2);
    for (const auto& s : s1)
      if (!next_ids.count(s)) next_ids[s] = static_cast<int>(next_ids.size());
    for (const auto& s : s2)
      if (!next_ids.count(s)) next_ids[s] = static_cast<int>(next_ids.size());
    std::vector<int> nc1(n), nc2(n);
    for (int v = 0; v < n; ++v) {
      nc1[v] = next_ids[s1[v]];
      nc2[v] = next_ids[s2[v]];
    }
    bool stable = (nc1 == colors1 && nc2 == colors2);
    colors1 = std::move(nc1);
    colors2 = std::move(nc2);
    if (stable) break;
  }
  std::map<int, int> hist1, hist2;
  for (int c : colors1) ++hist1[c];
  for (int c : colors2) ++hist2[c];
  if (hist1 != hist2) return false;

  // order g1's vertices rarest color first
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (hist1[colors1[a]] != hist1[colors1[b]])
      return hist1[colors1[a]] < hist1[colors1[b]];
    return a < b;
  });

  std::vector<int> map1(n, -1), used2(n, 0);
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used2[w] || colors2[w] != colors1[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int v2 = order[j];
        if (g1.has_edge(v, v2) != g2.has_edge(w, map1[v2])) ok = false;
      }
      if (!ok) continue;
      map1[v] = w;
      used2[w] = 1;
      if (rec(k + 1)) return true;
      used2[w] = 0;
      map1[v] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace contextua

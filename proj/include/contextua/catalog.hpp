#pragma once

// Geometry fingerprints, exact incidence isomorphism, and the catalog of
// named reference configurations the scanner can recognize.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contextua/geometry.hpp"
#include "contextua/graph.hpp"

namespace contextua {

class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct Fingerprint {
  int points = 0;
  int lines = 0;
  std::map<int, int> line_size_hist;        // size -> count
  std::map<long long, int> per_point_hist;  // lines through point -> count
  std::vector<int> degree_sequence;         // collinearity degrees, descending
  long long triangles = 0;                  // collinearity triangles
  bool spectrum_integral = false;
  std::vector<std::pair<long long, int>> spectrum;
  int rank = 0;  // group-side metadata; not part of structural equality

  bool structurally_equal(const Fingerprint& rhs) const {
    return points == rhs.points && lines == rhs.lines &&
           line_size_hist == rhs.line_size_hist &&
           per_point_hist == rhs.per_point_hist &&
           degree_sequence == rhs.degree_sequence &&
           triangles == rhs.triangles &&
           spectrum_integral == rhs.spectrum_integral &&
           (!spectrum_integral || spectrum == rhs.spectrum);
  }
};

inline Fingerprint fingerprint(const Geometry& geom) {
  Fingerprint fp;
  fp.points = geom.n_points;
  fp.lines = static_cast<int>(geom.lines.size());
  for (const auto& line : geom.lines) ++fp.line_size_hist[static_cast<int>(line.size())];
  for (int p = 0; p < geom.n_points; ++p) ++fp.per_point_hist[geom.lines_through(p)];
  Graph col = geom.collinearity();
  for (int p = 0; p < geom.n_points; ++p) fp.degree_sequence.push_back(col.degree(p));
  std::sort(fp.degree_sequence.rbegin(), fp.degree_sequence.rend());
  fp.triangles = count_cycles(col).triangles;
  if (geom.n_points <= 64) {
    Spectrum s = adjacency_spectrum(col);
    fp.spectrum_integral = s.integral;
    fp.spectrum = s.eigenvalues;
  }
  fp.rank = geom.rank_r;
  return fp;
}

// "[15_3]_(3)" style labels: [points_perpoint, lines_persize]_(rank), with
// theompressed [n_k] form when the two sides coincide.
inline std::string fingerprint_notation(const Geometry& geom) {
  Fingerprint fp = fingerprint(geom);
  std::ostringstream os;
  bool uniform_line = fp.line_size_hist.size() == 1;
  bool uniform_point = fp.per_point_hist.size() == 1;
  long long a = uniform_point ? fp.per_point_hist.begin()->first : -1;
  int b = uniform_line ? fp.line_size_hist.begin()->first : -1;
  os << '[';
  if (uniform_point)
    os << fp.points << '_' << a;
  else
    os << fp.points;
  if (!(uniform_point && uniform_line && fp.points == fp.lines && a == b)) {
    os << ',';
    if (uniform_line)
      os << fp.lines << '_' << b;
    else
      os << fp.lines;
  }
  os << ']';
  if (fp.rank > 0) os << "_(" << fp.rank << ')';
  return os.str();
}

// Exact incidence isomorphism through the point-line bipartite graph.
inline bool geometry_isomorphic(const Geometry& g1, const Geometry& g2,
                                int point_bound = 64) {
  if (g1.n_points > point_bound || g2.n_points > point_bound)
    throw TooLarge("geometry exceeds isomorphism point bound " +
                   std::to_string(point_bound));
  if (g1.n_points != g2.n_points || g1.lines.size() != g2.lines.size())
    return false;
  if (!fingerprint(g1).structurally_equal(fingerprint(g2))) return false;

  int n1 = g1.n_points, m = static_cast<int>(g1.lines.size());
  Graph b1(n1 + m), b2(n1 + m);
  std::vector<int> c1(n1 + m, 0), c2(n1 + m, 0);
  for (int l = 0; l < m; ++l) {
    c1[n1 + l] = 1 + static_cast<int>(g1.lines[l].size());
    c2[n1 + l] = 1 + static_cast<int>(g2.lines[l].size());
    for (int p : g1.lines[l]) b1.add_edge(p, n1 + l);
    for (int p : g2.lines[l]) b2.add_edge(p, n1 + l);
  }
  return graphs_isomorphic(b1, b2, c1, c2);
}

// ---------------------------------------------------------------------------
// Reference constructions

namespace build {

inline Geometry grid(int rows, int cols) {
  Geometry g;
  g.n_points = rows * cols;
  for (int r = 0; r < rows; ++r) {
    std::vector<int> line;
    for (int c = 0; c < cols; ++c) line.push_back(r * cols + c);
    g.lines.push_back(line);
  }
  for (int c = 0; c < cols; ++c) {
    std::vector<int> line;
    for (int r = 0; r < rows; ++r) line.push_back(r * cols + c);
    g.lines.push_back(line);
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

inline Geometry mermin_square() { return grid(3, 3); }

// 10 points = unordered pairs of 5 symbols; 5 lines = the pairs through each
// symbol.  This is the line/intersection structure of the five-line star.
inline Geometry pentagram() {
  Geometry g;
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      int k = static_cast<int>(id.size());
      id[{i, j}] = k;
    }
  g.n_points = 10;
  for (int s = 0; s < 5; ++s) {
    std::vector<int> line;
    for (auto& [pr, k] : id)
      if (pr.first == s || pr.second == s) line.push_back(k);
    std::sort(line.begin(), line.end());
    g.lines.push_back(line);
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

// affine plane of order 3 minus the vertical parallel class
inline Geometry pappus() {
  Geometry g;
  g.n_points = 9;  // (x, y) -> 3x + y
  for (int s = 0; s < 3; ++s)
    for (int c = 0; c < 3; ++c) {
      std::vector<int> line;
      for (int x = 0; x < 3; ++x) line.push_back(3 * x + (s * x + c) % 3);
      std::sort(line.begin(), line.end());
      g.lines.push_back(line);
    }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

// points = duads of a 6-set, lines = partitions of the 6-set into three duads
inline Geometry gq22() {
  Geometry g;
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      int k = static_cast<int>(id.size());
      id[{i, j}] = k;
    }
  g.n_points = 15;
  std::function<void(unsigned, std::vector<int>&)> rec = [&](unsigned used,
                                                             std::vector<int>& duads) {
    if (duads.size() == 3) {
      std::vector<int> line = duads;
      std::sort(line.begin(), line.end());
      g.lines.push_back(line);
      return;
    }
    int a = 0;
    while (used & (1u << a)) ++a;
    for (int b = a + 1; b < 6; ++b) {
      if (used & (1u << b)) continue;
      duads.push_back(id[{a, b}]);
      rec(used | (1u << a) | (1u << b), duads);
      duads.pop_back();
    }
  };
  std::vector<int> duads;
  rec(0, duads);
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)};
// lines are its 32 triangles.
inline Geometry shrikhande() {
  Graph gr(16);
  auto idx = [](int x, int y) { return ((x % 4 + 4) % 4) * 4 + ((y % 4 + 4) % 4); };
  const int conn[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (auto& d : conn) gr.add_edge(idx(x, y), idx(x + d[0], y + d[1]));
  Geometry g;
  g.n_points = 16;
  g.lines = maximum_cliques(gr);
  return g;
}

// flag geometry of the Fano plane: 21 flags, 14 lines of 3
inline Geometry gh21() {
  std::vector<std::vector<int>> fano;
  for (int i = 0; i < 7; ++i) fano.push_back({i, (i + 1) % 7, (i + 3) % 7});
  Geometry g;
  std::map<std::pair<int, int>, int> flag;  // (point, line)
  for (int l = 0; l < 7; ++l)
    for (int p : fano[l]) {
      int k = static_cast<int>(flag.size());
      flag[{p, l}] = k;
    }
  g.n_points = 21;
  for (int p = 0; p < 7; ++p) {
    std::vector<int> line;
    for (auto& [f, k] : flag)
      if (f.first == p) line.push_back(k);
    std::sort(line.begin(), line.end());
    g.lines.push_back(line);
  }
  for (int l = 0; l < 7; ++l) {
    std::vector<int> line;
    for (auto& [f, k] : flag)
      if (f.second == l) line.push_back(k);
    std::sort(line.begin(), line.end());
    g.lines.push_back(line);
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

inline Geometry grid3x3x3() {
  Geometry g;
  g.n_points = 27;  // (x, y, z) -> 9x + 3y + z
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      std::vector<int> l1, l2, l3;
      for (int w = 0; w < 3; ++w) {
        l1.push_back(9 * u + 3 * v + w);
        l2.push_back(9 * u + 3 * w + v);
        l3.push_back(9 * w + 3 * u + v);
      }
      g.lines.push_back(l1);
      g.lines.push_back(l2);
      g.lines.push_back(l3);
    }
  for (auto& l : g.lines) std::sort(l.begin(), l.end());
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

// triangular graph T(6) with its six 5-point cliques as lines
inline Geometry t6() {
  Geometry g;
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      int k = static_cast<int>(id.size());
      id[{i, j}] = k;
    }
  g.n_points = 15;
  for (int s = 0; s < 6; ++s) {
    std::vector<int> line;
    for (auto& [pr, k] : id)
      if (pr.first == s || pr.second == s) line.push_back(k);
    std::sort(line.begin(), line.end());
    g.lines.push_back(line);
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

// k parallel classes of lines on an n x n array (rows, columns, then slopes)
inline Geometry orthogonal_array(int k, int n) {
  if (k < 2 || k > n + 1) throw std::invalid_argument("invalid OA parameters");
  Geometry g;
  g.n_points = n * n;  // (x, y) -> n x + y
  for (int x = 0; x < n; ++x) {
    std::vector<int> line;
    for (int y = 0; y < n; ++y) line.push_back(n * x + y);
    g.lines.push_back(line);
  }
  for (int y = 0; y < n; ++y) {
    std::vector<int> line;
    for (int x = 0; x < n; ++x) line.push_back(n * x + y);
    g.lines.push_back(line);
  }
  for (int s = 1; s <= k - 2; ++s)
    for (int c = 0; c < n; ++c) {
      std::vector<int> line;
      for (int x = 0; x < n; ++x) line.push_back(n * x + (s * x + c) % n);
      std::sort(line.begin(), line.end());
      g.lines.push_back(line);
    }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

inline Geometry multipartite(const std::vector<int>& parts) {
  Geometry g;
  g.n_points = 0;
  std::vector<std::vector<int>> groups;
  for (int sz : parts) {
    std::vector<int> grp;
    for (int i = 0; i < sz; ++i) grp.push_back(g.n_points++);
    groups.push_back(grp);
  }
  // lines = transversals, one point per part
  std::vector<int> pick(parts.size(), 0);
  while (true) {
    std::vector<int> line;
    for (std::size_t i = 0; i < groups.size(); ++i) line.push_back(groups[i][pick[i]]);
    std::sort(line.begin(), line.end());
    g.lines.push_back(line);
    int i = static_cast<int>(pick.size()) - 1;
    while (i >= 0 && ++pick[i] == parts[i]) pick[i--] = 0;
    if (i < 0) break;
  }
  std::sort(g.lines.begin(), g.lines.end());
  return g;
}

}  // namespace build

struct CatalogEntry {
  std::string name;
  Geometry geom;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"Mermin square", build::mermin_square()});
    v.push_back({"Mermin pentagram", build::pentagram()});
    v.push_back({"Pappus configuration", build::pappus()});
    v.push_back({"GQ(2,2)", build::gq22()});
    v.push_back({"Shrikhande graph", build::shrikhande()});
    v.push_back({"GH(2,1)", build::gh21()});
    v.push_back({"3x3x3 grid", build::grid3x3x3()});
    v.push_back({"T(6)", build::t6()});
    v.push_back({"OA(5,3)", build::orthogonal_array(3, 5)});
    return v;
  }();
  return entries;
}

inline Geometry catalog_build(const std::string& name,
                              const std::vector<int>& params = {}) {
  if (name == "grid") {
    if (params.size() != 2) throw std::invalid_argument("grid needs rows, cols");
    return build::grid(params[0], params[1]);
  }
  if (name == "K") {
    if (params.size() < 2) throw std::invalid_argument("K needs at least 2 parts");
    return build::multipartite(params);
  }
  if (name == "OA") {
    if (params.size() != 2) throw std::invalid_argument("OA needs k, n");
    return build::orthogonal_array(params[0], params[1]);
  }
  for (const auto& e : catalog())
    if (e.name == name) return e.geom;
  throw std::invalid_argument("unknown catalog name: " + name);
}

// Detects complete multipartite geometries structurally: the complement of
// the collinearity graph must be a disjoint union of cliques and the lines
// must be exactly the transversals.
inline std::optional<std::string> multipartite_name(const Geometry& geom) {
  if (geom.n_points < 2 || geom.lines.empty()) return std::nullopt;
  Graph comp = geom.collinearity().complement();
  std::vector<int> comp_id(geom.n_points, -1);
  std::vector<int> sizes;
  for (int v = 0; v < geom.n_points; ++v) {
    if (comp_id[v] >= 0) continue;
    std::vector<int> part{v};
    comp_id[v] = static_cast<int>(sizes.size());
    for (std::size_t k = 0; k < part.size(); ++k)
      for (int u = 0; u < geom.n_points; ++u)
        if (comp_id[u] < 0 && comp.has_edge(part[k], u)) {
          comp_id[u] = comp_id[v];
          part.push_back(u);
        }
    // the component must be a clique in the complement
    for (int a : part)
      for (int b : part)
        if (a != b && !comp.has_edge(a, b)) return std::nullopt;
    sizes.push_back(static_cast<int>(part.size()));
  }
  if (sizes.size() < 2) return std::nullopt;
  long long expected = 1;
  for (int s : sizes) expected *= s;
  if (static_cast<long long>(geom.lines.size()) != expected) return std::nullopt;
  for (const auto& line : geom.lines) {
    if (line.size() != sizes.size()) return std::nullopt;
    std::set<int> seen;
    for (int p : line) seen.insert(comp_id[p]);
    if (seen.size() != line.size()) return std::nullopt;
  }
  std::sort(sizes.begin(), sizes.end());
  std::string name = "K(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) name += ',';
    name += std::to_string(sizes[i]);
  }
  name += ')';
  return name;
}

// First catalog entry isomorphic to the geometry; multipartite and grid
// families are detected structurally.
inline std::optional<std::string> match_catalog(const Geometry& geom) {
  if (auto k = multipartite_name(geom)) return k;
  if (geom.n_points <= 64) {
    for (const auto& e : catalog())
      if (geometry_isomorphic(geom, e.geom)) return e.name;
    // parametric grids (rows x cols rook's geometry)
    Fingerprint fp = fingerprint(geom);
    if (fp.line_size_hist.size() <= 2 && fp.lines >= 2) {
      for (int rows = 2; rows * 2 <= fp.points; ++rows) {
        if (fp.points % rows) continue;
        int cols = fp.points / rows;
        if (rows + cols != fp.lines) continue;
        if (geometry_isomorphic(geom, build::grid(rows, cols)))
          return "grid(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
      }
    }
  }
  return std::nullopt;
}

}  // namespace contextua

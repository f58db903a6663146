#pragma once

// Point-line geometries extracted from two-point stabilizer classes: the
// defining graph joins pairs whose stabilizer is abstractly isomorphic to the
// chosen class representative, lines are the largest maximal cliques of that
// graph, election demands equal (not merely isomorphic) stabilizers within
// every line, and the contextuality parameter counts lines whose coset
// representatives fail to commute.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "contextua/coset_table.hpp"
#include "contextua/graph.hpp"
#include "contextua/group_iso.hpp"
#include "contextua/permgroup.hpp"

namespace contextua {

class EmptyGraphError : public std::runtime_error {
 public:
  explicit EmptyGraphError(int class_id)
      : std::runtime_error("stabilizer class " + std::to_string(class_id) +
                           " has no off-diagonal pairs") {}
};

struct Geometry {
  int n_points = 0;
  std::vector<std::vector<int>> lines;  // each sorted, list sorted
  int rank_r = 0;                       // 0 when unknown (catalog/file input)
  int chosen_class = -1;                // stabilizer class id, -1 otherwise

  Graph collinearity() const {
    Graph g(n_points);
    for (const auto& line : lines)
      for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = i + 1; j < line.size(); ++j)
          g.add_edge(line[i], line[j]);
    return g;
  }

  long long lines_through(int p) const {
    long long k = 0;
    for (const auto& line : lines)
      for (int q : line)
        if (q == p) ++k;
    return k;
  }

  void validate() const {
    for (const auto& line : lines) {
      if (line.size() < 2) throw std::logic_error("line with fewer than 2 points");
      for (int p : line)
        if (p < 0 || p >= n_points) throw std::logic_error("line point out of range");
    }
    // incidence count consistency
    long long by_lines = 0;
    for (const auto& line : lines) by_lines += static_cast<long long>(line.size());
    long long by_points = 0;
    for (int p = 0; p < n_points; ++p) by_points += lines_through(p);
    if (by_lines != by_points) throw std::logic_error("incidence count mismatch");
  }

  bool operator==(const Geometry& rhs) const {
    return n_points == rhs.n_points && lines == rhs.lines;
  }
};

// The defining graph of one stabilizer class.
inline Graph class_graph(const TwoPointClasses& tpc, int class_id) {
  int n = static_cast<int>(tpc.suborbit_of_point.size());
  Graph g(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (tpc.pair_class(p, q) == class_id) g.add_edge(p, q);
  return g;
}

// Lines are the maximum cliques of the defining graph; when the graph is
// triangle-free that degenerates to the edges themselves.
inline Geometry build_geometry(const TwoPointClasses& tpc, int class_id) {
  Graph g = class_graph(tpc, class_id);
  if (g.edge_count() == 0) throw EmptyGraphError(class_id);
  Geometry geom;
  geom.n_points = g.size();
  geom.lines = maximum_cliques(g);
  geom.rank_r = tpc.rank;
  geom.chosen_class = class_id;
  geom.validate();
  return geom;
}

// Exact two-point stabilizer of a pair, as a subgroup of <alpha, beta>.
inline PermGroup pair_stabilizer(const Perm& alpha, const Perm& beta, int p,
                                 int q) {
  int n = alpha.degree();
  auto stab_p = schreier_stabilizer_gens(n, {alpha, beta}, p);
  return PermGroup(n, schreier_stabilizer_gens(n, stab_p, q));
}

// Election: within every line, all point pairs must share the same (equal)
// two-point stabilizer subgroup.
inline bool elect(const Geometry& geom, const Perm& alpha, const Perm& beta) {
  for (const auto& line : geom.lines) {
    if (line.size() < 3) continue;  // a single pair trivially agrees
    PermGroup first = pair_stabilizer(alpha, beta, line[0], line[1]);
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        if (i == 0 && j == 1) continue;
        PermGroup s = pair_stabilizer(alpha, beta, line[i], line[j]);
        if (!subgroups_equal(first, s)) return false;
      }
  }
  return true;
}

struct KappaReport {
  long long defective_lines = 0;
  long long total_lines = 0;

  long long num() const {  // reduced numerator
    long long g = std::gcd(defective_lines, total_lines);
    return g ? defective_lines / g : 0;
  }
  long long den() const {
    long long g = std::gcd(defective_lines, total_lines);
    return g ? total_lines / g : 1;
  }
  std::string fraction() const {
    return std::to_string(num()) + "/" + std::to_string(den());
  }
  double value() const {
    return total_lines ? static_cast<double>(defective_lines) / total_lines : 0.0;
  }
  bool operator==(const KappaReport&) const = default;
};

// A line is defective when some pair of its points has non-commuting
// representative images under a -> alpha, b -> beta.
inline KappaReport kappa(const Geometry& geom, const std::vector<Word>& reps,
                         const Perm& alpha, const Perm& beta) {
  std::vector<Perm> images;
  images.reserve(reps.size());
  for (const Word& w : reps) images.push_back(eval_word(w, alpha, beta));
  KappaReport out;
  out.total_lines = static_cast<long long>(geom.lines.size());
  for (const auto& line : geom.lines) {
    bool defective = false;
    for (std::size_t i = 0; i < line.size() && !defective; ++i)
      for (std::size_t j = i + 1; j < line.size() && !defective; ++j)
        if (!images[line[i]].commutes_with(images[line[j]])) defective = true;
    if (defective) ++out.defective_lines;
  }
  return out;
}

// Indices (0-based) of the lines that are not defective.
inline std::vector<int> commuting_lines(const Geometry& geom,
                                        const std::vector<Word>& reps,
                                        const Perm& alpha, const Perm& beta) {
  std::vector<Perm> images;
  for (const Word& w : reps) images.push_back(eval_word(w, alpha, beta));
  std::vector<int> out;
  for (std::size_t li = 0; li < geom.lines.size(); ++li) {
    const auto& line = geom.lines[li];
    bool defective = false;
    for (std::size_t i = 0; i < line.size() && !defective; ++i)
      for (std::size_t j = i + 1; j < line.size() && !defective; ++j)
        if (!images[line[i]].commutes_with(images[line[j]])) defective = true;
    if (!defective) out.push_back(static_cast<int>(li));
  }
  return out;
}

}  // namespace contextua

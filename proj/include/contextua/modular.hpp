#pragma once

// Invariants of modular-group actions (alpha of order dividing 2, beta of
// order dividing 3): elliptic point counts, cusp widths read from the cycles
// of alpha*beta, generalized level, and genus.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "contextua/perm.hpp"

namespace contextua {

class NotModularAction : public std::runtime_error {
 public:
  explicit NotModularAction(const std::string& what) : std::runtime_error(what) {}
};

struct ModularInvariants {
  int index = 0;
  int nu2 = 0;                  // fixed points of alpha
  int nu3 = 0;                  // fixed points of beta
  std::vector<int> cusp_widths; // cycle lengths of alpha*beta, descending
  int n_cusps = 0;
  long long level = 1;          // lcm of cusp widths
  int genus = 0;

  bool operator==(const ModularInvariants&) const = default;
};

// Genus of the bipartite map of any transitive pair, from the Euler formula
// 2 - 2g = c(alpha) + c(beta) + c((alpha beta)^-1) - n.
inline int dessin_genus(const Perm& alpha, const Perm& beta) {
  int n = alpha.degree();
  Perm prod = alpha * beta;
  int chi = alpha.num_cycles() + beta.num_cycles() + prod.num_cycles() - n;
  if ((2 - chi) % 2 != 0 || chi > 2)
    throw std::logic_error("inconsistent Euler characteristic");
  return (2 - chi) / 2;
}

inline ModularInvariants modular_invariants(const Perm& alpha, const Perm& beta) {
  int n = alpha.degree();
  if (!(alpha * alpha).is_identity())
    throw NotModularAction("alpha^2 is not the identity");
  if (!(beta * beta * beta).is_identity())
    throw NotModularAction("beta^3 is not the identity");
  {
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int q : {alpha[queue[k]], beta[queue[k]]})
        if (!seen[q]) {
          seen[q] = 1;
          queue.push_back(q);
        }
    if (static_cast<int>(queue.size()) != n)
      throw NotModularAction("joint action is not transitive");
  }
  ModularInvariants out;
  out.index = n;
  out.nu2 = alpha.num_fixed_points();
  out.nu3 = beta.num_fixed_points();
  Perm prod = alpha * beta;
  for (const auto& c : prod.cycles(/*include_fixed=*/true))
    out.cusp_widths.push_back(static_cast<int>(c.size()));
  std::sort(out.cusp_widths.rbegin(), out.cusp_widths.rend());
  out.n_cusps = static_cast<int>(out.cusp_widths.size());
  out.level = 1;
  for (int w : out.cusp_widths) out.level = std::lcm(out.level, static_cast<long long>(w));
  // 12 g = 12 + n - 3 nu2 - 4 nu3 - 6 c, exactly
  long long g12 = 12 + n - 3ll * out.nu2 - 4ll * out.nu3 - 6ll * out.n_cusps;
  if (g12 < 0 || g12 % 12 != 0)
    throw std::logic_error("genus formula does not yield a non-negative integer");
  out.genus = static_cast<int>(g12 / 12);
  return out;
}

}  // namespace contextua

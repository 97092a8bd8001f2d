#include "pmalg/algebra.hpp"
#include "pmalg/duality.hpp"
#include "pmalg/variety.hpp"

namespace pmalg {

std::vector<Algebra> decompose_into_simples(const Algebra& a) {
  if (!variety_membership(a).bpk0)
    throw DomainError("simple-factor decomposition requires membership in BPK0");
  if (a.size() == 1) return {};
  DualSpace x = dual_space(a);
  std::vector<Algebra> factors;
  for (const Bitset& comp : phi_components(x)) {
    std::vector<int> pts = comp.to_indices();
    int k = static_cast<int>(pts.size());
    std::vector<int> rank(x.points, -1);
    for (int i = 0; i < k; ++i) rank[pts[i]] = i;
    std::vector<std::pair<int, int>> order;
    std::vector<int> phi(k);
    for (int i = 0; i < k; ++i) {
      phi[i] = rank[x.phi[pts[i]]];
      for (int j = 0; j < k; ++j)
        if (i != j && x.leq(pts[i], pts[j])) order.emplace_back(i, j);
    }
    factors.push_back(upset_algebra(DualSpace::make(k, order, phi)));
  }
  return factors;
}

}  // namespace pmalg

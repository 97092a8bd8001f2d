#include "pmalg/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pmalg {

DualSpace DualSpace::make(int points, const std::vector<std::pair<int, int>>& order,
                          const std::vector<int>& phi) {
  DualSpace x;
  x.points = points;
  x.up.assign(points, Bitset(points));
  // Reuse the lattice builder's closure by hand: simple fixpoint suffices at
  // these sizes.
  for (int p = 0; p < points; ++p) x.up[p].set(p);
  for (auto [lo, hi] : order) {
    if (lo < 0 || lo >= points || hi < 0 || hi >= points)
      throw MalformedError("order pair references a point out of range");
    x.up[lo].set(hi);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < points; ++p)
      for (int q = x.up[p].first(); q >= 0; q = x.up[p].next(q + 1))
        if (!x.up[q].subset_of(x.up[p])) {
          x.up[p] |= x.up[q];
          changed = true;
        }
  }
  x.phi = phi;
  x.check();
  return x;
}

void DualSpace::check() const {
  if (static_cast<int>(phi.size()) != points || static_cast<int>(up.size()) != points)
    throw MalformedError("space fields must list one entry per point");
  for (int p = 0; p < points; ++p) {
    if (phi[p] < 0 || phi[p] >= points)
      throw MalformedError("phi references a point out of range");
    if (!up[p].test(p)) throw DomainError("space order is not reflexive");
  }
  for (int p = 0; p < points; ++p) {
    if (phi[phi[p]] != p) throw DomainError("phi is not an involution");
    for (int q = up[p].first(); q >= 0; q = up[p].next(q + 1)) {
      if (q != p && up[q].test(p)) throw DomainError("space order is not antisymmetric");
      if (!up[q].subset_of(up[p])) throw DomainError("space order is not transitive");
      if (!up[phi[q]].test(phi[p]))
        throw DomainError("phi is not order-reversing");
    }
  }
}

std::vector<Bitset> prime_filters(const Algebra& a) {
  // In a finite distributive lattice the prime filters are exactly the
  // principal filters at join-irreducible elements.
  std::vector<Bitset> out;
  for (int j : a.join_irreducibles()) out.push_back(a.upset(j));
  std::sort(out.begin(), out.end());
  return out;
}

DualSpace dual_space(const Algebra& a) {
  DualSpace x;
  x.filters = prime_filters(a);
  x.points = static_cast<int>(x.filters.size());
  x.up.assign(x.points, Bitset(x.points));
  for (int p = 0; p < x.points; ++p)
    for (int q = 0; q < x.points; ++q)
      if (x.filters[p].subset_of(x.filters[q])) x.up[p].set(q);
  x.phi.resize(x.points);
  for (int p = 0; p < x.points; ++p) {
    Bitset image(a.size());
    for (int e = 0; e < a.size(); ++e)
      if (!x.filters[p].test(a.neg(e))) image.set(e);
    auto it = std::find(x.filters.begin(), x.filters.end(), image);
    if (it == x.filters.end())
      throw DomainError("phi image of a prime filter is not a prime filter");
    x.phi[p] = static_cast<int>(it - x.filters.begin());
  }
  x.check();
  return x;
}

namespace {

Bitset down_closure(const DualSpace& x, const Bitset& v) {
  Bitset out(x.points);
  for (int p = 0; p < x.points; ++p)
    if (x.up[p].intersects(v)) out.set(p);
  return out;
}

Bitset phi_image(const DualSpace& x, const Bitset& v) {
  Bitset out(x.points);
  for (int p = v.first(); p >= 0; p = v.next(p + 1)) out.set(x.phi[p]);
  return out;
}

bool is_upset(const DualSpace& x, const Bitset& v) {
  for (int p = v.first(); p >= 0; p = v.next(p + 1))
    if (!x.up[p].subset_of(v)) return false;
  return true;
}

}  // namespace

Algebra upset_algebra(const DualSpace& x, int element_cap) {
  x.check();
  // Enumerate all up-sets by extending along a reverse linear extension:
  // BFS over the powerset would also work, but growing from the set of
  // already-found up-sets keeps this near the output size.
  std::vector<Bitset> upsets;
  {
    std::map<Bitset, int> seen;
    Bitset empty(x.points);
    seen.emplace(empty, 0);
    std::vector<Bitset> queue{empty};
    while (!queue.empty()) {
      Bitset v = queue.back();
      queue.pop_back();
      for (int p = 0; p < x.points; ++p) {
        if (v.test(p)) continue;
        Bitset w = v | x.up[p];
        if (seen.emplace(w, 0).second) {
          if (static_cast<int>(seen.size()) > element_cap)
            throw CapError("up-set algebra exceeds the element cap of " +
                           std::to_string(element_cap));
          queue.push_back(w);
        }
      }
    }
    for (auto& [v, _] : seen) upsets.push_back(v);
  }
  std::sort(upsets.begin(), upsets.end());
  int n = static_cast<int>(upsets.size());
  std::map<Bitset, int> index;
  for (int i = 0; i < n; ++i) index.emplace(upsets[i], i);

  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (upsets[i].subset_of(upsets[j])) up[i].set(j);

  std::vector<int> neg(n), star(n);
  for (int i = 0; i < n; ++i) {
    neg[i] = index.at(phi_image(x, upsets[i]).complement());
    star[i] = index.at(down_closure(x, upsets[i]).complement());
  }
  return Algebra::from_parts(Lattice::from_upsets(std::move(up)), std::move(neg),
                             std::move(star));
}

bool roundtrip_isomorphic(const Algebra& a) {
  DualSpace x = dual_space(a);
  Algebra b = upset_algebra(x);
  if (b.size() != a.size()) return false;
  // eta(e) = {P : e in P}, as a bitset over points.  b's element i is the
  // i-th up-set in bitmask order, so eta(e) is the rank of its image.
  std::vector<int> eta(a.size(), -1);
  std::vector<Bitset> images;
  for (int e = 0; e < a.size(); ++e) {
    Bitset v(x.points);
    for (int p = 0; p < x.points; ++p)
      if (x.filters[p].test(e)) v.set(p);
    if (!is_upset(x, v)) return false;
    images.push_back(v);
  }
  // Element order of b: sorted by bitmask; eta(e) = rank of images[e].
  std::vector<Bitset> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;  // eta not injective
  std::map<Bitset, int> rank;
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) rank.emplace(sorted[i], i);
  for (int e = 0; e < a.size(); ++e) eta[e] = rank.at(images[e]);

  for (int e = 0; e < a.size(); ++e)
    for (int f = 0; f < a.size(); ++f) {
      if (a.leq(e, f) != b.leq(eta[e], eta[f])) return false;
      if (b.meet(eta[e], eta[f]) != eta[a.meet(e, f)]) return false;
      if (b.join(eta[e], eta[f]) != eta[a.join(e, f)]) return false;
    }
  for (int e = 0; e < a.size(); ++e) {
    if (b.neg(eta[e]) != eta[a.neg(e)]) return false;
    if (b.star(eta[e]) != eta[a.star(e)]) return false;
  }
  return true;
}

Bitset max_points(const DualSpace& x) {
  Bitset out(x.points);
  for (int p = 0; p < x.points; ++p)
    if (x.up[p].count() == 1) out.set(p);
  return out;
}

Bitset min_points(const DualSpace& x) {
  Bitset out(x.points);
  std::vector<int> below(x.points, 0);
  for (int p = 0; p < x.points; ++p)
    for (int q = x.up[p].first(); q >= 0; q = x.up[p].next(q + 1))
      if (q != p) ++below[q];
  for (int p = 0; p < x.points; ++p)
    if (below[p] == 0) out.set(p);
  return out;
}

Bitset body(const DualSpace& x) {
  return (max_points(x) | min_points(x)).complement();
}

namespace {

int uf_find(std::vector<int>& parent, int p) {
  while (parent[p] != p) p = parent[p] = parent[parent[p]];
  return p;
}

}  // namespace

std::vector<Bitset> phi_components(const DualSpace& x) {
  std::vector<int> parent(x.points);
  std::iota(parent.begin(), parent.end(), 0);
  auto merge = [&](int p, int q) { parent[uf_find(parent, p)] = uf_find(parent, q); };
  for (int p = 0; p < x.points; ++p) {
    merge(p, x.phi[p]);
    for (int q = x.up[p].first(); q >= 0; q = x.up[p].next(q + 1)) merge(p, q);
  }
  std::map<int, Bitset> comps;
  for (int p = 0; p < x.points; ++p)
    comps.try_emplace(uf_find(parent, p), Bitset(x.points)).first->second.set(p);
  std::vector<Bitset> out;
  for (auto& [_, c] : comps) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

SpaceType space_type(const DualSpace& x) {
  Bitset mx = max_points(x);
  for (int p = 0; p < x.points; ++p) {
    if (mx.test(p)) continue;
    // every maximal point must be above p
    for (int m = mx.first(); m >= 0; m = mx.next(m + 1))
      if (!x.up[p].test(m)) return SpaceType::Other;
  }
  Bitset bd = body(x);
  int k = bd.count();
  if (k == 0) return SpaceType::Type1;
  if (k == 1) return SpaceType::Type2;
  if (k == 2) {
    int p = bd.first();
    int q = bd.next(p + 1);
    if (x.phi[p] == q) return SpaceType::Type3;
  }
  return SpaceType::Other;
}

const char* space_type_name(SpaceType t) {
  switch (t) {
    case SpaceType::Type1: return "Type 1";
    case SpaceType::Type2: return "Type 2";
    case SpaceType::Type3: return "Type 3";
    default: return "Other";
  }
}

}  // namespace pmalg

#include "pmalg/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pmalg {

Congruence Congruence::from_raw(const std::vector<int>& raw) {
  Congruence c;
  c.block_of.assign(raw.size(), -1);
  std::map<int, int> renumber;
  for (std::size_t e = 0; e < raw.size(); ++e) {
    auto it = renumber.try_emplace(raw[e], static_cast<int>(renumber.size())).first;
    c.block_of[e] = it->second;
  }
  return c;
}

int Congruence::num_blocks() const {
  int mx = -1;
  for (int b : block_of) mx = std::max(mx, b);
  return mx + 1;
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (std::size_t e = 0; e < block_of.size(); ++e)
    out[block_of[e]].push_back(static_cast<int>(e));
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  std::map<int, int> image;
  for (std::size_t e = 0; e < block_of.size(); ++e) {
    auto [it, fresh] = image.try_emplace(block_of[e], other.block_of[e]);
    if (!fresh && it->second != other.block_of[e]) return false;
  }
  return true;
}

bool is_c_subset(const DualSpace& x, const Bitset& y) {
  for (int p = y.first(); p >= 0; p = y.next(p + 1))
    if (!y.test(x.phi[p])) return false;
  Bitset mx = max_points(x);
  for (int p = y.first(); p >= 0; p = y.next(p + 1)) {
    Bitset above = x.up[p] & mx;
    if (!above.subset_of(y)) return false;
  }
  return true;
}

std::vector<Bitset> all_c_subsets(const DualSpace& x) {
  // phi-orbits: a C-subset is a union of them, so enumerate orbit subsets.
  std::vector<Bitset> orbits;
  {
    std::vector<char> seen(x.points, 0);
    for (int p = 0; p < x.points; ++p) {
      if (seen[p]) continue;
      Bitset o(x.points);
      o.set(p);
      o.set(x.phi[p]);
      seen[p] = seen[x.phi[p]] = 1;
      orbits.push_back(o);
    }
  }
  int k = static_cast<int>(orbits.size());
  if (k > 30)
    throw CapError("C-subset enumeration over " + std::to_string(k) +
                   " phi-orbits is above the supported range");
  std::vector<Bitset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Bitset y(x.points);
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) y |= orbits[i];
    if (is_c_subset(x, y)) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Congruence congruence_from_csubset(const Algebra& a, const DualSpace& x, const Bitset& y) {
  if (static_cast<int>(x.filters.size()) != x.points)
    throw DomainError("space carries no filters; build it with dual_space");
  if (!is_c_subset(x, y))
    throw DomainError("subset is not a congruence subset: it must be closed under phi "
                      "and contain every maximal point above it");
  std::map<Bitset, int> keys;
  std::vector<int> raw(a.size());
  for (int e = 0; e < a.size(); ++e) {
    Bitset key(x.points);
    for (int p = y.first(); p >= 0; p = y.next(p + 1))
      if (x.filters[p].test(e)) key.set(p);
    raw[e] = keys.try_emplace(key, static_cast<int>(keys.size())).first->second;
  }
  return Congruence::from_raw(raw);
}

namespace {

bool finer_first(const std::pair<Bitset, Congruence>& a,
                 const std::pair<Bitset, Congruence>& b) {
  int na = a.second.num_blocks(), nb = b.second.num_blocks();
  if (na != nb) return na > nb;
  return a.second.block_of < b.second.block_of;
}

}  // namespace

std::vector<std::pair<Bitset, Congruence>> congruence_lattice_with_csubsets(const Algebra& a) {
  DualSpace x = dual_space(a);
  std::vector<std::pair<Bitset, Congruence>> out;
  for (const Bitset& y : all_c_subsets(x))
    out.push_back({y, congruence_from_csubset(a, x, y)});
  std::sort(out.begin(), out.end(), finer_first);
  return out;
}

std::vector<Congruence> congruence_lattice(const Algebra& a) {
  std::vector<Congruence> out;
  for (auto& [y, c] : congruence_lattice_with_csubsets(a)) out.push_back(c);
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  }
  // Returns true when the merge joined two distinct blocks.
  bool merge(int p, int q) {
    p = find(p);
    q = find(q);
    if (p == q) return false;
    parent[std::max(p, q)] = std::min(p, q);
    return true;
  }
};

// Smallest congruence containing every pair listed in `gens`: Mal'cev-style
// closure under unary polynomials built from the four operations.
Congruence congruence_generated(const Algebra& a,
                                const std::vector<std::pair<int, int>>& gens) {
  int n = a.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [p, q] : gens)
    if (uf.merge(p, q)) work.push_back({p, q});
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    auto relate = [&](int u, int v) {
      if (uf.merge(u, v)) work.push_back({u, v});
    };
    relate(a.neg(p), a.neg(q));
    relate(a.star(p), a.star(q));
    for (int c = 0; c < n; ++c) {
      relate(a.meet(p, c), a.meet(q, c));
      relate(a.join(p, c), a.join(q, c));
    }
  }
  std::vector<int> raw(n);
  for (int e = 0; e < n; ++e) raw[e] = uf.find(e);
  return Congruence::from_raw(raw);
}

}  // namespace

std::vector<Congruence> congruence_lattice_bruteforce(const Algebra& a, int element_cap) {
  if (a.size() > element_cap)
    throw CapError("brute-force congruence search capped at " +
                   std::to_string(element_cap) + " elements");
  int n = a.size();
  std::set<Congruence> found;
  {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    found.insert(Congruence::from_raw(ids));  // the identity congruence
  }
  std::vector<Congruence> principals;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      Congruence c = congruence_generated(a, {{p, q}});
      if (found.insert(c).second) principals.push_back(c);
    }
  // Close under joins; every congruence is a join of principal ones.
  std::vector<Congruence> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& c : frontier)
      for (const Congruence& p : principals) {
        std::vector<std::pair<int, int>> gens;
        for (int e = 0; e < n; ++e)
          for (int f = e + 1; f < n; ++f)
            if (c.block_of[e] == c.block_of[f] || p.block_of[e] == p.block_of[f])
              gens.push_back({e, f});
        Congruence j = congruence_generated(a, gens);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Congruence& x, const Congruence& y) {
    int nx = x.num_blocks(), ny = y.num_blocks();
    if (nx != ny) return nx > ny;
    return x.block_of < y.block_of;
  });
  return out;
}

bool is_simple(const Algebra& a) {
  return congruence_lattice(a).size() == 2;
}

std::optional<Congruence> monolith(const Algebra& a) {
  auto lattice = congruence_lattice(a);
  std::vector<Congruence> nontrivial;
  int n = a.size();
  for (auto& c : lattice)
    if (c.num_blocks() != n) nontrivial.push_back(c);
  std::optional<Congruence> least;
  for (auto& c : nontrivial) {
    bool below_all = true;
    for (auto& d : nontrivial)
      if (!c.refines(d)) {
        below_all = false;
        break;
      }
    if (below_all) {
      least = c;
      break;
    }
  }
  return least;
}

bool is_subdirectly_irreducible(const Algebra& a) {
  return monolith(a).has_value();
}

namespace {

bool phi_connected(const DualSpace& x) {
  return phi_components(x).size() == 1;
}

}  // namespace

bool is_simple_by_dual(const Algebra& a) {
  DualSpace x = dual_space(a);
  if (!phi_connected(x)) return false;
  return (max_points(x) | min_points(x)).count() == x.points;
}

bool is_subdirectly_irreducible_by_dual(const Algebra& a) {
  DualSpace x = dual_space(a);
  if (!phi_connected(x)) return false;
  Bitset bd = body(x);
  int k = bd.count();
  if (k < 2) return true;
  if (k == 2) {
    int p = bd.first();
    return x.phi[p] == bd.next(p + 1);
  }
  return false;
}

}  // namespace pmalg

#include "pmalg/constructions.hpp"

#include <algorithm>
#include <set>

#include "pmalg/variety.hpp"

namespace pmalg {

int SiDescriptor::expected_size() const {
  if (i == 0 && m == 0) return 1;
  if (i == 1 && m == 0) return 2;
  return (1 << (i + 1)) + m - 2;
}

Lattice boolean_block(int k) {
  if (k < 0 || k > 12) throw DomainError("boolean_block supports 0 <= k <= 12");
  int n = 1 << k;
  std::vector<Bitset> up(n, Bitset(n));
  for (int s = 0; s < n; ++s)
    for (int t = s; t < n; t = (t + 1) | s)  // supersets of s
      up[s].set(t);
  return Lattice::from_upsets(std::move(up));
}

Lattice chain(int m) {
  if (m < 1) throw DomainError("chain requires at least one element");
  std::vector<Bitset> up(m, Bitset(m));
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) up[a].set(b);
  return Lattice::from_upsets(std::move(up));
}

Lattice ordinal_sum(const Lattice& l1, const Lattice& l2) {
  int n1 = l1.size(), n2 = l2.size();
  int n = n1 + n2 - 1;
  // l2's elements in index order, bottom mapped onto top(l1).
  std::vector<int> map2(n2);
  int next = n1;
  for (int e = 0; e < n2; ++e)
    map2[e] = (e == l2.bottom()) ? l1.top() : next++;
  std::vector<Bitset> up(n, Bitset(n));
  for (int a = 0; a < n1; ++a) {
    for (int b = l1.upset(a).first(); b >= 0; b = l1.upset(a).next(b + 1)) up[a].set(b);
    for (int e = 0; e < n2; ++e)
      if (e != l2.bottom()) up[a].set(map2[e]);  // everything of l2 sits above l1
  }
  for (int e = 0; e < n2; ++e)
    for (int f = l2.upset(e).first(); f >= 0; f = l2.upset(e).next(f + 1))
      up[map2[e]].set(map2[f]);
  return Lattice::from_upsets(std::move(up));
}

Algebra build_si(const SiDescriptor& d) {
  if (!d.valid())
    throw DomainError("invalid descriptor (" + std::to_string(d.i) + ", " +
                      std::to_string(d.m) + "); need (0,0), (1,0) or i >= 1, 1 <= m <= 3");
  if (d.i == 0 && d.m == 0) {
    return Algebra::from_parts(chain(1), {0});
  }
  if (d.i == 1 && d.m == 0) {
    return Algebra::from_parts(chain(2), {1, 0});
  }
  int i = d.i, m = d.m;
  int block = 1 << i;
  int full = block - 1;
  Lattice lat = ordinal_sum(ordinal_sum(boolean_block(i), chain(m)), boolean_block(i));
  // Index layout produced by the sums:
  //   lower mask s         -> s
  //   chain level j        -> block - 1 + j          (1 <= j <= m-1)
  //   upper mask t, t > 0  -> block + m - 2 + t
  //   upper mask 0         -> top of the chain part
  auto upper = [&](int t) {
    if (t == 0) return block - 1 + (m - 1);  // equals lower full mask when m = 1
    return block + m - 2 + t;
  };
  // Mirror involution: lower mask s and upper mask full^s swap, and the
  // chain reverses (level j, counting the lower full mask as level 0 and the
  // upper zero mask as level m-1, maps to level m-1-j).
  std::vector<int> neg(lat.size());
  for (int s = 0; s < block; ++s) neg[s] = upper(full ^ s);
  for (int t = 0; t < block; ++t) neg[upper(t)] = full ^ t;
  for (int j = 1; j <= m - 2; ++j) neg[block - 1 + j] = block - 1 + (m - 1 - j);
  return Algebra::from_parts(std::move(lat), std::move(neg));
}

Bitset subuniverse_closure(const Algebra& a, Bitset seed) {
  seed.set(a.bottom());
  seed.set(a.top());
  std::vector<int> work = seed.to_indices();
  std::vector<int> members = work;
  auto add = [&](int e) {
    if (!seed.test(e)) {
      seed.set(e);
      work.push_back(e);
      members.push_back(e);
    }
  };
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    add(a.neg(x));
    add(a.star(x));
    for (std::size_t k = 0; k < members.size(); ++k) {
      int y = members[k];
      add(a.meet(x, y));
      add(a.join(x, y));
    }
  }
  return seed;
}

Subalgebra subalgebra_generated(const Algebra& a, const std::vector<int>& generators) {
  Bitset seed(a.size());
  for (int g : generators) {
    if (g < 0 || g >= a.size())
      throw MalformedError("generator index out of range");
    seed.set(g);
  }
  Bitset closed = subuniverse_closure(a, seed);
  std::vector<int> embed = closed.to_indices();
  int n = static_cast<int>(embed.size());
  std::vector<int> rank(a.size(), -1);
  for (int k = 0; k < n; ++k) rank[embed[k]] = k;
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<int> neg(n), star(n);
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l)
      if (a.leq(embed[k], embed[l])) up[k].set(l);
    neg[k] = rank[a.neg(embed[k])];
    star[k] = rank[a.star(embed[k])];
    if (!a.names().empty()) names.push_back(a.names()[embed[k]]);
  }
  Subalgebra s{Algebra::from_parts(Lattice::from_upsets(std::move(up)), std::move(neg),
                                   std::move(star), std::move(names)),
               std::move(embed)};
  return s;
}

std::vector<Bitset> all_subuniverses(const Algebra& a) {
  std::set<Bitset> found;
  Bitset least = subuniverse_closure(a, Bitset(a.size()));
  found.insert(least);
  std::vector<Bitset> frontier{least};
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& s : frontier)
      for (int e = 0; e < a.size(); ++e) {
        if (s.test(e)) continue;
        Bitset t = s;
        t.set(e);
        Bitset c = subuniverse_closure(a, t);
        if (found.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

namespace {

// Greedy generating sequence: repeatedly adjoin the least element outside the
// current subuniverse.
std::vector<int> generating_sequence(const Algebra& a, Bitset& base) {
  base = subuniverse_closure(a, Bitset(a.size()));
  std::vector<int> gens;
  Bitset current = base;
  while (current.count() < a.size()) {
    int g = current.complement().first();
    gens.push_back(g);
    current.set(g);
    current = subuniverse_closure(a, current);
  }
  return gens;
}

struct HomSearch {
  const Algebra& a;
  const Algebra& b;
  std::vector<int> gens;
  std::vector<int> image_order;  // b's elements by increasing height
  std::vector<std::vector<int>> out;

  HomSearch(const Algebra& a_, const Algebra& b_) : a(a_), b(b_) {
    Bitset base(a.size());
    gens = generating_sequence(a, base);
    for (int e = 0; e < b.size(); ++e) image_order.push_back(e);
    std::stable_sort(image_order.begin(), image_order.end(), [&](int x, int y) {
      return b.downset(x).count() < b.downset(y).count();
    });
  }

  // Extends the partial map (defined exactly on `domain`) with g -> im and
  // closes under the operations; returns false on conflict.
  bool close(Bitset& domain, std::vector<int>& map, int g, int im) {
    auto define = [&](int x, int v, std::vector<int>& work) {
      if (domain.test(x)) return map[x] == v;
      domain.set(x);
      map[x] = v;
      work.push_back(x);
      return true;
    };
    std::vector<int> work;
    if (!define(g, im, work)) return false;
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      if (!define(a.neg(x), b.neg(map[x]), work)) return false;
      if (!define(a.star(x), b.star(map[x]), work)) return false;
      for (int y = domain.first(); y >= 0; y = domain.next(y + 1)) {
        if (!define(a.meet(x, y), b.meet(map[x], map[y]), work)) return false;
        if (!define(a.join(x, y), b.join(map[x], map[y]), work)) return false;
      }
    }
    return true;
  }

  void search(std::size_t k, const Bitset& domain, const std::vector<int>& map) {
    if (k == gens.size()) {
      out.push_back(map);
      return;
    }
    int g = gens[k];
    if (domain.test(g)) {  // forced by earlier closures
      search(k + 1, domain, map);
      return;
    }
    for (int im : image_order) {
      Bitset d2 = domain;
      std::vector<int> m2 = map;
      if (close(d2, m2, g, im)) search(k + 1, d2, m2);
    }
  }

  std::vector<std::vector<int>> run() {
    Bitset domain(a.size());
    std::vector<int> map(a.size(), -1);
    if (!close(domain, map, a.bottom(), b.bottom())) return {};
    Bitset d2 = domain;
    std::vector<int> m2 = map;
    if (!close(d2, m2, a.top(), b.top())) return {};
    search(0, d2, m2);
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

std::vector<std::vector<int>> homomorphisms(const Algebra& a, const Algebra& b) {
  return HomSearch(a, b).run();
}

std::vector<std::vector<int>> surjective_homomorphisms(const Algebra& a, const Algebra& b) {
  std::vector<std::vector<int>> out;
  for (auto& h : homomorphisms(a, b)) {
    std::set<int> image(h.begin(), h.end());
    if (static_cast<int>(image.size()) == b.size()) out.push_back(h);
  }
  return out;
}

std::vector<std::vector<int>> automorphisms(const Algebra& a) {
  return surjective_homomorphisms(a, a);
}

Algebra quotient_algebra(const Algebra& a, const Congruence& theta) {
  if (static_cast<int>(theta.block_of.size()) != a.size())
    throw MalformedError("congruence does not match the algebra");
  int n = theta.num_blocks();
  std::vector<int> rep(n, -1);
  for (int e = 0; e < a.size(); ++e)
    if (rep[theta.block_of[e]] < 0) rep[theta.block_of[e]] = e;
  std::vector<Bitset> up(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // [x] <= [y] iff x ∧ y ≡ x
      int mxy = a.meet(rep[x], rep[y]);
      if (theta.block_of[mxy] == x) up[x].set(y);
    }
  std::vector<int> neg(n), star(n);
  for (int x = 0; x < n; ++x) {
    neg[x] = theta.block_of[a.neg(rep[x])];
    star[x] = theta.block_of[a.star(rep[x])];
  }
  return Algebra::from_parts(Lattice::from_upsets(std::move(up)), std::move(neg),
                             std::move(star));
}

bool si_leq(const SiDescriptor& d1, const SiDescriptor& d2) {
  if (!d1.valid() || !d2.valid()) throw DomainError("invalid descriptor");
  return d1.i <= d2.i && d1.m <= d2.m;
}

bool si_membership_oracle(const SiDescriptor& d1, const SiDescriptor& d2) {
  if (!d1.valid() || !d2.valid()) throw DomainError("invalid descriptor");
  if (d2.i > 3)
    throw CapError("membership oracle supports d2.i <= 3");
  Algebra target = build_si(d1);
  Algebra big = build_si(d2);
  for (const Bitset& universe : all_subuniverses(big)) {
    Subalgebra sub = subalgebra_generated(big, universe.to_indices());
    if (sub.algebra.size() < target.size()) continue;
    for (const Congruence& theta : congruence_lattice(sub.algebra)) {
      if (theta.num_blocks() != target.size()) continue;
      if (is_isomorphic(quotient_algebra(sub.algebra, theta), target)) return true;
    }
  }
  return false;
}

bool is_weakly_projective(const Algebra& a) {
  if (!variety_membership(a).bpk0)
    throw DomainError("weak projectivity is defined here for members of BPK0");
  return fixed_points(a).empty();
}

}  // namespace pmalg

#include "pmalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace pmalg {

namespace {

std::string pair_str(int a, int b) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ")";
  return os.str();
}

}  // namespace

// Tolerant lattice construction: computes order closure and tables, recording
// axiom violations instead of throwing (structural problems still throw).
struct LatticeBuilder {
  int n = 0;
  std::vector<Bitset> up, down;
  std::vector<int> meet, join;  // -1 where missing
  int bottom = -1, top = -1;
  std::vector<Violation> violations;
  bool lattice_ok = true;  // meets, joins and bounds all exist

  explicit LatticeBuilder(int n_, const std::vector<std::pair<int, int>>& covers)
      : n(n_) {
    if (n <= 0) throw MalformedError("algebra must have at least one element");
    std::vector<std::vector<int>> above(n);
    std::vector<int> indeg(n, 0);
    for (auto [lo, hi] : covers) {
      if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw MalformedError("cover pair " + pair_str(lo, hi) +
                             " references an element out of range");
      if (lo == hi)
        throw MalformedError("cover pair " + pair_str(lo, hi) + " is reflexive");
      above[lo].push_back(hi);
      ++indeg[hi];
    }

    // Kahn's algorithm: a leftover node means the cover relation has a cycle.
    std::vector<int> topo;
    std::queue<int> q;
    for (int i = 0; i < n; ++i)
      if (indeg[i] == 0) q.push(i);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      topo.push_back(v);
      for (int w : above[v])
        if (--indeg[w] == 0) q.push(w);
    }
    if (static_cast<int>(topo.size()) != n)
      throw MalformedError("cover relation contains a cycle");

    up.assign(n, Bitset(n));
    down.assign(n, Bitset(n));
    for (int idx = n - 1; idx >= 0; --idx) {
      int v = topo[idx];
      up[v].set(v);
      for (int w : above[v]) up[v] |= up[w];
    }
    for (int a = 0; a < n; ++a)
      for (int b = up[a].first(); b >= 0; b = up[a].next(b + 1)) down[b].set(a);

    build_tables();
  }

  explicit LatticeBuilder(std::vector<Bitset> up_)
      : n(up_.empty() ? throw MalformedError("algebra must have at least one element")
                      : up_[0].size()),
        up(std::move(up_)) {
    down.assign(n, Bitset(n));
    for (int a = 0; a < n; ++a) {
      if (!up[a].test(a)) throw MalformedError("order relation is not reflexive");
      for (int b = up[a].first(); b >= 0; b = up[a].next(b + 1)) {
        if (b != a && up[b].test(a))
          throw MalformedError("order relation is not antisymmetric");
        down[b].set(a);
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = up[a].first(); b >= 0; b = up[a].next(b + 1))
        if (!up[b].subset_of(up[a]))
          throw MalformedError("order relation is not transitive");
    build_tables();
  }

  void build_tables() {
    meet.assign(static_cast<std::size_t>(n) * n, -1);
    join.assign(static_cast<std::size_t>(n) * n, -1);
    bool meet_missing = false, join_missing = false;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        Bitset ub = up[a] & up[b];
        int j = -1;
        for (int c = ub.first(); c >= 0; c = ub.next(c + 1))
          if (ub.subset_of(up[c])) {
            j = c;
            break;
          }
        join[a * n + b] = j;
        if (j < 0 && !join_missing) {
          join_missing = true;
          violations.push_back({"join_exists", {a, b}});
        }
        Bitset lb = down[a] & down[b];
        int m = -1;
        for (int c = lb.first(); c >= 0; c = lb.next(c + 1))
          if (lb.subset_of(down[c])) {
            m = c;
            break;
          }
        meet[a * n + b] = m;
        if (m < 0 && !meet_missing) {
          meet_missing = true;
          violations.push_back({"meet_exists", {a, b}});
        }
      }
    }
    for (int c = 0; c < n; ++c) {
      if (up[c].count() == n) bottom = c;
      if (down[c].count() == n) top = c;
    }
    if (bottom < 0) violations.push_back({"bottom_exists", {}});
    if (top < 0) violations.push_back({"top_exists", {}});
    lattice_ok = violations.empty();
  }

  // Distributivity; one identity direction suffices in a lattice.
  void check_distributivity() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = meet[a * n + join[b * n + c]];
          int rhs = join[meet[a * n + b] * n + meet[a * n + c]];
          if (lhs != rhs) {
            violations.push_back({"distributivity", {a, b, c}});
            return;
          }
        }
  }

  Lattice finish() const {
    if (!lattice_ok)
      throw DomainError("not a bounded lattice: " + violations.front().axiom);
    Lattice l;
    l.n_ = n;
    l.up_ = up;
    l.down_ = down;
    l.meet_ = meet;
    l.join_ = join;
    l.bottom_ = bottom;
    l.top_ = top;
    return l;
  }
};

Lattice Lattice::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  return LatticeBuilder(n, covers).finish();
}

Lattice Lattice::from_upsets(std::vector<Bitset> up) {
  return LatticeBuilder(std::move(up)).finish();
}

bool Lattice::is_distributive() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

std::vector<std::pair<int, int>> Lattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = up_[a].first(); b >= 0; b = up_[a].next(b + 1)) {
      if (b == a) continue;
      bool covered = true;
      for (int c = up_[a].first(); c >= 0 && covered; c = up_[a].next(c + 1))
        if (c != a && c != b && up_[c].test(b)) covered = false;
      if (covered) out.push_back({a, b});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Lattice::join_irreducibles() const {
  std::vector<int> out;
  auto covers = cover_pairs();
  std::vector<int> lower_cover_count(n_, 0);
  for (auto [lo, hi] : covers) ++lower_cover_count[hi];
  for (int a = 0; a < n_; ++a)
    if (lower_cover_count[a] == 1) out.push_back(a);
  return out;
}

namespace {

void check_structure(const RawAlgebra& raw) {
  int n = raw.elements;
  if (n <= 0) throw MalformedError("algebra must have at least one element");
  auto check_map = [n](const std::vector<int>& m, const char* what) {
    if (static_cast<int>(m.size()) != n)
      throw MalformedError(std::string(what) + " must list exactly one image per element");
    for (int v : m)
      if (v < 0 || v >= n)
        throw MalformedError(std::string(what) + " references an element out of range");
  };
  check_map(raw.neg, "neg");
  if (raw.star) check_map(*raw.star, "star");
  if (!raw.names.empty() && static_cast<int>(raw.names.size()) != n)
    throw MalformedError("names must be empty or list one label per element");
}

// Axiom checks shared by validate() and Algebra construction.  Assumes the
// builder's lattice tables are complete (lattice_ok).
void check_operations(const LatticeBuilder& B, const std::vector<int>& neg,
                      const std::optional<std::vector<int>>& star,
                      std::vector<Violation>& out) {
  int n = B.n;
  for (int a = 0; a < n; ++a)
    if (neg[neg[a]] != a) {
      out.push_back({"neg_involution", {a}});
      break;
    }
  for (int a = 0; a < n && B.lattice_ok; ++a) {
    bool done = false;
    for (int b = 0; b < n; ++b)
      if (neg[B.meet[a * n + b]] != B.join[neg[a] * n + neg[b]]) {
        out.push_back({"neg_de_morgan", {a, b}});
        done = true;
        break;
      }
    if (done) break;
  }
  if (B.bottom >= 0 && B.top >= 0 && neg[B.bottom] != B.top)
    out.push_back({"neg_zero_one", {B.bottom}});
  if (!B.lattice_ok) return;

  if (star) {
    const auto& s = *star;
    for (int a = 0; a < n; ++a) {
      bool done = false;
      for (int b = 0; b < n; ++b) {
        bool ann = B.meet[a * n + b] == B.bottom;
        bool below = B.down[s[a]].test(b);
        if (ann != below) {
          out.push_back({"pseudocomplement_law", {a, b}});
          done = true;
          break;
        }
      }
      if (done) break;
    }
  } else {
    for (int a = 0; a < n; ++a) {
      Bitset ann(n);
      for (int b = 0; b < n; ++b)
        if (B.meet[a * n + b] == B.bottom) ann.set(b);
      bool has_max = false;
      for (int c = ann.first(); c >= 0; c = ann.next(c + 1))
        if (ann.subset_of(B.down[c])) {
          has_max = true;
          break;
        }
      if (!has_max) {
        out.push_back({"pseudocomplement_exists", {a}});
        break;
      }
    }
  }
}

}  // namespace

ValidationReport validate(const RawAlgebra& raw, int element_cap) {
  if (raw.elements > element_cap)
    throw CapError("algebra has " + std::to_string(raw.elements) +
                   " elements, above the cap of " + std::to_string(element_cap));
  check_structure(raw);
  LatticeBuilder B(raw.elements, raw.covers);
  if (B.lattice_ok) B.check_distributivity();
  ValidationReport report;
  report.violations = B.violations;
  check_operations(B, raw.neg, raw.star, report.violations);
  report.passed = report.violations.empty();
  return report;
}

std::vector<int> compute_star(const Lattice& lat) {
  int n = lat.size();
  std::vector<int> star(n);
  for (int a = 0; a < n; ++a) {
    Bitset ann(n);
    for (int b = 0; b < n; ++b)
      if (lat.meet(a, b) == lat.bottom()) ann.set(b);
    int mx = -1;
    for (int c = ann.first(); c >= 0; c = ann.next(c + 1))
      if (ann.subset_of(lat.downset(c))) {
        mx = c;
        break;
      }
    if (mx < 0)
      throw DomainError("element " + std::to_string(a) +
                        " has no pseudocomplement");
    star[a] = mx;
  }
  return star;
}

Algebra Algebra::from_raw(const RawAlgebra& raw, int element_cap) {
  ValidationReport report = validate(raw, element_cap);
  if (!report.passed) {
    const auto& v = report.violations.front();
    std::ostringstream os;
    os << "not a pseudocomplemented De Morgan algebra: axiom " << v.axiom
       << " fails";
    if (!v.witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        os << (i ? ", " : "") << v.witness[i];
      os << ")";
    }
    throw DomainError(os.str());
  }
  LatticeBuilder B(raw.elements, raw.covers);
  Algebra a;
  static_cast<Lattice&>(a) = B.finish();
  a.neg_ = raw.neg;
  a.star_ = raw.star ? *raw.star : compute_star(a);
  a.names_ = raw.names;
  return a;
}

Algebra Algebra::from_parts(Lattice lattice, std::vector<int> neg,
                            std::optional<std::vector<int>> star,
                            std::vector<std::string> names) {
  int n = lattice.size();
  if (static_cast<int>(neg.size()) != n)
    throw MalformedError("neg must list exactly one image per element");
  RawAlgebra raw;
  raw.elements = n;
  raw.covers = lattice.cover_pairs();
  raw.neg = std::move(neg);
  raw.star = std::move(star);
  raw.names = std::move(names);
  return from_raw(raw, std::max(n, kDefaultElementCap));
}

std::string Algebra::name(int a) const {
  if (!names_.empty()) return names_[a];
  return std::to_string(a);
}

RawAlgebra Algebra::to_raw() const {
  RawAlgebra raw;
  raw.elements = size();
  raw.covers = cover_pairs();
  raw.neg = neg_;
  raw.star = star_;
  raw.names = names_;
  return raw;
}

bool is_kleene(const Algebra& a) {
  int n = a.size();
  for (int x = 0; x < n; ++x) {
    int lo = a.meet(x, a.neg(x));
    for (int y = 0; y < n; ++y)
      if (!a.leq(lo, a.join(y, a.neg(y)))) return false;
  }
  return true;
}

std::vector<int> dense_elements(const Algebra& a) {
  std::vector<int> out;
  for (int x = 0; x < a.size(); ++x)
    if (a.star(x) == a.bottom()) out.push_back(x);
  return out;
}

std::optional<int> least_dense(const Algebra& a) {
  auto dense = dense_elements(a);
  for (int d : dense) {
    bool least = true;
    for (int e : dense)
      if (!a.leq(d, e)) {
        least = false;
        break;
      }
    if (least) return d;
  }
  return std::nullopt;
}

std::vector<int> fixed_points(const Algebra& a) {
  std::vector<int> out;
  for (int x = 0; x < a.size(); ++x)
    if (a.neg(x) == x) out.push_back(x);
  return out;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = a.upset(i).first(); k >= 0; k = a.upset(i).next(k + 1))
        for (int l = b.upset(j).first(); l >= 0; l = b.upset(j).next(l + 1))
          up[i * nb + j].set(k * nb + l);
  std::vector<int> neg(n), star(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      neg[i * nb + j] = a.neg(i) * nb + b.neg(j);
      star[i * nb + j] = a.star(i) * nb + b.star(j);
    }
  return Algebra::from_parts(Lattice::from_upsets(std::move(up)), std::move(neg),
                             std::move(star));
}

namespace {

// Iterated invariant refinement shared by both algebras so class ids match.
// Signature of an element: previous class of itself, of its image under neg
// and star, and the sorted class multisets of its lower and upper covers.
std::vector<std::vector<int>> refine_classes(const std::vector<const Algebra*>& as) {
  std::vector<std::vector<int>> cls(as.size());
  {
    std::map<std::pair<int, int>, int> ids;
    for (std::size_t k = 0; k < as.size(); ++k) {
      const Algebra& a = *as[k];
      cls[k].resize(a.size());
      for (int x = 0; x < a.size(); ++x) {
        auto key = std::make_pair(a.downset(x).count(), a.upset(x).count());
        auto [it, _] = ids.try_emplace(key, static_cast<int>(ids.size()));
        cls[k][x] = it->second;
      }
    }
  }
  std::vector<std::vector<std::vector<int>>> covers_lo(as.size()), covers_hi(as.size());
  for (std::size_t k = 0; k < as.size(); ++k) {
    covers_lo[k].resize(as[k]->size());
    covers_hi[k].resize(as[k]->size());
    for (auto [lo, hi] : as[k]->cover_pairs()) {
      covers_hi[k][lo].push_back(hi);
      covers_lo[k][hi].push_back(lo);
    }
  }
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> next(as.size());
    for (std::size_t k = 0; k < as.size(); ++k) {
      const Algebra& a = *as[k];
      next[k].resize(a.size());
      for (int x = 0; x < a.size(); ++x) {
        std::vector<int> sig{cls[k][x], cls[k][a.neg(x)], cls[k][a.star(x)], -1};
        std::vector<int> lo, hi;
        for (int y : covers_lo[k][x]) lo.push_back(cls[k][y]);
        for (int y : covers_hi[k][x]) hi.push_back(cls[k][y]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        sig.insert(sig.end(), lo.begin(), lo.end());
        sig.push_back(-2);
        sig.insert(sig.end(), hi.begin(), hi.end());
        auto [it, _] = ids.try_emplace(sig, static_cast<int>(ids.size()));
        next[k][x] = it->second;
      }
    }
    bool changed = false;
    for (std::size_t k = 0; k < as.size() && !changed; ++k)
      changed = next[k] != cls[k];
    cls = std::move(next);
    if (!changed) break;
  }
  return cls;
}

bool extend_iso(const Algebra& a, const Algebra& b, const std::vector<int>& order,
                std::size_t pos, std::vector<int>& map, std::vector<char>& used,
                const std::vector<int>& cls_a, const std::vector<int>& cls_b) {
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y = 0; y < b.size(); ++y) {
    if (used[y] || cls_b[y] != cls_a[x]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pos && ok; ++i) {
      int u = order[i], v = map[u];
      if (a.leq(x, u) != b.leq(y, v) || a.leq(u, x) != b.leq(v, y)) ok = false;
      if (ok && a.neg(u) == x && b.neg(v) != y) ok = false;
      if (ok && a.neg(x) == u && b.neg(y) != v) ok = false;
      if (ok && a.star(u) == x && b.star(v) != y) ok = false;
      if (ok && a.star(x) == u && b.star(y) != v) ok = false;
    }
    if (a.neg(x) == x && b.neg(y) != y) ok = false;
    if (a.star(x) == x && b.star(y) != y) ok = false;
    if (!ok) continue;
    map[x] = y;
    used[y] = 1;
    if (extend_iso(a, b, order, pos + 1, map, used, cls_a, cls_b)) return true;
    used[y] = 0;
    map[x] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto cls = refine_classes({&a, &b});
  const auto& cls_a = cls[0];
  const auto& cls_b = cls[1];
  std::map<int, std::pair<int, int>> counts;  // class -> (count in a, in b)
  for (int x : cls_a) ++counts[x].first;
  for (int y : cls_b) ++counts[y].second;
  for (auto& [_, c] : counts)
    if (c.first != c.second) return std::nullopt;

  // Assign small classes first to fail fast.
  std::vector<int> order(a.size());
  for (int i = 0; i < a.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    auto cx = counts[cls_a[x]].first, cy = counts[cls_a[y]].first;
    if (cx != cy) return cx < cy;
    return x < y;
  });
  std::vector<int> map(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  if (extend_iso(a, b, order, 0, map, used, cls_a, cls_b)) return map;
  return std::nullopt;
}

bool is_isomorphic(const Algebra& a, const Algebra& b) {
  return isomorphism(a, b).has_value();
}

}  // namespace pmalg

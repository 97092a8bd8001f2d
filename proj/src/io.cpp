#include "pmalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace pmalg {

namespace {

using nlohmann::ordered_json;

int require_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw MalformedError(std::string("algebra document: ") + what + " must be an integer");
  return j.get<int>();
}

std::vector<int> require_int_array(const ordered_json& j, const char* what) {
  if (!j.is_array())
    throw MalformedError(std::string("algebra document: ") + what + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(require_int(e, what));
  return out;
}

}  // namespace

RawAlgebra parse_algebra_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedError(std::string("algebra document: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedError("algebra document: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "elements" && key != "covers" && key != "neg" && key != "star" &&
        key != "names")
      throw MalformedError("algebra document: unknown field \"" + key + "\"");
  }
  if (!j.contains("elements") || !j.contains("covers") || !j.contains("neg"))
    throw MalformedError("algebra document: fields elements, covers and neg are required");

  RawAlgebra raw;
  raw.elements = require_int(j["elements"], "elements");
  if (!j["covers"].is_array())
    throw MalformedError("algebra document: covers must be an array of pairs");
  for (const auto& pair : j["covers"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw MalformedError("algebra document: each cover must be a [lower, upper] pair");
    raw.covers.emplace_back(require_int(pair[0], "cover"), require_int(pair[1], "cover"));
  }
  raw.neg = require_int_array(j["neg"], "neg");
  if (j.contains("star")) raw.star = require_int_array(j["star"], "star");
  if (j.contains("names")) {
    if (!j["names"].is_array())
      throw MalformedError("algebra document: names must be an array of strings");
    for (const auto& s : j["names"]) {
      if (!s.is_string())
        throw MalformedError("algebra document: names must be an array of strings");
      raw.names.push_back(s.get<std::string>());
    }
  }
  return raw;
}

std::string algebra_document(const RawAlgebra& raw) {
  ordered_json j;
  j["elements"] = raw.elements;
  ordered_json covers = ordered_json::array();
  for (auto [lo, hi] : raw.covers) covers.push_back(ordered_json::array({lo, hi}));
  j["covers"] = covers;
  j["neg"] = raw.neg;
  if (raw.star) j["star"] = *raw.star;
  if (!raw.names.empty()) j["names"] = raw.names;
  return j.dump(2) + "\n";
}

RawAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_document(buf.str());
}

void write_algebra_file(const std::string& path, const RawAlgebra& raw) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file " + path);
  out << algebra_document(raw);
  if (!out) throw Error("cannot write file " + path);
}

Algebra load_algebra(const std::string& path, int element_cap) {
  return Algebra::from_raw(read_algebra_file(path), element_cap);
}

std::vector<int> canonical_relabeling(const Algebra& a) {
  int n = a.size();
  std::vector<int> height(n, 0);
  std::vector<int> by_downset(n);
  for (int e = 0; e < n; ++e) by_downset[e] = e;
  std::stable_sort(by_downset.begin(), by_downset.end(), [&](int x, int y) {
    return a.downset(x).count() < a.downset(y).count();
  });
  for (int x : by_downset)
    for (int y = a.downset(x).first(); y >= 0; y = a.downset(x).next(y + 1))
      if (y != x) height[x] = std::max(height[x], height[y] + 1);
  int max_h = 0;
  for (int e = 0; e < n; ++e) max_h = std::max(max_h, height[e]);

  std::vector<int> new_index(n, -1);
  int next = 0;
  for (int h = 0; h <= max_h; ++h) {
    std::vector<std::pair<Bitset, int>> level;
    for (int e = 0; e < n; ++e) {
      if (height[e] != h) continue;
      Bitset key(n);
      for (int y = a.downset(e).first(); y >= 0; y = a.downset(e).next(y + 1))
        if (y != e) key.set(new_index[y]);
      level.emplace_back(std::move(key), e);
    }
    std::stable_sort(level.begin(), level.end(),
                     [](const auto& p, const auto& q) { return p.first < q.first; });
    for (auto& [key, e] : level) new_index[e] = next++;
  }
  return new_index;
}

Algebra canonicalize(const Algebra& a) {
  std::vector<int> to_new = canonical_relabeling(a);
  int n = a.size();
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<int> neg(n), star(n);
  std::vector<std::string> names(a.names().empty() ? 0 : n);
  for (int e = 0; e < n; ++e) {
    for (int f = a.upset(e).first(); f >= 0; f = a.upset(e).next(f + 1))
      up[to_new[e]].set(to_new[f]);
    neg[to_new[e]] = to_new[a.neg(e)];
    star[to_new[e]] = to_new[a.star(e)];
    if (!a.names().empty()) names[to_new[e]] = a.names()[e];
  }
  return Algebra::from_parts(Lattice::from_upsets(std::move(up)), std::move(neg),
                             std::move(star), std::move(names));
}

std::string space_dot(const DualSpace& x) {
  std::ostringstream out;
  out << "digraph space {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int p = 0; p < x.points; ++p) out << "  P" << p << ";\n";
  // Hasse edges: p -> q when q covers p.
  for (int p = 0; p < x.points; ++p)
    for (int q = 0; q < x.points; ++q) {
      if (p == q || !x.leq(p, q)) continue;
      bool cover = true;
      for (int r = 0; r < x.points && cover; ++r)
        if (r != p && r != q && x.leq(p, r) && x.leq(r, q)) cover = false;
      if (cover) out << "  P" << p << " -> P" << q << ";\n";
    }
  for (int p = 0; p < x.points; ++p)
    if (x.phi[p] >= p)
      out << "  P" << p << " -> P" << x.phi[p]
          << " [style=dashed, dir=none, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string congruence_lattice_dot(const std::vector<Congruence>& lattice) {
  std::ostringstream out;
  int n = static_cast<int>(lattice.size());
  out << "digraph congruences {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < n; ++i)
    out << "  C" << i << " [label=\"C" << i << " (" << lattice[i].num_blocks()
        << " blocks)\"];\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !lattice[i].refines(lattice[j])) continue;
      if (lattice[j].refines(lattice[i])) continue;  // equal partitions
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) {
        if (k == i || k == j) continue;
        if (lattice[i].refines(lattice[k]) && lattice[k].refines(lattice[j]) &&
            !lattice[k].refines(lattice[i]) && !lattice[j].refines(lattice[k]))
          cover = false;
      }
      if (cover) out << "  C" << i << " -> C" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace pmalg

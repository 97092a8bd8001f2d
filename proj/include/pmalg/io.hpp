#pragma once

#include <string>
#include <vector>

#include "pmalg/algebra.hpp"
#include "pmalg/congruence.hpp"
#include "pmalg/duality.hpp"

namespace pmalg {

// Algebra document format (JSON): object with fields
//   "elements": integer count
//   "covers":   list of [lower, upper] index pairs
//   "neg":      array of indices, one per element
//   "star":     optional array of indices
//   "names":    optional array of strings, one per element
// Throws MalformedError on structural junk (wrong types, missing fields).
RawAlgebra parse_algebra_document(const std::string& text);
std::string algebra_document(const RawAlgebra& raw);

// File wrappers.  Unreadable/unwritable paths throw Error with a
// "cannot read file" / "cannot write file" message.
RawAlgebra read_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const RawAlgebra& raw);
Algebra load_algebra(const std::string& path, int element_cap = kDefaultElementCap);

// Canonical relabeling: elements are renumbered level by level (by order
// height), within a level by the bitmask of already-renumbered strictly lower
// elements, ties keeping their relative order.  Deterministic and idempotent,
// so exporting an export reproduces the bytes.
std::vector<int> canonical_relabeling(const Algebra& a);
Algebra canonicalize(const Algebra& a);

// DOT rendering of a space: Hasse edges drawn bottom-to-top plus dashed
// undirected phi edges (a dashed self-loop marks a phi-fixed point).  Node
// names P0..Pk follow the canonical point order.
std::string space_dot(const DualSpace& x);

// DOT rendering of the refinement order on a congruence lattice (finest at
// the bottom); node Ci is the i-th congruence of the given list, labeled
// with its block count.
std::string congruence_lattice_dot(const std::vector<Congruence>& lattice);

}  // namespace pmalg

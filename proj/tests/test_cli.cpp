// Tests for the algebra file format, canonical relabeling, DOT rendering,
// and the command line driver.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pmalg/algebra.hpp"
#include "pmalg/cli.hpp"
#include "pmalg/congruence.hpp"
#include "pmalg/constructions.hpp"
#include "pmalg/duality.hpp"
#include "pmalg/errors.hpp"
#include "pmalg/io.hpp"
#include "test_helpers.hpp"

using namespace pmalg;
using namespace pmalg::testing;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::filesystem::path& work_dir() {
  static const std::filesystem::path dir = [] {
    std::filesystem::path d =
        std::filesystem::temp_directory_path() / "pmalg_cli_tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file_of(const std::string& name, const RawAlgebra& raw) {
  std::string path = (work_dir() / name).string();
  write_algebra_file(path, raw);
  return path;
}

std::string chain4_file() {
  static const std::string p = file_of("chain4.alg", raw_chain4_named());
  return p;
}
std::string chain4_plain_file() {
  static const std::string p = file_of("chain4_plain.alg", raw_chain(4));
  return p;
}
std::string chain2_file() {
  static const std::string p = file_of("chain2.alg", raw_chain(2));
  return p;
}
std::string chain5_file() {
  static const std::string p = file_of("chain5.alg", raw_chain(5));
  return p;
}
std::string square_file() {
  static const std::string p = file_of("square.alg", boolean_square().to_raw());
  return p;
}
std::string b22_file() {
  static const std::string p = file_of("b22.alg", build_si({2, 2}).to_raw());
  return p;
}
std::string invalid_neg_file() {
  static const std::string p = [] {
    RawAlgebra raw = raw_chain(4);
    raw.neg = {0, 1, 2, 3};
    raw.star = std::vector<int>{3, 0, 0, 0};
    return file_of("invalid_neg.alg", raw);
  }();
  return p;
}
std::string bad_json_file() {
  static const std::string p = [] {
    std::string path = (work_dir() / "bad_json.alg").string();
    std::ofstream f(path);
    f << "{nonsense";
    return path;
  }();
  return p;
}

void check_malformed(const std::string& text, const std::string& message) {
  CAPTURE(text);
  try {
    parse_algebra_document(text);
    FAIL("expected MalformedError for: ", text);
  } catch (const MalformedError& e) {
    CHECK(std::string(e.what()) == message);
  }
}

const char* kSpaceDotChain4 =
    "digraph space {\n"
    "  rankdir=BT;\n"
    "  node [shape=circle];\n"
    "  P0;\n"
    "  P1;\n"
    "  P2;\n"
    "  P0 -> P1;\n"
    "  P1 -> P2;\n"
    "  P0 -> P2 [style=dashed, dir=none, constraint=false];\n"
    "  P1 -> P1 [style=dashed, dir=none, constraint=false];\n"
    "}\n";

const char* kCongruenceDotChain4 =
    "digraph congruences {\n"
    "  rankdir=BT;\n"
    "  node [shape=box];\n"
    "  C0 [label=\"C0 (4 blocks)\"];\n"
    "  C1 [label=\"C1 (3 blocks)\"];\n"
    "  C2 [label=\"C2 (1 blocks)\"];\n"
    "  C0 -> C1;\n"
    "  C1 -> C2;\n"
    "}\n";

}  // namespace

TEST_CASE("algebra documents round-trip through parse and print") {
  for (const RawAlgebra& raw :
       {raw_chain4_named(), raw_chain(5), raw_demorgan_diamond(),
        build_si({2, 2}).to_raw()}) {
    std::string doc = algebra_document(raw);
    RawAlgebra back = parse_algebra_document(doc);
    CHECK(back.elements == raw.elements);
    CHECK(back.covers == raw.covers);
    CHECK(back.neg == raw.neg);
    CHECK(back.star == raw.star);
    CHECK(back.names == raw.names);
    // Printing is idempotent on parsed bytes.
    CHECK(algebra_document(back) == doc);
  }
}

TEST_CASE("algebra documents reject malformed input with precise messages") {
  check_malformed("[1, 2]", "algebra document: top level must be an object");
  check_malformed("{\"elements\": 2, \"covers\": []}",
                  "algebra document: fields elements, covers and neg are required");
  check_malformed(
      "{\"elements\": 2, \"covers\": [], \"neg\": [1, 0], \"extra\": 1}",
      "algebra document: unknown field \"extra\"");
  check_malformed(
      "{\"elements\": \"two\", \"covers\": [], \"neg\": [1, 0]}",
      "algebra document: elements must be an integer");
  check_malformed(
      "{\"elements\": 2, \"covers\": [[0]], \"neg\": [1, 0]}",
      "algebra document: each cover must be a [lower, upper] pair");
  check_malformed(
      "{\"elements\": 2, \"covers\": [], \"neg\": 3}",
      "algebra document: neg must be an array");
  check_malformed(
      "{\"elements\": 2, \"covers\": [], \"neg\": [1, 0], \"names\": [0]}",
      "algebra document: names must be an array of strings");
  try {
    parse_algebra_document("{nonsense");
    FAIL("expected MalformedError");
  } catch (const MalformedError& e) {
    CHECK(std::string(e.what()).rfind("algebra document: not valid JSON:", 0) == 0);
  }
}

TEST_CASE("file io reports unreadable and unwritable paths") {
  std::string missing = (work_dir() / "missing.alg").string();
  CHECK_THROWS_WITH_AS(read_algebra_file(missing),
                       ("cannot read file " + missing).c_str(), Error);
  std::string unwritable = (work_dir() / "no_such_subdir" / "x.alg").string();
  CHECK_THROWS_WITH_AS(write_algebra_file(unwritable, raw_chain(2)),
                       ("cannot write file " + unwritable).c_str(), Error);
}

TEST_CASE("canonical relabeling is deterministic and order-respecting") {
  // A chain already lists elements bottom-up, so nothing moves.
  CHECK(canonical_relabeling(chain_algebra(4)) == std::vector<int>{0, 1, 2, 3});

  // The reversed chain is relabeled to the same bytes as the straight one.
  RawAlgebra reversed;
  reversed.elements = 4;
  reversed.covers = {{3, 2}, {2, 1}, {1, 0}};
  reversed.neg = {3, 2, 1, 0};
  Algebra canon_rev = canonicalize(Algebra::from_raw(reversed));
  Algebra canon_straight = canonicalize(chain_algebra(4));
  CHECK(algebra_document(canon_rev.to_raw()) ==
        algebra_document(canon_straight.to_raw()));

  // A relabeled copy of a seven-element algebra canonicalizes identically.
  Algebra b2 = build_si({2, 1});
  RawAlgebra shuffled_raw = b2.to_raw();
  std::vector<int> perm = {6, 5, 4, 3, 2, 1, 0};  // new index of old element
  RawAlgebra permuted;
  permuted.elements = 7;
  for (auto [lo, hi] : shuffled_raw.covers)
    permuted.covers.push_back({perm[lo], perm[hi]});
  std::sort(permuted.covers.begin(), permuted.covers.end());
  permuted.neg.assign(7, 0);
  permuted.star = std::vector<int>(7, 0);
  for (int e = 0; e < 7; ++e) {
    permuted.neg[perm[e]] = perm[b2.neg(e)];
    (*permuted.star)[perm[e]] = perm[b2.star(e)];
  }
  Algebra canon_perm = canonicalize(Algebra::from_raw(permuted));
  CHECK(algebra_document(canon_perm.to_raw()) ==
        algebra_document(canonicalize(b2).to_raw()));

  // Canonicalizing is idempotent and preserves the isomorphism type.
  for (const Algebra& a : full_corpus()) {
    Algebra c = canonicalize(a);
    CHECK(is_isomorphic(a, c));
    CHECK(algebra_document(canonicalize(c).to_raw()) ==
          algebra_document(c.to_raw()));
  }
}

TEST_CASE("DOT rendering of spaces and congruence lattices") {
  CHECK(space_dot(dual_space(chain_algebra(4))) == kSpaceDotChain4);
  CHECK(congruence_lattice_dot(congruence_lattice(chain_algebra(4))) ==
        kCongruenceDotChain4);
}

TEST_CASE("cli validate") {
  CliResult r = run({"validate", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "valid pm-algebra: 4 elements\n");
  CHECK(r.err.empty());

  r = run({"--format", "structured-text", "validate", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "valid = true\nelements = 4\n");

  r = run({"validate", "--algebra", invalid_neg_file()});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "invalid: 2 violation(s)\n"
        "  neg_de_morgan at (0, 1)\n"
        "  neg_zero_one at (0)\n");

  r = run({"--format", "structured-text", "validate", "--algebra",
           invalid_neg_file()});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "valid = false\n"
        "elements = 4\n"
        "violation = neg_de_morgan 0 1\n"
        "violation = neg_zero_one 0\n");
}

TEST_CASE("cli reports io and format failures") {
  std::string missing = (work_dir() / "missing.alg").string();
  CliResult r = run({"validate", "--algebra", missing});
  CHECK(r.code == 1);
  CHECK(r.err == "error: cannot read file " + missing + "\n");

  r = run({"validate", "--algebra", bad_json_file()});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("malformed input: algebra document: not valid JSON:", 0) == 0);

  r = run({"--format", "dot", "validate", "--algebra", chain4_file()});
  CHECK(r.code == 2);
  CHECK(r.err == "usage error: --format dot applies only to dual and congruences\n");

  r = run({});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("usage error: ", 0) == 0);

  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("finite pseudocomplemented De Morgan algebra toolkit") !=
        std::string::npos);
}

TEST_CASE("cli dual") {
  CliResult r = run({"dual", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "dual space: 3 points\n"
        "P0 = {1}\n"
        "P1 = {b, 1}\n"
        "P2 = {a, b, 1}\n"
        "covers: P0 < P1; P1 < P2\n"
        "phi: P0 <-> P2; P1 <-> P1\n"
        "max: {P2}\n"
        "min: {P0}\n"
        "body: {P1}\n"
        "type: Type 2\n");

  r = run({"--format", "structured-text", "dual", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "points = 3\n"
        "P0 = 1\n"
        "P1 = b 1\n"
        "P2 = a b 1\n"
        "cover = P0 P1\n"
        "cover = P1 P2\n"
        "phi.P0 = P2\n"
        "phi.P1 = P1\n"
        "phi.P2 = P0\n"
        "max = P2\n"
        "min = P0\n"
        "body = P1\n"
        "type = Type 2\n");

  r = run({"--format", "dot", "dual", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == kSpaceDotChain4);

  // Singular form and empty body on the two-element algebra.
  r = run({"dual", "--algebra", chain2_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "dual space: 1 point\n"
        "P0 = {1}\n"
        "covers:\n"
        "phi: P0 <-> P0\n"
        "max: {P0}\n"
        "min: {P0}\n"
        "body: {}\n"
        "type: Type 1\n");
}

TEST_CASE("cli congruences") {
  CliResult r = run({"congruences", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "congruences: 3\n"
        "index  blocks  c-subset  partition\n"
        "C0  4  {P0, P1, P2}  {0} {a} {b} {1}\n"
        "C1  3  {P0, P2}  {0} {a, b} {1}\n"
        "C2  1  {}  {0, a, b, 1}\n");

  r = run({"--format", "structured-text", "congruences", "--algebra",
           chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "count = 3\n"
        "C0.blocks = 4\n"
        "C0.csubset = P0 P1 P2\n"
        "C0.partition = {0} {a} {b} {1}\n"
        "C1.blocks = 3\n"
        "C1.csubset = P0 P2\n"
        "C1.partition = {0} {a, b} {1}\n"
        "C2.blocks = 1\n"
        "C2.csubset =\n"
        "C2.partition = {0, a, b, 1}\n");

  r = run({"--format", "dot", "congruences", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == kCongruenceDotChain4);
}

TEST_CASE("cli classify") {
  CliResult r = run({"classify", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "subdirectly irreducible, not simple; Body size 1; space Type 2\n");

  r = run({"classify", "--algebra", chain2_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "simple, subdirectly irreducible; Body size 0; space Type 1\n"
        "note: two-element Boolean algebra\n");

  r = run({"classify", "--algebra", square_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "not subdirectly irreducible; Body size 0; space Type 1\n");

  r = run({"classify", "--algebra", b22_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "subdirectly irreducible, not simple; Body size 1; space Type 2\n");

  r = run({"--format", "structured-text", "classify", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "simple = false\n"
        "subdirectly_irreducible = true\n"
        "body_size = 1\n"
        "space_type = Type 2\n");
}

TEST_CASE("cli check") {
  CliResult r = run({"check", "G(x, y) ~ G(y, x)", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS: G(x, y) ~ G(y, x)\n");

  r = run({"check", "C(x)' <= C(x)", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "FAIL: C(x)' <= C(x)\nwitness: x = a\n");

  r = run({"check", "C(x)' <= C(x)", "--algebra", chain4_file(), "--expect",
           "pass"});
  CHECK(r.code == 1);

  r = run({"check", "C(x)' <= C(x)", "--algebra", chain4_file(), "--expect",
           "fail"});
  CHECK(r.code == 0);

  r = run({"check", "G(x, y) ~ G(y, x)", "--algebra", chain5_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "FAIL: G(x, y) ~ G(y, x)\nwitness: x = 1, y = 2\n");

  r = run({"--format", "structured-text", "check", "C(x)' <= C(x)", "--algebra",
           chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "holds = false\nwitness.x = a\n");

  r = run({"check", "x &", "--algebra", chain4_file()});
  CHECK(r.code == 2);
  CHECK(r.err == "usage error: expected a term (at byte 3)\n");
}

TEST_CASE("cli variety") {
  CliResult r = run({"variety", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "variety membership\n"
        "PK    yes\n"
        "PK0   no\n"
        "PK1   yes\n"
        "BPK   yes\n"
        "BPK1  yes\n"
        "BPK0  no\n");

  r = run({"--format", "structured-text", "variety", "--algebra", chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "pk = true\n"
        "pk0 = false\n"
        "pk1 = true\n"
        "bpk = true\n"
        "bpk1 = true\n"
        "bpk0 = false\n");
}

TEST_CASE("cli build") {
  CliResult r = run({"build", "--si", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == algebra_document(build_si({2, 1}).to_raw()));
  Algebra rebuilt = Algebra::from_raw(parse_algebra_document(r.out));
  CHECK(is_isomorphic(rebuilt, build_si({2, 1})));

  std::string out_path = (work_dir() / "built_b21.alg").string();
  r = run({"build", "--si", "2,1", "-o", out_path});
  CHECK(r.code == 0);
  CHECK(r.out == "wrote " + out_path + " (7 elements)\n");
  CHECK(is_isomorphic(load_algebra(out_path), build_si({2, 1})));

  r = run({"build", "--si", "2;1"});
  CHECK(r.code == 2);
  CHECK(r.err == "usage error: --si: expected i,m (for example 2,1)\n");

  r = run({"build", "--si", "0,1"});
  CHECK(r.code == 1);
  CHECK(r.err ==
        "domain error: invalid descriptor (0, 1); need (0,0), (1,0) or i >= 1, "
        "1 <= m <= 3\n");
}

TEST_CASE("cli product") {
  CliResult r = run({"product", chain2_file(), chain2_file()});
  CHECK(r.code == 0);
  Algebra prod = Algebra::from_raw(parse_algebra_document(r.out));
  CHECK(prod.size() == 4);
  CHECK(is_isomorphic(prod, boolean_square()));

  r = run({"--cap-elements", "3", "product", chain2_file(), chain2_file()});
  CHECK(r.code == 1);
  CHECK(r.err == "cap exceeded: product would exceed the element cap\n");

  r = run({"--cap-elements", "3", "validate", "--algebra", chain4_file()});
  CHECK(r.code == 1);
  CHECK(r.err == "cap exceeded: algebra has 4 elements, above the cap of 3\n");
}

TEST_CASE("cli element cap from the environment") {
  setenv("PMALG_CAP_ELEMENTS", "3", 1);
  CliResult r = run({"validate", "--algebra", chain4_file()});
  CHECK(r.code == 1);
  CHECK(r.err == "cap exceeded: algebra has 4 elements, above the cap of 3\n");

  // Unparseable or non-positive values fall back to the default.
  setenv("PMALG_CAP_ELEMENTS", "abc", 1);
  CHECK(run({"validate", "--algebra", chain4_file()}).code == 0);
  setenv("PMALG_CAP_ELEMENTS", "0", 1);
  CHECK(run({"validate", "--algebra", chain4_file()}).code == 0);
  setenv("PMALG_CAP_ELEMENTS", "-5", 1);
  CHECK(run({"validate", "--algebra", chain4_file()}).code == 0);
  unsetenv("PMALG_CAP_ELEMENTS");
  CHECK(run({"validate", "--algebra", chain4_file()}).code == 0);
}

TEST_CASE("cli homs") {
  CliResult r = run({"homs", chain2_file(), chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "homomorphisms: 1\n");

  r = run({"homs", chain2_file(), chain4_file(), "--list"});
  CHECK(r.code == 0);
  CHECK(r.out == "homomorphisms: 1\nh0: 0 3\n");

  r = run({"--format", "structured-text", "homs", chain2_file(), chain4_file(),
           "--list"});
  CHECK(r.code == 0);
  CHECK(r.out == "count = 1\nh0 = 0 3\n");

  r = run({"homs", "--auto", square_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "automorphisms: 2\n");

  r = run({"homs", "--surjective", chain5_file(), chain4_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "surjective homomorphisms: 0\n");

  r = run({"homs", "--surjective", "--auto", square_file()});
  CHECK(r.code == 2);
  CHECK(r.err == "usage error: --surjective and --auto are mutually exclusive\n");

  r = run({"homs", "--auto", square_file(), chain4_file()});
  CHECK(r.code == 2);
  CHECK(r.err == "usage error: homs needs one file with --auto\n");

  r = run({"homs", square_file()});
  CHECK(r.code == 2);
  CHECK(r.err == "usage error: homs needs exactly two files\n");
}

TEST_CASE("cli free-decomp") {
  CliResult r = run({"free-decomp", "2", "--oracle-verify", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "free algebra on 2 generators\n"
        "k   size        multiplicity\n"
        "0   2           4\n"
        "1   3           5\n"
        "2   7           20\n"
        "3   15          16\n"
        "4   31          4\n"
        "size: 1881888883163658260368449151229890136718750000\n"
        "oracle k=2: formula 40, enumeration 40, agree\n");

  r = run({"free-decomp", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "free algebra on 1 generator\n"
        "k   size        multiplicity\n"
        "0   2           2\n"
        "1   3           1\n"
        "2   7           2\n"
        "size: 588\n");

  r = run({"--format", "structured-text", "free-decomp", "1", "--oracle-verify",
           "0,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "generators = 1\n"
        "factor.0.size = 2\n"
        "factor.0.multiplicity = 2\n"
        "factor.1.size = 3\n"
        "factor.1.multiplicity = 1\n"
        "factor.2.size = 7\n"
        "factor.2.multiplicity = 2\n"
        "size = 588\n"
        "oracle.0.formula = 2\n"
        "oracle.0.enumeration = 2\n"
        "oracle.0.agree = true\n"
        "oracle.1.formula = 1\n"
        "oracle.1.enumeration = 1\n"
        "oracle.1.agree = true\n");

  r = run({"free-decomp", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("usage error: ", 0) == 0);

  r = run({"--cap-tuples", "10", "free-decomp", "2", "--oracle-verify", "2"});
  CHECK(r.code == 1);
  CHECK(r.err == "cap exceeded: oracle tuple space 49 exceeds cap 10\n");
}

TEST_CASE("cli export") {
  RawAlgebra reversed;
  reversed.elements = 4;
  reversed.covers = {{3, 2}, {2, 1}, {1, 0}};
  reversed.neg = {3, 2, 1, 0};
  std::string reversed_path = file_of("reversed_chain4.alg", reversed);

  CliResult straight = run({"export", "--algebra", chain4_plain_file()});
  CliResult rev = run({"export", "--algebra", reversed_path});
  CHECK(straight.code == 0);
  CHECK(rev.code == 0);
  CHECK(straight.out == rev.out);
  CHECK(straight.out ==
        algebra_document(canonicalize(chain_algebra(4)).to_raw()));

  std::string out_path = (work_dir() / "canon_chain4.alg").string();
  CliResult written = run({"export", "--algebra", reversed_path, "-o", out_path});
  CHECK(written.code == 0);
  CHECK(written.out == "wrote " + out_path + " (4 elements)\n");
  CHECK(is_isomorphic(load_algebra(out_path), chain_algebra(4)));

  // Exporting an already canonical file reproduces it byte for byte.
  CliResult again = run({"export", "--algebra", out_path});
  CHECK(again.out == straight.out);
}

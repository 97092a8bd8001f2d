#include "pmalg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pmalg/algebra.hpp"
#include "pmalg/congruence.hpp"
#include "pmalg/constructions.hpp"
#include "pmalg/duality.hpp"
#include "pmalg/errors.hpp"
#include "pmalg/free_bpk0.hpp"
#include "pmalg/io.hpp"
#include "pmalg/parser.hpp"
#include "pmalg/variety.hpp"

namespace pmalg {

namespace {

struct Caps {
  int elements = kDefaultElementCap;
  std::int64_t evals = kDefaultEvalCap;
  long long tuples = kDefaultTupleCap;
};

long long env_cap(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long long parsed = std::strtoll(v, &end, 10);
  if (end == v || *end || parsed <= 0) return fallback;
  return parsed;
}

std::string element_set(const Algebra& a, const std::vector<int>& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ", ";
    s += a.name(elems[i]);
  }
  return s + "}";
}

std::string point_set(const Bitset& pts) {
  std::string s = "{";
  bool first = true;
  for (int p = pts.first(); p >= 0; p = pts.next(p + 1)) {
    if (!first) s += ", ";
    s += "P" + std::to_string(p);
    first = false;
  }
  return s + "}";
}

std::string partition_str(const Algebra& a, const Congruence& c) {
  std::string s;
  for (const auto& block : c.blocks()) {
    if (!s.empty()) s += " ";
    s += element_set(a, block);
  }
  return s;
}

void emit_document(const RawAlgebra& raw, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << algebra_document(raw);
  } else {
    write_algebra_file(out_path, raw);
    out << "wrote " << out_path << " (" << raw.elements << " elements)\n";
  }
}

int cmd_validate(const std::string& path, const std::string& format, std::ostream& out,
                 const Caps& caps) {
  RawAlgebra raw = read_algebra_file(path);
  ValidationReport report = validate(raw, caps.elements);
  if (format == "structured-text") {
    out << "valid = " << (report.passed ? "true" : "false") << "\n";
    out << "elements = " << raw.elements << "\n";
    for (const auto& v : report.violations) {
      out << "violation = " << v.axiom;
      for (int w : v.witness) out << " " << w;
      out << "\n";
    }
  } else {
    if (report.passed) {
      out << "valid pm-algebra: " << raw.elements << " elements\n";
    } else {
      out << "invalid: " << report.violations.size() << " violation(s)\n";
      for (const auto& v : report.violations) {
        out << "  " << v.axiom << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          out << (i ? ", " : "") << v.witness[i];
        out << ")\n";
      }
    }
  }
  return report.passed ? 0 : 1;
}

int cmd_dual(const std::string& path, const std::string& format, std::ostream& out,
             const Caps& caps) {
  Algebra a = load_algebra(path, caps.elements);
  DualSpace x = dual_space(a);
  if (format == "dot") {
    out << space_dot(x);
    return 0;
  }
  Bitset mx = max_points(x), mn = min_points(x), bd = body(x);
  if (format == "structured-text") {
    out << "points = " << x.points << "\n";
    for (int p = 0; p < x.points; ++p) {
      out << "P" << p << " =";
      for (int e : x.filters[p].to_indices()) out << " " << a.name(e);
      out << "\n";
    }
    for (int p = 0; p < x.points; ++p)
      for (int q = 0; q < x.points; ++q) {
        if (p == q || !x.leq(p, q)) continue;
        bool cover = true;
        for (int r = 0; r < x.points && cover; ++r)
          if (r != p && r != q && x.leq(p, r) && x.leq(r, q)) cover = false;
        if (cover) out << "cover = P" << p << " P" << q << "\n";
      }
    for (int p = 0; p < x.points; ++p) out << "phi.P" << p << " = P" << x.phi[p] << "\n";
    out << "max =" << (mx.none() ? " " : "");
    for (int p = mx.first(); p >= 0; p = mx.next(p + 1)) out << " P" << p;
    out << "\nmin =";
    for (int p = mn.first(); p >= 0; p = mn.next(p + 1)) out << " P" << p;
    out << "\nbody =";
    for (int p = bd.first(); p >= 0; p = bd.next(p + 1)) out << " P" << p;
    out << "\ntype = " << space_type_name(space_type(x)) << "\n";
    return 0;
  }
  out << "dual space: " << x.points << " point" << (x.points == 1 ? "" : "s") << "\n";
  for (int p = 0; p < x.points; ++p)
    out << "P" << p << " = " << element_set(a, x.filters[p].to_indices()) << "\n";
  out << "covers:";
  bool any = false;
  for (int p = 0; p < x.points; ++p)
    for (int q = 0; q < x.points; ++q) {
      if (p == q || !x.leq(p, q)) continue;
      bool cover = true;
      for (int r = 0; r < x.points && cover; ++r)
        if (r != p && r != q && x.leq(p, r) && x.leq(r, q)) cover = false;
      if (cover) {
        out << (any ? "; " : " ") << "P" << p << " < P" << q;
        any = true;
      }
    }
  out << "\nphi:";
  any = false;
  for (int p = 0; p < x.points; ++p)
    if (x.phi[p] >= p) {
      out << (any ? "; " : " ") << "P" << p << " <-> P" << x.phi[p];
      any = true;
    }
  out << "\nmax: " << point_set(mx) << "\nmin: " << point_set(mn)
      << "\nbody: " << point_set(bd) << "\ntype: " << space_type_name(space_type(x))
      << "\n";
  return 0;
}

int cmd_congruences(const std::string& path, const std::string& format, std::ostream& out,
                    const Caps& caps) {
  Algebra a = load_algebra(path, caps.elements);
  auto lattice = congruence_lattice_with_csubsets(a);
  if (format == "dot") {
    std::vector<Congruence> plain;
    for (auto& [y, c] : lattice) plain.push_back(c);
    out << congruence_lattice_dot(plain);
    return 0;
  }
  if (format == "structured-text") {
    out << "count = " << lattice.size() << "\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      out << "C" << i << ".blocks = " << lattice[i].second.num_blocks() << "\n";
      out << "C" << i << ".csubset =";
      for (int p = lattice[i].first.first(); p >= 0; p = lattice[i].first.next(p + 1))
        out << " P" << p;
      out << "\n";
      out << "C" << i << ".partition = " << partition_str(a, lattice[i].second) << "\n";
    }
    return 0;
  }
  out << "congruences: " << lattice.size() << "\n";
  out << "index  blocks  c-subset  partition\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "C" << i << "  " << lattice[i].second.num_blocks() << "  "
        << point_set(lattice[i].first) << "  " << partition_str(a, lattice[i].second)
        << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, const std::string& format, std::ostream& out,
                 std::ostream& err, const Caps& caps) {
  Algebra a = load_algebra(path, caps.elements);
  bool simple = is_simple(a);
  bool si = is_subdirectly_irreducible(a);
  if (simple != is_simple_by_dual(a) || si != is_subdirectly_irreducible_by_dual(a)) {
    err << "error: congruence and dual-space classifications disagree\n";
    return 1;
  }
  DualSpace x = dual_space(a);
  int body_size = body(x).count();
  const char* type = space_type_name(space_type(x));
  std::string status = simple ? "simple, subdirectly irreducible"
                       : si   ? "subdirectly irreducible, not simple"
                              : "not subdirectly irreducible";
  std::string note = a.size() == 1   ? "trivial algebra"
                     : a.size() == 2 ? "two-element Boolean algebra"
                                     : "";
  if (format == "structured-text") {
    out << "simple = " << (simple ? "true" : "false") << "\n";
    out << "subdirectly_irreducible = " << (si ? "true" : "false") << "\n";
    out << "body_size = " << body_size << "\n";
    out << "space_type = " << type << "\n";
    if (!note.empty()) out << "note = " << note << "\n";
  } else {
    out << status << "; Body size " << body_size << "; space " << type << "\n";
    if (!note.empty()) out << "note: " << note << "\n";
  }
  return 0;
}

int cmd_check(const std::string& text, const std::string& path, const std::string& format,
              const std::string& expect, std::ostream& out, const Caps& caps) {
  Identity id = parse_identity(text);
  Algebra a = load_algebra(path, caps.elements);
  HoldsResult r = holds(a, id, caps.evals);
  if (format == "structured-text") {
    out << "holds = " << (r.holds ? "true" : "false") << "\n";
    for (const auto& [var, value] : r.witness)
      out << "witness." << var << " = " << a.name(value) << "\n";
  } else {
    out << (r.holds ? "PASS" : "FAIL") << ": " << text << "\n";
    if (!r.holds) {
      out << "witness:";
      bool first = true;
      for (const auto& [var, value] : r.witness) {
        out << (first ? " " : ", ") << var << " = " << a.name(value);
        first = false;
      }
      out << "\n";
    }
  }
  if (expect == "pass" && !r.holds) return 1;
  if (expect == "fail" && r.holds) return 1;
  return 0;
}

int cmd_variety(const std::string& path, const std::string& format, std::ostream& out,
                const Caps& caps) {
  Algebra a = load_algebra(path, caps.elements);
  VarietyMembership m = variety_membership(a, caps.evals);
  if (format == "structured-text") {
    out << "pk = " << (m.pk ? "true" : "false") << "\n";
    out << "pk0 = " << (m.pk0 ? "true" : "false") << "\n";
    out << "pk1 = " << (m.pk1 ? "true" : "false") << "\n";
    out << "bpk = " << (m.bpk ? "true" : "false") << "\n";
    out << "bpk1 = " << (m.bpk1 ? "true" : "false") << "\n";
    out << "bpk0 = " << (m.bpk0 ? "true" : "false") << "\n";
  } else {
    out << "variety membership\n";
    out << "PK    " << (m.pk ? "yes" : "no") << "\n";
    out << "PK0   " << (m.pk0 ? "yes" : "no") << "\n";
    out << "PK1   " << (m.pk1 ? "yes" : "no") << "\n";
    out << "BPK   " << (m.bpk ? "yes" : "no") << "\n";
    out << "BPK1  " << (m.bpk1 ? "yes" : "no") << "\n";
    out << "BPK0  " << (m.bpk0 ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_build(const std::string& si_arg, const std::string& out_path, std::ostream& out) {
  int i = 0, m = 0;
  char comma = 0;
  std::istringstream in(si_arg);
  if (!(in >> i >> comma >> m) || comma != ',' || !(in >> std::ws).eof())
    throw CLI::ValidationError("--si", "expected i,m (for example 2,1)");
  Algebra a = build_si({i, m});
  emit_document(a.to_raw(), out_path, out);
  return 0;
}

int cmd_product(const std::vector<std::string>& files, const std::string& out_path,
                std::ostream& out, const Caps& caps) {
  Algebra acc = load_algebra(files[0], caps.elements);
  for (std::size_t i = 1; i < files.size(); ++i) {
    Algebra next = load_algebra(files[i], caps.elements);
    if (static_cast<long long>(acc.size()) * next.size() > caps.elements)
      throw CapError("product would exceed the element cap");
    acc = direct_product(acc, next);
  }
  emit_document(acc.to_raw(), out_path, out);
  return 0;
}

int cmd_homs(const std::vector<std::string>& files, bool surjective, bool autos, bool list,
             const std::string& format, std::ostream& out, const Caps& caps) {
  Algebra a = load_algebra(files[0], caps.elements);
  std::vector<std::vector<int>> hs;
  const char* label = nullptr;
  if (autos) {
    hs = automorphisms(a);
    label = "automorphisms";
  } else {
    Algebra b = load_algebra(files[1], caps.elements);
    hs = surjective ? surjective_homomorphisms(a, b) : homomorphisms(a, b);
    label = surjective ? "surjective homomorphisms" : "homomorphisms";
  }
  if (format == "structured-text") {
    out << "count = " << hs.size() << "\n";
    if (list)
      for (std::size_t i = 0; i < hs.size(); ++i) {
        out << "h" << i << " =";
        for (int v : hs[i]) out << " " << v;
        out << "\n";
      }
  } else {
    out << label << ": " << hs.size() << "\n";
    if (list)
      for (std::size_t i = 0; i < hs.size(); ++i) {
        out << "h" << i << ":";
        for (int v : hs[i]) out << " " << v;
        out << "\n";
      }
  }
  return 0;
}

int cmd_free_decomp(int n, const std::vector<int>& verify, const std::string& format,
                    std::ostream& out, const Caps& caps) {
  FreeDecomposition d = free_decomposition(n);
  std::string size_str;
  try {
    size_str = free_size(d).str();
  } catch (const CapError&) {
    size_str = "(exceeds evaluation cap)";
  }
  bool all_agree = true;
  std::vector<std::tuple<int, BigNat, BigNat>> checks;
  for (int k : verify) {
    BigNat formula = surjection_count(n, k);
    BigNat enumerated = oracle_surjection_count(n, k, caps.tuples);
    checks.emplace_back(k, formula, enumerated);
    if (formula != enumerated) all_agree = false;
  }
  if (format == "structured-text") {
    out << "generators = " << n << "\n";
    for (const FreeFactor& f : d.factors) {
      out << "factor." << f.k << ".size = " << f.factor_size.str() << "\n";
      out << "factor." << f.k << ".multiplicity = " << f.multiplicity.str() << "\n";
    }
    out << "size = " << size_str << "\n";
    for (auto& [k, formula, enumerated] : checks) {
      out << "oracle." << k << ".formula = " << formula.str() << "\n";
      out << "oracle." << k << ".enumeration = " << enumerated.str() << "\n";
      out << "oracle." << k << ".agree = " << (formula == enumerated ? "true" : "false")
          << "\n";
    }
  } else {
    out << "free algebra on " << n << " generator" << (n == 1 ? "" : "s") << "\n";
    out << std::left << std::setw(4) << "k" << std::setw(12) << "size"
        << "multiplicity\n";
    for (const FreeFactor& f : d.factors)
      out << std::left << std::setw(4) << f.k << std::setw(12) << f.factor_size.str()
          << f.multiplicity.str() << "\n";
    out << "size: " << size_str << "\n";
    for (auto& [k, formula, enumerated] : checks)
      out << "oracle k=" << k << ": formula " << formula.str() << ", enumeration "
          << enumerated.str() << (formula == enumerated ? ", agree" : ", MISMATCH")
          << "\n";
  }
  return all_agree ? 0 : 1;
}

int cmd_export(const std::string& path, const std::string& out_path, std::ostream& out,
               const Caps& caps) {
  Algebra a = canonicalize(load_algebra(path, caps.elements));
  emit_document(a.to_raw(), out_path, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite pseudocomplemented De Morgan algebra toolkit"};
  app.require_subcommand(1);

  Caps caps;
  caps.elements = static_cast<int>(env_cap("PMALG_CAP_ELEMENTS", kDefaultElementCap));
  caps.evals = env_cap("PMALG_CAP_EVALS", kDefaultEvalCap);
  caps.tuples = env_cap("PMALG_CAP_TUPLES", kDefaultTupleCap);
  app.add_option("--cap-elements", caps.elements, "element count cap");
  app.add_option("--cap-evals", caps.evals, "identity evaluation cap");
  app.add_option("--cap-tuples", caps.tuples, "oracle tuple cap");

  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "structured-text", "dot"}));

  std::string algebra_path, out_path, identity_text, expect, si_arg;
  std::vector<std::string> files;
  bool surjective = false, autos = false, list = false;
  int free_n = 0;
  std::vector<int> verify;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms on a file");
  validate_cmd->add_option("--algebra", algebra_path, "algebra file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual space of an algebra");
  dual_cmd->add_option("--algebra", algebra_path, "algebra file")->required();

  auto* cong_cmd = app.add_subcommand("congruences", "congruence lattice via C-subsets");
  cong_cmd->add_option("--algebra", algebra_path, "algebra file")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "simplicity and subdirect irreducibility");
  classify_cmd->add_option("--algebra", algebra_path, "algebra file")->required();

  auto* check_cmd = app.add_subcommand("check", "test an identity on an algebra");
  check_cmd->add_option("identity", identity_text, "identity in the term DSL")->required();
  check_cmd->add_option("--algebra", algebra_path, "algebra file")->required();
  check_cmd->add_option("--expect", expect, "fail the run unless the result matches")
      ->check(CLI::IsMember({"pass", "fail"}));

  auto* variety_cmd = app.add_subcommand("variety", "equational-basis membership");
  variety_cmd->add_option("--algebra", algebra_path, "algebra file")->required();

  auto* build_cmd = app.add_subcommand("build", "construct a canonical s.i. algebra");
  build_cmd->add_option("--si", si_arg, "descriptor i,m")->required();
  build_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

  auto* product_cmd = app.add_subcommand("product", "direct product of algebra files");
  product_cmd->add_option("files", files, "algebra files")->required()->expected(-2);
  product_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

  auto* homs_cmd = app.add_subcommand("homs", "homomorphisms between algebras");
  homs_cmd->add_option("files", files, "source [target] algebra files")
      ->required()
      ->expected(-1);
  homs_cmd->add_flag("--surjective", surjective, "count only surjections");
  homs_cmd->add_flag("--auto", autos, "count automorphisms of the source");
  homs_cmd->add_flag("--list", list, "print every map");

  auto* free_cmd = app.add_subcommand("free-decomp", "free-algebra factor table");
  free_cmd->add_option("n", free_n, "generator count")->required()->check(CLI::PositiveNumber);
  free_cmd->add_option("--oracle-verify", verify, "simple-type indices to cross-check")
      ->delimiter(',');

  auto* export_cmd = app.add_subcommand("export", "canonically relabeled algebra file");
  export_cmd->add_option("--algebra", algebra_path, "algebra file")->required();
  export_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("pmalg");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (format == "dot" && !dual_cmd->parsed() && !cong_cmd->parsed()) {
      err << "usage error: --format dot applies only to dual and congruences\n";
      return 2;
    }
    if (homs_cmd->parsed()) {
      if (surjective && autos) {
        err << "usage error: --surjective and --auto are mutually exclusive\n";
        return 2;
      }
      if (files.size() != (autos ? 1u : 2u)) {
        err << "usage error: homs needs "
            << (autos ? "one file with --auto" : "exactly two files") << "\n";
        return 2;
      }
    }

    if (validate_cmd->parsed()) return cmd_validate(algebra_path, format, out, caps);
    if (dual_cmd->parsed()) return cmd_dual(algebra_path, format, out, caps);
    if (cong_cmd->parsed()) return cmd_congruences(algebra_path, format, out, caps);
    if (classify_cmd->parsed()) return cmd_classify(algebra_path, format, out, err, caps);
    if (check_cmd->parsed())
      return cmd_check(identity_text, algebra_path, format, expect, out, caps);
    if (variety_cmd->parsed()) return cmd_variety(algebra_path, format, out, caps);
    if (build_cmd->parsed()) return cmd_build(si_arg, out_path, out);
    if (product_cmd->parsed()) return cmd_product(files, out_path, out, caps);
    if (homs_cmd->parsed())
      return cmd_homs(files, surjective, autos, list, format, out, caps);
    if (free_cmd->parsed()) return cmd_free_decomp(free_n, verify, format, out, caps);
    if (export_cmd->parsed()) return cmd_export(algebra_path, out_path, out, caps);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const pmalg::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const MalformedError& e) {
    err << "malformed input: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pmalg

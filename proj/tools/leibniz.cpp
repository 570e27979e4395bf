// Command-line front end: algebra file I/O, analysis reports, isoclinism
// checks, stem reduction, constructions, and the built-in check suite.
//
// Exit codes: 0 the property holds / success, 1 the property fails or is
// refuted, 2 input error, 3 inconclusive.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "leibniz/document.hpp"
#include "leibniz/sampling.hpp"
#include "leibniz/stem.hpp"
#include "leibniz/suite.hpp"

using namespace leibniz;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned long long budget = kDefaultSearchBudget;
  bool json() const { return format == "json"; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// one basis vector as a readable combination of basis names
std::string combo(const Vector& v, const std::vector<std::string>& names) {
  const Field& f = v.empty() ? Field::rationals() : v[0].field();
  const Scalar one = Scalar::of_int(f, 1);
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!(v[i] == one)) out += v[i].str() + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::string span_str(const Subspace& s, const std::vector<std::string>& names) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    out += combo(s.basis().row(r), names);
  }
  return out + "}";
}

json vector_json(const Vector& v) {
  json arr = json::array();
  for (const Scalar& s : v) arr.push_back(s.str());
  return arr;
}

json subspace_json(const Subspace& s) {
  json basis = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r)
    basis.push_back(vector_json(s.basis().row(r)));
  return json{{"basis", basis}, {"dim", s.dim()}};
}

json field_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"p", f.modulus().get_str()}};
}

std::string field_str(const Field& f) {
  if (f.is_rational()) return "Q";
  return "F_" + f.modulus().get_str();
}

// --- validate ---------------------------------------------------------------

int cmd_validate(const Options& opt, const std::string& file) {
  AlgebraDocument doc = read_algebra_document(file);
  StructureCheck check = check_structure(doc.field, doc.dim, doc.table);
  if (opt.json()) {
    json violations = json::array();
    for (const IdentityViolation& v : check.violations)
      violations.push_back(json{{"i", v.i},
                                {"j", v.j},
                                {"k", v.k},
                                {"lhs", vector_json(v.lhs)},
                                {"rhs", vector_json(v.rhs)}});
    emit(json{{"valid", check.ok}, {"violations", violations}});
  } else if (check.ok) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid: " << check.violations.size()
              << " identity violation(s)\n";
    for (const IdentityViolation& v : check.violations)
      std::cout << "  (" << doc.names[v.i] << ", " << doc.names[v.j] << ", "
                << doc.names[v.k] << "): [x,[y,z]] = " << combo(v.lhs, doc.names)
                << " but [[x,y],z] - [[x,z],y] = " << combo(v.rhs, doc.names)
                << "\n";
  }
  return check.ok ? kHolds : kRefuted;
}

// --- analyze ----------------------------------------------------------------

std::vector<Subspace> lower_series_until_stable(const LeibnizAlgebra& a) {
  std::vector<Subspace> terms = {a.full_subspace()};  // gamma_1
  for (;;) {
    Subspace next = lie_commutator_ideal(a, terms.back(), a.full_subspace());
    if (next == terms.back()) return terms;
    terms.push_back(std::move(next));
  }
}

std::vector<Subspace> upper_series_until_stable(const LeibnizAlgebra& a) {
  std::vector<Subspace> terms = {Subspace::zero(a.field(), a.dim())};  // Z_0
  for (;;) {
    Subspace next = upper_term(a, terms.size());
    if (next == terms.back()) return terms;
    terms.push_back(std::move(next));
  }
}

int cmd_analyze(const Options& opt, const std::string& file, std::size_t n) {
  AlgebraDocument doc = read_algebra_document(file);
  StructureCheck check = check_structure(doc.field, doc.dim, doc.table);
  if (!check.ok) {
    if (opt.json())
      emit(json{{"error", "the bracket table violates the Leibniz identity"},
                {"violations", check.violations.size()}});
    else
      std::cout << "invalid algebra: " << check.violations.size()
                << " identity violation(s); run validate for the triples\n";
    return kRefuted;
  }
  LeibnizAlgebra a = doc.build();
  std::vector<Subspace> lower = lower_series_until_stable(a);
  std::vector<Subspace> upper = upper_series_until_stable(a);
  Subspace center = lie_center(a);
  Subspace ann = ann_ideal(a);
  Quotient lz = liezation(a);
  std::optional<std::size_t> cls = nilpotency_class(a, a.full_subspace());
  bool stem = is_stem(a, n);
  Subspace zn = upper_term(a, n);
  Subspace gamma = lower_term(a, a.full_subspace(), n + 1);

  if (opt.json()) {
    json lower_json = json::array();
    for (std::size_t k = 0; k < lower.size(); ++k) {
      json term = subspace_json(lower[k]);
      term["k"] = k + 1;
      lower_json.push_back(std::move(term));
    }
    json upper_json = json::array();
    for (std::size_t k = 0; k < upper.size(); ++k) {
      json term = subspace_json(upper[k]);
      term["k"] = k;
      upper_json.push_back(std::move(term));
    }
    json out{{"basis", doc.names},
             {"dim", a.dim()},
             {"field", field_json(a.field())},
             {"lower_series", lower_json},
             {"upper_series", upper_json},
             {"lie_center", subspace_json(center)},
             {"ann_ideal", subspace_json(ann)},
             {"liezation_dim", lz.algebra.dim()},
             {"n", n},
             {"stem", stem}};
    if (cls)
      out["nilpotency_class"] = *cls;
    else
      out["nilpotency_class"] = nullptr;
    emit(out);
    return kHolds;
  }

  std::cout << "algebra: dim " << a.dim() << " over " << field_str(a.field());
  if (a.dim()) {
    std::cout << ", basis ";
    for (std::size_t i = 0; i < a.dim(); ++i)
      std::cout << (i ? ", " : "") << doc.names[i];
  }
  std::cout << "\nlower Lie series (stable from gamma_" << lower.size()
            << "):\n";
  for (std::size_t k = 0; k < lower.size(); ++k)
    std::cout << "  gamma_" << k + 1 << ": dim " << lower[k].dim() << ", "
              << span_str(lower[k], doc.names) << "\n";
  std::cout << "upper Lie series (stable from Z_" << upper.size() - 1
            << "):\n";
  for (std::size_t k = 0; k < upper.size(); ++k)
    std::cout << "  Z_" << k << ": dim " << upper[k].dim() << ", "
              << span_str(upper[k], doc.names) << "\n";
  std::cout << "Lie center: dim " << center.dim() << ", "
            << span_str(center, doc.names) << "\n";
  std::cout << "squares ideal: dim " << ann.dim() << ", "
            << span_str(ann, doc.names) << "\n";
  std::cout << "Liezation: dim " << lz.algebra.dim() << "\n";
  if (cls)
    std::cout << "Lie-nilpotent of class " << *cls << "\n";
  else
    std::cout << "not Lie-nilpotent (lower series stabilizes nonzero)\n";
  std::cout << "stem at n=" << n << ": " << (stem ? "yes" : "no") << "  (Z_"
            << n << " = " << span_str(zn, doc.names) << ", gamma_" << n + 1
            << " = " << span_str(gamma, doc.names) << ")\n";
  return kHolds;
}

// --- isoclinic --------------------------------------------------------------

// the identity matrix between the canonical level quotients, when it is a
// verified witness; the only search-free attempt available over Q
std::optional<IsoclinismWitness> identity_attempt(const LeibnizAlgebra& a1,
                                                  const LeibnizAlgebra& a2,
                                                  std::size_t n) {
  LevelContext c1 = level_context(a1, n);
  LevelContext c2 = level_context(a2, n);
  if (c1.quotient.algebra.dim() != c2.quotient.algebra.dim()) return std::nullopt;
  Homomorphism eta(c1.quotient.algebra, c2.quotient.algebra,
                   Matrix::identity(a1.field(), c1.quotient.algebra.dim()));
  if (!is_isomorphism(eta)) return std::nullopt;
  std::optional<Homomorphism> xi = derive_xi(a1, a2, eta, n);
  if (!xi || !xi->is_bijective()) return std::nullopt;
  IsoclinismWitness w{n, a1, a2, std::move(eta), std::move(*xi)};
  if (!verify_witness(w).ok) return std::nullopt;
  return w;
}

int report_isoclinic(const Options& opt, const std::string& out,
                     const std::string& verdict, int code,
                     const IsoclinismWitness* w,
                     unsigned long long candidates) {
  if (w) save_witness(out, *w);
  if (opt.json()) {
    json j{{"candidates", candidates}, {"isoclinic", verdict}};
    if (w) j["witness_file"] = out;
    emit(j);
  } else {
    switch (code) {
      case kHolds:
        std::cout << "isoclinic: witness written to " << out << "\n";
        break;
      case kRefuted:
        std::cout << "not isoclinic: " << verdict << "\n";
        break;
      default:
        std::cout << "inconclusive: " << verdict << "\n";
        break;
    }
  }
  return code;
}

int cmd_isoclinic(const Options& opt, const std::string& file1,
                  const std::string& file2, std::size_t n,
                  const std::string& out) {
  LeibnizAlgebra a1 = load_algebra(file1);
  LeibnizAlgebra a2 = load_algebra(file2);
  if (!(a1.field() == a2.field())) {
    std::cerr << "error: the two documents use different fields ("
              << field_str(a1.field()) << " vs " << field_str(a2.field())
              << ")\n";
    return kInputError;
  }

  if (a1.field().is_rational()) {
    // no enumeration over Q: fingerprints refute exactly, and the
    // constructive attempts below detect common quotient/direct-sum shapes
    if (!(fingerprint(a1, n) == fingerprint(a2, n)))
      return report_isoclinic(opt, out, "fingerprint mismatch", kRefuted,
                              nullptr, 0);
    if (std::optional<IsoclinismWitness> w = identity_attempt(a1, a2, n))
      return report_isoclinic(opt, out, "witness", kHolds, &*w, 0);
    Reduction r1 = stem_reduction(a1, n);
    Reduction r2 = stem_reduction(a2, n);
    if (std::optional<IsoclinismWitness> mid =
            identity_attempt(r1.quotient, r2.quotient, n)) {
      IsoclinismWitness w =
          compose_witness(compose_witness(r1.witness, *mid),
                          invert_witness(r2.witness));
      if (verify_witness(w).ok)
        return report_isoclinic(opt, out, "witness", kHolds, &w, 0);
    }
    return report_isoclinic(
        opt, out, "no constructive witness found (search needs a prime field)",
        kInconclusive, nullptr, 0);
  }

  SearchResult r = search_isoclinism(a1, a2, n, opt.budget);
  switch (r.outcome) {
    case SearchOutcome::witness:
      return report_isoclinic(opt, out, "witness", kHolds, &*r.witness,
                              r.candidates);
    case SearchOutcome::refuted_by_fingerprint:
      return report_isoclinic(opt, out, "fingerprint mismatch", kRefuted,
                              nullptr, r.candidates);
    case SearchOutcome::none:
      return report_isoclinic(opt, out,
                              "no witness exists (search was exhaustive)",
                              kRefuted, nullptr, r.candidates);
    case SearchOutcome::exhausted:
    default:
      return report_isoclinic(opt, out, "budget exhausted", kInconclusive,
                              nullptr, r.candidates);
  }
}

// --- stem -------------------------------------------------------------------

int cmd_stem(const Options& opt, const std::string& file, std::size_t n,
             const std::string& quotient_out, const std::string& witness_out) {
  LeibnizAlgebra a = load_algebra(file);
  Reduction r = stem_reduction(a, n);
  save_algebra(quotient_out, r.quotient);
  save_witness(witness_out, r.witness);
  if (opt.json()) {
    emit(json{{"achieved", r.achieved},
              {"certified", r.certified},
              {"collapsed_ideal", subspace_json(r.m)},
              {"n", n},
              {"quotient_dim", r.quotient.dim()},
              {"quotient_file", quotient_out},
              {"rounds", r.rounds},
              {"witness_file", witness_out}});
  } else {
    std::cout << "collapsed ideal m: dim " << r.m.dim() << ", "
              << span_str(r.m, a.names()) << "\n"
              << "quotient: dim " << r.quotient.dim() << " (" << r.rounds
              << " round(s)), written to " << quotient_out << "\n"
              << "witness written to " << witness_out << "\n"
              << "stem quotient: " << (r.achieved ? "yes" : "no") << "\n"
              << "certified maximal: " << (r.certified ? "yes" : "no") << "\n";
  }
  return r.certified ? kHolds : kInconclusive;
}

// --- construct --------------------------------------------------------------

Subspace parse_ideal_spec(const LeibnizAlgebra& a, const std::string& spec) {
  std::vector<Vector> gens;
  std::string token;
  std::vector<std::string> tokens;
  for (char ch : spec) {
    if (ch == ',') {
      tokens.push_back(token);
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      token += ch;
    }
  }
  tokens.push_back(token);
  for (const std::string& t : tokens) {
    if (t.empty()) throw ParseError("--ideal: empty entry in \"" + spec + "\"");
    bool named = false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.names()[i] == t) {
        gens.push_back(unit_vector(a.field(), a.dim(), i));
        named = true;
        break;
      }
    if (named) continue;
    if (t.find(':') == std::string::npos)
      throw ParseError("--ideal: \"" + t +
                       "\" is neither a basis name nor a coordinate vector "
                       "(use c1:c2:...:cd)");
    Vector v;
    std::string part;
    for (std::size_t i = 0; i <= t.size(); ++i) {
      if (i == t.size() || t[i] == ':') {
        v.push_back(Scalar::parse(a.field(), part));
        part.clear();
      } else {
        part += t[i];
      }
    }
    if (v.size() != a.dim())
      throw ParseError("--ideal: coordinate vector \"" + t + "\" has " +
                       std::to_string(v.size()) + " entries, expected " +
                       std::to_string(a.dim()));
    gens.push_back(std::move(v));
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

int report_construct(const Options& opt, const LeibnizAlgebra& a,
                     const std::string& out) {
  save_algebra(out, a);
  if (opt.json())
    emit(json{{"dim", a.dim()}, {"file", out}});
  else
    std::cout << "wrote dim-" << a.dim() << " algebra to " << out << "\n";
  return kHolds;
}

int cmd_construct_direct_sum(const Options& opt, const std::string& file1,
                             const std::string& file2, const std::string& out) {
  LeibnizAlgebra a = load_algebra(file1);
  LeibnizAlgebra b = load_algebra(file2);
  if (!(a.field() == b.field())) {
    std::cerr << "error: the two documents use different fields\n";
    return kInputError;
  }
  return report_construct(opt, direct_sum(a, b).algebra, out);
}

int cmd_construct_quotient(const Options& opt, const std::string& file,
                           const std::string& ideal_spec,
                           const std::string& out) {
  LeibnizAlgebra a = load_algebra(file);
  Subspace ideal = parse_ideal_spec(a, ideal_spec);
  if (!classify_subspace(a, ideal).two_sided_ideal) {
    std::cerr << "error: " << span_str(ideal, a.names())
              << " is not a two-sided ideal\n";
    return kInputError;
  }
  return report_construct(opt, quotient_algebra(a, ideal).algebra, out);
}

int cmd_construct_pair(const Options& opt, const std::string& witness_file,
                       const std::string& out) {
  IsoclinismWitness w = load_witness(witness_file);
  if (!verify_witness(w).ok) {
    std::cerr << "error: the witness in " << witness_file
              << " does not verify\n";
    return kInputError;
  }
  return report_construct(opt, pair_algebra(w.a1, w.a2, w.eta, w.n).K, out);
}

int cmd_construct_pullback(const Options& opt, const std::string& witness_file,
                           const std::string& out) {
  IsoclinismWitness w = load_witness(witness_file);
  if (!verify_witness(w).ok) {
    std::cerr << "error: the witness in " << witness_file
              << " does not verify\n";
    return kInputError;
  }
  return report_construct(
      opt, pullback_extension(w.a1, w.a2, w.eta, w.n).total, out);
}

// --- suite ------------------------------------------------------------------

int cmd_suite(const Options& opt, const std::string& filter) {
  std::vector<CheckOutcome> outcomes = run_suite(opt.seed, filter);
  std::size_t passed = 0;
  for (const CheckOutcome& o : outcomes) passed += o.pass;
  if (opt.json()) {
    json checks = json::array();
    for (const CheckOutcome& o : outcomes)
      checks.push_back(json{{"cases", o.cases},
                            {"detail", o.detail},
                            {"name", o.name},
                            {"pass", o.pass}});
    emit(json{{"checks", checks},
              {"passed", passed},
              {"seed", opt.seed},
              {"total", outcomes.size()}});
  } else {
    for (const CheckOutcome& o : outcomes) {
      if (o.pass)
        std::cout << "PASS " << o.name << " (" << o.cases << " cases)\n";
      else
        std::cout << "FAIL " << o.name << ": " << o.detail << "\n";
    }
    std::cout << "passed " << passed << " of " << outcomes.size()
              << " checks (seed " << opt.seed << ")\n";
  }
  return passed == outcomes.size() ? kHolds : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact arithmetic for finite-dimensional Leibniz algebras over Q and "
      "F_p: relative Lie invariants, isoclinism witnesses, stem analysis."};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized property runs")
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "Search budget (eta candidates)")
      ->capture_default_str();

  std::string file1, file2, out, ideal_spec, filter, witness_file;
  std::size_t n = 1;

  CLI::App* validate =
      app.add_subcommand("validate", "Check a document against the Leibniz identity");
  validate->add_option("file", file1, "Algebra document")->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "Series, centers, and stem status");
  analyze->add_option("file", file1, "Algebra document")->required();
  analyze->add_option("--n", n, "Level for the stem check")
      ->capture_default_str();

  CLI::App* isoclinic = app.add_subcommand(
      "isoclinic", "Decide n-Lie-isoclinism and emit a witness");
  isoclinic->add_option("file1", file1, "First algebra document")->required();
  isoclinic->add_option("file2", file2, "Second algebra document")->required();
  isoclinic->add_option("--n", n, "Isoclinism level")->capture_default_str();
  isoclinic->add_option("-o,--out", out, "Witness output file")
      ->default_val("witness.json");

  CLI::App* stem =
      app.add_subcommand("stem", "Reduce to an isoclinic stem quotient");
  stem->add_option("file", file1, "Algebra document")->required();
  stem->add_option("--n", n, "Level")->capture_default_str();
  stem->add_option("--quotient-out", out, "Quotient document output")
      ->default_val("stem_quotient.json");
  stem->add_option("--witness-out", witness_file, "Witness output")
      ->default_val("stem_witness.json");

  CLI::App* construct =
      app.add_subcommand("construct", "Build derived algebras");
  construct->require_subcommand(1);
  CLI::App* csum = construct->add_subcommand("direct-sum", "Direct sum");
  csum->add_option("file1", file1, "First summand")->required();
  csum->add_option("file2", file2, "Second summand")->required();
  csum->add_option("-o,--out", out, "Output document")->required();
  CLI::App* cquot =
      construct->add_subcommand("quotient", "Quotient by a two-sided ideal");
  cquot->add_option("file", file1, "Algebra document")->required();
  cquot
      ->add_option("--ideal", ideal_spec,
                   "Comma-separated basis names or c1:c2:...:cd vectors")
      ->required();
  cquot->add_option("-o,--out", out, "Output document")->required();
  CLI::App* cpair = construct->add_subcommand(
      "pair", "Pair subalgebra of the sum, from a witness");
  cpair->add_option("--witness", witness_file, "Witness document")->required();
  cpair->add_option("-o,--out", out, "Output document")->required();
  CLI::App* cpull = construct->add_subcommand(
      "pullback", "Pullback extension total algebra, from a witness");
  cpull->add_option("--witness", witness_file, "Witness document")->required();
  cpull->add_option("-o,--out", out, "Output document")->required();

  CLI::App* suite =
      app.add_subcommand("suite", "Run the built-in regression and property checks");
  suite->add_option("--filter", filter, "Only checks whose name contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, file1);
    if (analyze->parsed()) return cmd_analyze(opt, file1, n);
    if (isoclinic->parsed()) return cmd_isoclinic(opt, file1, file2, n, out);
    if (stem->parsed()) return cmd_stem(opt, file1, n, out, witness_file);
    if (construct->parsed()) {
      if (csum->parsed()) return cmd_construct_direct_sum(opt, file1, file2, out);
      if (cquot->parsed()) return cmd_construct_quotient(opt, file1, ideal_spec, out);
      if (cpair->parsed()) return cmd_construct_pair(opt, witness_file, out);
      if (cpull->parsed()) return cmd_construct_pullback(opt, witness_file, out);
    }
    if (suite->parsed()) return cmd_suite(opt, filter);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const IdentityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

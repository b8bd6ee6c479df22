#include "qtoric/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "qtoric/classify.hpp"
#include "qtoric/json_io.hpp"
#include "qtoric/oracle.hpp"
#include "qtoric/quasitoric.hpp"

namespace qtoric::cli {

namespace {

// Unreadable or malformed input; maps to kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string format = "json";
  int bound = 3;
  int n = 0;
  int m = 0;
  int max_dim = 0;
  bool check = false;
  std::string family;
  WitnessParams witness;
};

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

CharPair parse_pair(const Json& j) {
  try {
    return char_pair_from_json(j);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::pair<CharPair, CharPair> parse_two(const Json& j) {
  if (j.is_array() && j.size() == 2) return {parse_pair(j[0]), parse_pair(j[1])};
  if (j.is_object() && j.contains("first") && j.contains("second")) {
    return {parse_pair(j.at("first")), parse_pair(j.at("second"))};
  }
  throw UsageError("expected {\"first\": CharPair, \"second\": CharPair} or a two-element array");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string params_text(const Json& c) { return c.at("params").dump(); }

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const CharPair cp = parse_pair(read_json(o.input, in));
  const bool closed_form = validate(cp);
  const bool oracle = validate_bruteforce(cp);
  emit(out, Json{{"valid", closed_form}, {"oracle_valid", oracle}, {"agreement", closed_form == oracle}});
  return closed_form == oracle ? kOk : kDisagreement;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const CharPair cp = parse_pair(read_json(o.input, in));
  const NormalForm nf = normalize(cp);
  const Json cls = class_to_json(canonical_class(cp));
  if (o.format == "tsv") {
    out << "family\tn\tm\tparams\trepresentative\n";
    out << cls.at("family").get<std::string>() << '\t' << nf.n << '\t' << nf.m << '\t' << params_text(cls) << '\t'
        << cls.at("representative").dump() << '\n';
    return kOk;
  }
  Json normal = char_pair_to_json(nf.char_pair());
  normal["orientation"] = orientation_name(nf.orientation);
  normal["swap_applied"] = nf.swap_applied;
  emit(out, Json{{"class", cls}, {"normal_form", normal}, {"generalized_bott", is_generalized_bott(nf)}});
  return kOk;
}

// "agree", "bound-limited" (no substitution within the bound for a homeomorphic
// Bott pair) or "disagree".
std::string oracle_status(const HomeoVerdict& closed_form, const IsoVerdict& oracle, const CharPair& first,
                          const CharPair& second) {
  const bool found = iso_found(oracle);
  if (found == closed_form.homeomorphic) return "agree";
  if (!found && is_generalized_bott(normalize(first)) && is_generalized_bott(normalize(second))) {
    return "bound-limited";
  }
  return "disagree";
}

int cmd_compare(const Options& o, std::istream& in, std::ostream& out) {
  const auto [first, second] = parse_two(read_json(o.input, in));
  const HomeoVerdict verdict = homeomorphic(first, second);
  Json result{{"homeomorphic", verdict.homeomorphic}, {"rule", verdict.rule}, {"explanation", verdict.explanation}};
  int code = kOk;
  if (o.check) {
    try {
      const IsoVerdict iso =
          ring_iso_search(cohomology_presentation(first), cohomology_presentation(second), o.bound);
      result["oracle"] = verdict_to_json(iso);
      result["status"] = oracle_status(verdict, iso, first, second);
    } catch (const DimensionMismatch&) {
      // Different generator degrees: the rings cannot be isomorphic.
      result["oracle"] = Json{{"result", "degree-mismatch"}};
      result["status"] = verdict.homeomorphic ? "disagree" : "agree";
    }
    if (result["status"] == "disagree") code = kDisagreement;
  }
  emit(out, result);
  return code;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto classes = enumerate_classes(o.n, o.m, o.bound);
  long nonbott = 0;
  Json list = Json::array();
  for (const auto& c : classes) {
    if (c.family == Family::NonBott || c.family == Family::ConnSumPlus || c.family == Family::SpecialM21) ++nonbott;
    list.push_back(class_to_json(c));
  }
  if (o.format == "tsv") {
    out << "family\tn\tm\tparams\trepresentative\n";
    for (const auto& c : list) {
      out << c.at("family").get<std::string>() << '\t' << c.at("n") << '\t' << c.at("m") << '\t' << params_text(c)
          << '\t' << c.at("representative").dump() << '\n';
    }
    return kOk;
  }
  emit(out, Json{{"n", o.n},
                 {"m", o.m},
                 {"bound", o.bound},
                 {"count", classes.size()},
                 {"nonbott_count", nonbott},
                 {"classes", list}});
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  std::vector<std::pair<int, int>> dims;
  if (o.max_dim > 0) {
    for (int n = 1; n <= o.max_dim; ++n) {
      for (int m = 1; m <= n; ++m) dims.emplace_back(n, m);
    }
  } else {
    dims.emplace_back(o.n, o.m);
  }
  if (o.format == "tsv") {
    out << "n\tm\tnonbott\n";
    for (auto [n, m] : dims) out << n << '\t' << m << '\t' << count_nonbott(n, m) << '\n';
    return kOk;
  }
  if (dims.size() == 1) {
    emit(out, Json{{"n", o.n}, {"m", o.m}, {"count", count_nonbott(o.n, o.m)}});
    return kOk;
  }
  Json rows = Json::array();
  for (auto [n, m] : dims) rows.push_back(Json{{"n", n}, {"m", m}, {"count", count_nonbott(n, m)}});
  emit(out, rows);
  return kOk;
}

int cmd_cohomology(const Options& o, std::istream& in, std::ostream& out) {
  const CharPair cp = parse_pair(read_json(o.input, in));
  const Presentation p = cohomology_presentation(cp);
  const GradedRanks ranks = graded_ranks(p);
  Json torsion = Json::array();
  for (const auto& t : ranks.torsion) torsion.push_back(vector_to_json(t));
  std::vector<long> h_vector;
  for (int d = 0; d <= cp.n + cp.m; ++d) h_vector.push_back(h_vector_entry(cp.n, cp.m, d));
  emit(out, Json{{"presentation", presentation_to_json(p)},
                 {"graded_ranks", ranks.ranks},
                 {"h_vector", h_vector},
                 {"torsion", torsion},
                 {"torsion_free", ranks.torsion_free()}});
  return ranks.ranks == h_vector && ranks.torsion_free() ? kOk : kDisagreement;
}

int cmd_kernel(const Options& o, std::istream& in, std::ostream& out) {
  const CharPair cp = parse_pair(read_json(o.input, in));
  const LatticeBasis kernel = kernel_lattice(cp);
  const auto generators = subtorus_generators(cp);
  const bool matches = kernel == LatticeBasis::span_of(kernel.ambient_dim(), generators);
  const auto vectors = kernel.vectors();
  const bool primitive = is_basis_extendable(vectors);
  emit(out, Json{{"kernel", lattice_to_json(kernel)},
                 {"subtorus_generators", matrix_to_json(IntMatrix::from_rows(generators, kernel.ambient_dim()))},
                 {"matches_generators", matches},
                 {"primitive", primitive}});
  return matches && primitive ? kOk : kDisagreement;
}

int cmd_oracle_iso(const Options& o, std::istream& in, std::ostream& out) {
  const auto [first, second] = parse_two(read_json(o.input, in));
  const IsoVerdict iso = ring_iso_search(cohomology_presentation(first), cohomology_presentation(second), o.bound);
  const HomeoVerdict verdict = homeomorphic(first, second);
  const std::string status = oracle_status(verdict, iso, first, second);
  emit(out, Json{{"verdict", verdict_to_json(iso)},
                 {"classifier", {{"homeomorphic", verdict.homeomorphic}, {"rule", verdict.rule}}},
                 {"status", status}});
  return status == "disagree" ? kDisagreement : kOk;
}

int cmd_witness_check(const Options& o, std::istream& in, std::ostream& out) {
  if (!o.family.empty()) {
    const auto family = parse_witness_family(o.family);
    if (!family) throw UsageError("unknown witness family '" + o.family + "' (spread, fold-r, fold-s)");
    const WitnessTriple triple = builtin_witness(*family, o.witness);
    const bool holds = witness_check(triple.source_weights, triple.target_weights, triple.witness);
    emit(out, Json{{"family", witness_family_name(*family)},
                   {"source", char_pair_to_json(triple.source)},
                   {"target", char_pair_to_json(triple.target)},
                   {"u", matrix_to_json(triple.source_weights)},
                   {"u_prime", matrix_to_json(triple.target_weights)},
                   {"s", matrix_to_json(triple.witness.signed_permutation())},
                   {"t", matrix_to_json(triple.witness.reparametrization())},
                   {"holds", holds}});
    return holds ? kOk : kDisagreement;
  }
  const Json j = read_json(o.input, in);
  for (const char* key : {"u", "u_prime", "s", "t"}) {
    if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("witness input needs field '") + key + "'");
  }
  IntMatrix u, u_prime, s, t;
  try {
    u = matrix_from_json(j.at("u"));
    u_prime = matrix_from_json(j.at("u_prime"));
    s = matrix_from_json(j.at("s"));
    t = matrix_from_json(j.at("t"));
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  const MonomialWitness witness(std::move(s), std::move(t));
  emit(out, Json{{"holds", witness_check(u, u_prime, witness)}});
  return kOk;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "CharPair JSON file, '-' for standard input")->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Homeomorphism classification of quasitoric manifolds with second Betti number 2", "qtoric"};
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "check non-singularity (closed form and vertex oracle)");
  add_input(validate_cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "canonical homeomorphism class of a CharPair");
  add_input(classify_cmd, o);
  add_format(classify_cmd, o);

  auto* compare_cmd = app.add_subcommand("compare", "decide whether two CharPairs are homeomorphic");
  add_input(compare_cmd, o);
  compare_cmd->add_flag("--check", o.check, "cross-check with the ring isomorphism search");
  compare_cmd->add_option("--bound", o.bound, "entry bound for --check")->capture_default_str();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list homeomorphism classes over Delta^n x Delta^m");
  enumerate_cmd->add_option("--n", o.n, "larger simplex dimension")->required();
  enumerate_cmd->add_option("--m", o.m, "smaller simplex dimension")->required();
  enumerate_cmd->add_option("--bound", o.bound, "max |entry| of generated CharPairs")->capture_default_str();
  add_format(enumerate_cmd, o);

  auto* count_cmd = app.add_subcommand("count", "number of classes not homeomorphic to a generalized Bott manifold");
  count_cmd->add_option("--n", o.n, "larger simplex dimension");
  count_cmd->add_option("--m", o.m, "smaller simplex dimension");
  count_cmd->add_option("--max", o.max_dim, "tabulate all 1 <= m <= n <= max");
  add_format(count_cmd, o);

  auto* cohomology_cmd = app.add_subcommand("cohomology", "cohomology ring presentation and graded ranks");
  add_input(cohomology_cmd, o);

  auto* kernel_cmd = app.add_subcommand("kernel", "moment-angle kernel lattice");
  add_input(kernel_cmd, o);

  auto* oracle_cmd = app.add_subcommand("oracle-iso", "brute-force graded ring isomorphism search");
  add_input(oracle_cmd, o);
  oracle_cmd->add_option("--bound", o.bound, "max |entry| of the substitution matrix")->capture_default_str();

  auto* witness_cmd = app.add_subcommand("witness-check", "check an equivariance witness");
  add_input(witness_cmd, o);
  witness_cmd->add_option("--family", o.family, "built-in witness family: spread, fold-r, fold-s");
  witness_cmd->add_option("--n", o.witness.n, "n")->capture_default_str();
  witness_cmd->add_option("--m", o.witness.m, "m")->capture_default_str();
  witness_cmd->add_option("--s", o.witness.s, "s (fold families)")->capture_default_str();
  witness_cmd->add_option("--r", o.witness.r, "r (fold families)")->capture_default_str();
  witness_cmd->add_option("--a", o.witness.a, "a (spread)")->capture_default_str();
  witness_cmd->add_option("--b", o.witness.b, "b (spread)")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, in, out);
    if (*classify_cmd) return cmd_classify(o, in, out);
    if (*compare_cmd) return cmd_compare(o, in, out);
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*count_cmd) {
      if (o.max_dim <= 0 && (o.n <= 0 || o.m <= 0)) throw UsageError("count needs --n and --m, or --max");
      return cmd_count(o, out);
    }
    if (*cohomology_cmd) return cmd_cohomology(o, in, out);
    if (*kernel_cmd) return cmd_kernel(o, in, out);
    if (*oracle_cmd) return cmd_oracle_iso(o, in, out);
    if (*witness_cmd) return cmd_witness_check(o, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidData;
  } catch (const DimensionMismatch& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidData;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidData;
  }
  return kUsageError;
}

}  // namespace qtoric::cli

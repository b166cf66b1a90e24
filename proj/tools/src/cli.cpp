#include "sumsq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

#include "sos/arith.hpp"
#include "sos/error.hpp"
#include "sos/fq_poly.hpp"
#include "sos/global_square.hpp"
#include "sos/lengths.hpp"
#include "sos/oracles.hpp"
#include "sumsq/expr.hpp"

namespace sumsq {

using sos::Integer;
using sos::Rational;
using Json = nlohmann::ordered_json;

namespace {

// Bad combination of flags or an index outside the valid range.
class UsageError : public sos::Error {
 public:
  using Error::Error;
};

// ---- field and element specs --------------------------------------------

// Polynomials over Q; division only by nonzero constants.
struct QP {
  sos::QPoly p;
  friend QP operator+(const QP& a, const QP& b) { return {a.p + b.p}; }
  friend QP operator-(const QP& a, const QP& b) { return {a.p - b.p}; }
  friend QP operator*(const QP& a, const QP& b) { return {a.p * b.p}; }
  QP operator-() const { return {-p}; }
  friend QP operator/(const QP& a, const QP& b) {
    if (b.p.degree() != 0) throw sos::ParseError("division by a non-constant polynomial");
    return {Rational(1 / b.p.coeff(0)) * a.p};
  }
};

QP qp_leaf(const Expr& n) {
  if (n.kind == Expr::Kind::Num) return {sos::QPoly({Rational(n.num)})};
  return {sos::QPoly({Rational(0), Rational(1)})};
}

QP qp_pow(const QP& b, long k) {
  if (k < 0) {
    if (b.p.degree() != 0) throw sos::ParseError("negative exponent of a non-constant polynomial");
    return qp_pow(QP{sos::QPoly({Rational(1)})} / b, -k);
  }
  QP r{sos::QPoly({Rational(1)})};
  for (long i = 0; i < k; ++i) r = r * b;
  return r;
}

sos::QPoly parse_qpoly(const std::string& s) { return evaluate<QP>(parse_expression(s, {"x"}), qp_leaf, qp_pow).p; }

Rational parse_rational(const std::string& s) {
  sos::QPoly p = evaluate<QP>(parse_expression(s, {}), qp_leaf, qp_pow).p;
  return p.is_zero() ? Rational(0) : p.coeff(0);
}

Integer parse_integer(const std::string& s, const std::string& what) {
  Integer n;
  if (s.empty() || n.set_str(s, 10) != 0) throw sos::ParseError(what + " must be an integer, got \"" + s + "\"");
  return n;
}

using Field = std::variant<sos::NumberField, sos::FunctionField>;

struct FieldOpts {
  std::string poly;
  std::string q;
};

Field make_field(const FieldOpts& o) {
  if (o.poly.empty() == o.q.empty()) throw UsageError("give exactly one of --field and --rational-function-field");
  if (!o.poly.empty()) {
    sos::QPoly f = parse_qpoly(o.poly);
    if (f.degree() < 1) throw sos::ParseError("defining polynomial must have degree at least 1");
    return sos::NumberField::from_polynomial(f);
  }
  return sos::FunctionField::rational(parse_integer(o.q, "q"));
}

sos::NFElem parse_nf(const sos::NumberField& K, const std::string& s) {
  auto leaf = [&](const Expr& n) {
    if (n.kind == Expr::Kind::Num) return K.from_rational(Rational(n.num));
    return K.input_generator();
  };
  auto pw = [](const sos::NFElem& b, long k) { return b.pow(k); };
  return evaluate<sos::NFElem>(parse_expression(s, {"a"}), leaf, pw);
}

sos::FFElem parse_ff(const sos::FunctionField& K, const std::string& s) {
  const bool has_g = K.base().degree() > 1;
  auto leaf = [&](const Expr& n) {
    if (n.kind == Expr::Kind::Num) return K.constant(K.base().from_integer(n.num));
    if (n.sym == "x") return K.x();
    return K.g();
  };
  auto pw = [](const sos::FFElem& b, long k) { return b.pow(k); };
  std::set<std::string> symbols{"x"};
  if (has_g) symbols.insert("g");
  return evaluate<sos::FFElem>(parse_expression(s, symbols), leaf, pw);
}

Json field_json(const Field& F) {
  if (auto* K = std::get_if<sos::NumberField>(&F))
    return {{"kind", "number"}, {"polynomial", sos::to_string(K->input_polynomial(), "x")}};
  const auto& K = std::get<sos::FunctionField>(F);
  return {{"kind", "function"}, {"q", K.q().fits_slong_p() ? Json(K.q().get_si()) : Json(K.q().get_str())}};
}

std::string field_text(const Field& F) {
  if (auto* K = std::get_if<sos::NumberField>(&F)) {
    if (K->degree() == 1) return "Q";
    return "Q(a), " + sos::to_string(K->input_polynomial(), "a") + " = 0";
  }
  return "F_" + std::get<sos::FunctionField>(F).q().get_str() + "(x)";
}

std::vector<std::string> field_warnings(const Field& F) {
  std::vector<std::string> w;
  if (auto* K = std::get_if<sos::NumberField>(&F); K && K->was_normalized())
    w.push_back("defining polynomial normalized to " + sos::to_string(K->polynomial(), "theta") + " with theta = " +
                K->scale().get_str() + "*a; places are named in theta");
  return w;
}

// ---- reports ---------------------------------------------------------------

Json length_json(int l) { return l == sos::kInfiniteLength ? Json("infinity") : Json(l); }

Json certificate_json(const sos::LengthCertificate& c) {
  Json arr = Json::array();
  for (const auto& e : c.entries)
    arr.push_back({{"place", e.place}, {"e", e.e}, {"f", e.f}, {"local_length", length_json(e.local_length)}});
  return arr;
}

void print_certificate(std::ostream& out, const sos::LengthResult& r, const std::string& root) {
  if (!root.empty()) out << "square root: " << root << "\n";
  if (r.certificate.baseline_two) out << "nonsquare sum of squares, so length >= 2\n";
  if (r.certificate.entries.empty()) return;
  out << "certificate:\n";
  for (const auto& e : r.certificate.entries)
    out << "  " << e.place << "  e=" << e.e << " f=" << e.f << "  local length " << sos::length_to_string(e.local_length)
        << "\n";
}

void print_notes(std::ostream& out, const std::vector<std::string>& notes) {
  for (const auto& n : notes) out << "note: " << n << "\n";
}

// ---- commands --------------------------------------------------------------

struct Ctx {
  bool json = false;
  FieldOpts field;
  std::string elem;
  unsigned precision_start = 16;
  std::string prime_scan_bound = "100000";
  std::string prime;
  int index = 0;
  std::optional<int> infinite;
  std::string place;
  std::string value;
  std::string a, b;
  std::optional<int> degree_bound;
};

void cmd_length(const Ctx& c, std::ostream& out) {
  if (c.elem.empty()) throw UsageError("--elem is required");
  Field F = make_field(c.field);
  Json j;
  j["field"] = field_json(F);
  sos::LengthResult r;
  std::string root;
  if (auto* K = std::get_if<sos::NumberField>(&F)) {
    sos::NFElem a = parse_nf(*K, c.elem);
    j["element"] = a.to_input_string("a");
    r = sos::length_nf(a, {c.precision_start});
    if (r.certificate.root) root = r.certificate.root->to_input_string("a");
  } else {
    sos::FFElem a = parse_ff(std::get<sos::FunctionField>(F), c.elem);
    j["element"] = a.to_string("x");
    r = sos::length_ff(a);
  }
  const auto warnings = field_warnings(F);
  if (c.json) {
    j["length"] = length_json(r.length);
    j["certificate"] = certificate_json(r.certificate);
    if (!root.empty()) j["root"] = root;
    j["warnings"] = warnings;
    out << j.dump() << "\n";
    return;
  }
  out << "field: " << field_text(F) << "\nelement: " << j["element"].get<std::string>()
      << "\nlength: " << sos::length_to_string(r.length) << "\n";
  print_certificate(out, r, root);
  print_notes(out, warnings);
}

void cmd_pythagoras(const Ctx& c, std::ostream& out) {
  Field F = make_field(c.field);
  Json j;
  j["field"] = field_json(F);
  int number = 0;
  std::string element;
  sos::LengthResult verification;
  std::vector<std::string> notes = field_warnings(F);
  if (auto* K = std::get_if<sos::NumberField>(&F)) {
    sos::PythagorasOptions opts;
    opts.prime_scan_bound = parse_integer(c.prime_scan_bound, "--prime-scan-bound");
    opts.dyadic_precision = c.precision_start;
    auto r = sos::pythagoras_element_nf(*K, opts);
    number = r.number;
    element = r.element.to_input_string("a");
    verification = r.verification;
    notes.insert(notes.end(), r.notes.begin(), r.notes.end());
  } else {
    auto r = sos::pythagoras_element_ff(std::get<sos::FunctionField>(F));
    number = r.number;
    element = r.element.to_string("x");
    verification = r.verification;
  }
  if (c.json) {
    j["pythagoras_number"] = number;
    j["element"] = element;
    j["length"] = length_json(verification.length);
    j["certificate"] = certificate_json(verification.certificate);
    j["warnings"] = notes;
    out << j.dump() << "\n";
    return;
  }
  out << "field: " << field_text(F) << "\npythagoras number: " << number << "\nelement: " << element
      << "\nverified length: " << sos::length_to_string(verification.length) << "\n";
  print_certificate(out, verification, "");
  print_notes(out, notes);
}

sos::PlaceFF parse_place_ff(const sos::FunctionField& K, const std::string& s) {
  if (s == "infinity" || s == "inf") return sos::PlaceFF::infinity();
  sos::FFElem P = parse_ff(K, s);
  const auto& F = K.base();
  if (P.den().degree() != 0 || P.num().degree() < 1 || P.num().lead() != F.one() ||
      !sos::is_irreducible_fq(F, P.num()))
    throw UsageError("--place must be \"infinity\" or a monic irreducible polynomial in x, got \"" + s + "\"");
  return sos::PlaceFF::finite(P.num());
}

void cmd_local(const Ctx& c, std::ostream& out) {
  if (c.elem.empty()) throw UsageError("--elem is required");
  Field F = make_field(c.field);
  Json j;
  j["field"] = field_json(F);
  std::string place;
  int e = 1, f = 1, l = 0;
  if (auto* K = std::get_if<sos::NumberField>(&F)) {
    if (!c.place.empty()) throw UsageError("--place applies to function fields; use --prime or --infinite");
    sos::NFElem a = parse_nf(*K, c.elem);
    j["element"] = a.to_input_string("a");
    if (c.infinite) {
      if (!c.prime.empty()) throw UsageError("give either --prime or --infinite");
      const auto& emb = K->real_embeddings();
      if (*c.infinite < 0 || *c.infinite >= static_cast<int>(emb.size()))
        throw UsageError("real embedding index " + std::to_string(*c.infinite) + " out of range; the field has " +
                         std::to_string(emb.size()));
      const auto& rho = emb[static_cast<std::size_t>(*c.infinite)];
      place = sos::place_name(rho);
      l = sos::local_length_real(a, rho);
    } else {
      if (c.prime.empty()) throw UsageError("--prime or --infinite is required");
      const Integer p = parse_integer(c.prime, "--prime");
      if (p < 2 || !sos::is_prime(p)) throw UsageError("--prime must be a rational prime, got " + c.prime);
      auto primes = sos::split_prime(*K, p);
      if (c.index < 0 || c.index >= static_cast<int>(primes.size()))
        throw UsageError("prime index " + std::to_string(c.index) + " out of range; " + p.get_str() + " has " +
                         std::to_string(primes.size()) + " primes above it");
      const auto& P = primes[static_cast<std::size_t>(c.index)];
      place = sos::place_name(P);
      e = P.e();
      f = P.f_deg();
      l = P.is_dyadic() ? sos::local_length_dyadic(a, sos::dyadic_completion(P, c.precision_start))
                        : sos::local_length_nondyadic(a, P);
    }
  } else {
    if (!c.prime.empty() || c.infinite) throw UsageError("function-field places are given with --place");
    if (c.place.empty()) throw UsageError("--place is required");
    const auto& FK = std::get<sos::FunctionField>(F);
    sos::FFElem a = parse_ff(FK, c.elem);
    j["element"] = a.to_string("x");
    auto pl = parse_place_ff(FK, c.place);
    place = pl.to_string(FK);
    f = pl.degree();
    l = sos::local_length_nondyadic(a, pl);
  }
  if (c.json) {
    j["place"] = place;
    j["e"] = e;
    j["f"] = f;
    j["local_length"] = length_json(l);
    j["warnings"] = field_warnings(F);
    out << j.dump() << "\n";
    return;
  }
  out << "place: " << place << "  e=" << e << " f=" << f << "\nlocal length: " << sos::length_to_string(l) << "\n";
  print_notes(out, field_warnings(F));
}

void print_report(const Ctx& c, std::ostream& out, const sos::OracleReport& r, const std::string& what) {
  if (c.json) {
    out << Json{{"input", r.input}, {"value", r.value}, {"method", sos::to_string(r.method)}}.dump() << "\n";
    return;
  }
  out << what << "(" << r.input << ") = " << r.value << "  [" << sos::to_string(r.method) << "]\n";
}

void cmd_oracle_length_q(const Ctx& c, std::ostream& out) {
  print_report(c, out, sos::length_q_report(parse_rational(c.value)), "length-q");
}

void cmd_oracle_length_ff(const Ctx& c, std::ostream& out) {
  if (c.elem.empty()) throw UsageError("--elem is required");
  Field F = make_field({"", c.field.q});
  const auto& K = std::get<sos::FunctionField>(F);
  sos::FFElem a = parse_ff(K, c.elem);
  // -1 nonsquare: no cancellation in f^2 + g^2, so half the degree suffices;
  // otherwise (A + 1)/2 and (A - 1)/(2i) have the degree of A
  const int dA = a.num().degree() + a.den().degree();
  const bool minus_one_square = sos::mod(K.q(), 4) == 1;
  const int bound = c.degree_bound.value_or(minus_one_square ? dA : (dA + 1) / 2);
  const auto v = sos::length_ff_oracle(a, bound);
  sos::OracleReport r{a.to_string("x") + ", degree bound " + std::to_string(bound), sos::to_string(v),
                      sos::OracleMethod::Enumeration};
  print_report(c, out, r, "length-ff");
}

const sos::NumberField& number_field_of(const Field& F) {
  auto* K = std::get_if<sos::NumberField>(&F);
  if (!K) throw UsageError("this oracle needs a number field (--field)");
  return *K;
}

void cmd_oracle_hilbert_product(const Ctx& c, std::ostream& out) {
  Field F = make_field({c.field.poly, ""});
  const Rational a = parse_rational(c.value);
  const bool ok = sos::hilbert_product_check(a, number_field_of(F));
  print_report(c, out, {sos::to_string(a), ok ? "true" : "false", sos::OracleMethod::ProductFormula},
               "hilbert-product");
}

void cmd_oracle_hilbert_dyadic(const Ctx& c, std::ostream& out) {
  if (c.a.empty() || c.b.empty()) throw UsageError("--a and --b are required");
  Field F = make_field({c.field.poly, ""});
  const auto& K = number_field_of(F);
  auto primes = sos::split_prime(K, 2);
  if (c.index < 0 || c.index >= static_cast<int>(primes.size()))
    throw UsageError("dyadic prime index " + std::to_string(c.index) + " out of range; there are " +
                     std::to_string(primes.size()));
  const auto& P = primes[static_cast<std::size_t>(c.index)];
  sos::NFElem a = parse_nf(K, c.a), b = parse_nf(K, c.b);
  const int s = sos::hilbert_dyadic_bruteforce(a, b, sos::dyadic_completion(P));
  sos::OracleReport r{"(" + a.to_input_string("a") + ", " + b.to_input_string("a") + ") at " + sos::place_name(P),
                      s > 0 ? "+1" : "-1", sos::OracleMethod::Enumeration};
  print_report(c, out, r, "hilbert-dyadic");
}

// ---- driver ----------------------------------------------------------------

void add_field_options(CLI::App* cmd, Ctx& c) {
  cmd->add_option("--field", c.field.poly, "Number field: defining polynomial in x over Q (\"x\" is Q itself)");
  cmd->add_option("--rational-function-field", c.field.q, "Function field F_q(x): the odd prime power q");
}

void add_json(CLI::App* cmd, Ctx& c) { cmd->add_flag("--json", c.json, "Print one JSON object"); }

int error_code(std::ostream& err, const std::string& msg, int code) {
  err << "sumsq: " << msg << "\n";
  return code;
}

struct Outcome {
  int code = kExitOk;
  std::string out, err;
};

Outcome run_batch(const std::string& path, bool json);

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool in_batch) {
  Ctx c;
  std::string batch;
  CLI::App app{"Length of sums of squares and Pythagoras numbers in global fields", "sumsq"};
  app.require_subcommand(0, 1);
  app.add_option("--batch", batch, "Run one command per line of FILE; output keeps input order");
  add_json(&app, c);

  auto* length = app.add_subcommand("length", "Length of an element as a sum of squares");
  add_field_options(length, c);
  length->add_option("--elem", c.elem, "Element: polynomial in a (number field) or rational function in x");
  length->add_option("--precision-start", c.precision_start, "Starting dyadic precision 2^N")->check(CLI::Range(1u, 4096u));
  add_json(length, c);

  auto* pyth = app.add_subcommand("pythagoras", "Pythagoras number and a Pythagoras element");
  add_field_options(pyth, c);
  pyth->add_option("--prime-scan-bound", c.prime_scan_bound, "Largest prime tried by the element search");
  pyth->add_option("--precision-start", c.precision_start, "Starting dyadic precision 2^N")->check(CLI::Range(1u, 4096u));
  add_json(pyth, c);

  auto* local = app.add_subcommand("local", "Length in one completion");
  add_field_options(local, c);
  local->add_option("--elem", c.elem, "Element");
  local->add_option("--prime", c.prime, "Rational prime below the place");
  local->add_option("--index", c.index, "Which prime above --prime, in Kummer factor order (default 0)");
  local->add_option("--infinite", c.infinite, "Index of a real embedding");
  local->add_option("--place", c.place, "Function-field place: monic irreducible in x, or \"infinity\"");
  local->add_option("--precision-start", c.precision_start, "Starting dyadic precision 2^N")->check(CLI::Range(1u, 4096u));
  add_json(local, c);

  auto* oracle = app.add_subcommand("oracle", "Independent reference computations");
  oracle->require_subcommand(1);
  auto* oq = oracle->add_subcommand("length-q", "Length over Q by the classical theorems");
  oq->add_option("value", c.value, "Nonzero rational")->required();
  add_json(oq, c);
  auto* off = oracle->add_subcommand("length-ff", "Two-square search in F_q(x)");
  off->add_option("--rational-function-field", c.field.q, "Odd prime power q")->required();
  off->add_option("--elem", c.elem, "Rational function in x");
  off->add_option("--degree-bound", c.degree_bound, "Largest degree of f and g in f^2 + g^2");
  add_json(off, c);
  auto* ohp = oracle->add_subcommand("hilbert-product", "Reciprocity check for (-1, a) over a number field");
  ohp->add_option("--field", c.field.poly, "Defining polynomial in x")->required();
  ohp->add_option("value", c.value, "Nonzero rational a")->required();
  add_json(ohp, c);
  auto* ohd = oracle->add_subcommand("hilbert-dyadic", "(a, b) at a dyadic prime by exhaustive search");
  ohd->add_option("--field", c.field.poly, "Defining polynomial in x")->required();
  ohd->add_option("--index", c.index, "Which prime above 2 (default 0)");
  ohd->add_option("--a", c.a, "First entry")->required();
  ohd->add_option("--b", c.b, "Second entry")->required();
  add_json(ohd, c);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return error_code(err, e.what(), kExitUsage);
  }

  try {
    if (!batch.empty()) {
      if (in_batch) throw UsageError("--batch cannot be nested");
      if (!app.get_subcommands().empty()) throw UsageError("--batch takes no subcommand");
      Outcome o = run_batch(batch, c.json);
      out << o.out;
      err << o.err;
      return o.code;
    }
    if (length->parsed()) cmd_length(c, out);
    else if (pyth->parsed()) cmd_pythagoras(c, out);
    else if (local->parsed()) cmd_local(c, out);
    else if (oq->parsed()) cmd_oracle_length_q(c, out);
    else if (off->parsed()) cmd_oracle_length_ff(c, out);
    else if (ohp->parsed()) cmd_oracle_hilbert_product(c, out);
    else if (ohd->parsed()) cmd_oracle_hilbert_dyadic(c, out);
    else {
      out << app.help();
      return kExitUsage;
    }
    return kExitOk;
  } catch (const sos::NotPMaximal& e) {
    return error_code(err, e.what(), kExitNotPMaximal);
  } catch (const sos::SearchBoundExceeded& e) {
    return error_code(err, e.what(), kExitSearchBound);
  } catch (const UsageError& e) {
    return error_code(err, e.what(), kExitUsage);
  } catch (const sos::ParseError& e) {
    return error_code(err, e.what(), kExitUsage);
  } catch (const sos::UnsupportedField& e) {
    return error_code(err, e.what(), kExitUsage);
  } catch (const sos::ReduciblePolynomial& e) {
    return error_code(err, e.what(), kExitUsage);
  } catch (const sos::ZeroElement& e) {
    return error_code(err, e.what(), kExitUsage);
  } catch (const sos::DivisionByZero& e) {
    return error_code(err, std::string(e.what()) + " while evaluating the input", kExitUsage);
  } catch (const std::invalid_argument& e) {
    return error_code(err, e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return error_code(err, e.what(), kExitFailure);
  }
}

std::vector<std::string> split_arguments_checked(const std::string& line, Outcome& o) {
  try {
    return split_arguments(line);
  } catch (const sos::ParseError& e) {
    o.code = kExitUsage;
    o.err = std::string("sumsq: ") + e.what() + "\n";
    return {};
  }
}

Outcome run_line(const std::string& line, bool json) {
  Outcome o;
  auto args = split_arguments_checked(line, o);
  if (o.code != kExitOk) return o;
  if (json && std::find(args.begin(), args.end(), "--json") == args.end()) args.push_back("--json");
  std::ostringstream out, err;
  o.code = run_impl(args, out, err, true);
  o.out = out.str();
  o.err = err.str();
  return o;
}

Outcome run_batch(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open batch file " + path);
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.emplace_back(n, line);
  }
  // lines are independent; results are collected in input order
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> results(lines.size());
  for (std::size_t start = 0; start < lines.size(); start += width) {
    std::vector<std::future<Outcome>> jobs;
    for (std::size_t i = start; i < std::min(lines.size(), start + width); ++i)
      jobs.push_back(std::async(std::launch::async, run_line, lines[i].second, json));
    for (std::size_t i = 0; i < jobs.size(); ++i) results[start + i] = jobs[i].get();
  }
  Outcome total;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    total.out += r.out;
    if (!r.err.empty()) total.err += "line " + std::to_string(lines[i].first) + ": " + r.err;
    if (r.code != kExitOk && json) {
      std::string msg = r.err.substr(0, r.err.find_last_not_of('\n') + 1);
      total.out += Json{{"line", lines[i].first}, {"exit", r.code}, {"error", msg}}.dump() + "\n";
    }
    total.code = std::max(total.code, r.code);
  }
  return total;
}

}  // namespace

std::vector<std::string> split_arguments(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) quote = 0;
      else cur += ch;
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (in_word) out.push_back(std::move(cur));
      cur.clear();
      in_word = false;
    } else {
      cur += ch;
      in_word = true;
    }
  }
  if (quote) throw sos::ParseError("unterminated quote in \"" + line + "\"");
  if (in_word) out.push_back(std::move(cur));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err, false);
  } catch (const sos::ParseError& e) {
    return error_code(err, e.what(), kExitUsage);
  }
}

}  // namespace sumsq

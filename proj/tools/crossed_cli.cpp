// Command-line front end.  Every subcommand reads or builds a document,
// calls the library, and writes a document or a report.
//
// Exit codes: 0 pass, 1 semantic failure, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "crossed/crossed.hpp"

using namespace crossed;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
  std::string command;
  std::string path;
  std::string out;
  std::string field;
  std::string report = "json";
  std::string example;
  std::string group;
  std::string dual_kind;
  bool force = false;
  bool oracle_compare = false;
  bool semisimple = false;
  bool embedding = false;
};

/// Raised for refusals that are the caller's to fix (budget, wrong kind).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string source_name(const Json& meta) {
  if (meta.is_object() && meta.contains("name") && meta.at("name").is_string()) return meta.at("name").get<std::string>();
  return "H";
}

void guard(const Options& o, double estimate, const std::string& what) {
  auto b = check_budget(estimate);
  if (b.exceeded() && !o.force) throw InputError(b.message(what));
  if (b.exceeded()) std::cerr << "warning: " << b.message(what) << "; continuing (--force)\n";
}

template <class T>
std::vector<std::size_t> dims_of(const TCoalgebra<T>& H) {
  std::vector<std::size_t> d;
  for (std::size_t a = 0; a < H.n(); ++a) d.push_back(H.dim(a));
  return d;
}

void emit_report(const Options& o, const ValidationReport& rep) {
  write_text(o.out, o.report == "text" ? to_text(rep) : to_json(rep).dump(2) + "\n");
}

/// Documents go to --out (or stdout); with --report text the checks go to stderr.
template <class T>
void emit_document(const Options& o, const Document<T>& d, const ValidationReport* checks) {
  write_text(o.out, serialize(d));
  if (checks && o.report == "text") std::cerr << to_text(*checks);
}

int verdict(const ValidationReport& rep) {
  if (rep.passed()) return kPass;
  auto ids = rep.failing_ids();
  const auto* a = rep.find(ids.front());
  std::cerr << "FAIL " << rep.subject << ": " << ids.front();
  if (!a->failures.empty()) std::cerr << " at " << a->failures.front().where << ": " << a->failures.front().witness;
  std::cerr << "\n";
  return kFail;
}

template <class T>
const TCoalgebra<T>& need_tcoalgebra(const Document<T>& d) {
  if (!d.is_tcoalgebra()) throw InputError("expected a tcoalgebra document, got " + d.kind());
  return d.tcoalgebra();
}

template <class T>
RMatrixFamily<T> need_rmatrix(const Document<T>& d) {
  if (!d.rmatrix) throw InputError("the document has no rmatrix section");
  return document_rmatrix(d);
}

template <class T>
int cmd_validate(const Options& o, const Document<T>& d) {
  ValidationReport rep;
  if (d.is_tcoalgebra()) {
    const auto& H = d.tcoalgebra();
    guard(o, estimate_validate_ops(H.group, dims_of(H)), "validate");
    rep = validate(H, source_name(d.metadata));
    if (d.rmatrix) {
      auto R = document_rmatrix(d);
      rep.append(check_qt(H, R), "qt:");
      rep.append(check_yang_baxter(H, R), "qt:");
      if (d.twist) rep.append(check_twist_theta(H, R, TwistFamily<T>{*d.twist}), "twist:");
    } else if (d.twist) {
      throw InputError("a twist section needs an rmatrix section");
    }
  } else if (d.is_talgebra()) {
    rep = validate_talgebra(d.talgebra(), source_name(d.metadata));
  } else {
    rep = validate_graded(d.graded(), source_name(d.metadata));
  }
  emit_report(o, rep);
  return verdict(rep);
}

template <class T>
int cmd_double(const Options& o, const Document<T>& d) {
  const auto& H = need_tcoalgebra(d);
  auto dd = double_dims(H.group, dims_of(H));
  guard(o, estimate_validate_ops(H.group, dd), "double");
  std::string name = source_name(d.metadata);
  require_valid(H, name);
  auto Q = quantum_double(H);
  ValidationReport rep = validate(Q.D, "D(" + name + ")");
  rep.append(check_qt(Q.D, Q.R), "qt:");
  rep.append(check_yang_baxter(Q.D, Q.R), "qt:");
  rep.append(check_double_universal(H, Q), "universal:");
  if (o.oracle_compare) {
    if (H.n() != 1) throw InputError("--oracle-compare needs the trivial group");
    auto C = classical_double(component_hopf(H));
    auto r = compare_hopf_oracle(Q, C);
    rep.axioms.push_back(std::move(r));
  }
  auto out = make_document(Q.D, "D(" + name + ")");
  out.rmatrix = Q.R.r;
  out.metadata["provenance"] = "quantum double of " + name;
  out.metadata["dims"] = dd;
  out.metadata["checks"] = to_json(rep);
  emit_document(o, out, &rep);
  return verdict(rep);
}

template <class T>
int cmd_ribbon(const Options& o, const Document<T>& d) {
  const auto& H = need_tcoalgebra(d);
  auto R = need_rmatrix(d);
  std::string name = source_name(d.metadata);
  if (o.semisimple) {
    auto theta = ribbon_from_semisimple(H, R);
    ValidationReport rep = check_twist_theta(H, R, theta);
    auto out = d;
    out.twist = theta.t;
    out.metadata["provenance"] = "semisimple ribbon structure theta = u^-1 on " + name;
    out.metadata["checks"] = to_json(rep);
    emit_document(o, out, &rep);
    return verdict(rep);
  }
  std::vector<std::size_t> rd;
  for (auto x : dims_of(H)) rd.push_back(2 * x);
  guard(o, estimate_validate_ops(H.group, rd), "ribbon");
  auto X = ribbon_extension(H, R);
  ValidationReport rep = validate(X.RT, "RT(" + name + ")");
  rep.append(check_qt(X.RT, X.R), "qt:");
  rep.append(check_twist_v(X.RT, X.R, X.v), "twist:");
  auto theta = twist_conversion(X.RT, X.R, X.v, TwistKind::V);
  rep.append(check_twist_theta(X.RT, X.R, theta), "twist:");
  AxiomResult rt = run_axiom("twist:conversion-round-trip", "derived", 1, [&](std::size_t) -> std::optional<Failure> {
    auto back = twist_conversion(X.RT, X.R, theta, TwistKind::Theta);
    if (back == X.v) return std::nullopt;
    return Failure{"all grades", "v -> theta -> v differs"};
  });
  rep.axioms.push_back(rt);
  auto out = make_document(X.RT, "RT(" + name + ")");
  out.rmatrix = X.R.r;
  out.twist = theta.t;
  out.metadata["provenance"] = "ribbon extension of " + name;
  out.metadata["checks"] = to_json(rep);
  emit_document(o, out, &rep);
  return verdict(rep);
}

template <class T>
int cmd_analyze(const Options& o, const Document<T>& d) {
  const auto& H = need_tcoalgebra(d);
  Json j = Json::object();
  j["subject"] = source_name(d.metadata);
  int code = kPass;
  try {
    auto v = is_semisimple(H);
    j["semisimple"] = v.overall;
    j["semisimplicity"] = {{"field", v.field}, {"dims", v.dims}, {"trace_form_ranks", v.ranks}, {"components", v.components},
                           {"h1", v.h1}, {"consistent", v.consistent}};
  } catch (const UnsupportedCharacteristic& e) {
    j["semisimple"] = nullptr;
    j["semisimplicity"] = {{"unsupported", e.what()}};
  }
  if (d.rmatrix) {
    auto F = factorizability(H, document_rmatrix(d));
    j["factorizability"] = {{"component", "1"}, {"dim", F.lambda.rows()}, {"rank", F.rank}, {"bijective", F.bijective}};
  }
  if (o.embedding) {
    guard(o, estimate_validate_ops(H.group, double_dims(H.group, dims_of(H))), "analyze --embedding");
    auto F = d1_factorizability(H);
    j["double_d1_factorizability"] = {{"dim", F.direct.lambda.rows()},
                                      {"rank", F.direct.rank},
                                      {"bijective", F.direct.bijective},
                                      {"rank_bound", F.bound},
                                      {"packed_double_rank", F.packed_rank},
                                      {"packed_double_dim", F.packed_dim},
                                      {"restricted_rank", F.restricted_rank}};
    auto E = check_packed_double_embedding(H);
    j["packed_embedding"] = to_json(E.report);
    j["packed_products_identical"] = E.identical;
    if (!E.identical) j["product_witness"] = E.witness;
    if (!E.report.passed()) code = kFail;
  }
  if (o.report == "text") {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) s += it.key() + ": " + it.value().dump() + "\n";
    write_text(o.out, s);
  } else {
    write_text(o.out, j.dump(2) + "\n");
  }
  return code;
}

template <class T>
int cmd_example(const Options& o, const FieldSpec& f) {
  auto ex = builtin<T>(o.example, f, o.group);
  auto d = make_document(ex.H, ex.name);
  if (ex.R) d.rmatrix = ex.R->r;
  d.metadata["provenance"] = "builtin example";
  emit_document(o, d, nullptr);
  return kPass;
}

template <class T>
int cmd_mirror(const Options& o, const Document<T>& d) {
  const auto& H = need_tcoalgebra(d);
  std::string name = "mirror(" + source_name(d.metadata) + ")";
  Document<T> out;
  if (d.rmatrix) {
    auto [M, MR] = mirror_qt(H, document_rmatrix(d));
    out = make_document(M, name);
    out.rmatrix = MR.r;
  } else {
    out = make_document(mirror(H), name);
  }
  out.metadata["provenance"] = "mirror";
  emit_document(o, out, nullptr);
  return kPass;
}

template <class T>
int cmd_dual(const Options& o, const Document<T>& d) {
  const auto& H = need_tcoalgebra(d);
  std::string base = source_name(d.metadata);
  Document<T> out;
  out.field = d.field;
  if (o.dual_kind == "outer") {
    out.payload = outer_dual(H);
  } else if (o.dual_kind == "inner") {
    out.payload = inner_dual(H);
  } else if (o.dual_kind == "coop-inner") {
    out.payload = coop_inner_dual(H);
  } else {
    throw InputError("dual kind must be outer, inner or coop-inner");
  }
  out.metadata["name"] = o.dual_kind + "-dual(" + base + ")";
  out.metadata["provenance"] = o.dual_kind + " dual";
  emit_document(o, out, nullptr);
  return kPass;
}

template <class T>
int cmd_pack(const Options& o, const Document<T>& d) {
  Document<T> out;
  out.field = d.field;
  if (d.is_tcoalgebra()) {
    out.payload = pack_tcoalgebra(d.tcoalgebra());
  } else if (d.is_talgebra()) {
    out.payload = pack_talgebra(d.talgebra());
  } else {
    throw InputError("document is already packed");
  }
  out.metadata["name"] = "pack(" + source_name(d.metadata) + ")";
  out.metadata["provenance"] = "packed form";
  emit_document(o, out, nullptr);
  return kPass;
}

template <class T>
int cmd_unpack(const Options& o, const Document<T>& d) {
  if (!d.is_graded()) throw InputError("unpack needs a graded-hopf document");
  const auto& P = d.graded();
  Document<T> out;
  out.field = d.field;
  if (P.kind == GradedKind::TCoalgebra)
    out.payload = unpack_tcoalgebra(P);
  else
    out.payload = unpack_talgebra(P);
  out.metadata["name"] = "unpack(" + source_name(d.metadata) + ")";
  out.metadata["provenance"] = "unpacked form";
  emit_document(o, out, nullptr);
  return kPass;
}

template <class T>
int dispatch(const Options& o, const Json& input, std::optional<FieldSpec> target) {
  auto d = parse_document<T>(input, target);
  if (o.command == "validate") return cmd_validate(o, d);
  if (o.command == "double") return cmd_double(o, d);
  if (o.command == "ribbon") return cmd_ribbon(o, d);
  if (o.command == "analyze") return cmd_analyze(o, d);
  if (o.command == "mirror") return cmd_mirror(o, d);
  if (o.command == "dual") return cmd_dual(o, d);
  if (o.command == "pack") return cmd_pack(o, d);
  if (o.command == "unpack") return cmd_unpack(o, d);
  throw InputError("unknown command " + o.command);
}

int run(const Options& o) {
  std::optional<FieldSpec> target;
  if (!o.field.empty()) target = FieldSpec::parse(o.field);
  if (o.command == "example") {
    FieldSpec f = target.value_or(FieldSpec::rationals());
    return f.is_rational() ? cmd_example<Rational>(o, f) : cmd_example<ModP>(o, f);
  }
  Json input = parse_json_text(read_file(o.path));
  FieldSpec f = target ? *target : document_field(input);
  return f.is_rational() ? dispatch<Rational>(o, input, target) : dispatch<ModP>(o, input, target);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossed: T-coalgebras, quantum doubles and ribbon extensions over finite groups"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("path", o.path, "input document, - for stdin")->required();
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--field", o.field, "Q or GF<p>; rational input is reduced mod p");
    sub->add_option("--report", o.report, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--force", o.force, "run even above the operation budget");
  };
  auto* v = app.add_subcommand("validate", "check the axioms of a document (and its rmatrix and twist)");
  common(v, true);
  auto* db = app.add_subcommand("double", "quantum double D(H) with its R-matrix and universal-property checks");
  common(db, true);
  db->add_flag("--oracle-compare", o.oracle_compare, "compare with the classical double (trivial group only)");
  auto* rb = app.add_subcommand("ribbon", "ribbon extension RT(H), or theta = u^-1 with --semisimple");
  common(rb, true);
  rb->add_flag("--semisimple", o.semisimple, "use theta = u^-1 on a semisimple input");
  auto* an = app.add_subcommand("analyze", "semisimplicity and factorizability verdicts");
  common(an, true);
  an->add_flag("--embedding", o.embedding, "also compare D_1(H) with the classical double of the packed form");
  auto* ex = app.add_subcommand("example", "write a built-in example");
  common(ex, false);
  ex->add_option("name", o.example, "example name")->required();
  ex->add_option("--group", o.group, "group (1, Z<n>, S3)");
  auto* mi = app.add_subcommand("mirror", "mirror T-coalgebra (with its R-matrix when present)");
  common(mi, true);
  auto* du = app.add_subcommand("dual", "outer, inner or coopposite inner dual");
  du->add_option("kind", o.dual_kind, "outer | inner | coop-inner")->required()->check(CLI::IsMember({"outer", "inner", "coop-inner"}));
  common(du, true);
  auto* pk = app.add_subcommand("pack", "packed graded Hopf algebra");
  common(pk, true);
  auto* up = app.add_subcommand("unpack", "T-coalgebra or T-algebra from a packed document");
  common(up, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  for (auto* s : app.get_subcommands()) o.command = s->get_name();

  try {
    return run(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.semantic() ? kFail : kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

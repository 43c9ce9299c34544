#pragma once

// JSON documents for T-coalgebras, T-algebras and packed Hopf algebras.
//
// Output is canonical: object keys are sorted, rationals are written as
// strings "p/q" in lowest terms, GF(p) elements as integers in [0, p), and
// blocks that are entirely zero are left out.  Grade pairs are keyed "a,b"
// with group element indices; a conjugation block "a,b" is phi_b on H_a.

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "crossed/families.hpp"
#include "crossed/hopf.hpp"

namespace crossed {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;  // std::map-backed, hence sorted keys

template <class T>
struct Document {
  int schema_version = kSchemaVersion;
  FieldSpec field;
  std::variant<TCoalgebra<T>, TAlgebra<T>, GradedHopfAlgebra<T>> payload;
  std::optional<std::vector<Vec<T>>> rmatrix;  // [a*n + b]
  std::optional<std::vector<Vec<T>>> twist;    // [a]
  Json metadata = Json::object();

  bool is_tcoalgebra() const { return std::holds_alternative<TCoalgebra<T>>(payload); }
  bool is_talgebra() const { return std::holds_alternative<TAlgebra<T>>(payload); }
  bool is_graded() const { return std::holds_alternative<GradedHopfAlgebra<T>>(payload); }
  const TCoalgebra<T>& tcoalgebra() const { return std::get<TCoalgebra<T>>(payload); }
  const TAlgebra<T>& talgebra() const { return std::get<TAlgebra<T>>(payload); }
  const GradedHopfAlgebra<T>& graded() const { return std::get<GradedHopfAlgebra<T>>(payload); }
  std::string kind() const { return is_tcoalgebra() ? "tcoalgebra" : is_talgebra() ? "talgebra" : "graded-hopf"; }

  friend bool operator==(const Document& a, const Document& b) {
    return a.schema_version == b.schema_version && a.field == b.field && a.payload == b.payload &&
           a.rmatrix == b.rmatrix && a.twist == b.twist && a.metadata == b.metadata;
  }
};

template <class T>
Document<T> make_document(TCoalgebra<T> H, const std::string& name = "") {
  Document<T> d;
  d.field = H.field;
  d.payload = std::move(H);
  if (!name.empty()) d.metadata["name"] = name;
  return d;
}

template <class T>
RMatrixFamily<T> document_rmatrix(const Document<T>& d) {
  if (!d.rmatrix) throw PreconditionFailed("document has no rmatrix section");
  return make_rmatrix(d.tcoalgebra(), *d.rmatrix);
}

namespace io_detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

inline std::string key1(std::size_t a) { return std::to_string(a); }
inline std::string key2(std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); }

template <class T>
Json scalar(const T& x, const FieldSpec& f) {
  if constexpr (ScalarTraits<T>::characteristic_zero) {
    (void)f;
    return x.to_string();
  } else {
    return x.reduced(f.p).value();
  }
}

template <class T>
T parse_scalar(const Json& j, const FieldSpec& f, const std::string& where) {
  if (j.is_string()) return ScalarTraits<T>::parse(j.get<std::string>(), f);
  if (j.is_number_integer()) return ScalarTraits<T>::make(f, j.get<std::int64_t>());
  fail(where, "expected a scalar (string \"p/q\" or integer)");
}

template <class T>
Json vec(const Vec<T>& v, const FieldSpec& f) {
  auto a = Json::array();
  for (const auto& x : v) a.push_back(scalar(x, f));
  return a;
}

template <class T>
Vec<T> parse_vec(const Json& j, std::size_t n, const FieldSpec& f, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != n) fail(where, "expected length " + std::to_string(n) + ", got " + std::to_string(j.size()));
  Vec<T> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) v.push_back(parse_scalar<T>(j[k], f, where + "[" + std::to_string(k) + "]"));
  return v;
}

template <class T>
bool zero_matrix(const Matrix<T>& m) {
  return is_zero_vec(m.data());
}

template <class T>
Json matrix(const Matrix<T>& m, const FieldSpec& f) {
  auto rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(scalar(m(i, j), f));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Missing blocks read as zero.
template <class T>
Matrix<T> parse_matrix(const Json& obj, const std::string& key, std::size_t rows, std::size_t cols, const FieldSpec& f,
                       const std::string& where) {
  if (!obj.contains(key)) return Matrix<T>(rows, cols);
  const Json& j = obj.at(key);
  std::string w = where + "[" + key + "]";
  if (!j.is_array() || j.size() != rows) fail(w, "expected " + std::to_string(rows) + " rows");
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = parse_vec<T>(j[i], cols, f, w + "[" + std::to_string(i) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

template <class T>
Json algebra(const ComponentAlgebra<T>& A, const FieldSpec& f) {
  std::size_t d = A.dim();
  auto mu = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    auto row = Json::array();
    for (std::size_t j = 0; j < d; ++j) {
      auto p = Json::array();
      for (std::size_t k = 0; k < d; ++k) p.push_back(scalar(A.c(i, j, k), f));
      row.push_back(std::move(p));
    }
    mu.push_back(std::move(row));
  }
  return Json{{"dim", d}, {"mu", mu}, {"unit", vec(A.unit(), f)}};
}

template <class T>
ComponentAlgebra<T> parse_algebra(const Json& j, const FieldSpec& f, const std::string& where) {
  if (!j.is_object() || !j.contains("dim")) fail(where, "expected an object with dim, mu, unit");
  std::size_t d = j.at("dim").get<std::size_t>();
  Vec<T> mu(d * d * d, T(0));
  if (j.contains("mu")) {
    const Json& m = j.at("mu");
    if (!m.is_array() || m.size() != d) fail(where + ".mu", "expected " + std::to_string(d) + " rows");
    for (std::size_t i = 0; i < d; ++i) {
      if (!m[i].is_array() || m[i].size() != d) fail(where + ".mu[" + std::to_string(i) + "]", "wrong length");
      for (std::size_t jj = 0; jj < d; ++jj) {
        auto p = parse_vec<T>(m[i][jj], d, f, where + ".mu[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
        for (std::size_t k = 0; k < d; ++k) mu[(i * d + jj) * d + k] = p[k];
      }
    }
  }
  if (!j.contains("unit")) fail(where, "missing unit");
  return ComponentAlgebra<T>(d, std::move(mu), parse_vec<T>(j.at("unit"), d, f, where + ".unit"));
}

inline Json group(const FiniteGroup& G) { return Json{{"order", G.order()}, {"table", G.table()}, {"names", G.names()}}; }

inline FiniteGroup parse_group(const Json& j) {
  if (!j.is_object() || !j.contains("table")) fail("group", "expected an object with a table");
  auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) fail("group", "order does not match the table");
  try {
    return make_group(std::move(table), std::move(names));
  } catch (const NotAGroup& e) {
    fail("group", e.what());
  }
}

inline Json field(const FieldSpec& f) {
  if (f.is_rational()) return Json{{"kind", "Q"}};
  return Json{{"kind", "GF"}, {"p", f.p}};
}

inline FieldSpec parse_field(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) fail("field", "expected {\"kind\": \"Q\"} or {\"kind\": \"GF\", \"p\": p}");
  auto k = j.at("kind").get<std::string>();
  if (k == "Q") return FieldSpec::rationals();
  if (k == "GF") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  fail("field", "unknown kind '" + k + "'");
}

template <class T>
Json tcoalgebra(const TCoalgebra<T>& H) {
  const auto& f = H.field;
  std::size_t n = H.n();
  Json j = Json::object();
  Json comps = Json::object(), delta = Json::object(), anti = Json::object(), phi = Json::object();
  for (std::size_t a = 0; a < n; ++a) {
    comps[key1(a)] = algebra(H.H(a), f);
    if (!zero_matrix(H.S(a))) anti[key1(a)] = matrix(H.S(a), f);
    for (std::size_t b = 0; b < n; ++b) {
      if (!zero_matrix(H.Delta(a, b))) delta[key2(a, b)] = matrix(H.Delta(a, b), f);
      if (!zero_matrix(H.Phi(b, a))) phi[key2(a, b)] = matrix(H.Phi(b, a), f);
    }
  }
  j["components"] = comps;
  j["delta"] = delta;
  j["counit"] = vec(H.counit, f);
  j["antipode"] = anti;
  j["phi"] = phi;
  return j;
}

template <class T>
TCoalgebra<T> parse_tcoalgebra(const Json& j, const FieldSpec& f, const FiniteGroup& G) {
  TCoalgebra<T> H;
  H.field = f;
  H.group = G;
  std::size_t n = G.order();
  const Json empty = Json::object();
  auto section = [&](const char* k) -> const Json& { return j.contains(k) ? j.at(k) : empty; };
  const Json& comps = section("components");
  for (std::size_t a = 0; a < n; ++a) {
    if (!comps.contains(key1(a))) fail("components", "missing component " + key1(a));
    H.components.push_back(parse_algebra<T>(comps.at(key1(a)), f, "components[" + key1(a) + "]"));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      H.delta.push_back(parse_matrix<T>(section("delta"), key2(a, b), H.dim(a) * H.dim(b), H.dim(G.mul(a, b)), f, "delta"));
  if (!j.contains("counit")) fail("tcoalgebra", "missing counit");
  H.counit = parse_vec<T>(j.at("counit"), H.dim(G.identity()), f, "counit");
  for (std::size_t a = 0; a < n; ++a)
    H.antipode.push_back(parse_matrix<T>(section("antipode"), key1(a), H.dim(G.inv(a)), H.dim(a), f, "antipode"));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      H.phi.push_back(parse_matrix<T>(section("phi"), key2(a, b), H.dim(G.conj(b, a)), H.dim(a), f, "phi"));
  return H;
}

template <class T>
Json talgebra(const TAlgebra<T>& A) {
  const auto& f = A.field;
  std::size_t n = A.n();
  Json comps = Json::object(), mu = Json::object(), anti = Json::object(), psi = Json::object();
  for (std::size_t a = 0; a < n; ++a) {
    const auto& C = A.components[a];
    comps[key1(a)] = Json{{"dim", C.dim}, {"delta", matrix(C.delta, f)}, {"counit", vec(C.counit, f)}};
    if (!zero_matrix(A.S(a))) anti[key1(a)] = matrix(A.S(a), f);
    for (std::size_t b = 0; b < n; ++b) {
      if (!zero_matrix(A.Mu(a, b))) mu[key2(a, b)] = matrix(A.Mu(a, b), f);
      if (!zero_matrix(A.Psi(b, a))) psi[key2(a, b)] = matrix(A.Psi(b, a), f);
    }
  }
  return Json{{"components", comps}, {"mu", mu}, {"unit", vec(A.unit, f)}, {"antipode", anti}, {"psi", psi}};
}

template <class T>
TAlgebra<T> parse_talgebra(const Json& j, const FieldSpec& f, const FiniteGroup& G) {
  TAlgebra<T> A;
  A.field = f;
  A.group = G;
  std::size_t n = G.order();
  const Json empty = Json::object();
  auto section = [&](const char* k) -> const Json& { return j.contains(k) ? j.at(k) : empty; };
  const Json& comps = section("components");
  for (std::size_t a = 0; a < n; ++a) {
    std::string w = "components[" + key1(a) + "]";
    if (!comps.contains(key1(a))) fail("components", "missing component " + key1(a));
    const Json& c = comps.at(key1(a));
    std::size_t d = c.at("dim").get<std::size_t>();
    ComponentCoalgebra<T> C;
    C.dim = d;
    C.delta = parse_matrix<T>(c, "delta", d * d, d, f, w);
    C.counit = parse_vec<T>(c.at("counit"), d, f, w + ".counit");
    A.components.push_back(std::move(C));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      A.mu.push_back(parse_matrix<T>(section("mu"), key2(a, b), A.dim(G.mul(a, b)), A.dim(a) * A.dim(b), f, "mu"));
  if (!j.contains("unit")) fail("talgebra", "missing unit");
  A.unit = parse_vec<T>(j.at("unit"), A.dim(G.identity()), f, "unit");
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      A.psi.push_back(parse_matrix<T>(section("psi"), key2(a, b), A.dim(G.conj(b, a)), A.dim(a), f, "psi"));
  for (std::size_t a = 0; a < n; ++a)
    A.antipode.push_back(parse_matrix<T>(section("antipode"), key1(a), A.dim(G.inv(a)), A.dim(a), f, "antipode"));
  return A;
}

template <class T>
Json graded(const GradedHopfAlgebra<T>& P) {
  const auto& f = P.hopf.field;
  Json psi = Json::object();
  for (std::size_t b = 0; b < P.psi.size(); ++b)
    if (!zero_matrix(P.psi[b])) psi[key1(b)] = matrix(P.psi[b], f);
  return Json{{"graded_kind", P.kind == GradedKind::TAlgebra ? "talgebra" : "tcoalgebra"},
              {"grading", P.grading},
              {"algebra", algebra(P.hopf.algebra, f)},
              {"delta", matrix(P.hopf.delta, f)},
              {"counit", vec(P.hopf.counit, f)},
              {"antipode", matrix(P.hopf.antipode, f)},
              {"psi", psi}};
}

template <class T>
GradedHopfAlgebra<T> parse_graded(const Json& j, const FieldSpec& f, const FiniteGroup& G) {
  GradedHopfAlgebra<T> P;
  P.group = G;
  auto k = j.value("graded_kind", std::string("tcoalgebra"));
  if (k != "talgebra" && k != "tcoalgebra") fail("graded_kind", "expected talgebra or tcoalgebra");
  P.kind = k == "talgebra" ? GradedKind::TAlgebra : GradedKind::TCoalgebra;
  P.grading = j.at("grading").get<std::vector<std::size_t>>();
  if (P.grading.size() != G.order()) fail("grading", "expected one dimension per group element");
  P.hopf.field = f;
  P.hopf.algebra = parse_algebra<T>(j.at("algebra"), f, "algebra");
  std::size_t N = P.hopf.algebra.dim();
  if (P.total() != N) fail("grading", "dimensions do not add up to the algebra dimension");
  P.hopf.delta = parse_matrix<T>(j, "delta", N * N, N, f, "");
  P.hopf.counit = parse_vec<T>(j.at("counit"), N, f, "counit");
  P.hopf.antipode = parse_matrix<T>(j, "antipode", N, N, f, "");
  const Json empty = Json::object();
  const Json& psi = j.contains("psi") ? j.at("psi") : empty;
  for (std::size_t b = 0; b < G.order(); ++b) P.psi.push_back(parse_matrix<T>(psi, key1(b), N, N, f, "psi"));
  return P;
}

}  // namespace io_detail

template <class T>
Json to_json(const Document<T>& d) {
  using namespace io_detail;
  Json j = Json::object();
  j["schema_version"] = d.schema_version;
  j["kind"] = d.kind();
  j["field"] = field(d.field);
  j["metadata"] = d.metadata;
  std::visit(
      [&](const auto& x) {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, TCoalgebra<T>>) {
          j["group"] = group(x.group);
          j["tcoalgebra"] = tcoalgebra(x);
        } else if constexpr (std::is_same_v<X, TAlgebra<T>>) {
          j["group"] = group(x.group);
          j["talgebra"] = talgebra(x);
        } else {
          j["group"] = group(x.group);
          j["graded"] = graded(x);
        }
      },
      d.payload);
  if (d.rmatrix) {
    const auto& G = d.tcoalgebra().group;
    std::size_t n = G.order();
    Json r = Json::object();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& v = (*d.rmatrix)[a * n + b];
        if (!is_zero_vec(v)) r[key2(a, b)] = vec(v, d.field);
      }
    j["rmatrix"] = r;
  }
  if (d.twist) {
    Json t = Json::object();
    for (std::size_t a = 0; a < d.twist->size(); ++a)
      if (!is_zero_vec((*d.twist)[a])) t[key1(a)] = vec((*d.twist)[a], d.field);
    j["twist"] = t;
  }
  return j;
}

/// Canonical text: sorted keys, two-space indentation, trailing newline.
template <class T>
std::string serialize(const Document<T>& d) {
  return to_json(d).dump(2) + "\n";
}

/// The field a document declares, without parsing the rest.
inline FieldSpec document_field(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw ParseError("field: missing");
  return io_detail::parse_field(j.at("field"));
}

/// Reads a document over T.  `target` overrides the declared field; a
/// rational document read over GF(p) has its entries reduced mod p.
/// Structural and shape errors are reported as ParseError.
template <class T>
Document<T> parse_document(const Json& j, std::optional<FieldSpec> target = std::nullopt) {
  using namespace io_detail;
  try {
    if (!j.is_object()) fail("document", "expected a JSON object");
    Document<T> d;
    d.schema_version = j.value("schema_version", 0);
    if (d.schema_version != kSchemaVersion)
      fail("schema_version", "unsupported version " + std::to_string(d.schema_version));
    FieldSpec declared = document_field(j);
    FieldSpec f = target.value_or(declared);
    if (!declared.is_rational() && !(declared == f)) fail("field", "cannot read a " + declared.name() + " document over " + f.name());
    if (ScalarTraits<T>::characteristic_zero != f.is_rational()) fail("field", "scalar type does not match field " + f.name());
    d.field = f;
    if (j.contains("metadata")) d.metadata = j.at("metadata");
    if (!j.contains("group")) fail("document", "missing group");
    auto G = parse_group(j.at("group"));
    auto kind = j.value("kind", std::string());
    if (kind == "tcoalgebra") {
      if (!j.contains("tcoalgebra")) fail("document", "missing tcoalgebra section");
      auto H = parse_tcoalgebra<T>(j.at("tcoalgebra"), f, G);
      check_shapes(H);
      d.payload = std::move(H);
    } else if (kind == "talgebra") {
      if (!j.contains("talgebra")) fail("document", "missing talgebra section");
      auto A = parse_talgebra<T>(j.at("talgebra"), f, G);
      check_shapes(A);
      d.payload = std::move(A);
    } else if (kind == "graded-hopf") {
      if (!j.contains("graded")) fail("document", "missing graded section");
      d.payload = parse_graded<T>(j.at("graded"), f, G);
    } else {
      fail("kind", "expected tcoalgebra, talgebra or graded-hopf, got '" + kind + "'");
    }
    if (j.contains("rmatrix")) {
      if (!d.is_tcoalgebra()) fail("rmatrix", "only T-coalgebras carry an R-matrix");
      const auto& H = d.tcoalgebra();
      std::size_t n = G.order();
      std::vector<Vec<T>> r;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t len = H.dim(a) * H.dim(b);
          const Json& s = j.at("rmatrix");
          r.push_back(s.contains(key2(a, b)) ? parse_vec<T>(s.at(key2(a, b)), len, f, "rmatrix[" + key2(a, b) + "]") : Vec<T>(len, T(0)));
        }
      d.rmatrix = std::move(r);
    }
    if (j.contains("twist")) {
      if (!d.is_tcoalgebra()) fail("twist", "only T-coalgebras carry a twist");
      const auto& H = d.tcoalgebra();
      std::vector<Vec<T>> t;
      for (std::size_t a = 0; a < G.order(); ++a) {
        const Json& s = j.at("twist");
        t.push_back(s.contains(key1(a)) ? parse_vec<T>(s.at(key1(a)), H.dim(a), f, "twist[" + key1(a) + "]") : Vec<T>(H.dim(a), T(0)));
      }
      d.twist = std::move(t);
    }
    return d;
  } catch (const ShapeMismatch& e) {
    throw ParseError(e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("schema: ") + e.what());
  }
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
Document<T> parse_document(const std::string& text, std::optional<FieldSpec> target = std::nullopt) {
  return parse_document<T>(parse_json_text(text), target);
}

/// Reads `path`, or stdin when the path is "-".
inline std::string read_file(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to `path`, or to stdout when the path is empty or "-".
inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

}  // namespace crossed

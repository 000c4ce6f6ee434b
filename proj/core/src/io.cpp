#include "fundseq/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json_doc.hpp"

namespace fundseq {

namespace doc {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaError, (where.empty() ? std::string("/") : where) + ": " + what);
}

// Re-raise a library error with the location of the offending document part.
[[noreturn]] void relocate(const Error& e, const std::string& where) {
  std::string msg = e.what();
  const std::string prefix = std::string(error_kind_name(e.kind())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  throw Error(e.kind(), (where.empty() ? std::string("/") : where) + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Int int_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    static const std::regex decimal("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, decimal)) schema(where, "\"" + s + "\" is not a decimal integer");
    return Int(s);
  }
  schema(where, "expected an integer or a decimal string");
}

// rows x cols matrix; cols may be unknown (SIZE_MAX) and is then read off the rows.
IntMat matrix_from(const Json& j, std::size_t rows, std::size_t cols, const RingDesc& ring,
                   const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of rows");
  if (j.empty()) {
    if (rows != 0 && cols != 0 && cols != SIZE_MAX) schema(where, "expected " + std::to_string(rows) + " rows");
    return IntMat(rows, cols == SIZE_MAX ? 0 : cols);
  }
  if (j.size() != rows) schema(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  std::vector<std::vector<Int>> data;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rw = where + "/" + std::to_string(r);
    if (!j[r].is_array()) schema(rw, "expected a row array");
    if (cols == SIZE_MAX) cols = j[r].size();
    if (j[r].size() != cols) schema(rw, "expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
    std::vector<Int> row;
    for (std::size_t c = 0; c < cols; ++c) row.push_back(ring.reduce(int_from(j[r][c], rw + "/" + std::to_string(c))));
    data.push_back(std::move(row));
  }
  return IntMat::from_rows(data, cols);
}

RingDesc ring_of(const Json& j, const RingDesc* inherited, const std::string& where) {
  if (j.is_object() && j.contains("ring")) {
    RingDesc r = ring_from(j["ring"], where + "/ring");
    if (inherited && !(r == *inherited))
      schema(where + "/ring", "ring " + r.name() + " differs from the expected " + inherited->name());
    return r;
  }
  if (inherited) return *inherited;
  schema(where, "missing field \"ring\"");
}

}  // namespace

Json to_json(const RingDesc& ring) {
  if (ring.is_integers()) return Json{{"kind", "Z"}};
  return Json{{"kind", "ZmodN"}, {"n", ring.modulus().get_str()}};
}

Json to_json(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FPModule& M) {
  Json j{{"ring", to_json(M.ring())}, {"gens", M.gens()}, {"relations", to_json(M.relations())}};
  // An empty row list does not record how many relations there were.
  if (M.gens() == 0 && M.relations().cols() > 0) j["relation_count"] = M.relations().cols();
  return j;
}

Json to_json(const Morphism& f) {
  return Json{{"ring", to_json(f.ring())},
              {"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"matrix", to_json(f.matrix())}};
}

Json to_json(const Complex& C) {
  Json terms = Json::array(), diffs = Json::array();
  for (int n = C.lo(); n <= C.hi(); ++n) terms.push_back(to_json(C.term(n)));
  for (int n = C.lo() + 1; n <= C.hi(); ++n) diffs.push_back(to_json(C.differential(n).matrix()));
  return Json{{"ring", to_json(C.ring())}, {"support", {C.lo(), C.hi()}}, {"terms", terms}, {"differentials", diffs}};
}

RingDesc ring_from(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (kind == "Z") return RingDesc::integers();
  if (kind == "ZmodN") {
    Int n = int_from(field(j, "n", where), where + "/n");
    if (n < 2) schema(where + "/n", "modulus must be at least 2");
    return RingDesc::mod(n);
  }
  schema(where + "/kind", "unknown ring kind " + kind.dump());
}

FPModule module_from(const Json& j, const RingDesc* inherited, const std::string& where) {
  RingDesc ring = ring_of(j, inherited, where);
  std::size_t gens = count_from(field(j, "gens", where), where + "/gens");
  std::size_t count = SIZE_MAX;
  if (j.contains("relation_count")) count = count_from(j["relation_count"], where + "/relation_count");
  IntMat rel(gens, count == SIZE_MAX ? 0 : count);
  if (j.contains("relations")) rel = matrix_from(j["relations"], gens, count, ring, where + "/relations");
  return FPModule(ring, gens, rel);
}

Morphism morphism_from(const Json& j, const RingDesc* inherited, const std::string& where) {
  RingDesc ring = ring_of(j, inherited, where);
  FPModule M = module_from(field(j, "source", where), &ring, where + "/source");
  FPModule N = module_from(field(j, "target", where), &ring, where + "/target");
  const char* key = j.contains("matrix") ? "matrix" : "G";
  IntMat G = matrix_from(field(j, key, where), N.gens(), M.gens(), ring, where + "/" + key);
  try {
    return make_morphism(M, N, G);
  } catch (const Error& e) {
    relocate(e, where + "/" + key);
  }
}

Complex complex_from(const Json& j, const RingDesc* inherited, const std::string& where) {
  RingDesc ring = ring_of(j, inherited, where);
  const Json& support = field(j, "support", where);
  if (!support.is_array() || support.size() != 2 || !support[0].is_number_integer() || !support[1].is_number_integer())
    schema(where + "/support", "expected [lo, hi]");
  const int lo = support[0].get<int>(), hi = support[1].get<int>();
  if (hi < lo) schema(where + "/support", "empty support");
  const Json& terms = field(j, "terms", where);
  const Json& diffs = field(j, "differentials", where);
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  if (!terms.is_array() || terms.size() != len)
    schema(where + "/terms", "expected " + std::to_string(len) + " terms");
  if (!diffs.is_array() || diffs.size() != len - 1)
    schema(where + "/differentials", "expected " + std::to_string(len - 1) + " differentials");
  std::vector<FPModule> C;
  for (std::size_t k = 0; k < len; ++k) C.push_back(module_from(terms[k], &ring, where + "/terms/" + std::to_string(k)));
  std::vector<Morphism> d;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    // differentials[k] = d_{lo+k+1} : C_{lo+k+1} -> C_{lo+k}
    const std::string dw = where + "/differentials/" + std::to_string(k);
    IntMat G = matrix_from(diffs[k], C[k].gens(), C[k + 1].gens(), ring, dw);
    try {
      d.push_back(make_morphism(C[k + 1], C[k], G));
    } catch (const Error& e) {
      relocate(e, dw);
    }
    if (k > 0 && !is_zero(compose(d[k - 1], d[k])))
      throw Error(ErrorKind::NotAComplex, dw + ": d_" + std::to_string(lo + k) + " d_" + std::to_string(lo + k + 1) + " != 0");
  }
  return Complex(ring, lo, C, d);
}

}  // namespace doc

namespace {

doc::Json parse_json(const std::string& text) {
  try {
    return doc::Json::parse(text);
  } catch (const doc::Json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("/: not valid JSON (") + e.what() + ")");
  }
}

}  // namespace

ParsedInput parse_input(const std::string& document, const std::optional<RingDesc>& ring) {
  doc::Json j = parse_json(document);
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "/: expected an object");
  std::string type;
  if (j.contains("type")) {
    if (!j["type"].is_string()) throw Error(ErrorKind::SchemaError, "/type: expected a string");
    type = j["type"].get<std::string>();
  } else if (j.contains("support")) {
    type = "complex";
  } else if (j.contains("source")) {
    type = "morphism";
  } else {
    type = "module";
  }
  const RingDesc* inherited = ring ? &*ring : nullptr;
  if (type == "module") return doc::module_from(j, inherited, "");
  if (type == "morphism") return doc::morphism_from(j, inherited, "");
  if (type == "complex") return doc::complex_from(j, inherited, "");
  throw Error(ErrorKind::SchemaError, "/type: unknown document type \"" + type + "\"");
}

namespace {

template <class T>
T parse_as(const std::string& document, const std::optional<RingDesc>& ring, const char* what) {
  ParsedInput v = parse_input(document, ring);
  if (auto* p = std::get_if<T>(&v)) return *p;
  throw Error(ErrorKind::SchemaError, std::string("/: expected a ") + what + " document");
}

}  // namespace

FPModule parse_module(const std::string& document, const std::optional<RingDesc>& ring) {
  return parse_as<FPModule>(document, ring, "module");
}
Morphism parse_morphism(const std::string& document, const std::optional<RingDesc>& ring) {
  return parse_as<Morphism>(document, ring, "morphism");
}
Complex parse_complex(const std::string& document, const std::optional<RingDesc>& ring) {
  return parse_as<Complex>(document, ring, "complex");
}
RingDesc parse_ring(const std::string& document) { return doc::ring_from(parse_json(document), ""); }

RingDesc parse_ring_name(const std::string& name) {
  static const std::regex mod("Z/([0-9]+)");
  std::smatch m;
  if (name == "Z") return RingDesc::integers();
  if (std::regex_match(name, m, mod)) {
    Int n(m[1].str());
    if (n < 2) throw Error(ErrorKind::SchemaError, "ring " + name + ": modulus must be at least 2");
    return RingDesc::mod(n);
  }
  if (!name.empty() && name.front() == '{') return parse_ring(name);
  throw Error(ErrorKind::SchemaError, "unknown ring \"" + name + "\" (use Z or Z/n)");
}

std::string serialize(const RingDesc& ring) { return doc::to_json(ring).dump(); }
std::string serialize(const IntMat& m) { return doc::to_json(m).dump(); }
std::string serialize(const FPModule& M) { return doc::to_json(M).dump(); }
std::string serialize(const Morphism& f) { return doc::to_json(f).dump(); }
std::string serialize(const Complex& C) { return doc::to_json(C).dump(); }

std::string read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, path + ": cannot open");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace fundseq

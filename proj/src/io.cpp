#include "hhwb/io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hhwb/error.hpp"
#include "hhwb/rewriting.hpp"

namespace hhwb::io {

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

// A node of the input document together with its JSON pointer.
struct In {
  const Json& j;
  std::string ptr;

  [[noreturn]] void fail(const std::string& msg) const { throw SchemaError(ptr, msg); }

  bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
  In at(const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail("missing member \"" + key + "\"");
    return In{*it, ptr + "/" + escape(key)};
  }
  In at(std::size_t i) const { return In{j[i], ptr + "/" + std::to_string(i)}; }
  std::size_t size() const { return j.size(); }

  const Json& array() const {
    if (!j.is_array()) fail("expected an array");
    return j;
  }
  void object() const {
    if (!j.is_object()) fail("expected an object");
  }
  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  std::size_t count() const {
    if (!j.is_number_unsigned()) fail("expected a non-negative integer");
    return j.get<std::size_t>();
  }
  long long integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<long long>();
  }
  std::vector<std::string> strings() const {
    array();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).str());
    return out;
  }
  void allow(std::initializer_list<const char*> keys) const {
    object();
    for (const auto& [k, v] : j.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        In{v, ptr + "/" + escape(k)}.fail("unknown member \"" + k + "\"");
      }
    }
  }
};

FieldSpec parse_field_node(const In& n) {
  n.allow({"kind", "p"});
  std::string kind = n.at("kind").str();
  if (kind == "Q") {
    if (n.has("p")) n.at("p").fail("p is only allowed for Fp");
    return FieldSpec::rationals();
  }
  if (kind != "Fp") n.at("kind").fail("field kind must be \"Q\" or \"Fp\"");
  In p = n.at("p");
  std::size_t v = p.count();
  if (!is_prime(v)) p.fail("p must be prime");
  if (v >= (std::uint64_t(1) << 31)) p.fail("p must be below 2^31");
  return FieldSpec::prime(v);
}

FieldSpec field_of(const In& n, const FieldSpec& inherited, const BuildOptions& opt, bool top) {
  if (opt.field) return *opt.field;
  if (!n.has("field")) return inherited;
  FieldSpec f = parse_field_node(n.at("field"));
  if (!top && !(f == inherited)) n.at("field").fail("field differs from the enclosing document");
  return f;
}

Scalar scalar(const In& n, const FieldSpec& f) {
  std::string s = n.str();
  try {
    return f.parse(s);
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

Matrix matrix(const In& n, const FieldSpec& f, std::size_t rows, std::size_t cols) {
  n.array();
  Matrix m(rows, cols);
  if (rows * cols == 0 && n.size() == 0) return m;
  if (n.size() != rows) n.fail("expected " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    In row = n.at(r);
    row.array();
    if (row.size() != cols) row.fail("expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(row.at(c), f);
  }
  return m;
}

Vector coords(const In& n, const FieldSpec& f, std::size_t dim) {
  n.array();
  if (n.size() != dim) n.fail("expected " + std::to_string(dim) + " coordinates");
  Vector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(scalar(n.at(i), f));
  return v;
}

std::map<std::string, std::size_t> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
  return idx;
}

bool labels_unique(const FdAlgebra& a) { return label_index(a.labels()).size() == a.dim(); }

/// Element of an algebra: label-keyed object or coordinate array.
Vector element(const In& n, const FdAlgebra& a) {
  if (n.j.is_array()) return coords(n, a.field(), a.dim());
  n.object();
  if (!labels_unique(a)) n.fail("basis labels repeat; use a coordinate array");
  auto idx = label_index(a.labels());
  Vector v = a.field().zeros(a.dim());
  for (const auto& [k, val] : n.j.items()) {
    In c{val, n.ptr + "/" + escape(k)};
    auto it = idx.find(k);
    if (it == idx.end()) c.fail("unknown basis label \"" + k + "\"");
    v[it->second] = scalar(c, a.field());
  }
  return v;
}

std::vector<Vector> elements(const In& n, const FdAlgebra& a) {
  n.array();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(element(n.at(i), a));
  return out;
}

std::vector<Matrix> actions(const In& n, const FdAlgebra& a, std::size_t dim) {
  n.object();
  auto idx = label_index(a.labels());
  std::vector<Matrix> out(a.dim(), Matrix(dim, dim));
  for (const auto& [k, val] : n.j.items()) {
    In c{val, n.ptr + "/" + escape(k)};
    auto it = idx.find(k);
    if (it == idx.end()) c.fail("unknown basis label \"" + k + "\"");
    out[it->second] = matrix(c, a.field(), dim, dim);
  }
  return out;
}

/// {"dim": n, "left": {label: matrix}, "right": {label: matrix}}; omitted
/// labels act by zero.
Bimodule bimodule(const In& n, const AlgebraRef& left, const AlgebraRef& right) {
  n.allow({"dim", "left", "right"});
  std::size_t dim = n.at("dim").count();
  auto l = n.has("left") ? actions(n.at("left"), *left, dim) : std::vector<Matrix>(left->dim(), Matrix(dim, dim));
  auto r = n.has("right") ? actions(n.at("right"), *right, dim)
                          : std::vector<Matrix>(right->dim(), Matrix(dim, dim));
  return Bimodule(left, right, dim, std::move(l), std::move(r));
}

FdAlgebra table_algebra(const In& n, const FieldSpec& f) {
  n.allow({"kind", "field", "labels", "products", "unit", "idempotents", "radical", "idempotent"});
  FdAlgebra::Table t;
  t.field = f;
  t.labels = n.at("labels").strings();
  auto idx = label_index(t.labels);
  if (idx.size() != t.labels.size()) n.at("labels").fail("labels must be distinct");
  const std::size_t d = t.labels.size();
  t.products.assign(d * d, {});
  auto lookup = [&](const In& c) {
    auto it = idx.find(c.str());
    if (it == idx.end()) c.fail("unknown basis label \"" + c.str() + "\"");
    return it->second;
  };
  auto vec = [&](const In& c) {
    if (c.j.is_array()) return coords(c, f, d);
    c.object();
    Vector v = f.zeros(d);
    for (const auto& [k, val] : c.j.items()) {
      In e{val, c.ptr + "/" + escape(k)};
      auto it = idx.find(k);
      if (it == idx.end()) e.fail("unknown basis label \"" + k + "\"");
      v[it->second] = scalar(e, f);
    }
    return v;
  };
  In prods = n.at("products");
  prods.array();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < prods.size(); ++k) {
    In p = prods.at(k);
    p.allow({"left", "right", "result"});
    std::size_t i = lookup(p.at("left")), j = lookup(p.at("right"));
    if (!seen.insert({i, j}).second) p.fail("product listed twice");
    t.products[i * d + j] = to_sparse(vec(p.at("result")));
  }
  t.unit = vec(n.at("unit"));
  if (n.has("idempotents")) {
    In ids = n.at("idempotents");
    ids.array();
    for (std::size_t k = 0; k < ids.size(); ++k) t.idempotents.push_back(vec(ids.at(k)));
  }
  if (n.has("radical")) {
    In rad = n.at("radical");
    rad.array();
    std::vector<Vector> r;
    for (std::size_t k = 0; k < rad.size(); ++k) r.push_back(vec(rad.at(k)));
    t.radical = std::move(r);
  }
  return FdAlgebra::make(std::move(t));
}

Path parse_path(const In& n, const std::string& text, const Quiver& q) {
  if (text.rfind("e_", 0) == 0 && q.has_vertex(text.substr(2)) && !q.has_arrow(text)) {
    return trivial_path(q.vertex_index(text.substr(2)));
  }
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (true) {
    auto star = text.find('*', start);
    ids.push_back(text.substr(start, star == std::string::npos ? std::string::npos : star - start));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  for (const auto& id : ids) {
    if (!q.has_arrow(id)) n.fail("unknown arrow \"" + id + "\" in path \"" + text + "\"");
  }
  try {
    return path_from_ids(q, ids);
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

Presentation presentation(const In& n, const FieldSpec& f) {
  n.allow({"kind", "field", "vertices", "arrows", "relations", "special-loops", "length-cap", "idempotent"});
  Presentation p;
  p.field = f;
  auto vertices = n.at("vertices").strings();
  if (label_index(vertices).size() != vertices.size()) n.at("vertices").fail("vertex ids must be distinct");
  std::vector<ArrowSpec> arrows;
  std::set<std::string> vset(vertices.begin(), vertices.end()), aset;
  auto arrow = [&](const In& a, bool loop) {
    a.allow(loop ? std::initializer_list<const char*>{"id", "vertex"}
                 : std::initializer_list<const char*>{"id", "source", "target"});
    ArrowSpec s;
    s.id = a.at("id").str();
    if (s.id.empty() || s.id.find('*') != std::string::npos) a.at("id").fail("arrow ids must be nonempty and free of '*'");
    if (loop) {
      s.source = s.target = a.at("vertex").str();
      if (!vset.count(s.source)) a.at("vertex").fail("unknown vertex \"" + s.source + "\"");
    } else {
      s.source = a.at("source").str();
      s.target = a.at("target").str();
      if (!vset.count(s.source)) a.at("source").fail("unknown vertex \"" + s.source + "\"");
      if (!vset.count(s.target)) a.at("target").fail("unknown vertex \"" + s.target + "\"");
    }
    return s;
  };
  if (n.has("arrows")) {
    In as = n.at("arrows");
    as.array();
    for (std::size_t i = 0; i < as.size(); ++i) {
      arrows.push_back(arrow(as.at(i), false));
      if (!aset.insert(arrows.back().id).second) as.at(i).at("id").fail("duplicate arrow id");
    }
  }
  p.quiver = Quiver(vertices, arrows);
  if (n.has("special-loops")) {
    In ls = n.at("special-loops");
    ls.array();
    for (std::size_t i = 0; i < ls.size(); ++i) p.special_loops.push_back(arrow(ls.at(i), true));
  }
  // Relations may mention special loops that are not arrows of the quiver.
  Quiver ext = p.quiver;
  for (const auto& s : p.special_loops) {
    if (!ext.has_arrow(s.id)) ext = ext.with_arrow(s);
  }
  if (n.has("relations")) {
    In rs = n.at("relations");
    rs.array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      In r = rs.at(i);
      r.object();
      LinComb c;
      for (const auto& [k, val] : r.j.items()) {
        In t{val, r.ptr + "/" + escape(k)};
        Path path = parse_path(t, k, ext);
        Scalar s = scalar(t, f);
        if (s != 0) c[path] = s;
      }
      if (c.empty()) r.fail("relation is zero");
      p.relations.push_back(std::move(c));
    }
  }
  if (n.has("length-cap")) p.length_cap = n.at("length-cap").count();
  return p;
}

std::vector<Path> monomials(const In& n, const Presentation& p) {
  std::vector<Path> out;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& c = p.relations[i];
    if (c.size() != 1 || c.begin()->first.length() != 2) {
      n.at("relations").at(i).fail("expected a single path of length 2");
    }
    out.push_back(c.begin()->first);
  }
  return out;
}

FdAlgebra presentation_algebra(const In& n, const Presentation& p) {
  RewritingSystem rs = [&] {
    if (p.special_loops.empty()) return RewritingSystem::from_relations(p.field, p.quiver, p.relations);
    SkewGentleTriple t{p.quiver, monomials(n, p), p.special_loops};
    return skew_gentle_system(p.field, t);
  }();
  std::size_t cap = p.length_cap ? *p.length_cap : default_cap(rs);
  return enumerate_basis(complete(rs, cap), cap);
}

CartanTriple cartan(const In& n) {
  n.allow({"kind", "field", "c", "d", "omega", "length-cap", "idempotent"});
  CartanTriple t;
  In c = n.at("c");
  c.array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    In row = c.at(i);
    row.array();
    if (row.size() != c.size()) row.fail("c must be square");
    std::vector<long long> r;
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(row.at(j).integer());
    t.c.push_back(std::move(r));
  }
  In d = n.at("d");
  d.array();
  if (d.size() != c.size()) d.fail("d must have one entry per vertex");
  for (std::size_t i = 0; i < d.size(); ++i) t.d.push_back(d.at(i).integer());
  In om = n.at("omega");
  om.array();
  for (std::size_t k = 0; k < om.size(); ++k) {
    In pair = om.at(k);
    pair.array();
    if (pair.size() != 2) pair.fail("expected a pair [i, j]");
    std::size_t i = pair.at(0).count(), j = pair.at(1).count();
    if (i < 1 || i > c.size()) pair.at(0).fail("vertex out of range");
    if (j < 1 || j > c.size()) pair.at(1).fail("vertex out of range");
    t.omega.emplace_back(i - 1, j - 1);
  }
  return t;
}

FiniteCategory category(const In& n) {
  n.allow({"kind", "field", "objects", "morphisms", "identities", "compositions", "idempotent"});
  auto objects = n.at("objects").strings();
  std::vector<Morphism> mors;
  In ms = n.at("morphisms");
  ms.array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    In m = ms.at(i);
    m.allow({"id", "source", "target"});
    mors.push_back({m.at("id").str(), m.at("source").str(), m.at("target").str()});
  }
  auto ids = n.at("identities").strings();
  std::vector<FiniteCategory::Composition> comp;
  if (n.has("compositions")) {
    In cs = n.at("compositions");
    cs.array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      In c = cs.at(i);
      c.allow({"g", "f", "result"});
      comp.push_back({c.at("g").str(), c.at("f").str(), c.at("result").str()});
    }
  }
  return FiniteCategory(objects, mors, ids, comp);
}

const std::vector<std::string>& kinds() {
  static const std::vector<std::string> k{"algebra-table", "presentation",   "triangular", "morita",
                                          "trivial-extension", "ei-category", "gls",        "exact-context"};
  return k;
}

std::string kind_of(const In& n) {
  n.object();
  std::string k = n.at("kind").str();
  if (std::find(kinds().begin(), kinds().end(), k) == kinds().end()) {
    std::string all;
    for (const auto& x : kinds()) all += (all.empty() ? "" : ", ") + x;
    n.at("kind").fail("unknown kind \"" + k + "\"; expected one of " + all);
  }
  return k;
}

AlgebraMap algebra_map(const In& n, const AlgebraRef& src, const AlgebraRef& dst) {
  return AlgebraMap{src, dst, matrix(n, src->field(), dst->dim(), src->dim())};
}

Built build_node(const In& n, const FieldSpec& inherited, const BuildOptions& opt, bool top);

AlgebraRef sub_algebra(const In& n, const FieldSpec& f, const BuildOptions& opt) {
  return build_node(n, f, opt, false).algebra;
}

Built build_node(const In& n, const FieldSpec& inherited, const BuildOptions& opt, bool top) {
  Built b;
  b.kind = kind_of(n);
  const FieldSpec f = field_of(n, inherited, opt, top);
  if (b.kind == "algebra-table") {
    b.algebra = share(table_algebra(n, f));
  } else if (b.kind == "presentation") {
    auto p = presentation(n, f);
    b.algebra = share(presentation_algebra(n, p));
    if (!p.special_loops.empty()) {
      b.validation = validate_skew_gentle({p.quiver, monomials(n, p), p.special_loops}).report;
    }
  } else if (b.kind == "triangular") {
    n.allow({"kind", "field", "b", "c", "m", "idempotent"});
    b.first = sub_algebra(n.at("b"), f, opt);
    b.second = sub_algebra(n.at("c"), f, opt);
    auto t = triangular_matrix(b.first, b.second, bimodule(n.at("m"), b.second, b.first));
    b.algebra = share(std::move(t.algebra));
    b.idempotent = t.e;
  } else if (b.kind == "morita") {
    n.allow({"kind", "field", "b", "c", "n", "m", "alpha", "beta", "variant", "idempotent"});
    b.first = sub_algebra(n.at("b"), f, opt);
    b.second = sub_algebra(n.at("c"), f, opt);
    Bimodule bn = bimodule(n.at("n"), b.first, b.second);
    Bimodule bm = bimodule(n.at("m"), b.second, b.first);
    Matrix alpha = matrix(n.at("alpha"), f, b.first->dim(), bn.dim() * bm.dim());
    Matrix beta = matrix(n.at("beta"), f, b.second->dim(), bm.dim() * bn.dim());
    b.morita.emplace(MoritaContextData{b.first, b.second, bn, bm, alpha, beta});
    if (n.has("variant")) {
      std::size_t v = n.at("variant").count();
      if (v != 1 && v != 2) n.at("variant").fail("variant must be 1 or 2");
      b.variant = static_cast<int>(v);
    }
    auto ring = morita_context_ring(*b.morita);
    b.algebra = share(std::move(ring.algebra));
    b.idempotent = ring.e;
  } else if (b.kind == "trivial-extension") {
    n.allow({"kind", "field", "r", "m", "idempotent"});
    auto r = sub_algebra(n.at("r"), f, opt);
    b.algebra = share(trivial_extension(r, bimodule(n.at("m"), r, r)));
  } else if (b.kind == "ei-category") {
    auto c = category(n);
    b.validation = validate_ei(c);
    b.algebra = share(ei_category_algebra(c, f));
  } else if (b.kind == "gls") {
    auto t = cartan(n);
    b.validation = validate_cartan_triple(t);
    std::size_t cap = n.has("length-cap") ? n.at("length-cap").count() : 0;
    b.algebra = share(gls_algebra(t, f, cap));
  } else {
    b.form = n.at("form").str();
    if (b.form == "general") {
      n.allow({"kind", "field", "form", "r", "s", "t", "lambda", "mu", "m", "element", "idempotent"});
      auto r = sub_algebra(n.at("r"), f, opt);
      auto s = sub_algebra(n.at("s"), f, opt);
      auto t = sub_algebra(n.at("t"), f, opt);
      Bimodule m = bimodule(n.at("m"), s, t);
      Vector x = coords(n.at("element"), f, m.dim());
      b.exact.emplace(ExactContextData{algebra_map(n.at("lambda"), r, s), algebra_map(n.at("mu"), r, t), m, x});
      validate_exact_context(*b.exact);
    } else if (b.form == "pullback") {
      n.allow({"kind", "field", "form", "r", "i1", "i2", "idempotent"});
      auto r = sub_algebra(n.at("r"), f, opt);
      auto pc = pullback_context(r, elements(n.at("i1"), *r), elements(n.at("i2"), *r));
      b.exact.emplace(pc.context);
    } else if (b.form == "trivial-extension") {
      n.allow({"kind", "field", "form", "r", "s", "lambda", "m", "idempotent"});
      auto r = sub_algebra(n.at("r"), f, opt);
      auto s = sub_algebra(n.at("s"), f, opt);
      auto lambda = algebra_map(n.at("lambda"), r, s);
      b.trivial.emplace(trivial_extension_context(lambda, bimodule(n.at("m"), s, s), opt.bound));
      b.exact.emplace(*b.trivial->context);
    } else {
      n.at("form").fail("form must be \"general\", \"pullback\" or \"trivial-extension\"");
    }
    auto ring = exact_context_ring(*b.exact);
    b.first = b.exact->mu.target;
    b.second = b.exact->lambda.target;
    b.algebra = share(std::move(ring.algebra));
    b.idempotent = ring.e;
  }
  if (top && n.has("idempotent")) b.idempotent = element(n.at("idempotent"), *b.algebra);
  return b;
}

In root(const Json& doc) { return In{doc, ""}; }

}  // namespace

FieldSpec parse_field_flag(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "q") return FieldSpec::rationals();
  if (t.rfind("fp:", 0) == 0 && t.size() > 3 &&
      std::all_of(t.begin() + 3, t.end(), [](unsigned char c) { return std::isdigit(c); }) && t.size() < 14) {
    std::uint64_t p = std::stoull(t.substr(3));
    if (!is_prime(p)) throw SchemaError("--field", "p must be prime");
    return FieldSpec::prime(p);
  }
  throw SchemaError("--field", "expected \"q\" or \"fp:<p>\"");
}

std::string field_flag(const FieldSpec& f) {
  return f.is_rational() ? "q" : "fp:" + std::to_string(f.characteristic());
}

Json field_json(const FieldSpec& f) {
  if (f.is_rational()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", f.characteristic()}};
}

Built build(const Json& doc, const BuildOptions& opt) {
  return build_node(root(doc), FieldSpec::rationals(), opt, true);
}

Presentation parse_presentation(const Json& doc, const BuildOptions& opt) {
  In n = root(doc);
  if (kind_of(n) != "presentation") n.at("kind").fail("expected kind \"presentation\"");
  return presentation(n, field_of(n, FieldSpec::rationals(), opt, true));
}

std::vector<Path> monomial_relations(const Presentation& p, const Json& doc) { return monomials(root(doc), p); }

CartanTriple parse_cartan(const Json& doc) {
  In n = root(doc);
  if (kind_of(n) != "gls") n.at("kind").fail("expected kind \"gls\"");
  return cartan(n);
}

FiniteCategory parse_category(const Json& doc) {
  In n = root(doc);
  if (kind_of(n) != "ei-category") n.at("kind").fail("expected kind \"ei-category\"");
  return category(n);
}

Json vector_json(const FdAlgebra& a, const Vector& v) {
  const auto& f = a.field();
  if (!labels_unique(a)) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(f.format(x));
    return arr;
  }
  Json obj = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) obj[a.label(i)] = f.format(v[i]);
  }
  return obj;
}

Json algebra_table(const FdAlgebra& a) {
  Json t;
  t["kind"] = "algebra-table";
  t["field"] = field_json(a.field());
  t["labels"] = a.labels();
  Json prods = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      if (p.empty()) continue;
      prods.push_back(Json{{"left", a.label(i)}, {"right", a.label(j)},
                           {"result", vector_json(a, to_dense(p, a.dim()))}});
    }
  }
  t["products"] = prods;
  t["unit"] = vector_json(a, a.unit());
  if (!a.idempotents().empty()) {
    Json ids = Json::array();
    for (const auto& e : a.idempotents()) ids.push_back(vector_json(a, e));
    t["idempotents"] = ids;
  }
  if (a.designated_radical()) {
    Json rad = Json::array();
    for (const auto& r : *a.designated_radical()) rad.push_back(vector_json(a, r));
    t["radical"] = rad;
  }
  return t;
}

Json validation_json(const ValidationReport& r) {
  Json rows = Json::array();
  for (const auto& c : r.checks) {
    rows.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}, {"detail", c.detail}});
  }
  return Json{{"passed", r.passed()}, {"checks", rows}};
}

}  // namespace hhwb::io

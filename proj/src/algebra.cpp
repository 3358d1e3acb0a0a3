#include "hhwb/algebra.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hhwb/error.hpp"

namespace hhwb {

Vector to_dense(const SparseVec& v, std::size_t dim) {
  Vector d(dim, Scalar(0));
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return s;
}

namespace {

std::string triple_name(const FdAlgebra& a, std::size_t i, std::size_t j,
                        std::size_t k) {
  return "(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ")";
}

// (sum_i u_i b_i) * b_j with u sparse.
Vector times_basis(const FdAlgebra& a, const Vector& u, std::size_t j) {
  Vector r(a.dim(), Scalar(0));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (u[i] == 0) continue;
    for (const auto& [k, c] : a.product(i, j)) r[k] += u[i] * c;
  }
  for (auto& x : r) a.field().reduce(x);
  return r;
}

Vector basis_times(const FdAlgebra& a, std::size_t i, const Vector& u) {
  Vector r(a.dim(), Scalar(0));
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (u[j] == 0) continue;
    for (const auto& [k, c] : a.product(i, j)) r[k] += c * u[j];
  }
  for (auto& x : r) a.field().reduce(x);
  return r;
}

}  // namespace

FdAlgebra FdAlgebra::make(Table t) {
  const std::size_t d = t.labels.size();
  const auto& f = t.field;
  if (t.products.size() != d * d) {
    throw DimensionMismatch("structure table has " +
                            std::to_string(t.products.size()) +
                            " entries, expected " + std::to_string(d * d));
  }
  if (t.unit.size() != d) throw DimensionMismatch("unit vector length");
  for (auto& p : t.products) {
    std::sort(p.begin(), p.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec clean;
    for (auto& [k, c] : p) {
      if (k >= d) throw DimensionMismatch("structure constant index out of range");
      f.reduce(c);
      if (!clean.empty() && clean.back().first == k) {
        clean.back().second = f.add(clean.back().second, c);
        if (clean.back().second == 0) clean.pop_back();
      } else if (c != 0) {
        clean.emplace_back(k, c);
      }
    }
    p = std::move(clean);
  }
  for (auto& x : t.unit) f.reduce(x);
  for (auto& e : t.idempotents) {
    if (e.size() != d) throw DimensionMismatch("idempotent vector length");
    for (auto& x : e) f.reduce(x);
  }
  if (t.radical) {
    for (auto& r : *t.radical) {
      if (r.size() != d) throw DimensionMismatch("radical vector length");
      for (auto& x : r) f.reduce(x);
    }
  }
  FdAlgebra a(std::move(t));

  // associativity: (b_i b_j) b_k == b_i (b_j b_k)
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector ij = to_dense(a.product(i, j), d);
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs = times_basis(a, ij, k);
        Vector rhs = basis_times(a, i, to_dense(a.product(j, k), d));
        if (lhs != rhs) {
          throw InvariantError("associativity fails on basis triple " +
                               triple_name(a, i, j, k));
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vector bi = a.basis_vector(i);
    if (a.multiply(a.unit(), bi) != bi || a.multiply(bi, a.unit()) != bi) {
      throw InvariantError("unit law fails for basis element " + a.label(i));
    }
  }
  const auto& idem = a.idempotents();
  if (!idem.empty()) {
    Vector sum = f.zeros(d);
    for (std::size_t s = 0; s < idem.size(); ++s) {
      sum = add(f, sum, idem[s]);
      for (std::size_t u = 0; u < idem.size(); ++u) {
        Vector p = a.multiply(idem[s], idem[u]);
        Vector expect = s == u ? idem[s] : f.zeros(d);
        if (p != expect) {
          throw InvariantError("idempotents " + std::to_string(s) + " and " +
                               std::to_string(u) + " are not orthogonal idempotents");
        }
      }
    }
    if (sum != a.unit()) throw InvariantError("idempotents do not sum to the unit");
  }
  if (a.designated_radical()) check_radical_designation(a, *a.designated_radical());
  return a;
}

FdAlgebra FdAlgebra::zero(FieldSpec field) {
  return make(Table{field, {}, {}, {}, {}, std::vector<Vector>{}});
}

FdAlgebra FdAlgebra::ground_field(FieldSpec field, std::string label) {
  Table t{field, {std::move(label)}, {SparseVec{{0, Scalar(1)}}}, {Scalar(1)}, {},
          std::vector<Vector>{}};
  return make(std::move(t));
}

std::vector<Vector> FdAlgebra::idempotents_or_unit() const {
  if (!idempotents().empty()) return idempotents();
  if (dim() == 0) return {};
  return {unit()};
}

Vector FdAlgebra::multiply(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) {
    throw DimensionMismatch("multiply: vectors must have length " +
                            std::to_string(dim()));
  }
  Vector r(dim(), Scalar(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      for (const auto& [k, c] : product(i, j)) r[k] += u[i] * v[j] * c;
    }
  }
  for (auto& x : r) field().reduce(x);
  return r;
}

Matrix FdAlgebra::left_multiplication(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(dim(), cols);
}

Matrix FdAlgebra::right_multiplication(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), a));
  return Matrix::from_columns(dim(), cols);
}

bool FdAlgebra::is_idempotent(const Vector& e) const { return multiply(e, e) == e; }

FdAlgebra FdAlgebra::opposite() const {
  Table t = t_;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      t.products[i * dim() + j] = product(j, i);
    }
  }
  return make(std::move(t));
}

FdAlgebra FdAlgebra::with_idempotents(std::vector<Vector> idempotents) const {
  Table t = t_;
  t.idempotents = std::move(idempotents);
  return make(std::move(t));
}

FdAlgebra FdAlgebra::with_radical(std::optional<std::vector<Vector>> radical) const {
  Table t = t_;
  t.radical = std::move(radical);
  return make(std::move(t));
}

FdAlgebra FdAlgebra::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != dim()) throw DimensionMismatch("label count");
  Table t = t_;
  t.labels = std::move(labels);
  return FdAlgebra(std::move(t));
}

bool FdAlgebra::same_structure(const FdAlgebra& other) const {
  return field() == other.field() && dim() == other.dim() &&
         t_.products == other.t_.products && unit() == other.unit();
}

Vector multiply(const FdAlgebra& a, const Vector& u, const Vector& v) {
  return a.multiply(u, v);
}

namespace {

Vector embed(const Vector& v, std::size_t offset, std::size_t total) {
  Vector r(total, Scalar(0));
  std::copy(v.begin(), v.end(), r.begin() + static_cast<std::ptrdiff_t>(offset));
  return r;
}

}  // namespace

FdAlgebra direct_product(const FdAlgebra& a, const FdAlgebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct_product: field mismatch");
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  FdAlgebra::Table t;
  t.field = a.field();
  for (const auto& l : a.labels()) t.labels.push_back("L." + l);
  for (const auto& l : b.labels()) t.labels.push_back("R." + l);
  t.products.assign(d * d, {});
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) t.products[i * d + j] = a.product(i, j);
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      SparseVec p = b.product(i, j);
      for (auto& e : p) e.first += static_cast<std::uint32_t>(da);
      t.products[(da + i) * d + (da + j)] = std::move(p);
    }
  }
  t.unit = embed(a.unit(), 0, d);
  for (std::size_t i = 0; i < db; ++i) t.unit[da + i] = b.unit()[i];
  for (const auto& e : a.idempotents_or_unit()) t.idempotents.push_back(embed(e, 0, d));
  for (const auto& e : b.idempotents_or_unit()) t.idempotents.push_back(embed(e, da, d));
  if (a.designated_radical() && b.designated_radical()) {
    std::vector<Vector> rad;
    for (const auto& r : *a.designated_radical()) rad.push_back(embed(r, 0, d));
    for (const auto& r : *b.designated_radical()) rad.push_back(embed(r, da, d));
    t.radical = std::move(rad);
  }
  return FdAlgebra::make(std::move(t));
}

FdAlgebra change_basis(const FdAlgebra& a, const Matrix& basis,
                       std::vector<std::string> labels) {
  const auto& f = a.field();
  const std::size_t d = a.dim();
  if (basis.rows() != d || basis.cols() != d) {
    throw DimensionMismatch("change_basis: basis must be square of size dim");
  }
  Matrix inv = inverse(f, basis);
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < d; ++k) cols.push_back(basis.column(k));
  auto to_new = [&](const Vector& v) { return mat_vec(f, inv, v); };
  FdAlgebra::Table t;
  t.field = f;
  t.labels = std::move(labels);
  t.products.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      t.products[i * d + j] = to_sparse(to_new(a.multiply(cols[i], cols[j])));
    }
  }
  t.unit = to_new(a.unit());
  for (const auto& e : a.idempotents()) t.idempotents.push_back(to_new(e));
  if (a.designated_radical()) {
    std::vector<Vector> rad;
    for (const auto& r : *a.designated_radical()) rad.push_back(to_new(r));
    t.radical = std::move(rad);
  }
  return FdAlgebra::make(std::move(t));
}

FdAlgebra permute_basis(const FdAlgebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t d = a.dim();
  if (perm.size() != d) throw DimensionMismatch("permutation length");
  Matrix p(d, d);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < d; ++k) {
    p(perm[k], k) = 1;
    labels.push_back(a.label(perm[k]));
  }
  return change_basis(a, p, std::move(labels));
}

namespace {

// Builds the algebra structure on span(basis) with unit `unit`.
Subalgebra make_subalgebra(const FdAlgebra& a, const LinearSpan& span,
                           const Vector& unit, const std::vector<std::string>& labels) {
  const auto& basis = span.basis();
  const std::size_t d = basis.size();
  FdAlgebra::Table t;
  t.field = a.field();
  t.labels = labels;
  t.products.resize(d * d);
  auto coords = [&](const Vector& v) {
    auto c = span.coordinates(v);
    if (!c) throw InvariantError("subspace is not closed under multiplication");
    return *c;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      t.products[i * d + j] = to_sparse(coords(a.multiply(basis[i], basis[j])));
    }
  }
  t.unit = d == 0 ? Vector{} : coords(unit);
  return Subalgebra{FdAlgebra::make(std::move(t)),
                    Matrix::from_columns(a.dim(), basis)};
}

std::string label_for(const FdAlgebra& a, const Vector& v) {
  // Basis vectors keep their label; general vectors use the leading term.
  std::size_t nz = 0, first = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if (nz == 0) first = i;
      ++nz;
    }
  }
  if (nz == 1 && v[first] == 1) return a.label(first);
  return "[" + a.label(first) + "+...]";
}

}  // namespace

Subalgebra corner_algebra(const FdAlgebra& a, const Vector& e) {
  if (e.size() != a.dim()) throw DimensionMismatch("corner_algebra: idempotent length");
  if (!a.is_idempotent(e)) throw PreconditionError("corner_algebra: e is not idempotent");
  LinearSpan span(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    span.try_add(a.multiply(a.multiply(e, a.basis_vector(i)), e));
  }
  std::vector<std::string> labels;
  for (const auto& v : span.basis()) labels.push_back(label_for(a, v));
  Subalgebra sub = make_subalgebra(a, span, e, labels);

  // Inherit idempotents that commute with e, and the radical e J e.
  std::vector<Vector> idem;
  bool commuting = true;
  for (const auto& s : a.idempotents()) {
    if (a.multiply(e, s) != a.multiply(s, e)) commuting = false;
  }
  if (commuting) {
    for (const auto& s : a.idempotents()) {
      Vector es = a.multiply(e, s);
      if (!is_zero(es)) idem.push_back(*span.coordinates(es));
    }
  }
  std::optional<std::vector<Vector>> rad;
  if (a.designated_radical()) {
    LinearSpan rs(a.field(), sub.algebra.dim());
    for (const auto& r : *a.designated_radical()) {
      rs.try_add(*span.coordinates(a.multiply(a.multiply(e, r), e)));
    }
    rad = rs.basis();
  }
  if (idem.size() > 1 || rad) {
    auto t = sub.algebra.table();
    if (idem.size() > 1) t.idempotents = idem;
    t.radical = rad;
    sub.algebra = FdAlgebra::make(std::move(t));
  }
  return sub;
}

LinearSpan ideal_generated(const FdAlgebra& a, const std::vector<Vector>& gens) {
  LinearSpan ideal(a.field(), a.dim());
  std::vector<Vector> queue;
  for (const auto& g : gens) {
    if (g.size() != a.dim()) throw DimensionMismatch("ideal generator length");
    if (ideal.try_add(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vector bi = a.basis_vector(i);
      Vector l = a.multiply(bi, v), r = a.multiply(v, bi);
      if (ideal.try_add(l)) queue.push_back(std::move(l));
      if (ideal.try_add(r)) queue.push_back(std::move(r));
    }
  }
  return ideal;
}

QuotientAlgebra quotient_by_ideal(const FdAlgebra& a, const std::vector<Vector>& gens) {
  LinearSpan ideal = ideal_generated(a, gens);
  const auto keep = ideal.non_pivots();
  const std::size_t q = keep.size();
  const auto& f = a.field();
  Matrix proj(q, a.dim());
  auto project = [&](const Vector& v) {
    Vector r = ideal.reduce(v);
    Vector out(q);
    for (std::size_t i = 0; i < q; ++i) out[i] = r[keep[i]];
    return out;
  };
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vector pj = project(a.basis_vector(j));
    for (std::size_t i = 0; i < q; ++i) proj(i, j) = pj[i];
  }
  FdAlgebra::Table t;
  t.field = f;
  for (auto k : keep) t.labels.push_back(a.label(k));
  t.products.resize(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      t.products[i * q + j] = to_sparse(project(
          to_dense(a.product(keep[i], keep[j]), a.dim())));
    }
  }
  t.unit = project(a.unit());
  for (const auto& e : a.idempotents()) {
    Vector pe = project(e);
    if (!is_zero(pe)) t.idempotents.push_back(std::move(pe));
  }
  if (a.designated_radical()) {
    LinearSpan rs(f, q);
    for (const auto& r : *a.designated_radical()) rs.try_add(project(r));
    t.radical = rs.basis();
  }
  return QuotientAlgebra{FdAlgebra::make(std::move(t)), std::move(proj),
                         std::move(ideal)};
}

std::size_t commutator_quotient_dim(const FdAlgebra& a) {
  const auto& f = a.field();
  LinearSpan comm(f, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector c = sub(f, to_dense(a.product(i, j), a.dim()),
                     to_dense(a.product(j, i), a.dim()));
      comm.try_add(c);
    }
  }
  return a.dim() - comm.dim();
}

void check_radical_designation(const FdAlgebra& a, const std::vector<Vector>& basis) {
  LinearSpan j(a.field(), a.dim());
  for (const auto& r : basis) {
    if (!j.try_add(r)) throw InvariantError("radical basis is linearly dependent");
  }
  for (const auto& r : basis) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vector bi = a.basis_vector(i);
      if (!j.contains(a.multiply(bi, r)) || !j.contains(a.multiply(r, bi))) {
        throw InvariantError("designated radical is not a two-sided ideal (fails at " +
                             a.label(i) + ")");
      }
    }
  }
  // J^n = 0 for some n <= dim + 1
  std::vector<Vector> power = basis;
  for (std::size_t step = 0; step <= a.dim() + 1; ++step) {
    if (power.empty()) return;
    LinearSpan next(a.field(), a.dim());
    for (const auto& p : power) {
      for (const auto& r : basis) next.try_add(a.multiply(p, r));
    }
    power = next.basis();
  }
  throw InvariantError("designated radical is not nilpotent");
}

std::vector<Vector> radical(const FdAlgebra& a) {
  if (a.designated_radical()) return *a.designated_radical();
  if (!a.field().is_rational()) {
    throw UnsupportedField("radical: characteristic " +
                           std::to_string(a.field().characteristic()) +
                           " requires a designated radical");
  }
  const std::size_t d = a.dim();
  const auto& f = a.field();
  // t_k = trace(L_{b_k}); G_ij = trace(L_{b_i b_j}) = sum_k c_ij^k t_k
  Vector tr(d, Scalar(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t m = 0; m < d; ++m) {
      for (const auto& [idx, c] : a.product(k, m)) {
        if (idx == m) tr[k] = f.add(tr[k], c);
      }
    }
  }
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Scalar s = 0;
      for (const auto& [k, c] : a.product(i, j)) s += c * tr[k];
      g(i, j) = f.canon(s);
    }
  }
  auto basis = kernel_basis(f, g);
  check_radical_designation(a, basis);
  return basis;
}

}  // namespace hhwb

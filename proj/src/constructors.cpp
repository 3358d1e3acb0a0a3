#include "hhwb/constructors.hpp"

#include "hhwb/error.hpp"

namespace hhwb {
namespace {

Vector embed(const Vector& v, std::size_t offset, std::size_t total) {
  Vector r(total, Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
  return r;
}

void add_scaled(const FieldSpec& f, SparseVec& out, std::size_t offset, const Vector& v,
                const Scalar& c = Scalar(1)) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(offset + i), f.mul(c, v[i]));
  }
}

std::optional<std::vector<Vector>> available_radical(const FdAlgebra& a) {
  if (a.designated_radical()) return *a.designated_radical();
  if (a.field().is_rational()) return radical(a);
  return std::nullopt;
}

// Coefficients of the tensor of two coordinate vectors, flattened p * dq + q.
Vector tensor_vec(const FieldSpec& f, const Vector& x, const Vector& y) {
  Vector t(x.size() * y.size(), Scalar(0));
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p] == 0) continue;
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (y[q] != 0) t[p * y.size() + q] = f.mul(x[p], y[q]);
    }
  }
  return t;
}

}  // namespace

BlockTriangular block_triangular(const BlockTriangularData& d) {
  const std::size_t n = d.diagonal.size();
  if (n == 0) throw PreconditionError("block_triangular: no diagonal blocks");
  const FieldSpec f = d.diagonal[0]->field();
  for (const auto& r : d.diagonal) {
    if (!(r->field() == f)) throw FieldMismatch("block_triangular: field mismatch");
  }
  for (const auto& [ij, m] : d.off_diagonal) {
    auto [i, j] = ij;
    if (i >= n || j >= i) throw PreconditionError("block_triangular: off-diagonal block must have i > j");
    if (!same_algebra(m.left_algebra(), *d.diagonal[i]) ||
        !same_algebra(m.right_algebra(), *d.diagonal[j])) {
      throw PreconditionError("block_triangular: block (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") is not an R_i-R_j-bimodule");
    }
  }
  auto block_dim = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == j) return d.diagonal[i]->dim();
    auto it = d.off_diagonal.find({i, j});
    return it == d.off_diagonal.end() ? 0 : it->second.dim();
  };
  for (const auto& [ilj, psi] : d.composition) {
    auto [i, l, j] = ilj;
    if (!(i > l && l > j && i < n)) throw PreconditionError("block_triangular: composition index");
    if (psi.rows() != block_dim(i, j) || psi.cols() != block_dim(i, l) * block_dim(l, j)) {
      throw DimensionMismatch("block_triangular: composition map shape");
    }
  }

  BlockTriangular out{FdAlgebra::zero(f), {}, {}, {}};
  std::vector<std::string> labels;
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      std::size_t bd = block_dim(i, j);
      out.offset[{i, j}] = total;
      auto custom = d.labels.find({i, j});
      for (std::size_t k = 0; k < bd; ++k) {
        out.block_of.emplace_back(i, j);
        if (custom != d.labels.end()) {
          labels.push_back(custom->second.at(k));
        } else if (i == j) {
          std::string prefix =
              i < d.diagonal_prefix.size() ? d.diagonal_prefix[i] : "R" + std::to_string(i + 1);
          labels.push_back(prefix + "." + d.diagonal[i]->label(k));
        } else {
          labels.push_back("M" + std::to_string(i + 1) + std::to_string(j + 1) + "." +
                           std::to_string(k + 1));
        }
      }
      total += bd;
    }
  }

  FdAlgebra::Table t;
  t.field = f;
  t.labels = labels;
  t.products.resize(total * total);
  for (std::size_t u = 0; u < total; ++u) {
    auto [i, l] = out.block_of[u];
    std::size_t ku = u - out.offset[{i, l}];
    for (std::size_t v = 0; v < total; ++v) {
      auto [l2, j] = out.block_of[v];
      if (l2 != l) continue;
      std::size_t kv = v - out.offset[{l, j}];
      std::size_t target = out.offset[{i, j}];
      SparseVec& prod = t.products[u * total + v];
      if (i == l && l == j) {
        add_scaled(f, prod, target, to_dense(d.diagonal[i]->product(ku, kv), d.diagonal[i]->dim()));
      } else if (i == l) {
        const Bimodule& m = d.off_diagonal.at({i, j});
        add_scaled(f, prod, target,
                   m.act_left(d.diagonal[i]->basis_vector(ku), f.unit_vector(m.dim(), kv)));
      } else if (l == j) {
        const Bimodule& m = d.off_diagonal.at({i, l});
        add_scaled(f, prod, target,
                   m.act_right(f.unit_vector(m.dim(), ku), d.diagonal[l]->basis_vector(kv)));
      } else {
        auto it = d.composition.find({i, l, j});
        if (it == d.composition.end()) continue;
        add_scaled(f, prod, target, it->second.column(ku * block_dim(l, j) + kv));
      }
    }
  }
  t.unit = f.zeros(total);
  for (std::size_t i = 0; i < n; ++i) {
    Vector u = embed(d.diagonal[i]->unit(), out.offset[{i, i}], total);
    out.block_units.push_back(u);
    t.unit = add(f, t.unit, u);
    for (const auto& e : d.diagonal[i]->idempotents_or_unit()) {
      t.idempotents.push_back(embed(e, out.offset[{i, i}], total));
    }
  }
  std::vector<Vector> rad;
  bool have_radical = true;
  for (std::size_t i = 0; i < n && have_radical; ++i) {
    auto r = available_radical(*d.diagonal[i]);
    if (!r) {
      have_radical = false;
      break;
    }
    for (const auto& v : *r) rad.push_back(embed(v, out.offset[{i, i}], total));
  }
  for (std::size_t u = 0; u < total; ++u) {
    if (out.block_of[u].first != out.block_of[u].second) rad.push_back(f.unit_vector(total, u));
  }
  if (have_radical) t.radical = rad;
  out.algebra = FdAlgebra::make(std::move(t));
  return out;
}

TriangularAlgebra triangular_matrix(AlgebraRef b, AlgebraRef c, const Bimodule& m) {
  if (!(b->field() == c->field()) || !(m.left_algebra().field() == b->field())) {
    throw FieldMismatch("triangular_matrix: field mismatch");
  }
  if (!same_algebra(m.left_algebra(), *c) || !same_algebra(m.right_algebra(), *b)) {
    throw PreconditionError("triangular_matrix: M must be a C-B-bimodule");
  }
  BlockTriangularData d;
  d.diagonal = {b, c};
  d.diagonal_prefix = {"B", "C"};
  // rebind M to the exact algebra handles used on the diagonal
  d.off_diagonal.emplace(std::make_pair(1, 0),
                         Bimodule(c, b, m.dim(), m.left_actions(), m.right_actions()));
  std::vector<std::string> ml;
  for (std::size_t k = 0; k < m.dim(); ++k) ml.push_back("M." + std::to_string(k + 1));
  d.labels[{1, 0}] = ml;
  auto bt = block_triangular(d);
  return TriangularAlgebra{bt.algebra, bt.block_units[0], bt.block_units[1]};
}

Vector morita_alpha(const MoritaContextData& d, const Vector& n, const Vector& m) {
  const auto& f = d.b->field();
  return mat_vec(f, d.alpha, tensor_vec(f, n, m));
}

Vector morita_beta(const MoritaContextData& d, const Vector& m, const Vector& n) {
  const auto& f = d.b->field();
  return mat_vec(f, d.beta, tensor_vec(f, m, n));
}

void validate_morita_context(const MoritaContextData& d) {
  const auto& b = *d.b;
  const auto& c = *d.c;
  const auto& f = b.field();
  if (!(c.field() == f)) throw FieldMismatch("Morita context: field mismatch");
  if (!same_algebra(d.n.left_algebra(), b) || !same_algebra(d.n.right_algebra(), c)) {
    throw PreconditionError("Morita context: N must be a B-C-bimodule");
  }
  if (!same_algebra(d.m.left_algebra(), c) || !same_algebra(d.m.right_algebra(), b)) {
    throw PreconditionError("Morita context: M must be a C-B-bimodule");
  }
  const std::size_t dn = d.n.dim(), dm = d.m.dim();
  if (d.alpha.rows() != b.dim() || d.alpha.cols() != dn * dm) {
    throw DimensionMismatch("Morita context: alpha must be " + std::to_string(b.dim()) + " x " +
                            std::to_string(dn * dm));
  }
  if (d.beta.rows() != c.dim() || d.beta.cols() != dm * dn) {
    throw DimensionMismatch("Morita context: beta must be " + std::to_string(c.dim()) + " x " +
                            std::to_string(dm * dn));
  }
  auto nv = [&](std::size_t i) { return f.unit_vector(dn, i); };
  auto mv = [&](std::size_t i) { return f.unit_vector(dm, i); };
  auto fail = [](const std::string& what) { throw InvariantError("Morita context: " + what); };
  auto idx = [](const char* s, std::size_t i) { return std::string(s) + std::to_string(i + 1); };

  for (std::size_t p = 0; p < dn; ++p) {
    for (std::size_t q = 0; q < dm; ++q) {
      Vector a = morita_alpha(d, nv(p), mv(q));
      Vector be = morita_beta(d, mv(q), nv(p));
      for (std::size_t k = 0; k < c.dim(); ++k) {
        Vector ck = c.basis_vector(k);
        if (morita_alpha(d, d.n.act_right(nv(p), ck), mv(q)) !=
            morita_alpha(d, nv(p), d.m.act_left(ck, mv(q)))) {
          fail("alpha is not C-balanced at (" + idx("n", p) + ", " + c.label(k) + ", " + idx("m", q) + ")");
        }
        if (morita_beta(d, d.m.act_left(ck, mv(q)), nv(p)) != c.multiply(ck, be)) {
          fail("beta is not left C-linear at (" + c.label(k) + ", " + idx("m", q) + ", " + idx("n", p) + ")");
        }
        if (morita_beta(d, mv(q), d.n.act_right(nv(p), ck)) != c.multiply(be, ck)) {
          fail("beta is not right C-linear at (" + idx("m", q) + ", " + idx("n", p) + ", " + c.label(k) + ")");
        }
      }
      for (std::size_t k = 0; k < b.dim(); ++k) {
        Vector bk = b.basis_vector(k);
        if (morita_beta(d, d.m.act_right(mv(q), bk), nv(p)) !=
            morita_beta(d, mv(q), d.n.act_left(bk, nv(p)))) {
          fail("beta is not B-balanced at (" + idx("m", q) + ", " + b.label(k) + ", " + idx("n", p) + ")");
        }
        if (morita_alpha(d, d.n.act_left(bk, nv(p)), mv(q)) != b.multiply(bk, a)) {
          fail("alpha is not left B-linear at (" + b.label(k) + ", " + idx("n", p) + ", " + idx("m", q) + ")");
        }
        if (morita_alpha(d, nv(p), d.m.act_right(mv(q), bk)) != b.multiply(a, bk)) {
          fail("alpha is not right B-linear at (" + idx("n", p) + ", " + idx("m", q) + ", " + b.label(k) + ")");
        }
      }
      for (std::size_t r = 0; r < dn; ++r) {
        // alpha(n (x) m) n' = n beta(m (x) n')
        if (d.n.act_left(a, nv(r)) != d.n.act_right(nv(p), morita_beta(d, mv(q), nv(r)))) {
          fail("alpha(n m) n' != n beta(m n') at (" + idx("n", p) + ", " + idx("m", q) + ", " +
               idx("n", r) + ")");
        }
      }
      for (std::size_t r = 0; r < dm; ++r) {
        // beta(m (x) n) m' = m alpha(n (x) m')
        if (d.m.act_left(be, mv(r)) != d.m.act_right(mv(q), morita_alpha(d, nv(p), mv(r)))) {
          fail("beta(m n) m' != m alpha(n m') at (" + idx("m", q) + ", " + idx("n", p) + ", " +
               idx("m", r) + ")");
        }
      }
    }
  }
}

MoritaRing morita_context_ring(const MoritaContextData& d) {
  validate_morita_context(d);
  const auto& b = *d.b;
  const auto& c = *d.c;
  const auto& f = b.field();
  const std::size_t db = b.dim(), dn = d.n.dim(), dm = d.m.dim(), dc = c.dim();
  const std::size_t on = db, om = db + dn, oc = db + dn + dm, total = oc + dc;
  enum Part { PB, PN, PM, PC };
  auto part = [&](std::size_t u) -> std::pair<Part, std::size_t> {
    if (u < on) return {PB, u};
    if (u < om) return {PN, u - on};
    if (u < oc) return {PM, u - om};
    return {PC, u - oc};
  };

  FdAlgebra::Table t;
  t.field = f;
  for (const auto& l : b.labels()) t.labels.push_back("B." + l);
  for (std::size_t k = 0; k < dn; ++k) t.labels.push_back("N." + std::to_string(k + 1));
  for (std::size_t k = 0; k < dm; ++k) t.labels.push_back("M." + std::to_string(k + 1));
  for (const auto& l : c.labels()) t.labels.push_back("C." + l);
  t.products.resize(total * total);
  for (std::size_t u = 0; u < total; ++u) {
    auto [pu, i] = part(u);
    for (std::size_t v = 0; v < total; ++v) {
      auto [pv, j] = part(v);
      SparseVec& prod = t.products[u * total + v];
      if (pu == PB && pv == PB) {
        prod = b.product(i, j);
      } else if (pu == PB && pv == PN) {
        add_scaled(f, prod, on, d.n.act_left(b.basis_vector(i), f.unit_vector(dn, j)));
      } else if (pu == PN && pv == PC) {
        add_scaled(f, prod, on, d.n.act_right(f.unit_vector(dn, i), c.basis_vector(j)));
      } else if (pu == PN && pv == PM) {
        add_scaled(f, prod, 0, morita_alpha(d, f.unit_vector(dn, i), f.unit_vector(dm, j)));
      } else if (pu == PM && pv == PB) {
        add_scaled(f, prod, om, d.m.act_right(f.unit_vector(dm, i), b.basis_vector(j)));
      } else if (pu == PC && pv == PM) {
        add_scaled(f, prod, om, d.m.act_left(c.basis_vector(i), f.unit_vector(dm, j)));
      } else if (pu == PM && pv == PN) {
        add_scaled(f, prod, oc, morita_beta(d, f.unit_vector(dm, i), f.unit_vector(dn, j)));
      } else if (pu == PC && pv == PC) {
        add_scaled(f, prod, oc, to_dense(c.product(i, j), dc));
      }
    }
  }
  Vector e = embed(b.unit(), 0, total);
  Vector fv = embed(c.unit(), oc, total);
  t.unit = add(f, e, fv);
  for (const auto& x : b.idempotents_or_unit()) t.idempotents.push_back(embed(x, 0, total));
  for (const auto& x : c.idempotents_or_unit()) t.idempotents.push_back(embed(x, oc, total));
  if (d.alpha.is_zero() && d.beta.is_zero()) {
    auto rb = available_radical(b);
    auto rc = available_radical(c);
    if (rb && rc) {
      std::vector<Vector> rad;
      for (const auto& v : *rb) rad.push_back(embed(v, 0, total));
      for (std::size_t k = on; k < oc; ++k) rad.push_back(f.unit_vector(total, k));
      for (const auto& v : *rc) rad.push_back(embed(v, oc, total));
      t.radical = rad;
    }
  }
  return MoritaRing{FdAlgebra::make(std::move(t)), e, fv};
}

FdAlgebra trivial_extension(AlgebraRef r, const Bimodule& m) {
  if (!same_algebra(m.left_algebra(), *r) || !same_algebra(m.right_algebra(), *r)) {
    throw PreconditionError("trivial_extension: M must be an R-R-bimodule");
  }
  const auto& f = r->field();
  const std::size_t dr = r->dim(), dm = m.dim(), total = dr + dm;
  FdAlgebra::Table t;
  t.field = f;
  for (const auto& l : r->labels()) t.labels.push_back("R." + l);
  for (std::size_t k = 0; k < dm; ++k) t.labels.push_back("M." + std::to_string(k + 1));
  t.products.resize(total * total);
  for (std::size_t u = 0; u < total; ++u) {
    for (std::size_t v = 0; v < total; ++v) {
      SparseVec& prod = t.products[u * total + v];
      if (u < dr && v < dr) {
        prod = r->product(u, v);
      } else if (u < dr) {
        add_scaled(f, prod, dr, m.act_left(r->basis_vector(u), f.unit_vector(dm, v - dr)));
      } else if (v < dr) {
        add_scaled(f, prod, dr, m.act_right(f.unit_vector(dm, u - dr), r->basis_vector(v)));
      }
    }
  }
  t.unit = embed(r->unit(), 0, total);
  for (const auto& e : r->idempotents()) t.idempotents.push_back(embed(e, 0, total));
  if (auto rr = available_radical(*r)) {
    std::vector<Vector> rad;
    for (const auto& v : *rr) rad.push_back(embed(v, 0, total));
    for (std::size_t k = dr; k < total; ++k) rad.push_back(f.unit_vector(total, k));
    t.radical = rad;
  }
  return FdAlgebra::make(std::move(t));
}

BlockTriangular triangular_from_blocks(const FdAlgebra& a,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& block_of,
                                       std::size_t n, std::vector<std::size_t>* perm_out) {
  const auto& f = a.field();
  if (block_of.size() != a.dim()) throw DimensionMismatch("triangular_from_blocks: block list");
  std::vector<std::vector<std::vector<std::size_t>>> members(
      n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto [i, j] = block_of[k];
    if (i >= n || j > i) {
      throw InternalError("triangular_from_blocks: basis element " + a.label(k) +
                          " lies above the diagonal");
    }
    members[i][j].push_back(k);
  }
  std::vector<std::size_t> local(a.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < members[i][j].size(); ++k) local[members[i][j][k]] = k;
  // product of basis elements u, v restricted to block (i, j) coordinates
  auto block_product = [&](std::size_t u, std::size_t v, std::size_t i, std::size_t j) {
    Vector out(members[i][j].size(), Scalar(0));
    for (const auto& [k, c] : a.product(u, v)) {
      if (block_of[k] != std::make_pair(i, j)) {
        throw InternalError("triangular_from_blocks: product " + a.label(u) + " * " + a.label(v) +
                            " leaves block (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
      }
      out[local[k]] = c;
    }
    return out;
  };

  BlockTriangularData data;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& mi = members[i][i];
    const std::size_t g = mi.size();
    FdAlgebra::Table t;
    t.field = f;
    for (auto k : mi) t.labels.push_back(a.label(k));
    t.products.resize(g * g);
    for (std::size_t p = 0; p < g; ++p)
      for (std::size_t q = 0; q < g; ++q) t.products[p * g + q] = to_sparse(block_product(mi[p], mi[q], i, i));
    // the unit of R_i is the diagonal part of 1
    t.unit = f.zeros(g);
    for (std::size_t p = 0; p < g; ++p) t.unit[p] = a.unit()[mi[p]];
    data.diagonal.push_back(share(FdAlgebra::make(std::move(t))));
    data.labels[{i, i}] = data.diagonal.back()->labels();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& mij = members[i][j];
      if (mij.empty()) continue;
      std::vector<Matrix> left, right;
      for (auto r : members[i][i]) {
        std::vector<Vector> cols;
        for (auto m : mij) cols.push_back(block_product(r, m, i, j));
        left.push_back(Matrix::from_columns(mij.size(), cols));
      }
      for (auto r : members[j][j]) {
        std::vector<Vector> cols;
        for (auto m : mij) cols.push_back(block_product(m, r, i, j));
        right.push_back(Matrix::from_columns(mij.size(), cols));
      }
      data.off_diagonal.emplace(std::make_pair(i, j),
                                Bimodule(data.diagonal[i], data.diagonal[j], mij.size(), left, right));
      std::vector<std::string> labels;
      for (auto k : mij) labels.push_back(a.label(k));
      data.labels[{i, j}] = labels;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < i; ++l) {
      for (std::size_t j = 0; j < l; ++j) {
        const auto &mil = members[i][l], &mlj = members[l][j], &mij = members[i][j];
        if (mil.empty() || mlj.empty()) continue;
        Matrix psi(mij.size(), mil.size() * mlj.size());
        for (std::size_t p = 0; p < mil.size(); ++p) {
          for (std::size_t q = 0; q < mlj.size(); ++q) {
            Vector v = block_product(mil[p], mlj[q], i, j);
            for (std::size_t r = 0; r < v.size(); ++r) psi(r, p * mlj.size() + q) = v[r];
          }
        }
        data.composition.emplace(std::make_tuple(i, l, j), psi);
      }
    }
  }
  auto bt = block_triangular(data);
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto k : members[i][j]) perm.push_back(k);
  if (!permute_basis(a, perm).same_structure(bt.algebra)) {
    throw InternalError("triangular_from_blocks: reassembled algebra differs");
  }
  if (perm_out) *perm_out = perm;
  return bt;
}

std::vector<Vector> image_vectors(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

}  // namespace hhwb

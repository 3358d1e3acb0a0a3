#include "hhwb/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "hhwb/error.hpp"

namespace hhwb {

ChainComplex::ChainComplex(FieldSpec field, std::vector<std::size_t> dims,
                           std::vector<SparseMat> differentials, std::string provenance)
    : field_(field),
      dims_(std::move(dims)),
      differentials_(std::move(differentials)),
      provenance_(std::move(provenance)) {
  if (dims_.empty()) throw DimensionMismatch("chain complex needs at least degree 0");
  if (differentials_.size() + 1 != dims_.size()) {
    throw DimensionMismatch("chain complex: one differential per positive degree");
  }
  for (std::size_t n = 1; n < dims_.size(); ++n) {
    const auto& d = differentials_[n - 1];
    if (d.rows() != dims_[n - 1] || d.cols() != dims_[n]) {
      throw DimensionMismatch("chain complex: d_" + std::to_string(n) + " has shape " +
                              std::to_string(d.rows()) + " x " + std::to_string(d.cols()));
    }
    if (!(d.field() == field_)) throw FieldMismatch("chain complex: d_" + std::to_string(n));
  }
}

void ChainComplex::check_square_zero() const {
  for (std::size_t n = 1; n + 1 < dims_.size(); ++n) {
    if (!matmul(differentials_[n - 1], differentials_[n]).is_zero()) {
      throw InternalError("d_" + std::to_string(n) + " d_" + std::to_string(n + 1) +
                          " != 0 in " + (provenance_.empty() ? "chain complex" : provenance_));
    }
  }
}

std::vector<std::size_t> homology_dims(const ChainComplex& c, std::size_t degree_cap) {
  if (degree_cap > c.top_degree()) {
    throw PreconditionError("homology requested up to degree " + std::to_string(degree_cap) +
                            " but the complex stops at " + std::to_string(c.top_degree()));
  }
  c.check_square_zero();
  const auto& dims = c.dims();
  std::vector<std::size_t> ranks(dims.size() + 1, 0);  // ranks[n] = rank d_n
  for (std::size_t n = 1; n <= std::min(degree_cap + 1, c.top_degree()); ++n) {
    ranks[n] = rank(c.differential(n));
  }
  std::vector<std::size_t> h;
  for (std::size_t n = 0; n <= degree_cap; ++n) h.push_back(dims[n] - ranks[n] - ranks[n + 1]);
  return h;
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

using CountMatrix = std::vector<std::vector<std::size_t>>;

CountMatrix count_mul(const CountMatrix& x, const CountMatrix& y) {
  const std::size_t r = x.size();
  CountMatrix z(r, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) z[i][j] = sat_add(z[i][j], sat_mul(x[i][k], y[k][j]));
  return z;
}

// Basis of A adapted to A = (+) e_s A e_t with each e_s a basis element.
struct Peirce {
  std::size_t blocks = 0;
  Matrix basis;  // columns in the original coordinates
  std::vector<std::size_t> left, right;
  std::vector<bool> is_idempotent;
  std::vector<SparseVec> products;  // new coordinates, i * dim + j
  std::vector<std::vector<std::uint32_t>> abar_from;  // abar elements by left block

  std::size_t dim() const { return left.size(); }
  const SparseVec& product(std::size_t i, std::size_t j) const { return products[i * dim() + j]; }
};

Peirce make_peirce(const FdAlgebra& a, std::vector<Vector> idem) {
  const auto& f = a.field();
  const std::size_t d = a.dim();
  Peirce p;
  if (d == 0) return p;
  if (idem.empty()) idem.push_back(a.unit());
  p.blocks = idem.size();
  std::vector<Vector> cols;
  for (std::size_t s = 0; s < idem.size(); ++s) {
    for (std::size_t t = 0; t < idem.size(); ++t) {
      LinearSpan span(f, d);
      if (s == t && !span.try_add(idem[s])) throw PreconditionError("zero idempotent");
      for (std::size_t k = 0; k < d; ++k) {
        span.try_add(a.multiply(a.multiply(idem[s], a.basis_vector(k)), idem[t]));
      }
      for (std::size_t k = 0; k < span.dim(); ++k) {
        cols.push_back(span.basis()[k]);
        p.left.push_back(s);
        p.right.push_back(t);
        p.is_idempotent.push_back(s == t && k == 0);
      }
    }
  }
  if (cols.size() != d) {
    throw PreconditionError("idempotents do not form a complete orthogonal set");
  }
  p.basis = Matrix::from_columns(d, cols);
  Matrix inv = inverse(f, p.basis);
  p.products.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (p.right[i] != p.left[j]) continue;
      p.products[i * d + j] = to_sparse(mat_vec(f, inv, a.multiply(cols[i], cols[j])));
    }
  }
  p.abar_from.resize(p.blocks);
  for (std::size_t k = 0; k < d; ++k) {
    if (!p.is_idempotent[k]) p.abar_from[p.left[k]].push_back(static_cast<std::uint32_t>(k));
  }
  return p;
}

CountMatrix abar_counts(const Peirce& p) {
  CountMatrix m(p.blocks, std::vector<std::size_t>(p.blocks, 0));
  for (std::size_t k = 0; k < p.dim(); ++k)
    if (!p.is_idempotent[k]) ++m[p.left[k]][p.right[k]];
  return m;
}

CountMatrix identity_counts(std::size_t r) {
  CountMatrix m(r, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::size_t> hh_predicted(const Peirce& p, std::size_t top) {
  std::vector<std::size_t> dims;
  CountMatrix all(p.blocks, std::vector<std::size_t>(p.blocks, 0));
  for (std::size_t k = 0; k < p.dim(); ++k) ++all[p.left[k]][p.right[k]];
  CountMatrix bar = abar_counts(p), power = identity_counts(p.blocks);
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t total = 0;
    for (std::size_t s = 0; s < p.blocks; ++s)
      for (std::size_t t = 0; t < p.blocks; ++t) total = sat_add(total, sat_mul(all[s][t], power[t][s]));
    dims.push_back(total);
    power = count_mul(power, bar);
  }
  return dims;
}

void guard_dims(const std::vector<std::size_t>& dims, const char* what) {
  for (std::size_t n = 1; n < dims.size(); ++n) {
    try {
      if (dims[n] == kSaturated) throw SizeGuardError("dimension overflow");
      check_size(dims[n - 1], dims[n], what);
    } catch (const SizeGuardError& e) {
      throw SizeGuardError(std::string(what) + ": chain degree " + std::to_string(n) +
                           " has dimension " +
                           (dims[n] == kSaturated ? std::string("beyond 2^64") : std::to_string(dims[n])) +
                           " (" + e.what() + ")");
    }
  }
}

using Cell = std::vector<std::uint32_t>;

struct CellIndex {
  std::vector<Cell> cells;
  std::map<Cell, std::uint32_t> index;
  void add(const Cell& c) {
    index.emplace(c, static_cast<std::uint32_t>(cells.size()));
    cells.push_back(c);
  }
  std::uint32_t at(const Cell& c) const {
    auto it = index.find(c);
    if (it == index.end()) throw InternalError("boundary term outside the chain basis");
    return it->second;
  }
};

// Cyclic chains (a_0, abar_1, ..., abar_n) with matching blocks.
CellIndex hh_cells(const Peirce& p, std::size_t n) {
  CellIndex out;
  Cell cur;
  auto extend = [&](auto&& self, std::size_t block, std::size_t close) -> void {
    if (cur.size() == n + 1) {
      if (block == close) out.add(cur);
      return;
    }
    for (auto k : p.abar_from[block]) {
      cur.push_back(k);
      self(self, p.right[k], close);
      cur.pop_back();
    }
  };
  for (std::uint32_t a0 = 0; a0 < p.dim(); ++a0) {
    cur.assign(1, a0);
    extend(extend, p.right[a0], p.left[a0]);
  }
  return out;
}

ChainComplex build_hh_complex(const FdAlgebra& a, std::size_t top,
                              const std::vector<Vector>& idempotents, const std::string& provenance) {
  const auto& f = a.field();
  if (a.dim() == 0) {
    std::vector<SparseMat> diffs;
    for (std::size_t n = 1; n <= top; ++n) diffs.emplace_back(f, 0, 0);
    return ChainComplex(f, std::vector<std::size_t>(top + 1, 0), std::move(diffs), provenance);
  }
  Peirce p = make_peirce(a, idempotents);
  auto predicted = hh_predicted(p, top);
  guard_dims(predicted, provenance.c_str());
  std::vector<CellIndex> cells;
  for (std::size_t n = 0; n <= top; ++n) {
    cells.push_back(hh_cells(p, n));
    if (cells.back().cells.size() != predicted[n]) throw InternalError("chain count mismatch");
  }
  std::vector<SparseMat> diffs;
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<Triplet> trips;
    const auto& src = cells[n];
    const auto& dst = cells[n - 1];
    Cell face;
    for (std::size_t col = 0; col < src.cells.size(); ++col) {
      const Cell& c = src.cells[col];
      // a_0 a_1 (x) ...
      for (const auto& [k, v] : p.product(c[0], c[1])) {
        face.assign(1, k);
        face.insert(face.end(), c.begin() + 2, c.end());
        trips.push_back({dst.at(face), col, v});
      }
      for (std::size_t i = 1; i < n; ++i) {
        for (const auto& [k, v] : p.product(c[i], c[i + 1])) {
          if (p.is_idempotent[k]) continue;
          face.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
          face.push_back(k);
          face.insert(face.end(), c.begin() + static_cast<std::ptrdiff_t>(i) + 2, c.end());
          trips.push_back({dst.at(face), col, i % 2 ? f.neg(v) : v});
        }
      }
      // (-1)^n a_n a_0 (x) a_1 ...
      for (const auto& [k, v] : p.product(c[n], c[0])) {
        face.assign(1, k);
        face.insert(face.end(), c.begin() + 1, c.begin() + static_cast<std::ptrdiff_t>(n));
        trips.push_back({dst.at(face), col, n % 2 ? f.neg(v) : v});
      }
    }
    diffs.push_back(SparseMat::from_triplets(f, dst.cells.size(), src.cells.size(), std::move(trips)));
  }
  return ChainComplex(f, predicted, std::move(diffs), provenance);
}

HomologyReport hh_report(const FdAlgebra& a, std::size_t degree_cap, const ChainComplex& c) {
  HomologyReport r;
  r.dims = homology_dims(c, degree_cap);
  r.chain_dims = c.dims();
  r.degree_cap = degree_cap;
  r.field = a.field();
  r.provenance = c.provenance();
  r.commutator_quotient = commutator_quotient_dim(a);
  if (r.dims[0] != r.commutator_quotient) {
    throw InternalError("HH_0 = " + std::to_string(r.dims[0]) + " but dim A/[A,A] = " +
                        std::to_string(r.commutator_quotient));
  }
  return r;
}

}  // namespace

std::vector<std::size_t> bar_chain_dims(const FdAlgebra& a, std::size_t top,
                                        const std::vector<Vector>& idempotents) {
  if (a.dim() == 0) return std::vector<std::size_t>(top + 1, 0);
  return hh_predicted(make_peirce(a, idempotents), top);
}

ChainComplex reduced_bar_complex(const FdAlgebra& a, std::size_t top) {
  return build_hh_complex(a, top, {}, "reduced bar complex over k");
}

ChainComplex relative_bar_complex(const FdAlgebra& a, std::size_t top,
                                  const std::vector<Vector>& idempotents) {
  return build_hh_complex(a, top, idempotents,
                          "bar complex relative to " + std::to_string(std::max<std::size_t>(idempotents.size(), 1)) +
                              " idempotent(s)");
}

HomologyReport hh_dims(const FdAlgebra& a, std::size_t degree_cap) {
  return hh_report(a, degree_cap, relative_bar_complex(a, degree_cap + 1, a.idempotents_or_unit()));
}

HomologyReport hh_dims_reduced(const FdAlgebra& a, std::size_t degree_cap) {
  return hh_report(a, degree_cap, reduced_bar_complex(a, degree_cap + 1));
}

ChainComplex tor_complex(const RightModule& x, const LeftModule& y, std::size_t top) {
  const FdAlgebra& b = x.algebra();
  const auto& f = b.field();
  if (!same_algebra(b, y.algebra())) throw PreconditionError("Tor: modules over different algebras");
  const std::string provenance = "bar resolution relative to the idempotents";
  if (b.dim() == 0 || x.dim() == 0 || y.dim() == 0) {
    std::vector<SparseMat> diffs;
    for (std::size_t n = 1; n <= top; ++n) diffs.emplace_back(f, 0, 0);
    return ChainComplex(f, std::vector<std::size_t>(top + 1, 0), std::move(diffs), provenance);
  }
  auto idem = b.idempotents_or_unit();
  Peirce p = make_peirce(b, idem);
  const std::size_t r = p.blocks;

  // X = (+) X e_t and Y = (+) e_s Y
  std::vector<Vector> xcols, ycols;
  std::vector<std::size_t> xblock, yblock;
  for (std::size_t t = 0; t < r; ++t) {
    LinearSpan span(f, x.dim());
    for (std::size_t k = 0; k < x.dim(); ++k) span.try_add(x.act(f.unit_vector(x.dim(), k), idem[t]));
    for (const auto& v : span.basis()) {
      xcols.push_back(v);
      xblock.push_back(t);
    }
  }
  for (std::size_t s = 0; s < r; ++s) {
    LinearSpan span(f, y.dim());
    for (std::size_t k = 0; k < y.dim(); ++k) span.try_add(y.act(idem[s], f.unit_vector(y.dim(), k)));
    for (const auto& v : span.basis()) {
      ycols.push_back(v);
      yblock.push_back(s);
    }
  }
  if (xcols.size() != x.dim() || ycols.size() != y.dim()) {
    throw InternalError("module does not split along the idempotents");
  }
  Matrix xinv = inverse(f, Matrix::from_columns(x.dim(), xcols));
  Matrix yinv = inverse(f, Matrix::from_columns(y.dim(), ycols));
  // x_i a_k and a_k y_j for abar elements a_k, in the adapted bases
  std::map<std::pair<std::uint32_t, std::uint32_t>, SparseVec> xa, ay;
  for (std::uint32_t i = 0; i < xcols.size(); ++i) {
    for (auto k : p.abar_from[xblock[i]]) {
      xa[{i, k}] = to_sparse(mat_vec(f, xinv, x.act(xcols[i], p.basis.column(k))));
    }
  }
  for (std::uint32_t k = 0; k < p.dim(); ++k) {
    if (p.is_idempotent[k]) continue;
    for (std::uint32_t j = 0; j < ycols.size(); ++j) {
      if (yblock[j] != p.right[k]) continue;
      ay[{k, j}] = to_sparse(mat_vec(f, yinv, y.act(p.basis.column(k), ycols[j])));
    }
  }

  CountMatrix bar = abar_counts(p), power = identity_counts(r);
  std::vector<std::size_t> xcount(r, 0), ycount(r, 0), predicted;
  for (auto t : xblock) ++xcount[t];
  for (auto s : yblock) ++ycount[s];
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t total = 0;
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t s = 0; s < r; ++s) total = sat_add(total, sat_mul(sat_mul(xcount[t], power[t][s]), ycount[s]));
    predicted.push_back(total);
    power = count_mul(power, bar);
  }
  guard_dims(predicted, "Tor complex");

  // cells (x, abar_1, ..., abar_n, y)
  std::vector<CellIndex> cells;
  for (std::size_t n = 0; n <= top; ++n) {
    CellIndex out;
    Cell cur;
    auto extend = [&](auto&& self, std::size_t block) -> void {
      if (cur.size() == n + 1) {
        for (std::uint32_t j = 0; j < ycols.size(); ++j) {
          if (yblock[j] != block) continue;
          cur.push_back(j);
          out.add(cur);
          cur.pop_back();
        }
        return;
      }
      for (auto k : p.abar_from[block]) {
        cur.push_back(k);
        self(self, p.right[k]);
        cur.pop_back();
      }
    };
    for (std::uint32_t i = 0; i < xcols.size(); ++i) {
      cur.assign(1, i);
      extend(extend, xblock[i]);
    }
    if (out.cells.size() != predicted[n]) throw InternalError("Tor chain count mismatch");
    cells.push_back(std::move(out));
  }

  std::vector<SparseMat> diffs;
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<Triplet> trips;
    const auto& src = cells[n];
    const auto& dst = cells[n - 1];
    Cell face;
    for (std::size_t col = 0; col < src.cells.size(); ++col) {
      const Cell& c = src.cells[col];  // c[0] = x, c[1..n] = abar, c[n+1] = y
      for (const auto& [k, v] : xa.at({c[0], c[1]})) {
        face.assign(1, k);
        face.insert(face.end(), c.begin() + 2, c.end());
        trips.push_back({dst.at(face), col, v});
      }
      for (std::size_t i = 1; i < n; ++i) {
        for (const auto& [k, v] : p.product(c[i], c[i + 1])) {
          if (p.is_idempotent[k]) continue;
          face.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
          face.push_back(k);
          face.insert(face.end(), c.begin() + static_cast<std::ptrdiff_t>(i) + 2, c.end());
          trips.push_back({dst.at(face), col, i % 2 ? f.neg(v) : v});
        }
      }
      for (const auto& [k, v] : ay.at({c[n], c[n + 1]})) {
        face.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
        face.push_back(k);
        trips.push_back({dst.at(face), col, n % 2 ? f.neg(v) : v});
      }
    }
    diffs.push_back(SparseMat::from_triplets(f, dst.cells.size(), src.cells.size(), std::move(trips)));
  }
  return ChainComplex(f, predicted, std::move(diffs), provenance);
}

std::vector<std::size_t> tor_dims(const RightModule& x, const LeftModule& y, std::size_t degree_cap) {
  auto h = homology_dims(tor_complex(x, y, degree_cap + 1), degree_cap);
  std::size_t t0 = tensor_over(x, y).dim;
  if (h[0] != t0) {
    throw InternalError("Tor_0 = " + std::to_string(h[0]) + " but dim X (x)_B Y = " + std::to_string(t0));
  }
  return h;
}

namespace {

RightModule direct_sum(AlgebraRef a, const std::vector<const RightModule*>& parts) {
  std::size_t total = 0;
  for (auto* m : parts) total += m->dim();
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    Matrix big(total, total);
    std::size_t off = 0;
    for (auto* m : parts) {
      const Matrix& s = m->action(k);
      for (std::size_t i = 0; i < m->dim(); ++i)
        for (std::size_t j = 0; j < m->dim(); ++j) big(off + i, off + j) = s(i, j);
      off += m->dim();
    }
    act.push_back(std::move(big));
  }
  return RightModule(a, total, std::move(act));
}

// span of M J in M's coordinates
LinearSpan radical_part(const RightModule& m, const std::vector<Vector>& rad) {
  LinearSpan span(m.algebra().field(), m.dim());
  for (const auto& j : rad) {
    Matrix act = m.act(j);
    for (std::size_t k = 0; k < m.dim(); ++k) span.try_add(act.column(k));
  }
  return span;
}

struct Cover {
  std::size_t top_m = 0;
  std::size_t top_f = 0;
  RightModule kernel;
};

Cover cover(const RightModule& m, const std::vector<Vector>& rad) {
  const AlgebraRef& a = m.algebra_ref();
  const auto& f = a->field();
  auto idem = a->idempotents_or_unit();
  LinearSpan span = radical_part(m, rad);
  const std::size_t mj = span.dim();
  std::vector<std::pair<Vector, std::size_t>> gens;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    Matrix act = m.act(idem[i]);
    for (std::size_t k = 0; k < m.dim(); ++k) {
      Vector v = act.column(k);
      if (span.try_add(v)) gens.emplace_back(v, i);
    }
  }
  RightModule regular = RightModule::regular(a);
  std::vector<RightModule> projectives;
  std::vector<Matrix> inclusions;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    Matrix inc;
    projectives.push_back(submodule(regular, {idem[i]}, &inc));
    inclusions.push_back(inc);
  }
  std::vector<const RightModule*> parts;
  std::vector<Vector> map_cols;
  for (const auto& [g, i] : gens) {
    parts.push_back(&projectives[i]);
    for (std::size_t c = 0; c < inclusions[i].cols(); ++c) map_cols.push_back(m.act(g, inclusions[i].column(c)));
  }
  RightModule free = direct_sum(a, parts);
  Matrix phi = Matrix::from_columns(m.dim(), map_cols);
  if (matrix_rank(f, phi) != m.dim()) throw InternalError("projective cover is not surjective");
  RightModule k = submodule(free, kernel_basis(f, phi));
  Cover c{m.dim() - mj, free.dim() - radical_part(free, rad).dim(), std::move(k)};
  return c;
}

bool kernel_is_projective(const Cover& c, const std::vector<Vector>& rad) {
  std::size_t top_k = c.kernel.dim() - radical_part(c.kernel, rad).dim();
  return top_k + c.top_m == c.top_f;
}

}  // namespace

bool is_projective(const RightModule& m) {
  if (m.dim() == 0) return true;
  auto rad = radical(m.algebra());
  return kernel_is_projective(cover(m, rad), rad);
}

RightModule syzygy(const RightModule& m) {
  return cover(m, radical(m.algebra())).kernel;
}

std::optional<std::size_t> projdim(const RightModule& m, std::size_t bound) {
  if (m.dim() == 0) return 0;
  auto rad = radical(m.algebra());
  RightModule cur = m;
  for (std::size_t n = 0; n <= bound; ++n) {
    if (cur.dim() == 0) return n == 0 ? 0 : n - 1;
    Cover c = cover(cur, rad);
    if (kernel_is_projective(c, rad)) return n;
    cur = std::move(c.kernel);
  }
  return std::nullopt;
}

RightModule top_of_projective(AlgebraRef a, std::size_t i) {
  auto idem = a->idempotents_or_unit();
  if (i >= idem.size()) throw PreconditionError("idempotent index out of range");
  Matrix inc;
  RightModule p = submodule(RightModule::regular(a), {idem[i]}, &inc);
  LinearSpan pj = radical_part(p, radical(*a));
  return quotient_module(p, pj.basis());
}

GldimVerdict gldim(AlgebraRef a, std::size_t bound) {
  GldimVerdict v;
  v.bound = bound;
  v.value = 0;
  if (a->dim() == 0) return v;
  radical(*a);  // fail early when unavailable
  const std::size_t n = a->idempotents_or_unit().size();
  for (std::size_t i = 0; i < n; ++i) {
    RightModule s = top_of_projective(a, i);
    auto pd = projdim(s, bound);
    v.per_simple.push_back({i, s.dim(), pd});
    if (!pd) {
      v.value.reset();
    } else if (v.value) {
      v.value = std::max(*v.value, *pd);
    }
  }
  return v;
}

RightModule corner_right_module(const FdAlgebra& a, const Vector& e, AlgebraRef corner,
                                const Matrix& inclusion, Matrix* basis) {
  const auto& f = a.field();
  LinearSpan span(f, a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) span.try_add(a.multiply(a.basis_vector(k), e));
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < corner->dim(); ++j) {
    Vector c = inclusion.column(j);
    std::vector<Vector> cols;
    for (const auto& v : span.basis()) cols.push_back(*span.coordinates(a.multiply(v, c)));
    act.push_back(Matrix::from_columns(span.dim(), cols));
  }
  if (basis) *basis = Matrix::from_columns(a.dim(), span.basis());
  return RightModule(std::move(corner), span.dim(), std::move(act));
}

LeftModule corner_left_module(const FdAlgebra& a, const Vector& e, AlgebraRef corner,
                              const Matrix& inclusion, Matrix* basis) {
  const auto& f = a.field();
  LinearSpan span(f, a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) span.try_add(a.multiply(e, a.basis_vector(k)));
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < corner->dim(); ++j) {
    Vector c = inclusion.column(j);
    std::vector<Vector> cols;
    for (const auto& v : span.basis()) cols.push_back(*span.coordinates(a.multiply(c, v)));
    act.push_back(Matrix::from_columns(span.dim(), cols));
  }
  if (basis) *basis = Matrix::from_columns(a.dim(), span.basis());
  return LeftModule(std::move(corner), span.dim(), std::move(act));
}

StratifyingReport check_stratifying(const FdAlgebra& a, const Vector& e, std::size_t bound) {
  if (e.size() != a.dim()) throw DimensionMismatch("idempotent has wrong length");
  if (!a.is_idempotent(e)) throw PreconditionError("e is not idempotent");
  const auto& f = a.field();
  StratifyingReport r;
  r.bound = bound;
  Subalgebra sub = corner_algebra(a, e);
  AlgebraRef corner = share(sub.algebra);
  r.corner_dim = corner->dim();
  Matrix xb, yb;
  RightModule x = corner_right_module(a, e, corner, sub.inclusion, &xb);
  LeftModule y = corner_left_module(a, e, corner, sub.inclusion, &yb);
  TensorProduct t = tensor_over(x, y);
  r.tensor_dim = t.dim;
  r.ideal_dim = ideal_generated(a, {e}).dim();
  Matrix mult(a.dim(), x.dim() * y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < y.dim(); ++j) {
      Vector v = a.multiply(xb.column(i), yb.column(j));
      for (std::size_t k = 0; k < a.dim(); ++k) mult(k, i * y.dim() + j) = v[k];
    }
  }
  r.multiplication_rank = x.dim() * y.dim() == 0 ? 0 : induced_rank(f, t, mult);
  r.injective = r.multiplication_rank == r.tensor_dim;
  r.surjective = r.multiplication_rank == r.ideal_dim;
  r.si1 = r.injective && r.surjective;
  auto tor = tor_dims(x, y, bound);
  r.tor.assign(tor.begin() + 1, tor.end());
  r.si2 = std::all_of(r.tor.begin(), r.tor.end(), [](std::size_t d) { return d == 0; });
  return r;
}

}  // namespace hhwb

#include "hhwb/dense.hpp"

#include <algorithm>

#include "hhwb/error.hpp"

namespace hhwb {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s == 0; });
}

Matrix mat_mul(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
      }
    }
  }
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) f.reduce(r(i, j));
  }
  return r;
}

Matrix mat_add(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("mat_add shape mismatch");
  }
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  }
  return r;
}

Vector mat_vec(const FieldSpec& f, const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("mat_vec shape mismatch");
  Vector r(a.rows(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0 && v[k] != 0) r[i] += a(i, k) * v[k];
    }
    f.reduce(r[i]);
  }
  return r;
}

Matrix combine(const FieldSpec& f, const Vector& coeffs,
               const std::vector<Matrix>& mats, std::size_t rows,
               std::size_t cols) {
  if (coeffs.size() != mats.size()) throw DimensionMismatch("combine arity");
  Matrix r(rows, cols);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (mats[k](i, j) != 0) r(i, j) += coeffs[k] * mats[k](i, j);
      }
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) f.reduce(r(i, j));
  }
  return r;
}

LinearSpan::LinearSpan(FieldSpec field, std::size_t ambient)
    : field_(field), ambient_(ambient) {}

Vector LinearSpan::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("LinearSpan: vector length");
  Vector w = v;
  for (const auto& r : rows_) {
    if (w[r.pivot] == 0) continue;
    Scalar c = w[r.pivot];
    axpy(field_, w, field_.neg(c), r.row);
  }
  return w;
}

bool LinearSpan::try_add(const Vector& v) {
  if (v.size() != ambient_) throw DimensionMismatch("LinearSpan: vector length");
  Vector w = v;
  Vector combo(basis_.size() + 1, Scalar(0));
  for (const auto& r : rows_) {
    if (w[r.pivot] == 0) continue;
    Scalar c = w[r.pivot];
    axpy(field_, w, field_.neg(c), r.row);
    for (std::size_t i = 0; i < r.combo.size(); ++i) {
      if (r.combo[i] != 0) field_.add_mul(combo[i], field_.neg(c), r.combo[i]);
    }
  }
  auto lead = std::find_if(w.begin(), w.end(),
                           [](const Scalar& s) { return s != 0; });
  if (lead == w.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
  combo[basis_.size()] = 1;
  Scalar inv = field_.inv(w[pivot]);
  w = scale(field_, inv, w);
  combo = scale(field_, inv, combo);
  basis_.push_back(v);
  for (auto& r : rows_) r.combo.resize(basis_.size(), Scalar(0));
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const EchelonRow& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, EchelonRow{pivot, std::move(w), std::move(combo)});
  return true;
}

bool LinearSpan::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> LinearSpan::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("LinearSpan: vector length");
  Vector w = v;
  Vector coords(basis_.size(), Scalar(0));
  for (const auto& r : rows_) {
    if (w[r.pivot] == 0) continue;
    Scalar c = w[r.pivot];
    axpy(field_, w, field_.neg(c), r.row);
    axpy(field_, coords, c, r.combo);
  }
  if (!is_zero(w)) return std::nullopt;
  return coords;
}

std::vector<std::size_t> LinearSpan::pivots() const {
  std::vector<std::size_t> p;
  for (const auto& r : rows_) p.push_back(r.pivot);
  return p;
}

std::vector<std::size_t> LinearSpan::non_pivots() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (const auto& r : rows_) is_pivot[r.pivot] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!is_pivot[i]) out.push_back(i);
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FieldSpec& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    Scalar inv = f.inv(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar c = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vector> kernel_basis(const FieldSpec& f, const Matrix& a) {
  Matrix m = a;
  auto pivots = rref(f, m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(const FieldSpec& f, const Matrix& a) {
  Matrix m = a;
  return rref(f, m).size();
}

Matrix inverse(const FieldSpec& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(f, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw InvariantError("matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

}  // namespace hhwb

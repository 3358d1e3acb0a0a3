#pragma once

#include <optional>
#include <vector>

#include "hhwb/field.hpp"

namespace hhwb {

/// Small dense matrix used for module actions and change-of-basis data.
/// Acts on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Vector column(std::size_t c) const;
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const FieldSpec& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const FieldSpec& f, const Matrix& a, const Matrix& b);
Vector mat_vec(const FieldSpec& f, const Matrix& a, const Vector& v);
/// sum_k coeffs[k] * mats[k]
Matrix combine(const FieldSpec& f, const Vector& coeffs,
               const std::vector<Matrix>& mats, std::size_t rows,
               std::size_t cols);

/// A subspace of k^n together with a chosen basis (the vectors accepted by
/// try_add, in insertion order). Keeps a semi-echelon form internally so
/// membership, reduction and coordinates are exact.
class LinearSpan {
 public:
  LinearSpan(FieldSpec field, std::size_t ambient);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  /// Adds v to the basis if it is independent; returns whether it was added.
  bool try_add(const Vector& v);
  bool contains(const Vector& v) const;
  /// Remainder of v after eliminating every pivot column.
  Vector reduce(const Vector& v) const;
  /// Coefficients of v in the chosen basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Sorted pivot columns of the echelon form.
  std::vector<std::size_t> pivots() const;
  /// Ambient coordinates that are not pivots; their images form a basis of
  /// the quotient k^n / span.
  std::vector<std::size_t> non_pivots() const;

 private:
  struct EchelonRow {
    std::size_t pivot;
    Vector row;    // pivot entry is 1, zero before the pivot
    Vector combo;  // row = sum combo[i] * basis_[i]
  };
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<EchelonRow> rows_;  // sorted by pivot
};

/// Basis of {x : a x = 0}, one vector per free column (in increasing column
/// order), normalized to 1 at its free column.
std::vector<Vector> kernel_basis(const FieldSpec& f, const Matrix& a);
std::size_t matrix_rank(const FieldSpec& f, const Matrix& a);
/// Throws InvariantError when singular.
Matrix inverse(const FieldSpec& f, const Matrix& a);

}  // namespace hhwb

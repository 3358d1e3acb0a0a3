#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hhwb/field.hpp"

namespace hhwb {

/// Upper bound on rows*cols for any SparseMat. Process-wide; default 5e7.
std::uint64_t size_cap();
void set_size_cap(std::uint64_t cap);

/// Restores the previous cap on scope exit.
class ScopedSizeCap {
 public:
  explicit ScopedSizeCap(std::uint64_t cap) : saved_(size_cap()) {
    set_size_cap(cap);
  }
  ~ScopedSizeCap() { set_size_cap(saved_); }
  ScopedSizeCap(const ScopedSizeCap&) = delete;
  ScopedSizeCap& operator=(const ScopedSizeCap&) = delete;

 private:
  std::uint64_t saved_;
};

/// Throws SizeGuardError if a rows x cols matrix exceeds the cap.
void check_size(std::size_t rows, std::size_t cols, const char* what);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Exact sparse matrix in canonical form: rows hold column-sorted nonzero
/// entries, no stored zero, all indices in range.
class SparseMat {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;
  using Row = std::vector<Entry>;

  SparseMat(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Duplicate (row, col) triplets are summed.
  static SparseMat from_triplets(FieldSpec field, std::size_t rows,
                                 std::size_t cols, std::vector<Triplet> entries);
  static SparseMat identity(FieldSpec field, std::size_t n);
  static SparseMat from_dense(FieldSpec field,
                              const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return data_[i]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMat transpose() const;
  std::vector<std::vector<Scalar>> to_dense() const;

  bool operator==(const SparseMat& other) const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Row> data_;
};

/// Exact rank. Elimination visits rows in index order and pivots on the
/// smallest nonzero column, so the run is deterministic.
std::size_t rank(const SparseMat& m);
/// cols(m) - rank(m).
std::size_t kernel_dim(const SparseMat& m);
/// Exact product; throws DimensionMismatch / FieldMismatch.
SparseMat matmul(const SparseMat& a, const SparseMat& b);

}  // namespace hhwb

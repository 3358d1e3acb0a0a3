#pragma once

// Small algebras and random generators shared by the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/dense.hpp"
#include "hhwb/error.hpp"

namespace fx {

using namespace hhwb;

inline Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

inline Matrix square(std::size_t n, std::vector<int> entries) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = entries[i];
  return m;
}

inline Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

/// Unital subalgebra of n x n matrices spanned by the closure of `gens`
/// under products. The basis is the closure in discovery order (identity
/// first unless `keep_order` and the gens already span a unital algebra).
inline FdAlgebra matrix_algebra(const FieldSpec& f, std::size_t n,
                                const std::vector<Matrix>& gens,
                                std::vector<std::string> labels = {},
                                bool keep_order = false) {
  LinearSpan span(f, n * n);
  std::vector<Matrix> basis;
  auto add = [&](const Matrix& m) {
    Matrix c = m;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) c(r, k) = f.canon(c(r, k));
    if (span.try_add(flatten(c))) basis.push_back(c);
  };
  if (!keep_order) add(Matrix::identity(n));
  for (const auto& g : gens) add(g);
  if (keep_order) add(Matrix::identity(n));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(mat_mul(f, basis[i], basis[j]));
      add(mat_mul(f, basis[j], basis[i]));
    }
  }
  const std::size_t d = basis.size();
  FdAlgebra::Table t;
  t.field = f;
  for (std::size_t i = 0; i < d; ++i) {
    t.labels.push_back(i < labels.size() ? labels[i] : "b" + std::to_string(i));
  }
  t.products.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      t.products[i * d + j] = to_sparse(*span.coordinates(flatten(mat_mul(f, basis[i], basis[j]))));
  t.unit = *span.coordinates(flatten(Matrix::identity(n)));
  return FdAlgebra::make(t);
}

inline FdAlgebra field_k(const FieldSpec& f = FieldSpec::rationals()) {
  return FdAlgebra::ground_field(f);
}

/// k[x]/(x^2) with basis {1, x}.
inline FdAlgebra dual_numbers(const FieldSpec& f = FieldSpec::rationals()) {
  FdAlgebra::Table t;
  t.field = f;
  t.labels = {"1", "x"};
  t.products = {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {{1, Scalar(1)}}, {}};
  t.unit = {1, 0};
  return FdAlgebra::make(t);
}

/// k[x]/(x^n) with basis 1, x, ..., x^(n-1).
inline FdAlgebra truncated_poly(const FieldSpec& f, std::size_t n) {
  FdAlgebra::Table t;
  t.field = f;
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  t.products.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) t.products[i * n + j] = {{static_cast<std::uint32_t>(i + j), Scalar(1)}};
  t.unit = f.unit_vector(n, 0);
  return FdAlgebra::make(t);
}

/// Lower-triangular 2x2 matrices, basis {E11, E21, E22}, idempotents E11, E22.
inline FdAlgebra lower_tri2(const FieldSpec& f = FieldSpec::rationals()) {
  FdAlgebra a = matrix_algebra(f, 2, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)},
                               {"E11", "E21", "E22"}, true);
  return a.with_idempotents({f.unit_vector(3, 0), f.unit_vector(3, 2)});
}

/// Full 2x2 matrices, basis {E11, E12, E21, E22}.
inline FdAlgebra full_m2(const FieldSpec& f = FieldSpec::rationals()) {
  return matrix_algebra(f, 2,
                        {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0),
                         unit_matrix(2, 1, 1)},
                        {"E11", "E12", "E21", "E22"}, true);
}

inline FdAlgebra k_times_k(const FieldSpec& f = FieldSpec::rationals()) {
  return direct_product(field_k(f), field_k(f));
}

/// Group algebra k[Z/2] with basis {1, g}.
inline FdAlgebra group_z2(const FieldSpec& f = FieldSpec::rationals()) {
  FdAlgebra::Table t;
  t.field = f;
  t.labels = {"1", "g"};
  t.products = {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {{1, Scalar(1)}}, {{0, Scalar(1)}}};
  t.unit = {1, 0};
  return FdAlgebra::make(t);
}

/// Random unital subalgebra of n x n matrices generated by `ngens` random
/// matrices with small entries and the given sparsity pattern. Retries until
/// the dimension is at most max_dim.
inline FdAlgebra random_algebra(std::mt19937& rng, const FieldSpec& f, std::size_t max_dim) {
  std::uniform_int_distribution<int> size_pick(1, 3);
  std::uniform_int_distribution<int> entry(-1, 1);
  std::uniform_int_distribution<int> kind_pick(0, 2);
  for (;;) {
    std::size_t n = static_cast<std::size_t>(size_pick(rng));
    int kind = kind_pick(rng);  // 0 any, 1 lower triangular, 2 strictly lower plus a diagonal unit
    std::size_t ngens = 1 + rng() % 2;
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          if (kind >= 1 && c > r) continue;
          if (kind == 2 && c == r) continue;
          if (rng() % 2) m(r, c) = entry(rng);
        }
      gens.push_back(m);
    }
    if (kind == 2) {
      std::size_t r = rng() % n;
      gens.push_back(unit_matrix(n, r, r));
    }
    FdAlgebra a = matrix_algebra(f, n, gens);
    if (a.dim() <= max_dim) return a;
  }
}

/// Random invertible change of basis (shear + permutation) applied to a.
inline FdAlgebra scramble(std::mt19937& rng, const FdAlgebra& a) {
  const std::size_t d = a.dim();
  const FieldSpec& f = a.field();
  for (;;) {
    Matrix b = Matrix::identity(d);
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t i = rng() % d, j = rng() % d;
      if (i == j) continue;
      b(i, j) = f.canon(Scalar(static_cast<int>(rng() % 3) - 1));
    }
    if (matrix_rank(f, b) < d) continue;
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix pb(d, d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) pb(r, c) = b(r, perm[c]);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back("c" + std::to_string(i));
    return change_basis(a, pb, labels);
  }
}

}  // namespace fx

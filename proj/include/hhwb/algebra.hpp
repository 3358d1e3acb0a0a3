#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhwb/dense.hpp"
#include "hhwb/field.hpp"

namespace hhwb {

/// Sparse coordinate vector: (basis index, nonzero coefficient), sorted.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

Vector to_dense(const SparseVec& v, std::size_t dim);
SparseVec to_sparse(const Vector& v);

/// Finite-dimensional associative unital algebra given by a basis and
/// structure constants b_i * b_j = sum_k c_ij^k b_k.
///
/// Optionally carries a complete set of orthogonal idempotents (summing to
/// the unit) and a designated basis of the Jacobson radical. Instances are
/// immutable and always validated.
class FdAlgebra {
 public:
  /// products[i * dim + j] holds b_i * b_j.
  struct Table {
    FieldSpec field;
    std::vector<std::string> labels;
    std::vector<SparseVec> products;
    Vector unit;
    std::vector<Vector> idempotents;
    std::optional<std::vector<Vector>> radical;
  };

  /// Validates associativity on every basis triple, the unit laws, the
  /// idempotent system and the radical designation. Throws InvariantError
  /// naming the first failing triple/element.
  static FdAlgebra make(Table table);
  /// The zero algebra (dim 0, 1 = 0).
  static FdAlgebra zero(FieldSpec field);
  /// k as a one-dimensional algebra with basis {1}.
  static FdAlgebra ground_field(FieldSpec field, std::string label = "1");

  const FieldSpec& field() const { return t_.field; }
  std::size_t dim() const { return t_.labels.size(); }
  const std::vector<std::string>& labels() const { return t_.labels; }
  const std::string& label(std::size_t i) const { return t_.labels[i]; }
  const SparseVec& product(std::size_t i, std::size_t j) const {
    return t_.products[i * dim() + j];
  }
  const Vector& unit() const { return t_.unit; }
  const std::vector<Vector>& idempotents() const { return t_.idempotents; }
  /// Designated idempotents, or {1} when none are designated (empty for
  /// the zero algebra).
  std::vector<Vector> idempotents_or_unit() const;
  const std::optional<std::vector<Vector>>& designated_radical() const {
    return t_.radical;
  }
  const Table& table() const { return t_; }

  Vector basis_vector(std::size_t i) const {
    return field().unit_vector(dim(), i);
  }
  Vector multiply(const Vector& u, const Vector& v) const;
  /// Matrix of x -> a*x (left) or x -> x*a (right) on coordinates.
  Matrix left_multiplication(const Vector& a) const;
  Matrix right_multiplication(const Vector& a) const;
  bool is_idempotent(const Vector& e) const;

  FdAlgebra opposite() const;
  FdAlgebra with_idempotents(std::vector<Vector> idempotents) const;
  FdAlgebra with_radical(std::optional<std::vector<Vector>> radical) const;
  FdAlgebra with_labels(std::vector<std::string> labels) const;

  /// Equal field, dimension, structure constants and unit (labels and
  /// designations ignored).
  bool same_structure(const FdAlgebra& other) const;

 private:
  explicit FdAlgebra(Table t) : t_(std::move(t)) {}
  Table t_;
};

using AlgebraRef = std::shared_ptr<const FdAlgebra>;
inline AlgebraRef share(FdAlgebra a) {
  return std::make_shared<const FdAlgebra>(std::move(a));
}

/// Bilinear product through the structure constants.
Vector multiply(const FdAlgebra& a, const Vector& u, const Vector& v);

/// Block-diagonal product; unit (1_a, 1_b); idempotents concatenated.
FdAlgebra direct_product(const FdAlgebra& a, const FdAlgebra& b);

/// Re-expresses the algebra in the basis given by the columns of `basis`
/// (old coordinates). Labels are taken from `labels`.
FdAlgebra change_basis(const FdAlgebra& a, const Matrix& basis,
                       std::vector<std::string> labels);
/// New basis element k is old basis element perm[k].
FdAlgebra permute_basis(const FdAlgebra& a, const std::vector<std::size_t>& perm);

/// Subalgebra structure on a multiplicatively closed subspace with its own
/// unit. `inclusion` has the subspace basis as columns.
struct Subalgebra {
  FdAlgebra algebra;
  Matrix inclusion;
};

/// eAe with a basis chosen greedily from {e b_i e} in index order.
Subalgebra corner_algebra(const FdAlgebra& a, const Vector& e);

struct QuotientAlgebra {
  FdAlgebra algebra;
  Matrix projection;  // dim(A/I) x dim(A)
  LinearSpan ideal;
};

/// Two-sided ideal generated by the vectors (saturated under left and
/// right multiplication by basis elements).
LinearSpan ideal_generated(const FdAlgebra& a, const std::vector<Vector>& gens);
/// A / <gens>. The quotient basis is the image of the non-pivot basis
/// elements of the ideal's echelon form.
QuotientAlgebra quotient_by_ideal(const FdAlgebra& a,
                                  const std::vector<Vector>& gens);

/// dim A - dim [A, A]; equals dim HH_0(A).
std::size_t commutator_quotient_dim(const FdAlgebra& a);

/// Basis of the Jacobson radical: the designated one if present, otherwise
/// the null space of the trace form (characteristic 0 only).
std::vector<Vector> radical(const FdAlgebra& a);

/// Throws InvariantError unless span(basis) is a nilpotent two-sided ideal.
void check_radical_designation(const FdAlgebra& a, const std::vector<Vector>& basis);

}  // namespace hhwb

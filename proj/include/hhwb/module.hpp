#pragma once

#include <optional>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/dense.hpp"

namespace hhwb {

/// Right module: action[k] is the matrix of v -> v * b_k on column
/// coordinates, so action(b_i b_j) = action(b_j) action(b_i).
class RightModule {
 public:
  RightModule(AlgebraRef algebra, std::size_t dim, std::vector<Matrix> action);

  const FdAlgebra& algebra() const { return *algebra_; }
  const AlgebraRef& algebra_ref() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t k) const { return action_[k]; }
  /// Matrix of v -> v * a for an arbitrary algebra element.
  Matrix act(const Vector& a) const;
  Vector act(const Vector& v, const Vector& a) const;

  /// A as a right module over itself.
  static RightModule regular(AlgebraRef a);
  /// The submodule x A of the regular module.
  static RightModule principal(AlgebraRef a, const Vector& x);

 private:
  AlgebraRef algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

/// Left module: action(b_i b_j) = action(b_i) action(b_j).
class LeftModule {
 public:
  LeftModule(AlgebraRef algebra, std::size_t dim, std::vector<Matrix> action);

  const FdAlgebra& algebra() const { return *algebra_; }
  const AlgebraRef& algebra_ref() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t k) const { return action_[k]; }
  Matrix act(const Vector& a) const;
  Vector act(const Vector& a, const Vector& v) const;

  static LeftModule regular(AlgebraRef a);

 private:
  AlgebraRef algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

/// Left-algebra / right-algebra bimodule with commuting actions.
class Bimodule {
 public:
  Bimodule(AlgebraRef left, AlgebraRef right, std::size_t dim,
           std::vector<Matrix> left_action, std::vector<Matrix> right_action);

  const FdAlgebra& left_algebra() const { return *left_; }
  const FdAlgebra& right_algebra() const { return *right_; }
  const AlgebraRef& left_ref() const { return left_; }
  const AlgebraRef& right_ref() const { return right_; }
  std::size_t dim() const { return dim_; }
  const Matrix& left_action(std::size_t k) const { return left_action_[k]; }
  const Matrix& right_action(std::size_t k) const { return right_action_[k]; }
  const std::vector<Matrix>& left_actions() const { return left_action_; }
  const std::vector<Matrix>& right_actions() const { return right_action_; }
  Vector act_left(const Vector& a, const Vector& m) const;
  Vector act_right(const Vector& m, const Vector& a) const;

  RightModule as_right_module() const;
  LeftModule as_left_module() const;

  /// A as an A-A-bimodule.
  static Bimodule regular(AlgebraRef a);
  static Bimodule zero(AlgebraRef left, AlgebraRef right);

 private:
  AlgebraRef left_;
  AlgebraRef right_;
  std::size_t dim_;
  std::vector<Matrix> left_action_;
  std::vector<Matrix> right_action_;
};

/// Unital algebra homomorphism given by its matrix (target dim x source dim).
struct AlgebraMap {
  AlgebraRef source;
  AlgebraRef target;
  Matrix matrix;

  Vector operator()(const Vector& x) const;
};

/// Throws InvariantError unless the map is unital and multiplicative.
void check_algebra_map(const AlgebraMap& f);
/// Identity map, quotient projections and similar helpers.
AlgebraMap identity_map(AlgebraRef a);

/// Restriction of scalars along f: a module over f.target becomes a module
/// over f.source.
RightModule restrict(const RightModule& m, const AlgebraMap& f);
LeftModule restrict(const LeftModule& m, const AlgebraMap& f);
Bimodule restrict(const Bimodule& m, const AlgebraMap& left, const AlgebraMap& right);

/// The submodule of a right module spanned by the given vectors (closed
/// under the action); basis = the closure in discovery order.
RightModule submodule(const RightModule& m, const std::vector<Vector>& gens,
                      Matrix* inclusion = nullptr);
/// M / span(vectors) for a submodule given by spanning vectors.
RightModule quotient_module(const RightModule& m, const std::vector<Vector>& sub,
                            Matrix* projection = nullptr);

/// True when both refer to the same algebra (identity or equal structure).
bool same_algebra(const FdAlgebra& a, const FdAlgebra& b);

/// X (x)_B Y realised as (X (x)_k Y) / balancing relations. Pairs (i, j) of
/// basis elements are flattened as i * dim(Y) + j.
struct TensorProduct {
  std::size_t dim;          // dimension of X (x)_B Y
  std::size_t ambient_dim;  // dim X * dim Y
  LinearSpan relations;     // span of x b (x) y - x (x) b y
};

TensorProduct tensor_over(const RightModule& x, const LeftModule& y);

/// For a linear map `target` defined on X (x)_k Y (columns indexed like the
/// flattened pairs): checks it vanishes on the relations and returns the rank
/// of the induced map on X (x)_B Y. Throws InvariantError if not balanced.
std::size_t induced_rank(const FieldSpec& f, const TensorProduct& t,
                         const Matrix& target);

}  // namespace hhwb

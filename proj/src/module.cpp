#include "hhwb/module.hpp"

#include <string>

#include "hhwb/error.hpp"

namespace hhwb {
namespace {

void check_actions(const FdAlgebra& a, std::size_t dim,
                   const std::vector<Matrix>& action, bool right,
                   const char* what) {
  const auto& f = a.field();
  if (action.size() != a.dim()) {
    throw DimensionMismatch(std::string(what) + ": expected " +
                            std::to_string(a.dim()) + " action matrices, got " +
                            std::to_string(action.size()));
  }
  for (const auto& m : action) {
    if (m.rows() != dim || m.cols() != dim) {
      throw DimensionMismatch(std::string(what) + ": action matrix shape");
    }
  }
  if (a.dim() == 0) {
    if (dim != 0) throw InvariantError(std::string(what) + ": module over the zero algebra must be zero");
    return;
  }
  if (combine(f, a.unit(), action, dim, dim) != Matrix::identity(dim)) {
    throw InvariantError(std::string(what) + ": unit does not act as the identity");
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix prod = combine(f, to_dense(a.product(i, j), a.dim()), action, dim, dim);
      Matrix comp = right ? mat_mul(f, action[j], action[i])
                          : mat_mul(f, action[i], action[j]);
      if (prod != comp) {
        throw InvariantError(std::string(what) + ": action is not multiplicative at (" +
                             a.label(i) + ", " + a.label(j) + ")");
      }
    }
  }
}

}  // namespace

bool same_algebra(const FdAlgebra& a, const FdAlgebra& b) {
  return &a == &b || a.same_structure(b);
}

RightModule::RightModule(AlgebraRef algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  check_actions(*algebra_, dim_, action_, true, "right module");
}

Matrix RightModule::act(const Vector& a) const {
  return combine(algebra().field(), a, action_, dim_, dim_);
}

Vector RightModule::act(const Vector& v, const Vector& a) const {
  return mat_vec(algebra().field(), act(a), v);
}

RightModule RightModule::regular(AlgebraRef a) {
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    act.push_back(a->right_multiplication(a->basis_vector(k)));
  }
  std::size_t d = a->dim();
  return RightModule(std::move(a), d, std::move(act));
}

RightModule RightModule::principal(AlgebraRef a, const Vector& x) {
  LinearSpan span(a->field(), a->dim());
  for (std::size_t k = 0; k < a->dim(); ++k) {
    span.try_add(a->multiply(x, a->basis_vector(k)));
  }
  const auto& basis = span.basis();
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    std::vector<Vector> cols;
    for (const auto& v : basis) {
      cols.push_back(*span.coordinates(a->multiply(v, a->basis_vector(k))));
    }
    act.push_back(Matrix::from_columns(basis.size(), cols));
  }
  std::size_t d = basis.size();
  return RightModule(std::move(a), d, std::move(act));
}

LeftModule::LeftModule(AlgebraRef algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  check_actions(*algebra_, dim_, action_, false, "left module");
}

Matrix LeftModule::act(const Vector& a) const {
  return combine(algebra().field(), a, action_, dim_, dim_);
}

Vector LeftModule::act(const Vector& a, const Vector& v) const {
  return mat_vec(algebra().field(), act(a), v);
}

LeftModule LeftModule::regular(AlgebraRef a) {
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    act.push_back(a->left_multiplication(a->basis_vector(k)));
  }
  std::size_t d = a->dim();
  return LeftModule(std::move(a), d, std::move(act));
}

Bimodule::Bimodule(AlgebraRef left, AlgebraRef right, std::size_t dim,
                   std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (!(left_->field() == right_->field())) throw FieldMismatch("bimodule: field mismatch");
  check_actions(*left_, dim_, left_action_, false, "bimodule (left)");
  check_actions(*right_, dim_, right_action_, true, "bimodule (right)");
  const auto& f = left_->field();
  for (std::size_t i = 0; i < left_action_.size(); ++i) {
    for (std::size_t j = 0; j < right_action_.size(); ++j) {
      if (mat_mul(f, left_action_[i], right_action_[j]) !=
          mat_mul(f, right_action_[j], left_action_[i])) {
        throw InvariantError("bimodule: left action of " + left_->label(i) +
                             " does not commute with right action of " +
                             right_->label(j));
      }
    }
  }
}

Vector Bimodule::act_left(const Vector& a, const Vector& m) const {
  const auto& f = left_->field();
  return mat_vec(f, combine(f, a, left_action_, dim_, dim_), m);
}

Vector Bimodule::act_right(const Vector& m, const Vector& a) const {
  const auto& f = left_->field();
  return mat_vec(f, combine(f, a, right_action_, dim_, dim_), m);
}

RightModule Bimodule::as_right_module() const {
  return RightModule(right_, dim_, right_action_);
}

LeftModule Bimodule::as_left_module() const {
  return LeftModule(left_, dim_, left_action_);
}

Bimodule Bimodule::regular(AlgebraRef a) {
  std::vector<Matrix> l, r;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    l.push_back(a->left_multiplication(a->basis_vector(k)));
    r.push_back(a->right_multiplication(a->basis_vector(k)));
  }
  std::size_t d = a->dim();
  return Bimodule(a, a, d, std::move(l), std::move(r));
}

Bimodule Bimodule::zero(AlgebraRef left, AlgebraRef right) {
  std::vector<Matrix> l(left->dim(), Matrix(0, 0)), r(right->dim(), Matrix(0, 0));
  return Bimodule(std::move(left), std::move(right), 0, std::move(l), std::move(r));
}

TensorProduct tensor_over(const RightModule& x, const LeftModule& y) {
  if (!same_algebra(x.algebra(), y.algebra())) {
    throw PreconditionError("tensor_over: modules are over different algebras");
  }
  const auto& b = x.algebra();
  const auto& f = b.field();
  const std::size_t dx = x.dim(), dy = y.dim();
  TensorProduct t{0, dx * dy, LinearSpan(f, dx * dy)};
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Matrix& rx = x.action(k);
    const Matrix& ly = y.action(k);
    for (std::size_t i = 0; i < dx; ++i) {
      for (std::size_t j = 0; j < dy; ++j) {
        // (x_i b_k) (x) y_j - x_i (x) (b_k y_j)
        Vector rel(dx * dy, Scalar(0));
        for (std::size_t p = 0; p < dx; ++p) {
          if (rx(p, i) != 0) rel[p * dy + j] = f.add(rel[p * dy + j], rx(p, i));
        }
        for (std::size_t q = 0; q < dy; ++q) {
          if (ly(q, j) != 0) rel[i * dy + q] = f.sub(rel[i * dy + q], ly(q, j));
        }
        t.relations.try_add(rel);
      }
    }
  }
  t.dim = dx * dy - t.relations.dim();
  return t;
}

std::size_t induced_rank(const FieldSpec& f, const TensorProduct& t,
                         const Matrix& target) {
  if (target.cols() != t.ambient_dim) {
    throw DimensionMismatch("induced_rank: map must be defined on X (x)_k Y");
  }
  for (const auto& r : t.relations.basis()) {
    if (!is_zero(mat_vec(f, target, r))) {
      throw InvariantError("induced_rank: map is not balanced");
    }
  }
  return matrix_rank(f, target);
}

Vector AlgebraMap::operator()(const Vector& x) const {
  return mat_vec(source->field(), matrix, x);
}

void check_algebra_map(const AlgebraMap& m) {
  const auto& s = *m.source;
  const auto& t = *m.target;
  if (!(s.field() == t.field())) throw FieldMismatch("algebra map: field mismatch");
  if (m.matrix.rows() != t.dim() || m.matrix.cols() != s.dim()) {
    throw DimensionMismatch("algebra map: matrix must be " + std::to_string(t.dim()) + " x " +
                            std::to_string(s.dim()));
  }
  if (m(s.unit()) != t.unit()) throw InvariantError("algebra map is not unital");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vector lhs = m(to_dense(s.product(i, j), s.dim()));
      Vector rhs = t.multiply(m(s.basis_vector(i)), m(s.basis_vector(j)));
      if (lhs != rhs) {
        throw InvariantError("algebra map is not multiplicative at (" + s.label(i) + ", " +
                             s.label(j) + ")");
      }
    }
  }
}

AlgebraMap identity_map(AlgebraRef a) {
  Matrix id = Matrix::identity(a->dim());
  return AlgebraMap{a, a, id};
}

namespace {

std::vector<Matrix> pulled_back(const std::vector<Matrix>& action, const AlgebraMap& f,
                                std::size_t dim) {
  const auto& field = f.source->field();
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < f.source->dim(); ++k) {
    out.push_back(combine(field, f.matrix.column(k), action, dim, dim));
  }
  return out;
}

void check_target(const FdAlgebra& module_algebra, const AlgebraMap& f, const char* what) {
  if (!same_algebra(module_algebra, *f.target)) {
    throw PreconditionError(std::string(what) + ": map target is not the module's algebra");
  }
}

}  // namespace

RightModule restrict(const RightModule& m, const AlgebraMap& f) {
  check_target(m.algebra(), f, "restrict");
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < m.algebra().dim(); ++k) act.push_back(m.action(k));
  return RightModule(f.source, m.dim(), pulled_back(act, f, m.dim()));
}

LeftModule restrict(const LeftModule& m, const AlgebraMap& f) {
  check_target(m.algebra(), f, "restrict");
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < m.algebra().dim(); ++k) act.push_back(m.action(k));
  return LeftModule(f.source, m.dim(), pulled_back(act, f, m.dim()));
}

Bimodule restrict(const Bimodule& m, const AlgebraMap& left, const AlgebraMap& right) {
  check_target(m.left_algebra(), left, "restrict");
  check_target(m.right_algebra(), right, "restrict");
  return Bimodule(left.source, right.source, m.dim(), pulled_back(m.left_actions(), left, m.dim()),
                  pulled_back(m.right_actions(), right, m.dim()));
}

RightModule submodule(const RightModule& m, const std::vector<Vector>& gens, Matrix* inclusion) {
  const auto& a = m.algebra();
  const auto& f = a.field();
  LinearSpan span(f, m.dim());
  std::vector<Vector> queue;
  for (const auto& g : gens) {
    if (span.try_add(g)) queue.push_back(g);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Vector w = mat_vec(f, m.action(k), queue[q]);
      if (span.try_add(w)) queue.push_back(w);
    }
  }
  const auto& basis = span.basis();
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    std::vector<Vector> cols;
    for (const auto& v : basis) cols.push_back(*span.coordinates(mat_vec(f, m.action(k), v)));
    act.push_back(Matrix::from_columns(basis.size(), cols));
  }
  if (inclusion) *inclusion = Matrix::from_columns(m.dim(), basis);
  return RightModule(m.algebra_ref(), basis.size(), std::move(act));
}

RightModule quotient_module(const RightModule& m, const std::vector<Vector>& sub,
                            Matrix* projection) {
  const auto& a = m.algebra();
  const auto& f = a.field();
  LinearSpan span(f, m.dim());
  for (const auto& v : sub) span.try_add(v);
  auto keep = span.non_pivots();
  // coordinates of the class of v: the non-pivot entries of its remainder
  auto cls = [&](const Vector& v) {
    Vector r = span.reduce(v);
    Vector out;
    for (auto c : keep) out.push_back(r[c]);
    return out;
  };
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    std::vector<Vector> cols;
    for (auto c : keep) {
      Vector w = mat_vec(f, m.action(k), f.unit_vector(m.dim(), c));
      cols.push_back(cls(w));
    }
    act.push_back(Matrix::from_columns(keep.size(), cols));
  }
  if (projection) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.dim(); ++c) cols.push_back(cls(f.unit_vector(m.dim(), c)));
    *projection = Matrix::from_columns(keep.size(), cols);
  }
  return RightModule(m.algebra_ref(), keep.size(), std::move(act));
}

}  // namespace hhwb

#include "hhwb/exact_context.hpp"

#include <algorithm>

#include "hhwb/error.hpp"
#include "hhwb/homology.hpp"

namespace hhwb {

void validate_exact_context(const ExactContextData& d) {
  if (!d.lambda.source || !d.mu.source) throw PreconditionError("exact context: missing maps");
  if (!same_algebra(*d.lambda.source, *d.mu.source)) {
    throw PreconditionError("exact context: lambda and mu need the same source R");
  }
  check_algebra_map(d.lambda);
  check_algebra_map(d.mu);
  if (!same_algebra(d.m.left_algebra(), *d.lambda.target)) {
    throw PreconditionError("exact context: M must be a left S-module");
  }
  if (!same_algebra(d.m.right_algebra(), *d.mu.target)) {
    throw PreconditionError("exact context: M must be a right T-module");
  }
  if (d.element.size() != d.m.dim()) throw DimensionMismatch("exact context: m has wrong length");
}

ExactnessReport check_exact_context(const ExactContextData& d) {
  validate_exact_context(d);
  const FdAlgebra& r = *d.lambda.source;
  const FdAlgebra& s = *d.lambda.target;
  const FdAlgebra& t = *d.mu.target;
  const auto& f = r.field();
  ExactnessReport rep;
  rep.dim_r = r.dim();
  rep.dim_st = s.dim() + t.dim();
  rep.dim_m = d.m.dim();
  Matrix first(rep.dim_st, rep.dim_r);
  for (std::size_t j = 0; j < r.dim(); ++j) {
    for (std::size_t i = 0; i < s.dim(); ++i) first(i, j) = d.lambda.matrix(i, j);
    for (std::size_t i = 0; i < t.dim(); ++i) first(s.dim() + i, j) = d.mu.matrix(i, j);
  }
  Matrix second(rep.dim_m, rep.dim_st);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Vector v = d.m.act_left(s.basis_vector(j), d.element);
    for (std::size_t i = 0; i < rep.dim_m; ++i) second(i, j) = v[i];
  }
  for (std::size_t j = 0; j < t.dim(); ++j) {
    Vector v = d.m.act_right(d.element, t.basis_vector(j));
    for (std::size_t i = 0; i < rep.dim_m; ++i) second(i, s.dim() + j) = f.neg(v[i]);
  }
  rep.rank_first = matrix_rank(f, first);
  rep.rank_second = matrix_rank(f, second);
  rep.composite_zero = mat_mul(f, second, first).is_zero();
  rep.defect_r = rep.dim_r - rep.rank_first;
  rep.defect_m = rep.dim_m - rep.rank_second;
  const std::size_t ker_second = rep.dim_st - rep.rank_second;
  LinearSpan sum(f, rep.dim_st);
  for (std::size_t j = 0; j < rep.dim_r; ++j) sum.try_add(first.column(j));
  for (const auto& v : kernel_basis(f, second)) sum.try_add(v);
  const std::size_t meet = rep.rank_first + ker_second - sum.dim();
  rep.defect_middle = ker_second - meet;
  rep.excess_middle = rep.rank_first - meet;
  return rep;
}

HomologicalReport check_homological_exact_context(const ExactContextData& d, std::size_t bound) {
  HomologicalReport rep;
  rep.exactness = check_exact_context(d);
  rep.bound = bound;
  RightModule t = restrict(RightModule::regular(d.mu.target), d.mu);
  LeftModule s = restrict(LeftModule::regular(d.lambda.target), d.lambda);
  auto tor = tor_dims(t, s, bound);
  rep.tor.assign(tor.begin() + 1, tor.end());
  rep.vanishing = std::all_of(rep.tor.begin(), rep.tor.end(), [](std::size_t x) { return x == 0; });
  return rep;
}

TriangularAlgebra exact_context_ring(const ExactContextData& d) {
  validate_exact_context(d);
  return triangular_matrix(d.mu.target, d.lambda.target, d.m);
}

AlgebraMap quotient_map(AlgebraRef r, const QuotientAlgebra& q, AlgebraRef target) {
  return AlgebraMap{std::move(r), std::move(target), q.projection};
}

namespace {

// lift of the k-th quotient basis element to R
Vector lift(const FdAlgebra& r, const QuotientAlgebra& q, std::size_t k) {
  return r.basis_vector(q.ideal.non_pivots()[k]);
}

}  // namespace

PullbackContext pullback_context(AlgebraRef r, const std::vector<Vector>& i1,
                                 const std::vector<Vector>& i2) {
  const auto& f = r->field();
  std::vector<Vector> both = i1;
  both.insert(both.end(), i2.begin(), i2.end());
  QuotientAlgebra qs = quotient_by_ideal(*r, i1);
  QuotientAlgebra qt = quotient_by_ideal(*r, i2);
  QuotientAlgebra qm = quotient_by_ideal(*r, both);
  auto s = share(qs.algebra), t = share(qt.algebra);
  const std::size_t dm = qm.algebra.dim();
  std::vector<Matrix> left, right;
  for (std::size_t k = 0; k < s->dim(); ++k) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dm; ++j) {
      cols.push_back(mat_vec(f, qm.projection, r->multiply(lift(*r, qs, k), lift(*r, qm, j))));
    }
    left.push_back(Matrix::from_columns(dm, cols));
  }
  for (std::size_t k = 0; k < t->dim(); ++k) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dm; ++j) {
      cols.push_back(mat_vec(f, qm.projection, r->multiply(lift(*r, qm, j), lift(*r, qt, k))));
    }
    right.push_back(Matrix::from_columns(dm, cols));
  }
  Bimodule m(s, t, dm, std::move(left), std::move(right));
  Vector one = mat_vec(f, qm.projection, r->unit());
  PullbackContext out{ExactContextData{quotient_map(r, qs, s), quotient_map(r, qt, t), m, one}, qs, qt,
                      qm, 0};
  out.intersection_dim = qs.ideal.dim() + qt.ideal.dim() - qm.ideal.dim();
  return out;
}

TrivialExtensionContext trivial_extension_context(const AlgebraMap& lambda, const Bimodule& m,
                                                  std::size_t bound) {
  check_algebra_map(lambda);
  const AlgebraRef& r = lambda.source;
  const AlgebraRef& s = lambda.target;
  if (!same_algebra(m.left_algebra(), *s) || !same_algebra(m.right_algebra(), *s)) {
    throw PreconditionError("trivial extension context: M must be an S-S-bimodule");
  }
  const auto& f = r->field();
  TrivialExtensionContext out;
  out.bound = bound;

  RightModule s_right = restrict(RightModule::regular(s), lambda);
  LeftModule s_left = restrict(LeftModule::regular(s), lambda);
  TensorProduct ss = tensor_over(s_right, s_left);
  out.tensor_dim = ss.dim;
  Matrix mult(s->dim(), s->dim() * s->dim());
  for (std::size_t i = 0; i < s->dim(); ++i)
    for (std::size_t j = 0; j < s->dim(); ++j) {
      Vector v = s->multiply(s->basis_vector(i), s->basis_vector(j));
      for (std::size_t k = 0; k < s->dim(); ++k) mult(k, i * s->dim() + j) = v[k];
    }
  std::size_t rank = s->dim() == 0 ? 0 : induced_rank(f, ss, mult);
  out.epimorphism = ss.dim == s->dim() && rank == s->dim();

  RightModule m_right = restrict(m.as_right_module(), lambda);
  auto tor = tor_dims(m_right, s_left, bound);
  out.tor.assign(tor.begin() + 1, tor.end());
  out.tor_vanishing = std::all_of(out.tor.begin(), out.tor.end(), [](std::size_t x) { return x == 0; });
  out.projdim_m = projdim(m_right, bound);

  out.s_ext = share(trivial_extension(s, m));
  out.t = share(trivial_extension(r, restrict(m, lambda, lambda)));
  const std::size_t dr = r->dim(), ds = s->dim(), dm = m.dim();
  // mu : R -> R |x M and phi : R |x M -> S |x M, (r, x) |-> (lambda r, x)
  Matrix mu(dr + dm, dr);
  for (std::size_t i = 0; i < dr; ++i) mu(i, i) = 1;
  Matrix phi(ds + dm, dr + dm);
  for (std::size_t j = 0; j < dr; ++j)
    for (std::size_t i = 0; i < ds; ++i) phi(i, j) = lambda.matrix(i, j);
  for (std::size_t k = 0; k < dm; ++k) phi(ds + k, dr + k) = 1;
  AlgebraMap phi_map{out.t, out.s_ext, phi};
  check_algebra_map(phi_map);
  std::vector<Matrix> left, right;
  for (std::size_t k = 0; k < ds; ++k) {
    Vector v = f.zeros(ds + dm);
    for (std::size_t i = 0; i < ds; ++i) v[i] = s->basis_vector(k)[i];
    left.push_back(out.s_ext->left_multiplication(v));
  }
  for (std::size_t k = 0; k < dr + dm; ++k) {
    right.push_back(out.s_ext->right_multiplication(phi_map(out.t->basis_vector(k))));
  }
  Bimodule x(s, out.t, ds + dm, std::move(left), std::move(right));
  out.context.emplace(ExactContextData{lambda, AlgebraMap{r, out.t, mu}, x, out.s_ext->unit()});
  return out;
}

}  // namespace hhwb

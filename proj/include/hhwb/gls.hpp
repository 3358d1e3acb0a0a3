#pragma once

#include <utility>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/quiver.hpp"
#include "hhwb/report.hpp"
#include "hhwb/rewriting.hpp"

namespace hhwb {

/// Cartan triple (C, D, Omega). Indices are 0-based here; reports and
/// labels use 1-based vertex names.
struct CartanTriple {
  std::vector<std::vector<long long>> c;
  std::vector<long long> d;
  std::vector<std::pair<std::size_t, std::size_t>> omega;
};

/// Rows C1, C2, C3 (symmetrizer positive and DC symmetric), orientation-1
/// (Omega meets {(i,j),(j,i)} exactly when c_ij < 0) and orientation-2
/// (no oriented cycle; the witness is the cycle). Throws PreconditionError
/// only for inconsistent shapes.
ValidationReport validate_cartan_triple(const CartanTriple& t);

/// Vertices "1".."n"; arrows a[i,j] (or a[i,j;g] when gcd(c_ij, c_ji) > 1)
/// from j to i for (i, j) in Omega, sorted; then loops eps[i].
Quiver gls_quiver(const CartanTriple& t);

/// Relations eps_i^{d_i} and a eps_i^{d_i/g} - eps_j^{d_j/g} a with
/// g = gcd(d_i, d_j), written for left-to-right path composition.
RewritingSystem gls_system(const CartanTriple& t, const FieldSpec& field);

/// Completed and enumerated GLS algebra. length_cap = 0 selects default_cap.
FdAlgebra gls_algebra(const CartanTriple& t, const FieldSpec& field, std::size_t length_cap = 0);

struct GlsTriangularForm {
  std::vector<std::size_t> order;   // vertex indices x_1..x_n
  FdAlgebra opposite;               // the algebra with composition-order product
  FdAlgebra triangular;             // blocks A_ij = paths from x_j to x_i
  std::vector<std::size_t> perm;    // basis of `opposite` in block order
  std::vector<std::size_t> diagonal_dims;
};

/// Triangular form of the GLS algebra after renumbering vertices so that
/// arrows run from lower to higher index. Paths compose left to right in
/// gls_algebra, so the block algebra is compared against its opposite.
GlsTriangularForm gls_triangular_form(const CartanTriple& t, const FieldSpec& field,
                                      std::size_t length_cap = 0);

}  // namespace hhwb

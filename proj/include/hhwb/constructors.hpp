#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/module.hpp"

namespace hhwb {

/// Lower block-triangular algebra with diagonal algebras R_1..R_n,
/// R_i-R_j-bimodules M_ij (i > j) and composition maps
/// psi_ilj : M_il (x) M_lj -> M_ij (i > l > j), each a matrix of shape
/// dim M_ij x (dim M_il * dim M_lj) with pairs flattened as p * dim M_lj + q.
/// Missing bimodules are zero; missing composition maps are zero.
struct BlockTriangularData {
  std::vector<AlgebraRef> diagonal;
  std::map<std::pair<std::size_t, std::size_t>, Bimodule> off_diagonal;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Matrix> composition;
  /// Optional basis labels per block; default "<prefix>.<label>" for
  /// diagonal blocks and "M<i><j>.<k>" (1-based) for off-diagonal ones.
  std::vector<std::string> diagonal_prefix;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> labels;
};

struct BlockTriangular {
  FdAlgebra algebra;
  /// Block (i, j) of every basis element, in basis order.
  std::vector<std::pair<std::size_t, std::size_t>> block_of;
  /// Offset of each nonempty block in the basis.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> offset;
  /// Unit of R_i embedded in the algebra.
  std::vector<Vector> block_units;
};

/// Basis order: blocks (1,1), (2,1), (2,2), (3,1), ... row by row. The
/// idempotents are the lifted idempotents of every R_i (or its unit); the
/// radical is designated when every R_i has one available.
BlockTriangular block_triangular(const BlockTriangularData& d);

struct TriangularAlgebra {
  FdAlgebra algebra;
  Vector e;  // (1_B, 0)
  Vector f;  // (0, 1_C)
};

/// (B 0; M C) for a C-B-bimodule M. Basis B, M, C in that order;
/// (b, m, c)(b', m', c') = (bb', mb' + cm', cc').
TriangularAlgebra triangular_matrix(AlgebraRef b, AlgebraRef c, const Bimodule& m);

/// Data of a Morita context. alpha: N (x)_k M -> B as a dim B x (dim N dim M)
/// matrix (pairs flattened n * dim M + m); beta: M (x)_k N -> C likewise.
struct MoritaContextData {
  AlgebraRef b;
  AlgebraRef c;
  Bimodule n;  // B-C
  Bimodule m;  // C-B
  Matrix alpha;
  Matrix beta;
};

/// Checks shapes, balancing, the bimodule-map property of alpha and beta and
/// the two associativity identities. Throws InvariantError naming a triple.
void validate_morita_context(const MoritaContextData& d);

struct MoritaRing {
  FdAlgebra algebra;
  Vector e;
  Vector f;
};

/// Basis B, N, M, C; multiplication
/// (b n; m c)(b' n'; m' c') = (bb' + alpha(n m'), bn' + nc'; mb' + cm', beta(m n') + cc').
MoritaRing morita_context_ring(const MoritaContextData& d);

/// alpha(n (x) m) as an element of B, and beta(m (x) n) of C.
Vector morita_alpha(const MoritaContextData& d, const Vector& n, const Vector& m);
Vector morita_beta(const MoritaContextData& d, const Vector& m, const Vector& n);

/// R |x M with (r, m)(r', m') = (rr', rm' + mr'). Basis R then M.
FdAlgebra trivial_extension(AlgebraRef r, const Bimodule& m);

/// Reassembles an algebra whose basis is homogeneous for a block
/// decomposition (block_of[k] = (i, j) with i >= j, n blocks per side) as a
/// block-triangular algebra. perm lists the algebra's basis indices in
/// block order; the result has the structure constants of the permuted
/// algebra when the decomposition is triangular. Throws InternalError if
/// a product leaves its block or the reassembled algebra differs.
BlockTriangular triangular_from_blocks(const FdAlgebra& a,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& block_of,
                                       std::size_t n, std::vector<std::size_t>* perm = nullptr);

/// Image of a linear map into an algebra, as a list of vectors (columns).
std::vector<Vector> image_vectors(const Matrix& m);

}  // namespace hhwb

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/module.hpp"
#include "hhwb/sparse_matrix.hpp"

namespace hhwb {

/// Bounded chain complex C_0 <- C_1 <- ... <- C_N. differentials[n - 1] is
/// d_n : C_n -> C_{n-1}, a dims[n-1] x dims[n] matrix.
class ChainComplex {
 public:
  ChainComplex(FieldSpec field, std::vector<std::size_t> dims,
               std::vector<SparseMat> differentials, std::string provenance = {});

  const FieldSpec& field() const { return field_; }
  std::size_t top_degree() const { return dims_.empty() ? 0 : dims_.size() - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const SparseMat& differential(std::size_t n) const { return differentials_.at(n - 1); }
  const std::string& provenance() const { return provenance_; }

  /// Throws InternalError naming n if d_n d_{n+1} != 0.
  void check_square_zero() const;

 private:
  FieldSpec field_;
  std::vector<std::size_t> dims_;
  std::vector<SparseMat> differentials_;
  std::string provenance_;
};

/// H_n = dim ker d_n - rank d_{n+1} for 0 <= n <= degree_cap, where d_0 = 0
/// and d_{N+1} = 0. Verifies d d = 0 first.
std::vector<std::size_t> homology_dims(const ChainComplex& c, std::size_t degree_cap);

/// Predicted chain dimensions of the bar complex relative to the span E of
/// `idempotents` (or k 1 when empty), degrees 0..top. Saturates at SIZE_MAX.
std::vector<std::size_t> bar_chain_dims(const FdAlgebra& a, std::size_t top,
                                        const std::vector<Vector>& idempotents = {});

/// Normalized Hochschild complex A (x) Abar^{(x) n} with Abar = A / k 1,
/// degrees 0..top. Throws SizeGuardError naming the first degree whose
/// differential would exceed the size cap.
ChainComplex reduced_bar_complex(const FdAlgebra& a, std::size_t top);

/// Normalized Hochschild complex relative to E = span of the given complete
/// set of orthogonal idempotents: cyclic chains a_0 (x)_E abar_1 ... (x)_E abar_n.
/// Computes the same homology as the k-relative complex because E is
/// separable, with far smaller chain spaces.
ChainComplex relative_bar_complex(const FdAlgebra& a, std::size_t top,
                                  const std::vector<Vector>& idempotents);

struct HomologyReport {
  std::vector<std::size_t> dims;        // degrees 0..degree_cap
  std::vector<std::size_t> chain_dims;  // degrees 0..degree_cap + 1
  std::size_t degree_cap = 0;
  FieldSpec field;
  std::string provenance;
  std::size_t commutator_quotient = 0;  // independent degree-0 value
};

/// Hochschild homology dimensions for 0 <= n <= degree_cap using the
/// complex relative to the designated idempotents. Degree 0 is checked
/// against commutator_quotient_dim (InternalError on mismatch).
HomologyReport hh_dims(const FdAlgebra& a, std::size_t degree_cap);
/// Same, through the k-reduced complex.
HomologyReport hh_dims_reduced(const FdAlgebra& a, std::size_t degree_cap);

/// Complex X (x)_E Abar^{(x) n} (x)_E Y computing Tor^B(X, Y), degrees 0..top.
ChainComplex tor_complex(const RightModule& x, const LeftModule& y, std::size_t top);

/// dim Tor_n^B(X, Y) for 0 <= n <= degree_cap. Degree 0 is checked
/// against tensor_over.
std::vector<std::size_t> tor_dims(const RightModule& x, const LeftModule& y,
                                  std::size_t degree_cap);

/// Tor_1(M, A/J) = 0, i.e. M is projective. Needs the radical.
bool is_projective(const RightModule& m);

/// Kernel of a projective cover-like epimorphism (+) e_i A -> M built from
/// generators of M e_i modulo M J. Minimal when the idempotents are
/// primitive.
RightModule syzygy(const RightModule& m);

/// Projective dimension if at most bound, nullopt otherwise ("exceeds bound").
std::optional<std::size_t> projdim(const RightModule& m, std::size_t bound);

/// Top e_i A / e_i J of the i-th entry of idempotents_or_unit.
RightModule top_of_projective(AlgebraRef a, std::size_t i);

struct GldimVerdict {
  std::optional<std::size_t> value;  // nullopt: exceeds bound
  std::size_t bound = 0;
  struct Entry {
    std::size_t idempotent;
    std::size_t simple_dim;
    std::optional<std::size_t> projdim;
  };
  std::vector<Entry> per_simple;
};

/// Maximum of projdim over the tops of e_i A. Throws UnsupportedField when
/// no radical is available.
GldimVerdict gldim(AlgebraRef a, std::size_t bound);

struct StratifyingReport {
  std::size_t corner_dim = 0;
  std::size_t tensor_dim = 0;          // dim Ae (x)_{eAe} eA
  std::size_t ideal_dim = 0;           // dim AeA
  std::size_t multiplication_rank = 0;
  bool injective = false;
  bool surjective = false;
  bool si1 = false;
  std::vector<std::size_t> tor;        // degrees 1..bound
  bool si2 = false;
  std::size_t bound = 0;
  bool verdict() const { return si1 && si2; }
};

/// Ae and eA as modules over the corner eAe (basis as in corner_algebra).
RightModule corner_right_module(const FdAlgebra& a, const Vector& e, AlgebraRef corner,
                                const Matrix& inclusion, Matrix* basis = nullptr);
LeftModule corner_left_module(const FdAlgebra& a, const Vector& e, AlgebraRef corner,
                              const Matrix& inclusion, Matrix* basis = nullptr);

/// Checks SI1 (multiplication Ae (x)_{eAe} eA -> AeA bijective) and SI2
/// (Tor_i^{eAe}(Ae, eA) = 0 for 1 <= i <= bound). PreconditionError unless
/// e is idempotent.
StratifyingReport check_stratifying(const FdAlgebra& a, const Vector& e, std::size_t bound);

}  // namespace hhwb

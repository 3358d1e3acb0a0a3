#pragma once

#include <optional>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/constructors.hpp"
#include "hhwb/module.hpp"

namespace hhwb {

/// Quadruple (lambda, mu, M, m): lambda : R -> S, mu : R -> T, M an S-T
/// bimodule and m in M.
struct ExactContextData {
  AlgebraMap lambda;
  AlgebraMap mu;
  Bimodule m;
  Vector element;
};

/// Throws PreconditionError / InvariantError unless the maps share the
/// source, are algebra maps, and M is an S-T bimodule containing m.
void validate_exact_context(const ExactContextData& d);

/// Exactness of 0 -> R -> S (+) T -> M -> 0 with r |-> (lambda r, mu r) and
/// (s, t) |-> s m - m t.
struct ExactnessReport {
  std::size_t dim_r = 0, dim_st = 0, dim_m = 0;
  std::size_t rank_first = 0, rank_second = 0;
  bool composite_zero = false;
  std::size_t defect_r = 0;       // dim ker (lambda; mu)
  std::size_t defect_middle = 0;  // dim ker second / (ker second meet im first)
  std::size_t excess_middle = 0;  // dim im first / (im first meet ker second)
  std::size_t defect_m = 0;       // dim coker second
  bool exact_at_r() const { return defect_r == 0; }
  bool exact_at_middle() const { return defect_middle == 0 && excess_middle == 0; }
  bool exact_at_m() const { return defect_m == 0; }
  bool exact() const { return exact_at_r() && exact_at_middle() && exact_at_m(); }
};

ExactnessReport check_exact_context(const ExactContextData& d);

struct HomologicalReport {
  ExactnessReport exactness;
  std::vector<std::size_t> tor;  // dim Tor_i^R(T, S), 1 <= i <= bound
  std::size_t bound = 0;
  bool vanishing = false;        // all listed Tor groups are zero
  bool homological() const { return exactness.exact() && vanishing; }
};

/// Tor_i^R(T, S) with T a right R-module through mu and S a left R-module
/// through lambda. Computed even when the sequence is not exact; the
/// verdict then stays negative.
HomologicalReport check_homological_exact_context(const ExactContextData& d, std::size_t bound);

/// Lambda = (S M; 0 T), realised as the lower triangular (T 0; M S).
TriangularAlgebra exact_context_ring(const ExactContextData& d);

/// The context (R -> R/I1, R -> R/I2, R/(I1 + I2), 1).
struct PullbackContext {
  ExactContextData context;
  QuotientAlgebra s, t, m;
  std::size_t intersection_dim = 0;  // dim (I1 meet I2)
};

PullbackContext pullback_context(AlgebraRef r, const std::vector<Vector>& i1,
                                 const std::vector<Vector>& i2);

/// Hypotheses of the trivial-extension case for lambda : R -> S and an
/// S-S bimodule M, and the context (lambda, R -> R |x M, S |x M, 1).
struct TrivialExtensionContext {
  std::size_t tensor_dim = 0;  // dim S (x)_R S
  bool epimorphism = false;    // tensor_dim == dim S with surjective multiplication
  std::vector<std::size_t> tor;  // dim Tor_i^R(M, S), 1 <= i <= bound
  bool tor_vanishing = false;
  std::optional<std::size_t> projdim_m;  // of M as a right R-module
  std::size_t bound = 0;
  AlgebraRef s_ext;  // S |x M
  AlgebraRef t;      // R |x M
  std::optional<ExactContextData> context;
  bool hypotheses() const { return epimorphism && tor_vanishing && projdim_m.has_value(); }
};

TrivialExtensionContext trivial_extension_context(const AlgebraMap& lambda, const Bimodule& m,
                                                  std::size_t bound);

/// Projection R -> R/I as an algebra map.
AlgebraMap quotient_map(AlgebraRef r, const QuotientAlgebra& q, AlgebraRef target);

}  // namespace hhwb

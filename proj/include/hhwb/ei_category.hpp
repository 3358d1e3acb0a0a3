#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/dense.hpp"
#include "hhwb/report.hpp"

namespace hhwb {

struct Morphism {
  std::string id;
  std::string source;
  std::string target;
};

/// Finite category given by objects, morphisms, identities and a
/// composition table. compose[{g, f}] = h means g o f = h (f first).
/// Compositions with identities may be omitted; they are filled in.
class FiniteCategory {
 public:
  struct Composition {
    std::string g;
    std::string f;
    std::string result;
  };

  /// identities[i] is the id of the identity morphism of objects[i].
  /// Throws PreconditionError for an ill-formed table.
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<std::string> identities, const std::vector<Composition>& table);

  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t num_morphisms() const { return source_.size(); }
  const std::string& morphism_id(std::size_t m) const { return ids_[m]; }
  std::size_t source(std::size_t m) const { return source_[m]; }
  std::size_t target(std::size_t m) const { return target_[m]; }
  std::size_t identity(std::size_t object) const { return identity_[object]; }
  /// g o f; requires target(f) == source(g).
  std::size_t compose(std::size_t g, std::size_t f) const;
  bool is_endomorphism(std::size_t m) const { return source_[m] == target_[m]; }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> ids_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::vector<std::size_t> identity_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table_;
};

/// One row "EI": fails with the id of every endomorphism lacking a
/// two-sided inverse. A second row "skeletal" lists pairs of distinct
/// isomorphic objects.
ValidationReport validate_ei(const FiniteCategory& c);

/// k C with alpha * beta = alpha o beta when composable, 0 otherwise.
/// Basis = morphisms in declaration order; idempotents = identities.
/// Throws PreconditionError if C is not EI.
FdAlgebra ei_category_algebra(const FiniteCategory& c, const FieldSpec& field);

struct EiTriangularForm {
  std::vector<std::size_t> order;  // object indices x_1..x_n
  FdAlgebra triangular;            // assembled from kAut(x_i) and kHom(x_j, x_i)
  /// Permutation matrix P with P e_k = basis vector perm[k] of the category
  /// algebra; structure constants of `triangular` equal those of the
  /// category algebra permuted by P.
  Matrix iso;
  std::vector<std::size_t> perm;
};

/// Requires a skeletal EI category. Throws PreconditionError naming the
/// obstruction otherwise; InternalError if the entrywise comparison fails.
EiTriangularForm ei_triangular_form(const FiniteCategory& c, const FieldSpec& field);

/// Kahn order of vertices of a directed graph given by edges (u, v),
/// smallest index first. Returns nullopt-like empty result with the
/// vertices left on a cycle in `cycle` if no order exists.
std::vector<std::size_t> topological_order(std::size_t n,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                           std::vector<std::size_t>* cycle = nullptr);

}  // namespace hhwb

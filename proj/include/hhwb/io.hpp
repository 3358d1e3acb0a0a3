#pragma once

// JSON input documents and the canonical algebra-table serialization.

#include <optional>
#include <string>
#include <vector>

#include "hhwb/constructors.hpp"
#include "hhwb/ei_category.hpp"
#include "hhwb/exact_context.hpp"
#include "hhwb/gentle.hpp"
#include "hhwb/gls.hpp"
#include "hhwb/report.hpp"
#include "json.hpp"

namespace hhwb::io {

using Json = nlohmann::json;

/// "q" or "fp:<p>".
FieldSpec parse_field_flag(const std::string& text);
/// Inverse of parse_field_flag.
std::string field_flag(const FieldSpec& f);
/// {"kind": "Q"} or {"kind": "Fp", "p": p}.
Json field_json(const FieldSpec& f);

struct BuildOptions {
  /// Replaces every "field" member of the document.
  std::optional<FieldSpec> field;
  /// Tor bound used by constructions that compute Tor (trivial-extension contexts).
  std::size_t bound = 12;
};

/// A constructed input document.
struct Built {
  std::string kind;
  std::string form;  // exact-context form
  AlgebraRef algebra;
  /// The document's "idempotent", else the constructor's e where one exists.
  std::optional<Vector> idempotent;
  /// Factors of a two-block triangular algebra: (B, C) for triangular and
  /// Morita documents, (T, S) for exact contexts.
  AlgebraRef first, second;
  std::optional<MoritaContextData> morita;
  int variant = 1;
  std::optional<ExactContextData> exact;
  std::optional<TrivialExtensionContext> trivial;
  std::optional<ValidationReport> validation;
};

/// Builds any input document. Malformed documents raise SchemaError with a
/// JSON pointer; constructor errors propagate unchanged.
Built build(const Json& doc, const BuildOptions& opt = {});

struct Presentation {
  FieldSpec field;
  Quiver quiver;
  std::vector<LinComb> relations;
  std::vector<ArrowSpec> special_loops;
  std::optional<std::size_t> length_cap;
};
Presentation parse_presentation(const Json& doc, const BuildOptions& opt = {});
/// Relations as paths; SchemaError unless each is a single path of length 2.
std::vector<Path> monomial_relations(const Presentation& p, const Json& doc);
CartanTriple parse_cartan(const Json& doc);
FiniteCategory parse_category(const Json& doc);

/// Label-keyed object of the nonzero coordinates (an array when labels repeat).
Json vector_json(const FdAlgebra& a, const Vector& v);
/// Document of kind algebra-table reproducing the algebra exactly.
Json algebra_table(const FdAlgebra& a);
Json validation_json(const ValidationReport& r);

}  // namespace hhwb::io

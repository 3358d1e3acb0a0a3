#pragma once

#include <vector>

#include "hhwb/quiver.hpp"
#include "hhwb/report.hpp"
#include "hhwb/rewriting.hpp"

namespace hhwb {

/// Rows GP1..GP4. Relations must be paths of length 2 in q.
ValidationReport validate_gentle(const Quiver& q, const std::vector<Path>& rels);

struct SkewGentleTriple {
  Quiver quiver;
  std::vector<Path> relations;
  /// Special loops; ids not present in `quiver` are adjoined.
  std::vector<ArrowSpec> special_loops;
};

struct SkewGentleReport {
  ValidationReport report;
  Quiver extended;                  // Q'
  std::vector<Path> relations;      // I together with the squares of the special loops
};

/// Throws PreconditionError if a special loop is not a loop.
SkewGentleReport validate_skew_gentle(const SkewGentleTriple& t);

/// kQ / <I> for length-2 monomial relations.
RewritingSystem gentle_system(const FieldSpec& f, const Quiver& q, const std::vector<Path>& rels);

/// kQ' / <I, a^2 - a for special loops a>.
RewritingSystem skew_gentle_system(const FieldSpec& f, const SkewGentleTriple& t);

}  // namespace hhwb

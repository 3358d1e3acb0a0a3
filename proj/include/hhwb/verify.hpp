#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhwb/algebra.hpp"
#include "hhwb/constructors.hpp"
#include "hhwb/error.hpp"
#include "hhwb/homology.hpp"

namespace hhwb {

struct SplittingRow {
  std::size_t degree;
  std::size_t a, b, c;
  bool equal;
};

struct SplittingReport {
  std::vector<SplittingRow> degrees;
  bool overall = false;
  std::size_t cap = 0;
  std::string provenance;
};

/// dim HH_n(A) = dim HH_n(B) + dim HH_n(C) for 0 <= n <= cap.
SplittingReport verify_splitting(const FdAlgebra& a, const FdAlgebra& b, const FdAlgebra& c,
                                 std::size_t cap, std::string provenance = {});

/// Raised by verify_les_inequality when e fails SI1 or SI2.
class NotStratifying : public PreconditionError {
 public:
  explicit NotStratifying(StratifyingReport report)
      : PreconditionError(std::string("idempotent is not stratifying: ") +
                          (report.si1 ? "SI2 fails" : "SI1 fails")),
        report_(std::move(report)) {}
  const StratifyingReport& report() const { return report_; }

 private:
  StratifyingReport report_;
};

struct LesRow {
  std::size_t degree;
  std::size_t a, quotient, corner;
  std::size_t slack;  // quotient + corner - a
};

struct LesReport {
  StratifyingReport stratifying;
  std::size_t corner_dim = 0;
  std::size_t quotient_dim = 0;
  std::vector<LesRow> rows;
  std::size_t cap = 0;
  bool tight() const;  // zero slack everywhere
};

/// dim HH_n(A) <= dim HH_n(A/AeA) + dim HH_n(eAe) for 0 <= n <= cap. The
/// stratifying check runs with `bound`. Negative slack is an InternalError.
LesReport verify_les_inequality(const FdAlgebra& a, const Vector& e, std::size_t cap,
                                std::size_t bound);

struct MoritaReductionReport {
  int variant = 1;
  std::size_t tensor_dim = 0;  // M (x)_B N, or N (x)_C M for variant 2
  std::size_t pairing_rank = 0;
  bool injective = false;
  std::vector<std::size_t> tor;  // degrees 1..bound
  bool tor_vanishing = false;
  std::optional<std::size_t> projdim;
  std::size_t bound = 0;
  std::size_t quotient_dim = 0;  // C / Im beta, or B / Im alpha
  std::optional<SplittingReport> splitting;
  bool hypotheses() const { return injective && tor_vanishing && projdim.has_value(); }
  bool verdict() const { return hypotheses() && splitting && splitting->overall; }
  /// Failing hypotheses joined by "; " (first nonzero Tor only), or empty.
  std::string failure() const;
};

/// Variant 1: beta injective, Tor^B_i(M, N) = 0, projdim M_B <= bound, then
/// the splitting for (ring, B, C / Im beta). Variant 2 swaps the roles:
/// alpha, Tor^C_i(N, M), N_C, and (ring, C, B / Im alpha).
MoritaReductionReport verify_morita_reduction(const MoritaContextData& d, std::size_t cap,
                                              std::size_t bound, int variant = 1);

enum class HanClass { consistent_finite, consistent_infinite, window_inconclusive };
std::string to_string(HanClass c);

struct HanProbe {
  HomologyReport hh;
  std::optional<GldimVerdict> gldim;  // nullopt when no radical is available
  std::string gldim_note;
  HanClass classification = HanClass::window_inconclusive;
};

HanProbe han_probe(AlgebraRef a, std::size_t cap, std::size_t bound);

}  // namespace hhwb

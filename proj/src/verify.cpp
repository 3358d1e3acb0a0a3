#include "hhwb/verify.hpp"

#include <algorithm>

namespace hhwb {

SplittingReport verify_splitting(const FdAlgebra& a, const FdAlgebra& b, const FdAlgebra& c,
                                 std::size_t cap, std::string provenance) {
  auto ha = hh_dims(a, cap).dims;
  auto hb = hh_dims(b, cap).dims;
  auto hc = hh_dims(c, cap).dims;
  SplittingReport r;
  r.cap = cap;
  r.provenance = std::move(provenance);
  r.overall = true;
  for (std::size_t n = 0; n <= cap; ++n) {
    bool eq = ha[n] == hb[n] + hc[n];
    r.degrees.push_back({n, ha[n], hb[n], hc[n], eq});
    r.overall = r.overall && eq;
  }
  return r;
}

bool LesReport::tight() const {
  return std::all_of(rows.begin(), rows.end(), [](const LesRow& r) { return r.slack == 0; });
}

LesReport verify_les_inequality(const FdAlgebra& a, const Vector& e, std::size_t cap,
                                std::size_t bound) {
  LesReport r;
  r.cap = cap;
  r.stratifying = check_stratifying(a, e, bound);
  if (!r.stratifying.verdict()) throw NotStratifying(r.stratifying);
  FdAlgebra corner = corner_algebra(a, e).algebra;
  FdAlgebra quotient = quotient_by_ideal(a, {e}).algebra;
  r.corner_dim = corner.dim();
  r.quotient_dim = quotient.dim();
  auto ha = hh_dims(a, cap).dims;
  auto hq = hh_dims(quotient, cap).dims;
  auto hc = hh_dims(corner, cap).dims;
  for (std::size_t n = 0; n <= cap; ++n) {
    if (ha[n] > hq[n] + hc[n]) {
      throw InternalError("negative slack in degree " + std::to_string(n) + ": HH(A) = " +
                          std::to_string(ha[n]) + " exceeds " + std::to_string(hq[n]) + " + " +
                          std::to_string(hc[n]));
    }
    r.rows.push_back({n, ha[n], hq[n], hc[n], hq[n] + hc[n] - ha[n]});
  }
  return r;
}

std::string MoritaReductionReport::failure() const {
  const char* pairing = variant == 1 ? "beta" : "alpha";
  std::vector<std::string> parts;
  if (!injective) {
    parts.push_back(std::string(pairing) + " is not injective: rank " + std::to_string(pairing_rank) +
                    " on a tensor product of dimension " + std::to_string(tensor_dim));
  }
  for (std::size_t i = 0; i < tor.size(); ++i) {
    if (tor[i] != 0) {
      parts.push_back("Tor_" + std::to_string(i + 1) + " has dimension " + std::to_string(tor[i]));
      break;
    }
  }
  if (!projdim) {
    parts.push_back(std::string(variant == 1 ? "M" : "N") + " has projective dimension exceeding " +
                    std::to_string(bound));
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

MoritaReductionReport verify_morita_reduction(const MoritaContextData& d, std::size_t cap,
                                              std::size_t bound, int variant) {
  if (variant != 1 && variant != 2) throw PreconditionError("Morita reduction variant must be 1 or 2");
  validate_morita_context(d);
  const auto& f = d.b->field();
  MoritaReductionReport r;
  r.variant = variant;
  r.bound = bound;
  // variant 1: X = M_B, Y = _B N, pairing beta into C
  const bool one = variant == 1;
  RightModule x = one ? d.m.as_right_module() : d.n.as_right_module();
  LeftModule y = one ? d.n.as_left_module() : d.m.as_left_module();
  const Matrix& pairing = one ? d.beta : d.alpha;
  const AlgebraRef& target = one ? d.c : d.b;
  const AlgebraRef& base = one ? d.b : d.c;
  TensorProduct t = tensor_over(x, y);
  r.tensor_dim = t.dim;
  r.pairing_rank = x.dim() * y.dim() == 0 ? 0 : induced_rank(f, t, pairing);
  r.injective = r.pairing_rank == t.dim;
  auto tor = tor_dims(x, y, bound);
  r.tor.assign(tor.begin() + 1, tor.end());
  r.tor_vanishing = std::all_of(r.tor.begin(), r.tor.end(), [](std::size_t v) { return v == 0; });
  r.projdim = projdim(x, bound);
  QuotientAlgebra q = quotient_by_ideal(*target, image_vectors(pairing));
  r.quotient_dim = q.algebra.dim();
  if (r.hypotheses()) {
    auto ring = morita_context_ring(d);
    r.splitting = verify_splitting(ring.algebra, *base, q.algebra, cap,
                                   one ? "Morita context ring, B and C / Im beta"
                                       : "Morita context ring, C and B / Im alpha");
  }
  return r;
}

std::string to_string(HanClass c) {
  switch (c) {
    case HanClass::consistent_finite:
      return "consistent-finite";
    case HanClass::consistent_infinite:
      return "consistent-infinite";
    case HanClass::window_inconclusive:
      break;
  }
  return "window-inconclusive";
}

HanProbe han_probe(AlgebraRef a, std::size_t cap, std::size_t bound) {
  HanProbe p;
  p.hh = hh_dims(*a, cap);
  try {
    p.gldim = gldim(a, bound);
  } catch (const UnsupportedField& e) {
    p.gldim_note = e.what();
  }
  if (p.gldim && p.gldim->value) {
    p.classification = HanClass::consistent_finite;
  } else if (p.gldim && p.hh.dims[cap] != 0) {
    p.classification = HanClass::consistent_infinite;
  } else {
    p.classification = HanClass::window_inconclusive;
  }
  return p;
}

}  // namespace hhwb

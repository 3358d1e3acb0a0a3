#include "hhwb/gentle.hpp"

#include <algorithm>
#include <set>

#include "hhwb/error.hpp"

namespace hhwb {
namespace {

std::set<std::pair<std::uint32_t, std::uint32_t>> relation_pairs(const Quiver& q,
                                                                  const std::vector<Path>& rels) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& r : rels) {
    if (r.length() != 2) {
      throw PreconditionError("gentle relations must be paths of length 2 (got " +
                              path_label(q, r) + ")");
    }
    make_path(q, r.arrows);
    out.emplace(r.arrows[0], r.arrows[1]);
  }
  return out;
}

std::string count_detail(const char* what, std::size_t n) {
  return std::string(what) + " " + std::to_string(n);
}

Quiver extend(const SkewGentleTriple& t) {
  Quiver q = t.quiver;
  for (const auto& s : t.special_loops) {
    if (s.source != s.target) {
      throw PreconditionError("special loop " + s.id + " is not a loop (" + s.source + " -> " +
                              s.target + ")");
    }
    if (q.has_arrow(s.id)) {
      const Arrow& a = q.arrow(q.arrow_index(s.id));
      if (!a.is_loop()) throw PreconditionError("special loop " + s.id + " is not a loop");
      if (q.vertices()[a.source] != s.source) {
        throw PreconditionError("special loop " + s.id + " is declared at two vertices");
      }
      continue;
    }
    q = q.with_arrow(s);
  }
  return q;
}

}  // namespace

ValidationReport validate_gentle(const Quiver& q, const std::vector<Path>& rels) {
  auto in_i = relation_pairs(q, rels);
  const auto& arrows = q.arrows();
  const auto& verts = q.vertices();
  ValidationReport rep;

  ConditionCheck gp1{"GP1", true, {}, ""};
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::size_t out = 0, in = 0;
    for (const auto& a : arrows) {
      out += a.source == v;
      in += a.target == v;
    }
    if (out > 2 || in > 2) {
      gp1.passed = false;
      gp1.witnesses.push_back(verts[v]);
      if (gp1.detail.empty()) {
        gp1.detail = "vertex " + verts[v] + ": " + count_detail("outgoing", out) + ", " +
                     count_detail("incoming", in);
      }
    }
  }
  rep.checks.push_back(gp1);

  // For GP2 (want_in_i = false) and GP3 (true): each arrow has at most one
  // successor and at most one predecessor with the given membership.
  auto pair_check = [&](const char* name, bool want_in_i) {
    ConditionCheck c{name, true, {}, ""};
    for (std::uint32_t a = 0; a < arrows.size(); ++a) {
      std::size_t succ = 0, pred = 0;
      for (std::uint32_t b = 0; b < arrows.size(); ++b) {
        if (arrows[a].target == arrows[b].source && in_i.count({a, b}) == (want_in_i ? 1u : 0u)) {
          ++succ;
        }
        if (arrows[b].target == arrows[a].source && in_i.count({b, a}) == (want_in_i ? 1u : 0u)) {
          ++pred;
        }
      }
      if (succ > 1 || pred > 1) {
        c.passed = false;
        c.witnesses.push_back(arrows[a].id);
        if (c.detail.empty()) {
          c.detail = "arrow " + arrows[a].id + ": " + std::to_string(succ) +
                     (want_in_i ? " successors in I, " : " successors not in I, ") +
                     std::to_string(pred) + (want_in_i ? " predecessors in I" : " predecessors not in I");
        }
      }
    }
    rep.checks.push_back(c);
  };
  pair_check("GP2", false);
  pair_check("GP3", true);

  ConditionCheck gp4{"GP4", true, {}, ""};
  RewritingSystem rs = gentle_system(FieldSpec::rationals(), q, rels);
  std::size_t cap = default_cap(rs);
  try {
    auto paths = irreducible_paths(rs, cap);
    gp4.detail = "dimension " + std::to_string(paths.size());
  } catch (const NotFiniteWithinCap& e) {
    gp4.passed = false;
    gp4.detail = e.what();
    gp4.witnesses.push_back(e.witness());
  }
  rep.checks.push_back(gp4);
  return rep;
}

RewritingSystem gentle_system(const FieldSpec& f, const Quiver& q, const std::vector<Path>& rels) {
  std::vector<Rule> rules;
  std::set<Path> seen;
  for (const auto& r : rels) {
    if (!seen.insert(r).second) continue;
    rules.push_back(Rule{make_path(q, r.arrows), {}});
  }
  return RewritingSystem(f, q, std::move(rules));
}

SkewGentleReport validate_skew_gentle(const SkewGentleTriple& t) {
  SkewGentleReport out{{}, extend(t), t.relations};
  for (const auto& s : t.special_loops) {
    auto a = static_cast<std::uint32_t>(out.extended.arrow_index(s.id));
    out.relations.push_back(make_path(out.extended, {a, a}));
  }
  out.report = validate_gentle(out.extended, out.relations);
  return out;
}

RewritingSystem skew_gentle_system(const FieldSpec& f, const SkewGentleTriple& t) {
  Quiver q = extend(t);
  std::vector<Rule> rules;
  std::set<Path> seen;
  for (const auto& r : t.relations) {
    if (r.length() != 2) {
      throw PreconditionError("gentle relations must be paths of length 2 (got " +
                              path_label(q, r) + ")");
    }
    if (!seen.insert(r).second) continue;
    rules.push_back(Rule{make_path(q, r.arrows), {}});
  }
  for (const auto& s : t.special_loops) {
    auto a = static_cast<std::uint32_t>(q.arrow_index(s.id));
    Path sq = make_path(q, {a, a});
    if (!seen.insert(sq).second) continue;
    rules.push_back(Rule{sq, LinComb{{make_path(q, {a}), Scalar(1)}}});
  }
  return RewritingSystem(f, q, std::move(rules));
}

}  // namespace hhwb

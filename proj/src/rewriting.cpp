#include "hhwb/rewriting.hpp"

#include <algorithm>
#include <map>

#include "hhwb/error.hpp"

namespace hhwb {
namespace {

void add_term(const FieldSpec& f, LinComb& c, const Path& p, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = c.try_emplace(p, coeff);
  if (!inserted) {
    it->second = f.add(it->second, coeff);
    if (it->second == 0) c.erase(it);
  }
}

// First (leftmost, then earliest rule) occurrence of a rule lhs in p.
struct Match {
  std::size_t rule;
  std::size_t pos;
};

std::optional<Match> find_match(const std::vector<Rule>& rules, const Path& p,
                                std::optional<std::size_t> skip = std::nullopt) {
  for (std::size_t pos = 0; pos < p.arrows.size(); ++pos) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (skip && *skip == r) continue;
      const auto& l = rules[r].lhs.arrows;
      if (pos + l.size() > p.arrows.size()) continue;
      if (std::equal(l.begin(), l.end(), p.arrows.begin() + static_cast<std::ptrdiff_t>(pos))) {
        return Match{r, pos};
      }
    }
  }
  return std::nullopt;
}

LinComb reduce_with(const FieldSpec& f, const Quiver& q, const std::vector<Rule>& rules,
                    LinComb work, std::optional<std::size_t> skip = std::nullopt) {
  LinComb done;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Path p = top->first;
    Scalar c = top->second;
    work.erase(top);
    auto m = find_match(rules, p, skip);
    if (!m) {
      add_term(f, done, p, c);
      continue;
    }
    const Rule& rule = rules[m->rule];
    std::vector<std::uint32_t> u(p.arrows.begin(),
                                 p.arrows.begin() + static_cast<std::ptrdiff_t>(m->pos));
    std::vector<std::uint32_t> w(
        p.arrows.begin() + static_cast<std::ptrdiff_t>(m->pos + rule.lhs.length()),
        p.arrows.end());
    for (const auto& [t, tc] : rule.rhs) {
      add_term(f, work, splice(q, u, t, w), f.mul(c, tc));
    }
  }
  return done;
}

// Rule from a nonzero relation: leading path -> -(rest)/leading coefficient.
Rule orient(const FieldSpec& f, const LinComb& rel) {
  auto lead = std::prev(rel.end());
  Scalar inv = f.inv(lead->second);
  Rule r{lead->first, {}};
  for (auto it = rel.begin(); it != lead; ++it) {
    r.rhs.emplace(it->first, f.neg(f.mul(it->second, inv)));
  }
  return r;
}

LinComb rule_relation(const FieldSpec& f, const Rule& r) {
  LinComb rel = r.rhs;
  for (auto& [p, c] : rel) c = f.neg(c);
  rel.emplace(r.lhs, Scalar(1));
  return rel;
}

std::string render(const Quiver& q, const FieldSpec& f, const LinComb& c) {
  if (c.empty()) return "0";
  std::string s;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (!s.empty()) s += " + ";
    if (it->second != 1) s += f.format(it->second) + "*";
    s += path_label(q, it->first);
  }
  return s;
}

// Rules with no lhs containing another lhs and fully reduced right sides.
std::vector<Rule> interreduce(const FieldSpec& f, const Quiver& q, std::vector<Rule> rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (!find_match(rules, rules[i].lhs, i)) continue;
      LinComb rel = reduce_with(f, q, rules, rule_relation(f, rules[i]), i);
      rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      if (!rel.empty()) rules.push_back(orient(f, rel));
      changed = true;
      break;
    }
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    rules[i].rhs = reduce_with(f, q, rules, rules[i].rhs);
  }
  std::sort(rules.begin(), rules.end(),
            [](const Rule& a, const Rule& b) { return a.lhs < b.lhs; });
  return rules;
}

struct Overlap {
  std::size_t first;
  std::size_t second;
  std::size_t shared;  // number of arrows shared by suffix of first / prefix of second
  std::size_t word_length;
};

std::vector<Overlap> overlaps(const std::vector<Rule>& rules) {
  std::vector<Overlap> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& a = rules[i].lhs.arrows;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const auto& b = rules[j].lhs.arrows;
      for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
        if (std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) {
          out.push_back({i, j, k, a.size() + b.size() - k});
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Overlap& x, const Overlap& y) {
    return x.word_length < y.word_length;
  });
  return out;
}

// Difference of the two one-step reductions of the overlap word, reduced.
LinComb critical_pair(const FieldSpec& f, const Quiver& q, const std::vector<Rule>& rules,
                      const Overlap& o) {
  const Rule& r1 = rules[o.first];
  const Rule& r2 = rules[o.second];
  // word = u . lhs2 = lhs1 . w
  std::vector<std::uint32_t> w(r2.lhs.arrows.begin() + static_cast<std::ptrdiff_t>(o.shared),
                               r2.lhs.arrows.end());
  std::vector<std::uint32_t> u(r1.lhs.arrows.begin(),
                               r1.lhs.arrows.end() - static_cast<std::ptrdiff_t>(o.shared));
  LinComb diff;
  for (const auto& [t, c] : r1.rhs) add_term(f, diff, splice(q, {}, t, w), c);
  for (const auto& [t, c] : r2.rhs) add_term(f, diff, splice(q, u, t, {}), f.neg(c));
  return reduce_with(f, q, rules, diff);
}

std::string describe_overlap(const RewritingSystem& rs, const std::vector<Rule>& rules,
                             const Overlap& o) {
  const auto& q = rs.quiver();
  Path word = rules[o.first].lhs;
  const auto& b = rules[o.second].lhs.arrows;
  word.arrows.insert(word.arrows.end(), b.begin() + static_cast<std::ptrdiff_t>(o.shared),
                     b.end());
  return "overlap " + path_label(q, word) + " of rules [" + rs.describe(rules[o.first]) +
         "] and [" + rs.describe(rules[o.second]) + "]";
}

}  // namespace

RewritingSystem::RewritingSystem(FieldSpec field, Quiver quiver, std::vector<Rule> rules)
    : field_(field), quiver_(std::move(quiver)), rules_(std::move(rules)) {
  for (auto& r : rules_) {
    if (r.lhs.length() == 0) throw PreconditionError("rule lhs must have length >= 1");
    make_path(quiver_, r.lhs.arrows);
    auto s = path_source(quiver_, r.lhs), t = path_target(quiver_, r.lhs);
    LinComb clean;
    for (auto& [p, c] : r.rhs) {
      if (!p.arrows.empty()) make_path(quiver_, p.arrows);
      if (path_source(quiver_, p) != s || path_target(quiver_, p) != t) {
        throw PreconditionError("rule " + describe(r) + ": rhs path " +
                                path_label(quiver_, p) + " is not parallel to the lhs");
      }
      if (!(p < r.lhs)) {
        throw PreconditionError("rule " + describe(r) + ": rhs path " +
                                path_label(quiver_, p) + " is not smaller than the lhs");
      }
      add_term(field_, clean, p, field_.canon(c));
    }
    r.rhs = std::move(clean);
  }
}

RewritingSystem RewritingSystem::from_relations(FieldSpec field, Quiver quiver,
                                                const std::vector<LinComb>& relations) {
  std::vector<Rule> rules;
  for (const auto& rel : relations) {
    LinComb clean;
    for (const auto& [p, c] : rel) add_term(field, clean, p, field.canon(c));
    if (clean.empty()) continue;
    auto s = path_source(quiver, clean.begin()->first);
    auto t = path_target(quiver, clean.begin()->first);
    for (const auto& [p, c] : clean) {
      if (path_source(quiver, p) != s || path_target(quiver, p) != t) {
        throw PreconditionError("relation " + render(quiver, field, clean) +
                                " mixes non-parallel paths");
      }
    }
    if (std::prev(clean.end())->first.length() == 0) {
      throw PreconditionError("relation " + render(quiver, field, clean) +
                              " would identify a vertex idempotent");
    }
    rules.push_back(orient(field, clean));
  }
  return RewritingSystem(field, std::move(quiver), std::move(rules));
}

bool RewritingSystem::is_reducible(const Path& p) const {
  return find_match(rules_, p).has_value();
}

LinComb RewritingSystem::normal_form(const LinComb& c) const {
  return reduce_with(field_, quiver_, rules_, c);
}

LinComb RewritingSystem::normal_form(const Path& p) const {
  return normal_form(LinComb{{p, Scalar(1)}});
}

std::string RewritingSystem::describe(const Rule& r) const {
  return path_label(quiver_, r.lhs) + " -> " + render(quiver_, field_, r.rhs);
}

std::size_t default_cap(const RewritingSystem& rs) {
  std::size_t total = 0;
  for (const auto& r : rs.rules()) {
    std::size_t longest = r.lhs.length();
    for (const auto& [p, c] : r.rhs) longest = std::max(longest, p.length());
    total += longest;
  }
  return 2 * (rs.quiver().arrows().size() + total);
}

RewritingSystem complete(const RewritingSystem& rs, std::size_t degree_cap) {
  const auto& f = rs.field();
  const auto& q = rs.quiver();
  std::vector<Rule> rules = interreduce(f, q, rs.rules());
  constexpr std::size_t kMaxRounds = 100000;
  for (std::size_t round = 0;; ++round) {
    if (round == kMaxRounds) {
      throw InconclusiveConfluence("completion did not stabilize after " +
                                   std::to_string(kMaxRounds) + " rounds");
    }
    bool added = false;
    for (const auto& o : overlaps(rules)) {
      if (o.word_length > degree_cap) break;
      LinComb s = critical_pair(f, q, rules, o);
      if (s.empty()) continue;
      rules.push_back(orient(f, s));
      rules = interreduce(f, q, std::move(rules));
      added = true;
      break;
    }
    if (!added) break;
  }
  RewritingSystem out(f, q, rules);
  // Overlaps longer than the cap were not used to add rules; they must
  // already resolve, otherwise confluence is not established.
  for (const auto& o : overlaps(out.rules())) {
    if (!critical_pair(f, q, out.rules(), o).empty()) {
      throw InconclusiveConfluence("completion inconclusive within degree cap " +
                                   std::to_string(degree_cap) + ": unresolved " +
                                   describe_overlap(out, out.rules(), o));
    }
  }
  return out;
}

std::optional<std::string> find_unresolved_overlap(const RewritingSystem& rs) {
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    // An lhs containing another lhs is an inclusion ambiguity.
    if (auto m = find_match(rules, rules[i].lhs, i)) {
      const Rule& inner = rules[m->rule];
      std::vector<std::uint32_t> u(rules[i].lhs.arrows.begin(),
                                   rules[i].lhs.arrows.begin() + static_cast<std::ptrdiff_t>(m->pos));
      std::vector<std::uint32_t> w(
          rules[i].lhs.arrows.begin() + static_cast<std::ptrdiff_t>(m->pos + inner.lhs.length()),
          rules[i].lhs.arrows.end());
      LinComb diff = rules[i].rhs;
      for (const auto& [t, c] : inner.rhs) {
        add_term(rs.field(), diff, splice(rs.quiver(), u, t, w), rs.field().neg(c));
      }
      if (!rs.normal_form(diff).empty()) {
        return "inclusion of [" + rs.describe(inner) + "] in [" + rs.describe(rules[i]) + "]";
      }
    }
  }
  for (const auto& o : overlaps(rules)) {
    if (!critical_pair(rs.field(), rs.quiver(), rules, o).empty()) {
      return describe_overlap(rs, rules, o);
    }
  }
  return std::nullopt;
}

std::vector<Path> irreducible_paths(const RewritingSystem& rs, std::size_t length_cap) {
  const auto& q = rs.quiver();
  std::vector<Path> basis;
  std::vector<Path> level;
  for (std::size_t v = 0; v < q.vertices().size(); ++v) level.push_back(trivial_path(v));
  std::size_t length = 0;
  while (!level.empty()) {
    if (length >= length_cap) {
      throw NotFiniteWithinCap("not finite within cap " + std::to_string(length_cap) +
                                   ": irreducible path " + path_label(q, level.front()) +
                                   " has length " + std::to_string(length),
                               length_cap, path_label(q, level.front()));
    }
    basis.insert(basis.end(), level.begin(), level.end());
    std::vector<Path> next;
    for (const auto& p : level) {
      auto t = path_target(q, p);
      for (std::uint32_t a = 0; a < q.arrows().size(); ++a) {
        if (q.arrow(a).source != t) continue;
        Path ext{p.start, p.arrows};
        ext.arrows.push_back(a);
        // only occurrences ending at the new arrow can be new
        bool reducible = false;
        for (const auto& r : rs.rules()) {
          const auto& l = r.lhs.arrows;
          if (l.size() <= ext.arrows.size() &&
              std::equal(l.rbegin(), l.rend(), ext.arrows.rbegin())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
    ++length;
  }
  return basis;
}

FdAlgebra enumerate_basis(const RewritingSystem& rs, std::size_t length_cap) {
  if (auto bad = find_unresolved_overlap(rs)) {
    throw PreconditionError("rewriting system is not confluent: " + *bad);
  }
  const auto& q = rs.quiver();
  const auto& f = rs.field();
  std::vector<Path> paths = irreducible_paths(rs, length_cap);
  std::map<Path, std::uint32_t> index;
  for (std::uint32_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], i);
  const std::size_t d = paths.size();

  FdAlgebra::Table t;
  t.field = f;
  for (const auto& p : paths) t.labels.push_back(path_label(q, p));
  t.products.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!composable(q, paths[i], paths[j])) continue;
      SparseVec v;
      for (const auto& [p, c] : rs.normal_form(concat(q, paths[i], paths[j]))) {
        v.emplace_back(index.at(p), c);
      }
      std::sort(v.begin(), v.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      t.products[i * d + j] = std::move(v);
    }
  }
  t.unit = f.zeros(d);
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    std::size_t i = index.at(trivial_path(v));
    t.unit[i] = 1;
    t.idempotents.push_back(f.unit_vector(d, i));
  }
  FdAlgebra a = FdAlgebra::make(t);

  // The arrow ideal is the radical exactly when it is nilpotent.
  std::vector<Vector> arrow_ideal;
  for (std::size_t i = 0; i < d; ++i) {
    if (paths[i].length() > 0) arrow_ideal.push_back(f.unit_vector(d, i));
  }
  try {
    check_radical_designation(a, arrow_ideal);
  } catch (const InvariantError&) {
    return a;
  }
  return a.with_radical(std::move(arrow_ideal));
}

bool is_monomial(const RewritingSystem& rs) {
  return std::all_of(rs.rules().begin(), rs.rules().end(),
                     [](const Rule& r) { return r.rhs.empty(); });
}

}  // namespace hhwb

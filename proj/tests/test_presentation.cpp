#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "hhwb/gentle.hpp"
#include "hhwb/rewriting.hpp"

using namespace hhwb;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Path P(const Quiver& q, std::vector<std::string> ids) { return path_from_ids(q, ids); }

LinComb lc(std::vector<std::pair<Path, int>> terms) {
  LinComb c;
  for (auto& [p, v] : terms) c[p] += v;
  return c;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "2"}}), PreconditionError);
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), PreconditionError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "1"}, {"a", "1", "1"}}), PreconditionError);
  Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  CHECK_THROWS_AS(P(q, {"a", "a"}), PreconditionError);
  CHECK(path_label(q, P(q, {"a", "b"})) == "a*b");
  CHECK(path_label(q, trivial_path(1)) == "e_2");
}

TEST_CASE("path order is length then lexicographic") {
  Quiver q({"1"}, {{"a", "1", "1"}, {"b", "1", "1"}});
  CHECK(trivial_path(0) < P(q, {"b"}));
  CHECK(P(q, {"b"}) < P(q, {"a", "a"}));
  CHECK(P(q, {"a", "b"}) < P(q, {"b", "a"}));
}

TEST_CASE("rules must respect the order and be parallel") {
  Quiver q({"1", "2"}, {{"a", "1", "2"}, {"e", "2", "2"}});
  CHECK_THROWS_AS(RewritingSystem(Q, q, {{P(q, {"a"}), lc({{P(q, {"a", "e"}), 1}})}}),
                  PreconditionError);
  CHECK_THROWS_AS(RewritingSystem(Q, q, {{P(q, {"e"}), lc({{trivial_path(0), 1}})}}),
                  PreconditionError);
  CHECK_THROWS_AS(RewritingSystem(Q, q, {{trivial_path(0), {}}}), PreconditionError);
}

TEST_CASE("enumerate_basis examples") {
  Quiver a2({"1", "2"}, {{"a", "1", "2"}});
  auto alg = enumerate_basis(RewritingSystem(Q, a2, {}), 6);
  CHECK(alg.dim() == 3);
  CHECK(alg.labels() == std::vector<std::string>{"e_1", "e_2", "a"});
  CHECK(alg.idempotents().size() == 2);
  REQUIRE(alg.designated_radical());
  CHECK(alg.designated_radical()->size() == 1);

  Quiver loop({"1"}, {{"eps", "1", "1"}});
  auto idem = RewritingSystem(Q, loop, {{P(loop, {"eps", "eps"}), lc({{P(loop, {"eps"}), 1}})}});
  auto kk = enumerate_basis(idem, 6);
  CHECK(kk.dim() == 2);
  CHECK_FALSE(kk.designated_radical());
  CHECK(radical(kk).empty());
  CHECK(commutator_quotient_dim(kk) == 2);
  CHECK(idem.normal_form(P(loop, {"eps", "eps", "eps", "eps"})) == lc({{P(loop, {"eps"}), 1}}));

  for (std::size_t cap : {1u, 3u, 10u}) {
    CHECK_THROWS_AS(enumerate_basis(RewritingSystem(Q, loop, {}), cap), NotFiniteWithinCap);
  }
  try {
    enumerate_basis(RewritingSystem(Q, loop, {}), 5);
  } catch (const NotFiniteWithinCap& e) {
    CHECK(e.cap() == 5);
    CHECK(e.witness() == "eps*eps*eps*eps*eps");
  }

  auto dual = enumerate_basis(RewritingSystem(Q, loop, {{P(loop, {"eps", "eps"}), {}}}), 4);
  CHECK(dual.same_structure(fx::dual_numbers()));
}

TEST_CASE("enumerate_basis refuses non-confluent input") {
  Quiver q({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
  // x*y -> 0 and y*y -> x: the overlap x*y*y reduces to 0 and to x*x
  RewritingSystem rs(Q, q, {{P(q, {"x", "y"}), {}}, {P(q, {"y", "y"}), lc({{P(q, {"x"}), 1}})}});
  CHECK(find_unresolved_overlap(rs).has_value());
  CHECK_THROWS_AS(enumerate_basis(rs, 8), PreconditionError);
}

TEST_CASE("complete examples") {
  Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  RewritingSystem mono(Q, q, {{P(q, {"a", "b"}), {}}, {P(q, {"b", "a"}), {}}});
  auto cm = complete(mono, 8);
  REQUIRE(cm.rules().size() == 2);
  CHECK(cm.rules()[0].lhs == P(q, {"a", "b"}));
  CHECK(cm.rules()[1].lhs == P(q, {"b", "a"}));

  Quiver loop({"1"}, {{"eps", "1", "1"}});
  RewritingSystem idem(Q, loop, {{P(loop, {"eps", "eps"}), lc({{P(loop, {"eps"}), 1}})}});
  CHECK_FALSE(find_unresolved_overlap(idem));
  CHECK(complete(idem, 6).rules().size() == 1);

  // B2-type relations: eps1^2 = 0, eps2 = 0, a eps1 eps1 = eps2 a (paths left to right).
  Quiver b2({"1", "2"}, {{"a", "2", "1"}, {"eps1", "1", "1"}, {"eps2", "2", "2"}});
  auto rs = RewritingSystem::from_relations(
      Q, b2,
      {lc({{P(b2, {"eps1", "eps1"}), 1}}), lc({{P(b2, {"eps2"}), 1}}),
       lc({{P(b2, {"a", "eps1", "eps1"}), 1}, {P(b2, {"eps2", "a"}), -1}})});
  auto done = complete(rs, default_cap(rs));
  CHECK(done.rules().size() == 2);
  auto alg = enumerate_basis(done, default_cap(done));
  CHECK(alg.labels() == std::vector<std::string>{"e_1", "e_2", "a", "eps1", "a*eps1"});
  CHECK_FALSE(is_monomial(rs));
  CHECK(is_monomial(done));
}

TEST_CASE("completion adds rules from overlaps") {
  // Commutative polynomial ring in x, y modulo y^2, x^2: y x -> x y.
  Quiver q({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
  RewritingSystem rs(Q, q, {{P(q, {"y", "x"}), lc({{P(q, {"x", "y"}), 1}})},
                            {P(q, {"x", "x"}), {}},
                            {P(q, {"y", "y"}), {}}});
  auto done = complete(rs, default_cap(rs));
  auto alg = enumerate_basis(done, default_cap(done));
  CHECK(alg.dim() == 4);  // 1, x, y, xy
  CHECK(commutator_quotient_dim(alg) == 4);

  // x y = y x with y^2 = x: overlap y y x gives x x ~ y x y, needs a new rule.
  RewritingSystem rs2(Q, q, {{P(q, {"y", "x"}), lc({{P(q, {"x", "y"}), 1}})},
                             {P(q, {"y", "y"}), lc({{P(q, {"x"}), 1}})},
                             {P(q, {"x", "x"}), {}}});
  auto d2 = complete(rs2, default_cap(rs2));
  CHECK_FALSE(find_unresolved_overlap(d2));
  auto a2 = enumerate_basis(d2, default_cap(d2));
  CHECK(a2.dim() == 4);  // k[y]/(y^4)
}

TEST_CASE("inconclusive completion names the overlap") {
  Quiver q({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
  RewritingSystem rs(Q, q, {{P(q, {"x", "y"}), {}}, {P(q, {"y", "y"}), lc({{P(q, {"x"}), 1}})}});
  CHECK_THROWS_WITH_AS(complete(rs, 2), doctest::Contains("x*y*y"), InconclusiveConfluence);
  auto done = complete(rs, 4);
  CHECK(enumerate_basis(done, 8).dim() == 3);  // 1, x, y
  CHECK_THROWS_WITH_AS(complete(rs, 2), doctest::Contains("overlap"), InconclusiveConfluence);
}

TEST_CASE("is_monomial") {
  Quiver q({"1"}, {{"eps", "1", "1"}});
  CHECK(is_monomial(RewritingSystem(Q, q, {{P(q, {"eps", "eps"}), {}}})));
  CHECK_FALSE(is_monomial(RewritingSystem(Q, q, {{P(q, {"eps", "eps"}), lc({{P(q, {"eps"}), 1}})}})));
}

TEST_CASE("validate_gentle") {
  Quiver a2({"1", "2"}, {{"a", "1", "2"}});
  auto r = validate_gentle(a2, {});
  CHECK(r.passed());
  CHECK(r.checks.size() == 4);

  Quiver star({"0", "1", "2", "3"}, {{"a", "0", "1"}, {"b", "0", "2"}, {"c", "0", "3"}});
  auto s = validate_gentle(star, {});
  CHECK_FALSE(s.find("GP1")->passed);
  CHECK(s.find("GP1")->witnesses == std::vector<std::string>{"0"});

  Quiver loop({"1"}, {{"eps", "1", "1"}});
  auto l = validate_gentle(loop, {P(loop, {"eps", "eps"})});
  CHECK(l.passed());
  CHECK(l.find("GP4")->detail == "dimension 2");
  auto free_loop = validate_gentle(loop, {});
  CHECK_FALSE(free_loop.find("GP4")->passed);
  CHECK_FALSE(free_loop.find("GP4")->witnesses.empty());
  CHECK_FALSE(free_loop.find("GP3")->passed == false);

  // a: 1->2, b: 2->3, c: 2->3 with no relations: a has two non-I successors.
  Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "3"}});
  auto g2 = validate_gentle(q, {});
  CHECK_FALSE(g2.find("GP2")->passed);
  CHECK(g2.find("GP2")->witnesses == std::vector<std::string>{"a"});
  auto g3 = validate_gentle(q, {P(q, {"a", "b"}), P(q, {"a", "c"})});
  CHECK(g3.find("GP2")->passed);
  CHECK_FALSE(g3.find("GP3")->passed);
  CHECK(validate_gentle(q, {P(q, {"a", "b"})}).passed());

  CHECK_THROWS_AS(validate_gentle(q, {P(q, {"a"})}), PreconditionError);
}

TEST_CASE("validate_skew_gentle") {
  SkewGentleTriple one{Quiver({"1"}, {}), {}, {{"eps", "1", "1"}}};
  auto r = validate_skew_gentle(one);
  CHECK(r.report.passed());
  CHECK(r.extended.arrows().size() == 1);
  REQUIRE(r.relations.size() == 1);
  CHECK(path_label(r.extended, r.relations[0]) == "eps*eps");

  SkewGentleTriple bad{Quiver({"1", "2"}, {}), {}, {{"s", "1", "2"}}};
  CHECK_THROWS_AS(validate_skew_gentle(bad), PreconditionError);

  // A2 with a special loop at the source: a can follow eps without relation.
  Quiver a2({"1", "2"}, {{"a", "1", "2"}});
  SkewGentleTriple t{a2, {}, {{"eps", "1", "1"}}};
  auto rt = validate_skew_gentle(t);
  CHECK(rt.report.passed());
  auto alg = enumerate_basis(skew_gentle_system(Q, t), 8);
  CHECK(alg.dim() == 5);  // e1, e2, a, eps, eps*a
  CHECK_FALSE(is_monomial(skew_gentle_system(Q, t)));

  // Two special loops at one vertex: s*t*s*t... never vanishes.
  SkewGentleTriple two{Quiver({"1"}, {}), {}, {{"s", "1", "1"}, {"t", "1", "1"}}};
  auto rr = validate_skew_gentle(two);
  CHECK(rr.report.find("GP2")->passed);
  CHECK_FALSE(rr.report.find("GP4")->passed);
  SkewGentleTriple three{Quiver({"1"}, {}), {}, {{"s", "1", "1"}, {"t", "1", "1"}, {"u", "1", "1"}}};
  CHECK_FALSE(validate_skew_gentle(three).report.find("GP1")->passed);
}

TEST_CASE("property: normal forms, monomial constants, vertex idempotents") {
  std::mt19937 rng(31);
  int built = 0;
  for (int trial = 0; trial < 400 && built < 200; ++trial) {
    std::size_t nv = 1 + rng() % 3, na = 1 + rng() % 4;
    std::vector<std::string> verts;
    for (std::size_t v = 0; v < nv; ++v) verts.push_back(std::to_string(v + 1));
    std::vector<ArrowSpec> arrows;
    for (std::size_t a = 0; a < na; ++a) {
      arrows.push_back({"a" + std::to_string(a), verts[rng() % nv], verts[rng() % nv]});
    }
    Quiver q(verts, arrows);
    // random monomial relations of length 2 and 3
    std::vector<Rule> rules;
    std::set<Path> seen;
    for (std::size_t r = 0; r < 6; ++r) {
      std::vector<std::uint32_t> w{static_cast<std::uint32_t>(rng() % na)};
      std::size_t len = 2 + rng() % 2;
      bool ok = true;
      while (w.size() < len && ok) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t b = 0; b < na; ++b)
          if (q.arrow(b).source == q.arrow(w.back()).target) next.push_back(b);
        if (next.empty()) ok = false;
        else w.push_back(next[rng() % next.size()]);
      }
      if (!ok) continue;
      Path p = make_path(q, w);
      if (seen.insert(p).second) rules.push_back({p, {}});
    }
    RewritingSystem rs(Q, q, rules);
    FdAlgebra alg = FdAlgebra::zero(Q);
    try {
      alg = enumerate_basis(rs, 7);
    } catch (const NotFiniteWithinCap&) {
      continue;
    }
    ++built;
    std::size_t trivial = 0;
    for (const auto& l : alg.labels()) trivial += l.rfind("e_", 0) == 0;
    CHECK(trivial == nv);
    CHECK(alg.idempotents().size() == nv);
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        const auto& p = alg.product(i, j);
        CHECK(p.size() <= 1);
        if (p.size() == 1) CHECK(p[0].second == 1);
      }
    for (std::size_t k = 0; k < 5; ++k) {
      std::vector<std::uint32_t> w{static_cast<std::uint32_t>(rng() % na)};
      for (std::size_t s = 0; s < 3; ++s) {
        for (std::uint32_t b = 0; b < na; ++b)
          if (q.arrow(b).source == q.arrow(w.back()).target && rng() % 2) {
            w.push_back(b);
            break;
          }
      }
      auto nf = rs.normal_form(make_path(q, w));
      CHECK(rs.normal_form(nf) == nf);
    }
  }
  CHECK(built >= 200);
}

TEST_CASE("property: completed binomial systems give associative algebras") {
  // k<x, y> / (y x - c x y, x^px, y^py) has basis x^i y^j for every c.
  std::mt19937 rng(32);
  Quiver q({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
  for (int trial = 0; trial < 200; ++trial) {
    int c = static_cast<int>(rng() % 7) - 3;
    std::size_t px = 2 + rng() % 2, py = 2 + rng() % 2;
    std::vector<LinComb> rels;
    rels.push_back(lc({{P(q, {"y", "x"}), 1}, {P(q, {"x", "y"}), -c}}));
    rels.push_back(lc({{make_path(q, std::vector<std::uint32_t>(px, 0)), 1}}));
    rels.push_back(lc({{make_path(q, std::vector<std::uint32_t>(py, 1)), 1}}));
    auto rs = RewritingSystem::from_relations(Q, q, rels);
    auto done = complete(rs, default_cap(rs));
    auto alg = enumerate_basis(done, default_cap(done));  // make() checks associativity
    CHECK(alg.dim() == px * py);
    CHECK(alg.idempotents().size() == 1);
  }
}

#include <random>

#include "doctest.h"
#include "families.hpp"
#include "fixtures.hpp"
#include "hhwb/error.hpp"
#include "hhwb/exact_context.hpp"
#include "hhwb/homology.hpp"

using namespace hhwb;

namespace {

const FieldSpec Q = FieldSpec::rationals();
using Dims = std::vector<std::size_t>;

}  // namespace

TEST_CASE("triangular_matrix") {
  auto k = share(fx::field_k());
  auto t = triangular_matrix(k, k, fam::char_bimodule(k, k, {1}, {1}));
  CHECK(t.algebra.dim() == 3);
  CHECK(t.algebra.same_structure(fx::lower_tri2()));
  CHECK(t.algebra.labels() == std::vector<std::string>{"B.1", "M.1", "C.1"});
  CHECK(t.algebra.idempotents().size() == 2);
  CHECK(t.algebra.designated_radical().has_value());

  auto dual = share(fx::dual_numbers());
  auto z = triangular_matrix(dual, k, Bimodule::zero(k, dual));
  CHECK(z.algebra.same_structure(direct_product(*dual, *k)));

  auto d4 = triangular_matrix(dual, k, fam::char_bimodule(k, dual, {1}, {1, 0}));
  CHECK(d4.algebra.dim() == 4);
  CHECK(hh_dims(d4.algebra, 3).dims == Dims{3, 1, 1, 1});

  auto f2 = share(fx::field_k(FieldSpec::prime(2)));
  CHECK_THROWS_AS(triangular_matrix(k, f2, Bimodule::zero(f2, k)), Error);
}

TEST_CASE("morita_context_ring") {
  auto k = share(fx::field_k());
  auto dual = share(fx::dual_numbers());
  auto zero = morita_context_ring(fam::morita_zero(dual, k));
  CHECK(zero.algebra.same_structure(direct_product(*dual, *k)));

  auto full = morita_context_ring(fam::morita_scalar(Q, 1, 1));
  CHECK(full.algebra.dim() == 4);
  CHECK(full.algebra.same_structure(fx::full_m2()));

  auto degenerate = morita_context_ring(fam::morita_scalar(Q, 0, 0));
  CHECK_FALSE(degenerate.algebra.same_structure(fx::full_m2()));
  CHECK(radical(degenerate.algebra).size() == 2);
  CHECK(radical(full.algebra).empty());

  CHECK_THROWS_WITH_AS(morita_context_ring(fam::morita_scalar(Q, 1, 0)), doctest::Contains("n"),
                       InvariantError);
}

TEST_CASE("trivial_extension") {
  auto k = share(fx::field_k());
  auto dual = share(fx::dual_numbers());
  CHECK(trivial_extension(dual, Bimodule::zero(dual, dual)).same_structure(*dual));
  CHECK(trivial_extension(k, fam::char_bimodule(k, k, {1}, {1})).same_structure(fx::dual_numbers()));

  auto kk = share(fx::k_times_k());
  auto te = trivial_extension(kk, fam::char_bimodule(kk, kk, {1, 0}, {0, 1}));
  CHECK(te.same_structure(permute_basis(fx::lower_tri2(), {2, 0, 1})));

  // square-zero M block
  auto reg = trivial_extension(dual, Bimodule::regular(dual));
  CHECK(reg.dim() == 4);
  for (std::size_t i = 2; i < 4; ++i)
    for (std::size_t j = 2; j < 4; ++j) CHECK(reg.product(i, j).empty());
}

TEST_CASE("EI category algebras") {
  FiniteCategory one({"x"}, {{"id", "x", "x"}}, {"id"}, {});
  CHECK(ei_category_algebra(one, Q).same_structure(fx::field_k()));

  FiniteCategory p2({"1", "2"}, {{"id1", "1", "1"}, {"f", "1", "2"}, {"id2", "2", "2"}},
                    {"id1", "id2"}, {});
  CHECK(ei_category_algebra(p2, Q).same_structure(fx::lower_tri2()));

  auto z2 = ei_category_algebra(fam::z2_category(), Q);
  CHECK(z2.same_structure(fx::group_z2()));
  CHECK(hh_dims(z2, 4).dims == Dims{2, 0, 0, 0, 0});

  auto bad = fam::idempotent_monoid();
  auto rep = validate_ei(bad);
  CHECK_FALSE(rep.find("EI")->passed);
  CHECK(rep.find("EI")->witnesses == std::vector<std::string>{"e"});
  CHECK_THROWS_AS(ei_category_algebra(bad, Q), PreconditionError);
  CHECK(validate_ei(fam::poset_chain(3)).passed());
}

TEST_CASE("EI triangular form") {
  auto chain = fam::poset_chain(3);
  auto tf = ei_triangular_form(chain, Q);
  CHECK(tf.triangular.dim() == 6);
  auto direct = ei_category_algebra(chain, Q);
  CHECK(permute_basis(direct, tf.perm).same_structure(tf.triangular));
  // the permutation matrix conjugates the structure constants
  CHECK(change_basis(direct, tf.iso, tf.triangular.labels()).same_structure(tf.triangular));

  FiniteCategory discrete({"a", "b"}, {{"ia", "a", "a"}, {"ib", "b", "b"}}, {"ia", "ib"}, {});
  auto dt = ei_triangular_form(discrete, Q);
  CHECK(dt.triangular.same_structure(fx::k_times_k()));

  auto zt = ei_triangular_form(fam::z2_arrow_category(), Q);
  CHECK(zt.triangular.dim() == 4);
  CHECK(permute_basis(ei_category_algebra(fam::z2_arrow_category(), Q), zt.perm)
            .same_structure(zt.triangular));

  FiniteCategory iso({"a", "b"},
                     {{"ia", "a", "a"}, {"ib", "b", "b"}, {"u", "a", "b"}, {"v", "b", "a"}},
                     {"ia", "ib"}, {{"v", "u", "ia"}, {"u", "v", "ib"}});
  auto sk = validate_ei(iso);
  CHECK_FALSE(sk.find("skeletal")->passed);
  CHECK_THROWS_AS(ei_triangular_form(iso, Q), PreconditionError);
}

TEST_CASE("Cartan triple validation") {
  auto a2 = fam::cartan_a2();
  CHECK(validate_cartan_triple(a2).passed());

  CartanTriple asym{{{2, -1}, {-2, 2}}, {1, 1}, {{0, 1}}};
  auto r = validate_cartan_triple(asym);
  CHECK_FALSE(r.find("C3")->passed);
  CHECK(r.find("C1")->passed);
  CHECK(r.find("C2")->passed);

  CartanTriple cyc{{{2, -1}, {-1, 2}}, {1, 1}, {{0, 1}, {1, 0}}};
  auto rc = validate_cartan_triple(cyc);
  CHECK_FALSE(rc.find("orientation-2")->passed);
  CHECK(rc.find("orientation-2")->witnesses == std::vector<std::string>{"(1,2,1)"});

  CartanTriple diag{{{3, 0}, {0, 2}}, {1, 1}, {}};
  CHECK_FALSE(validate_cartan_triple(diag).find("C1")->passed);
  CartanTriple sign{{{2, 1}, {0, 2}}, {1, 1}, {}};
  CHECK_FALSE(validate_cartan_triple(sign).find("C2")->passed);
  CartanTriple missing{{{2, -1}, {-1, 2}}, {1, 1}, {}};
  CHECK_FALSE(validate_cartan_triple(missing).find("orientation-1")->passed);
  CHECK_THROWS_AS(validate_cartan_triple(CartanTriple{{{2}}, {1, 1}, {}}), PreconditionError);
}

TEST_CASE("GLS quiver and algebra") {
  auto q = gls_quiver(fam::cartan_a2());
  CHECK(q.vertices().size() == 2);
  CHECK(q.arrows().size() == 3);
  CHECK(q.arrow(0).id == "a[1,2]");
  CHECK(q.arrow(0).source == 1);
  CHECK(q.arrow(0).target == 0);

  CartanTriple g2{{{2, -2}, {-2, 2}}, {1, 1}, {{0, 1}}};
  auto q2 = gls_quiver(g2);
  CHECK(q2.arrows().size() == 4);
  CHECK(q2.arrow(0).id == "a[1,2;1]");
  CHECK(q2.arrow(1).id == "a[1,2;2]");

  CartanTriple one{{{2}}, {3}, {}};
  CHECK(gls_quiver(one).arrows().size() == 1);

  CHECK(gls_algebra(fam::cartan_a2(), Q).dim() == 3);
  // loops vanish: the algebra is the path algebra of 2 -> 1
  auto ha2 = share(gls_algebra(fam::cartan_a2(), Q));
  CHECK(ha2->labels() == std::vector<std::string>{"e_1", "e_2", "a[1,2]"});
  CHECK(gldim(ha2, 4).value == std::optional<std::size_t>(1));
  auto b2 = gls_algebra(fam::cartan_b2(), Q);
  CHECK(b2.dim() == 5);
  CHECK(b2.labels() == std::vector<std::string>{"e_1", "e_2", "a[1,2]", "eps[1]", "a[1,2]*eps[1]"});
  auto e3 = gls_algebra(one, Q);
  CHECK(e3.same_structure(fx::truncated_poly(Q, 3)));
  for (long long d = 1; d <= 6; ++d) {
    CHECK(gls_algebra(CartanTriple{{{2}}, {d}, {}}, Q).dim() == static_cast<std::size_t>(d));
  }
  CHECK_THROWS_AS(gls_algebra(CartanTriple{{{2, -1}, {-2, 2}}, {1, 1}, {{0, 1}}}, Q), PreconditionError);
}

TEST_CASE("GLS triangular form") {
  auto tf = gls_triangular_form(fam::cartan_b2(), Q);
  CHECK(tf.order == std::vector<std::size_t>{1, 0});
  CHECK(tf.diagonal_dims == std::vector<std::size_t>{1, 2});
  CHECK(tf.triangular.dim() == 5);
  CHECK(permute_basis(tf.opposite, tf.perm).same_structure(tf.triangular));

  CartanTriple a3{{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {2, 2, 2}, {{0, 1}, {2, 1}}};
  REQUIRE(validate_cartan_triple(a3).passed());
  auto t3 = gls_triangular_form(a3, Q);
  CHECK(t3.diagonal_dims == std::vector<std::size_t>{2, 2, 2});
  CHECK(t3.order.front() == 1);
}

TEST_CASE("exact contexts") {
  auto k = share(fx::field_k());
  auto id = identity_map(k);
  ExactContextData ctx{id, id, fam::char_bimodule(k, k, {1}, {1}), {1}};
  auto r = check_exact_context(ctx);
  CHECK(r.exact());
  CHECK(r.rank_first == 1);
  CHECK(r.rank_second == 1);
  CHECK(check_homological_exact_context(ctx, 4).homological());

  ExactContextData zero_m{id, id, fam::char_bimodule(k, k, {1}, {1}), {0}};
  auto rz = check_exact_context(zero_m);
  CHECK_FALSE(rz.exact_at_m());
  CHECK(rz.defect_m == 1);
  CHECK_FALSE(rz.exact());

  auto kk = share(fx::k_times_k());
  auto pb = pullback_context(kk, {Vector{1, 0}}, {Vector{0, 1}});
  CHECK(pb.intersection_dim == 0);
  CHECK(pb.context.m.dim() == 0);
  CHECK(check_exact_context(pb.context).exact());
  auto hom = check_homological_exact_context(pb.context, 6);
  CHECK(hom.vanishing);
  CHECK(hom.tor == Dims(6, 0));

  // overlapping ideals break exactness at R
  auto overlap = pullback_context(kk, {Vector{1, 0}}, {Vector{1, 0}});
  CHECK(overlap.intersection_dim == 1);
  CHECK_FALSE(check_exact_context(overlap.context).exact());

  // R = k[x]/(x^2) -> k twice: Tor_1^R(k, k) = 1
  auto dual = share(fx::dual_numbers());
  Matrix aug(1, 2);
  aug(0, 0) = 1;
  AlgebraMap eps{dual, k, aug};
  ExactContextData dn{eps, eps, fam::char_bimodule(k, k, {1}, {1}), {1}};
  auto hd = check_homological_exact_context(dn, 3);
  CHECK_FALSE(hd.exactness.exact_at_r());
  CHECK(hd.tor == Dims{1, 1, 1});
  CHECK_FALSE(hd.homological());

  auto lam = exact_context_ring(ctx);
  CHECK(lam.algebra.same_structure(fx::lower_tri2()));
  CHECK_THROWS_AS(check_exact_context(ExactContextData{id, id, fam::char_bimodule(k, k, {1}, {1}), {1, 0}}),
                  DimensionMismatch);
}

TEST_CASE("pullback along a radical square") {
  // R = k[x]/(x^3), I1 = (x^2), I2 = 0: S = k[x]/(x^2), T = R, M = S
  auto r = share(fx::truncated_poly(Q, 3));
  auto pb = pullback_context(r, {r->basis_vector(2)}, {});
  CHECK(pb.intersection_dim == 0);
  CHECK(check_exact_context(pb.context).exact());
  CHECK(check_homological_exact_context(pb.context, 3).vanishing);
}

TEST_CASE("trivial extension context") {
  auto k = share(fx::field_k());
  auto ctx = trivial_extension_context(identity_map(k), Bimodule::regular(k), 4);
  CHECK(ctx.epimorphism);
  CHECK(ctx.tor_vanishing);
  CHECK(ctx.projdim_m == std::optional<std::size_t>(0));
  CHECK(ctx.hypotheses());
  CHECK(check_exact_context(*ctx.context).exact());
  CHECK(check_homological_exact_context(*ctx.context, 3).homological());
  CHECK(ctx.s_ext->same_structure(fx::dual_numbers()));

  auto dual = share(fx::dual_numbers());
  Matrix aug(1, 2);
  aug(0, 0) = 1;
  auto bad = trivial_extension_context(AlgebraMap{dual, k, aug}, fam::char_bimodule(k, k, {1}, {1}), 3);
  CHECK(bad.epimorphism);
  CHECK(bad.tor == Dims{1, 1, 1});
  CHECK_FALSE(bad.projdim_m.has_value());
  CHECK_FALSE(bad.hypotheses());
  CHECK(check_exact_context(*bad.context).exact());
}

TEST_CASE("property: constructor identities on random inputs") {
  std::mt19937 rng(11);
  for (int cases = 0; cases < 200; ++cases) {
    CAPTURE(cases);
    auto b = share(fx::random_algebra(rng, Q, 3));
    auto c = share(fx::random_algebra(rng, Q, 3));
    auto tri = triangular_matrix(b, c, Bimodule::zero(c, b));
    CHECK(tri.algebra.same_structure(direct_product(*b, *c)));
    CHECK(morita_context_ring(fam::morita_zero(b, c)).algebra.same_structure(direct_product(*b, *c)));
    auto reg = trivial_extension(b, Bimodule::regular(b));
    const std::size_t d = b->dim();
    bool square_zero = true;
    for (std::size_t i = d; i < 2 * d; ++i)
      for (std::size_t j = d; j < 2 * d; ++j) square_zero = square_zero && reg.product(i, j).empty();
    CHECK(square_zero);
  }
}

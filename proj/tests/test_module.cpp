#include <doctest.h>

#include "fixtures.hpp"
#include "reldom/algebra.hpp"
#include "reldom/decompose.hpp"
#include "reldom/module.hpp"

using namespace reldom;

namespace {

template <class F>
ModPtr<F> quotient_by_socle_part(const ModPtr<F>& m, int v) {
    // quotient of m by the v-isotypic part of its socle (used for I4/S4)
    auto soc = socle_submodule(m);
    const F& f = m->field();
    int nv = m->algebra()->nvert();
    std::vector<Matrix<F>> spans;
    for (int w = 0; w < nv; ++w)
        spans.push_back(w == v ? soc.inclusion.b[w] : Matrix<F>(f, m->dim(w), 0));
    return quotient_by_vertex_spans(m, spans).module;
}

}  // namespace

TEST_SUITE_BEGIN("module");

TEST_CASE("hom from a projective has dimension equal to the fiber over its vertex") {
    FieldQQ f;
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, fixtures::sq());
    for (int v = 0; v < 4; ++v) {
        auto p = standard_projective(sq, v);
        for (int w = 0; w < 4; ++w) {
            auto m = standard_injective(sq, w);
            CHECK(static_cast<int>(hom_space(p, m).size()) == m->dim(v));
        }
        auto da = coregular_module(sq);
        CHECK(static_cast<int>(hom_space(p, da).size()) == da->dim(v));
    }
}

TEST_CASE("hom dimensions around I(4)/S(4) on the square") {
    FieldQQ f;
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, fixtures::sq());
    auto i4 = standard_injective(sq, 3);
    auto q = quotient_by_socle_part(i4, 3);
    CHECK(q->dims() == std::vector<int>{1, 1, 1, 0});
    auto p2 = standard_projective(sq, 1);
    CHECK(hom_space(p2, q).size() == 1);
    auto i3 = standard_injective(sq, 2);
    CHECK(hom_space(i3, q).empty());
    auto i2 = standard_injective(sq, 1);
    CHECK(hom_space(i2, q).empty());
    auto s4 = standard_simple(sq, 3);
    CHECK(hom_space(s4, q).empty());
}

TEST_CASE("algebra mismatch is rejected") {
    FieldQQ f;
    AlgPtr<FieldQQ> a2 = build_bound_quiver_algebra(f, fixtures::a2());
    AlgPtr<FieldQQ> a3 = build_bound_quiver_algebra(f, fixtures::a3());
    CHECK_THROWS_AS((void)hom_space(standard_simple(a2, 0), standard_simple(a3, 0)), input_error);
}

TEST_CASE("map factorization: zero map, cover kernel, socle inclusion") {
    FieldQQ f;
    AlgPtr<FieldQQ> a2 = build_bound_quiver_algebra(f, fixtures::a2());
    auto p1 = standard_projective(a2, 0);
    auto s1 = standard_simple(a2, 0);

    auto z = zero_map(p1, s1);
    auto fz = map_factorization(z);
    CHECK(fz.kernel.module->total_dim() == p1->total_dim());
    CHECK(fz.image.module->total_dim() == 0);
    CHECK(fz.cokernel.module->total_dim() == s1->total_dim());

    // the projective cover P(1) ->> S(1) has kernel S(2)
    auto homs = hom_space(p1, s1);
    REQUIRE(homs.size() == 1);
    auto fact = map_factorization(homs[0]);
    CHECK(fact.image.module->total_dim() == 1);
    CHECK(fact.kernel.module->dims() == std::vector<int>{0, 1});
    CHECK(indec_iso(fact.kernel.module, standard_simple(a2, 1)).has_value());

    // rank-nullity bookkeeping
    CHECK(fact.kernel.module->total_dim() + fact.image.module->total_dim() == p1->total_dim());
    CHECK(fact.image.module->total_dim() + fact.cokernel.module->total_dim() == s1->total_dim());

    // S(4) into I(4) on the square: cokernel has dimension vector (1,1,1,0)
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, fixtures::sq());
    auto s4 = standard_simple(sq, 3);
    auto i4 = standard_injective(sq, 3);
    auto emb = hom_space(s4, i4);
    REQUIRE(emb.size() == 1);
    auto fe = map_factorization(emb[0]);
    CHECK(fe.kernel.module->total_dim() == 0);
    CHECK(fe.cokernel.module->dims() == std::vector<int>{1, 1, 1, 0});
}

TEST_CASE("duality: simples self-dual, double dual identity, P(1) dualizes to an injective") {
    FieldQQ f;
    AlgPtr<FieldQQ> a2 = build_bound_quiver_algebra(f, fixtures::a2());
    auto s1 = standard_simple(a2, 0);
    auto ds1 = dualize(s1);
    CHECK(ds1->dims() == std::vector<int>{1, 0});
    CHECK(indec_iso(ds1, standard_simple(opposite_algebra(a2), 0)).has_value());

    auto p1 = standard_projective(a2, 0);
    auto ddp1 = dualize(dualize(p1));
    CHECK(ddp1->algebra().get() == a2.get());  // double opposite is the same object
    CHECK(find_iso(ddp1, ModPtr<FieldQQ>(p1)).has_value());

    // D(P(1)) is the injective at vertex 1 over the opposite algebra
    auto dp1 = dualize(p1);
    CHECK(dp1->dims() == std::vector<int>{1, 1});
    auto i1op = standard_injective(opposite_algebra(a2), 0);
    CHECK(indec_iso(dp1, i1op).has_value());
}

TEST_CASE("duality exchanges projectives and injectives on every fixture") {
    FieldQQ f;
    for (auto pres : {fixtures::ss(), fixtures::a2(), fixtures::a3(), fixtures::sq(),
                      fixtures::sq_op(), fixtures::loops(), fixtures::six()}) {
        AlgPtr<FieldQQ> a = build_bound_quiver_algebra(f, pres);
        auto op = opposite_algebra(a);
        for (int v = 0; v < a->nvert(); ++v) {
            auto iso = indec_iso(dualize(ModPtr<FieldQQ>(standard_projective(a, v))),
                                 ModPtr<FieldQQ>(standard_injective(op, v)));
            CHECK(iso.has_value());  // explicit isomorphism found
        }
    }
}

TEST_CASE("decompose: multiplicities, indecomposables, seed stability") {
    FieldQQ f;
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, fixtures::sq());
    auto p1 = standard_projective(sq, 0);

    // P(1) (+) P(1): one factor of multiplicity two with exact certificates
    auto sum = direct_sum(sq, {p1, p1}).module;
    auto d = decompose(ModPtr<FieldQQ>(sum), 5);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].multiplicity == 2);
    for (const auto& [inc, proj] : d.factors[0].copies) {
        auto round = compose(proj, inc);
        CHECK(round.full().equals(Matrix<FieldQQ>::identity(f, d.factors[0].module->total_dim())));
    }
    // sum of inc.proj over copies is the identity on the total module
    auto total = zero_map(ModPtr<FieldQQ>(sum), ModPtr<FieldQQ>(sum));
    for (const auto& fac : d.factors)
        for (const auto& [inc, proj] : fac.copies) total = map_add(total, compose(inc, proj));
    CHECK(total.full().equals(Matrix<FieldQQ>::identity(f, sum->total_dim())));

    // I(4) is indecomposable with End of dimension 1
    auto i4 = standard_injective(sq, 3);
    CHECK(hom_space(i4, i4).size() == 1);
    CHECK(decompose(i4, 0).factors.size() == 1);

    // seed stability of the factor content
    auto q = direct_sum(sq, {standard_injective(sq, 1), standard_injective(sq, 2), i4}).module;
    auto da = decompose(ModPtr<FieldQQ>(q), 1);
    auto db = decompose(ModPtr<FieldQQ>(q), 999);
    auto content = [](const Decomposition<FieldQQ>& dd) {
        std::vector<std::pair<std::vector<int>, int>> c;
        for (const auto& f2 : dd.factors) c.push_back({f2.module->dims(), f2.multiplicity});
        std::sort(c.begin(), c.end());
        return c;
    };
    CHECK(content(da) == content(db));
}

TEST_CASE("decomposition certificates check out on assorted direct sums") {
    FieldQQ f;
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, fixtures::sq());
    std::vector<ModPtr<FieldQQ>> sums{
        direct_sum(sq, {standard_injective(sq, 3), standard_simple(sq, 0),
                        standard_injective(sq, 3)})
            .module,
        direct_sum(sq, {standard_projective(sq, 1), standard_projective(sq, 2),
                        standard_simple(sq, 3), standard_simple(sq, 3)})
            .module,
        coregular_module(sq)};
    for (const auto& m : sums) {
        auto d = decompose(m, 3);
        int weighted = 0;
        auto total = zero_map(m, m);
        for (const auto& fac : d.factors) {
            weighted += fac.multiplicity * fac.module->total_dim();
            CHECK(static_cast<int>(fac.copies.size()) == fac.multiplicity);
            for (const auto& [inc, proj] : fac.copies) {
                CHECK(compose(proj, inc)
                          .full()
                          .equals(Matrix<FieldQQ>::identity(f, fac.module->total_dim())));
                total = map_add(total, compose(inc, proj));
            }
        }
        CHECK(weighted == m->total_dim());
        CHECK(total.full().equals(Matrix<FieldQQ>::identity(f, m->total_dim())));
    }
}

TEST_CASE("decompose over GF(2): diagonal field elements still split") {
    FieldGF f(2);
    AlgPtr<FieldGF> a2 = build_bound_quiver_algebra(f, fixtures::a2());
    auto s1 = standard_simple(a2, 0);
    auto s2 = standard_simple(a2, 1);
    auto m = direct_sum(a2, {s1, s2, s2}).module;
    auto d = decompose(ModPtr<FieldGF>(m), 0);
    CHECK(d.factors.size() == 2);
    CHECK(d.num_indec() == 3);
}

TEST_CASE("add membership: reflexivity, trace certificates, negatives") {
    FieldQQ f;
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, fixtures::sq());
    auto i2 = standard_injective(sq, 1);
    CHECK(add_membership(ModPtr<FieldQQ>(i2), ModPtr<FieldQQ>(i2)));

    // P(1) lies in add Q for Q = I(2) (+) I(3) (+) I(4)
    auto q = direct_sum(sq, {i2, standard_injective(sq, 2), standard_injective(sq, 3)}).module;
    auto p1 = standard_projective(sq, 0);
    auto cert = add_membership_certified(ModPtr<FieldQQ>(p1), ModPtr<FieldQQ>(q));
    CHECK(cert.member);
    // re-multiply the certificate: sum c * f.g must be the identity of P(1)
    auto acc = zero_map(ModPtr<FieldQQ>(p1), ModPtr<FieldQQ>(p1));
    for (const auto& [c, fm, gm] : cert.terms)
        acc = map_add(acc, map_scale(compose(fm, gm), c));
    CHECK(acc.full().equals(Matrix<FieldQQ>::identity(f, p1->total_dim())));

    // S(1) is not in add P(1) over A2
    AlgPtr<FieldQQ> a2 = build_bound_quiver_algebra(f, fixtures::a2());
    CHECK(!add_membership(standard_simple(a2, 0), standard_projective(a2, 0)));
}

TEST_CASE("endomorphism algebras of sums of simples and projectives") {
    FieldQQ f;
    AlgPtr<FieldQQ> a2 = build_bound_quiver_algebra(f, fixtures::a2());
    auto s1 = standard_simple(a2, 0);
    CHECK(hom_space(s1, s1).size() == 1);  // End(S1) = ground field

    auto ss = direct_sum(a2, {s1, standard_simple(a2, 1)}).module;
    auto es = end_algebra_of(ModPtr<FieldQQ>(ss));
    CHECK(es.alg->dim == 2);

    auto pp = direct_sum(a2, {standard_projective(a2, 0), standard_projective(a2, 1)}).module;
    auto ep = end_algebra_of(ModPtr<FieldQQ>(pp));
    CHECK(ep.alg->dim == 3);
    // End and its opposite multiply associatively
    auto op = ep.op;
    CHECK(op->dim == 3);
}

TEST_CASE("radical and socle of standard modules") {
    FieldQQ f;
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, fixtures::sq());
    auto p1 = standard_projective(sq, 0);
    auto rad = radical_submodule(p1);
    CHECK(rad.module->dims() == std::vector<int>{0, 1, 1, 1});
    auto soc = socle_submodule(standard_injective(sq, 3));
    CHECK(soc.module->dims() == std::vector<int>{0, 0, 0, 1});
}

TEST_SUITE_END();

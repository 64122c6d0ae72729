#include "doctest.h"
#include "helpers.hpp"

#include "abmod/errors.hpp"
#include "abmod/gauss_manin.hpp"

using namespace testing;

namespace {

const int P = 16;

DiffSystem system_of(std::vector<std::vector<std::vector<Rational>>> e) {
    return DiffSystem{static_cast<int>(e.size()), std::move(e)};
}

FrescoPresentation pres(std::vector<Rational> ls) {
    FrescoPresentation p;
    for (auto& l : ls) p.factors.push_back({l, std::nullopt});
    return p;
}

}  // namespace

TEST_CASE("differential systems") {
    auto m1 = from_differential_system(system_of({{{q("1/3")}}}), P);
    CHECK(m1->a_matrix()(0, 0) == TruncSeries::monomial(q("1/3"), 1, P));
    auto m2 = from_differential_system(system_of({{{q("1/2")}, {1}}, {{0}, {q("1/2")}}}), P);
    CHECK(m2->a_matrix()(0, 1) == TruncSeries::monomial(1, 1, P));
    CHECK(m2->a_matrix()(1, 0).is_zero());
    CHECK(bernstein_polynomial(m2).to_string() == "(x + 1/2)^2");
    const Rational al = q("2/5");
    auto m3 = from_differential_system(system_of({{{al, 1}}}), P);
    TruncSeries expect(P);
    expect[1] = al;
    for (int n = 2; n < P; ++n) expect[n] = al + 1;
    CHECK(m3->a_matrix()(0, 0) == expect);
    CHECK(m3->is_simple_pole());
    // a e = b A(a + b) e
    auto e = ModuleElement::basis(m3, 0);
    auto a = AbOperator::generator_a(P, 8), b = AbOperator::generator_b(P, 8);
    auto rhs = act(b * (AbOperator::scalar(al, P, 8) + a + b), e);
    CHECK(vectors_agree(act(a, e).coords, rhs.coords));
    CHECK_THROWS_AS(from_differential_system(system_of({{{1}, {1}}}), P), Error);
}

TEST_CASE("embedding into Xi") {
    auto e32 = fresco_from_presentation(pres({q("3/2")}), P).module;
    auto emb = embed_into_xi(e32);
    CHECK(emb.shape.n == 0);
    CHECK(emb.shape.dim_v == 1);
    CHECK(emb.map(0, 0) == TruncSeries::monomial(1, 1, emb.map.prec()));
    CHECK(emb.equivariant);
    CHECK(emb.injective);

    auto theme = fresco_from_presentation(pres({q("3/2"), q("1/2")}), P).module;
    auto et = embed_into_xi(theme);
    CHECK(et.shape.n == 1);
    CHECK(et.shape.dim_v == 1);
    CHECK(et.injective);

    auto x1 = build_xi_tensor({q("1/2")}, 1, 1, P);
    auto ex = embed_into_xi(x1);
    CHECK(ex.shape.n == 1);
    CHECK(ex.injective);

    auto sum = build_xi_tensor({q("1/2"), q("1/3")}, 0, 1, P);
    auto es = embed_into_xi(sum);
    CHECK(es.shape.n == 0);
    CHECK(es.injective);
    CHECK(es.shape.alphas.size() == 2);

    auto dbl = build_xi_tensor({q("1/2")}, 0, 2, P);
    auto ed = embed_into_xi(dbl);
    CHECK(ed.shape.dim_v == 2);
    CHECK_THROWS_AS(embed_into_xi(fresco_from_presentation(pres({q("-1/2")}), P).module), Error);
}

TEST_CASE("log-power realization") {
    XiShape s{{q("1/2")}, 1, 1};
    auto z = TruncSeries(P);
    auto r0 = realize_expansion(s, {TruncSeries::constant(1, P), z}, 4);
    CHECK(expansion_to_string(r0) == "s^(-1/2)");
    auto r1 = realize_expansion(s, {TruncSeries::monomial(1, 1, P), z}, 4);
    CHECK(expansion_to_string(r1) == "2*s^(1/2)");
    auto r2 = realize_expansion(s, {z, TruncSeries::constant(1, P)}, 4);
    CHECK(expansion_to_string(r2) == "(1/2)*s^(-1/2)*log(s)");
    // integral of s^(1/2) log s = (2/3) s^(3/2) log s - (4/9) s^(3/2)
    Expansion x{{q("1/2"), 1, 1, 1, 0}};
    auto ix = expansion_integrate(x, 4);
    CHECK(expansion_to_string(ix) == "-(4/9)*s^(3/2) + (2/3)*s^(3/2)*log(s)");
}

TEST_CASE("realization intertwines a with s and b with the integral") {
    std::mt19937 rng(23);
    XiShape s{{q("1/2"), q("1/3")}, 2, 1};
    auto xi = build_xi(s, 14);
    const int order = 10;
    for (int t = 0; t < 10; ++t) {
        SeriesVector v;
        for (int i = 0; i < s.rank(); ++i) v.push_back(random_series(rng, 14, 4));
        auto rx = realize_expansion(s, v, order);
        CHECK(realize_expansion(s, xi->apply_a(v), order) == expansion_times_s(rx, order));
        CHECK(realize_expansion(s, shift_up(v, 1), order) == expansion_integrate(rx, order));
    }
}

TEST_CASE("singular term report") {
    auto theme = fresco_from_presentation(pres({q("3/2"), q("1/2")}), P);
    auto rep = singular_term_report(theme);
    REQUIRE(rep.classes.size() == 1);
    CHECK(rep.classes[0].nilpotent_order == 2);
    CHECK(rep.classes[0].log_power == 1);
    CHECK(rep.classes[0].m == std::vector<int>{0});
    CHECK(rep.classes[0].term == "|s|^(-1)*(Log|s|^2)^1");
    auto e = fresco_from_presentation(pres({q("1/2")}), P);
    CHECK(singular_term_report(e).classes[0].log_power == 0);
    auto e1 = fresco_from_presentation(pres({1}), P);
    CHECK(singular_term_report(e1).classes[0].log_power == 1);
}

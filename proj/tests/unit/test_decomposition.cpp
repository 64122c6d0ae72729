#include "doctest.h"
#include "helpers.hpp"

#include "abmod/decomposition.hpp"
#include "abmod/errors.hpp"
#include "abmod/recursion.hpp"

using namespace testing;

namespace {

const int P = 16;

FrescoPresentation pres(std::vector<Rational> ls) {
    FrescoPresentation p;
    for (auto& l : ls) p.factors.push_back({l, std::nullopt});
    return p;
}

ModulePtr xi(const Rational& alpha, int n) { return build_xi_tensor({alpha}, n, 1, P); }

SeriesVector vec(std::initializer_list<TruncSeries> xs) { return SeriesVector(xs); }

Lattice span(const ModulePtr& e, std::vector<SeriesVector> gens) { return lattice_reduce(e, gens); }

}  // namespace

TEST_CASE("parametric recursion with a resonance") {
    // x_n scalar: (n - 2) x_n = x_{n-1}; the solution space is one-dimensional, starting at n = 2
    auto lhs = [](int n) {
        QMatrix m(1, 1);
        m(0, 0) = n - 2;
        return m;
    };
    auto rhs = [](int n, const std::vector<QMatrix>& prev) { return prev[static_cast<std::size_t>(n - 1)]; };
    auto sol = solve_recursion(1, 6, lhs, rhs);
    CHECK(sol.params == 1);
    CHECK(sol.coeffs[0](0, 0) == 0);
    CHECK(sol.coeffs[1](0, 0) == 0);
    CHECK(sol.coeffs[2](0, 0) != 0);
    CHECK(sol.coeffs[3](0, 0) == sol.coeffs[2](0, 0));
    CHECK(sol.coeffs[4](0, 0) == sol.coeffs[2](0, 0) / 2);
}

TEST_CASE("eigen elements") {
    auto x1 = xi(q("1/2"), 1);
    auto z = TruncSeries(P);
    auto e12 = eigen_elements(x1, q("1/2"));
    CHECK(lattice_equal(e12.lattice, span(x1, {vec({TruncSeries::constant(1, P), z})})));
    auto e32 = eigen_elements(x1, q("3/2"));
    CHECK(e32.vectors.size() == 1);
    CHECK(lattice_equal(e32.lattice, span(x1, {vec({TruncSeries::monomial(1, 1, P), z})})));
    auto e = build_xi_tensor({q("1/2")}, 0, 1, P);
    CHECK(eigen_elements(e, q("1/3")).lattice.rank() == 0);
    // eigen elements of a non-simple-pole fresco satisfy (a - lambda b) x = 0
    auto f = fresco_from_presentation(pres({q("3/2"), q("1/2")}), P);
    auto ef = eigen_elements(f.module, q("3/2"));
    REQUIRE(ef.vectors.size() == 1);
    auto v = ef.vectors[0];
    auto lhs = f.module->apply_a(v);
    CHECK(vectors_agree(lhs, shift_up(scale(TruncSeries::constant(q("3/2"), vector_prec(v)), v), 1)));
}

TEST_CASE("semi-simple part and test") {
    auto x1 = xi(q("1/2"), 1);
    auto s = semisimple_part(x1);
    CHECK(s.rank() == 1);
    CHECK(lattice_equal(s, span(x1, {vec({TruncSeries::constant(1, P), TruncSeries(P)})})));
    auto sum = build_xi_tensor({q("1/2"), q("1/3")}, 0, 1, P);
    CHECK(semisimple_part(sum).full_rank());
    CHECK(is_semisimple(sum));
    auto e = fresco_from_presentation(pres({q("1/2")}), P);
    CHECK(is_semisimple(e.module));
    CHECK(!is_semisimple(x1));
    auto f = fresco_from_presentation(pres({q("3/2"), q("1/2")}), P);
    auto sf = semisimple_part(f.module);
    CHECK(sf.rank() == 1);
    ModuleElement x{f.module, vec({TruncSeries::monomial(q("-1/2"), 1, P), TruncSeries::constant(1, P)})};
    CHECK(lattice_equal(sf, span(f.module, {x.coords})));
    CHECK(bernstein_polynomial(lattice_as_module(sf)).to_string() == "x + 3/2");
    auto d3 = build_xi_tensor({q("1/2"), q("3/2") - 1}, 0, 1, P);
    CHECK(is_semisimple(d3));
}

TEST_CASE("semi-simple filtration") {
    auto x1 = xi(q("1/2"), 1);
    auto f1 = semisimple_filtration(x1);
    CHECK(f1.nilpotent_order == 2);
    CHECK(f1.steps[0].rank() == 1);
    CHECK(f1.steps[1].full_rank());
    CHECK(f1.diagnostics.empty());
    CHECK(semisimple_filtration(build_xi_tensor({q("1/2"), q("1/3")}, 0, 1, P)).nilpotent_order == 1);
    auto f = fresco_from_presentation(pres({q("3/2"), q("1/2")}), P);
    auto ff = semisimple_filtration(f.module);
    CHECK(ff.nilpotent_order == 2);
    CHECK(bernstein_polynomial(lattice_as_module(ff.steps[0])).to_string() == "x + 3/2");
    auto x3 = xi(q("1/3"), 3);
    auto f3 = semisimple_filtration(x3);
    CHECK(f3.nilpotent_order == 4);
    for (int j = 0; j < 4; ++j) CHECK(f3.steps[static_cast<std::size_t>(j)].rank() == j + 1);
}

TEST_CASE("primitive split") {
    auto sum = build_xi_tensor({q("1/2"), q("1/3")}, 0, 1, P);
    auto sp = primitive_split(sum, {q("1/2")});
    CHECK(sp.e_not.rank() == 1);
    REQUIRE(sp.e_part.module);
    CHECK(bernstein_polynomial(sp.e_part.module).to_string() == "x + 1/2");
    CHECK(bernstein_polynomial(lattice_as_module(sp.e_not)).to_string() == "x + 1/3");

    // a e1 = 1/2 b e1, a e2 = b e1 + 1/3 b e2
    auto m = module_of({{TruncSeries::monomial(q("1/2"), 1, P), TruncSeries::monomial(1, 1, P)},
                        {TruncSeries(P), TruncSeries::monomial(q("1/3"), 1, P)}});
    auto sm = primitive_split(m, {q("1/3")});
    REQUIRE(sm.e_not.rank() == 1);
    // e_not = span{e1}, the 1/3 part is spanned by e2 - 6 e1
    CHECK(lattice_equal(sm.e_not, span(m, {vec({TruncSeries::constant(1, P), TruncSeries(P)})})));
    auto other = primitive_split(m, {q("1/2")});
    REQUIRE(other.e_not.rank() == 1);
    CHECK(lattice_equal(other.e_not, span(m, {vec({TruncSeries::constant(-6, P), TruncSeries::constant(1, P)})})));

    auto f = fresco_from_presentation(pres({q("3/2"), q("1/3")}), P);
    auto sf = primitive_split(f.module, {q("1/2")});
    CHECK(bernstein_polynomial(lattice_as_module(sf.e_not)).to_string() == "x + 4/3");
    CHECK(bernstein_polynomial(sf.e_part.module).to_string() == "x + 1/2");
    auto all = primitive_split(f.module, {q("1/2"), q("1/3")});
    CHECK(all.e_not.rank() == 0);
    CHECK(all.e_part.module->rank() == 2);
}

TEST_CASE("higher Bernstein polynomials") {
    auto f = fresco_from_presentation(pres({q("3/2"), q("1/2")}), P);
    auto hb = higher_bernstein(f);
    REQUIRE(hb.classes.size() == 1);
    const auto& c = hb.classes[0];
    CHECK(c.nilpotent_order == 2);
    CHECK(c.levels[0].delta == 1);
    CHECK(c.levels[0].tilde.to_string() == "x + 3/2");
    CHECK(c.levels[0].poly.to_string() == "x + 1/2");
    CHECK(c.levels[1].delta == 0);
    CHECK(c.levels[1].poly.to_string() == "x + 1/2");
    CHECK(hb.valid());
    CHECK(hb.diagnostics.empty());

    auto e = fresco_from_presentation(pres({q("2/3")}), P);
    auto he = higher_bernstein(e);
    REQUIRE(he.levels.size() == 1);
    CHECK(he.levels[0].to_string() == "x + 2/3");

    auto mixed = fresco_from_presentation(pres({q("3/2"), q("1/3")}), P);
    auto hm = higher_bernstein(mixed);
    REQUIRE(hm.levels.size() == 1);
    CHECK(hm.levels[0].to_string() == "(x + 1/2)(x + 1/3)");
    CHECK(hm.valid());
}

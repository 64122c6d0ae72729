#include "abmod/fresco.hpp"

#include "abmod/errors.hpp"

namespace abmod {

AbOperator presentation_operator(const FrescoPresentation& p, int prec) {
    const int k = p.rank();
    if (k < 1) fail(ErrorKind::InvalidArgument, "a presentation needs at least one factor");
    const int bound = default_a_degree_bound(k);
    AbOperator result = AbOperator::scalar(1, prec, bound);
    for (int j = 0; j < k; ++j) {
        const FrescoFactor& f = p.factors[static_cast<std::size_t>(j)];
        AbOperator factor = AbOperator::generator_a(prec, bound);
        factor -= AbOperator::scalar(f.lambda, prec, bound).left_mul_b_power(1);
        result = result * factor;
        if (f.unit) {
            if (!f.unit->is_unit()) fail(ErrorKind::NotAUnit, "S_" + std::to_string(j + 1) + " = " + f.unit->to_string() + " is not a unit");
            result = result * AbOperator::from_series(f.unit->truncated(std::min(prec, f.unit->prec())), bound);
        }
    }
    return result;
}

ModulePtr companion_module(const LeftForm& left_form) {
    if (left_form.empty()) fail(ErrorKind::InvalidArgument, "empty relation");
    const int k = left_form.front().first;
    if (k < 1) fail(ErrorKind::InvalidArgument, "relation of a-degree 0");
    const TruncSeries& lead = left_form.front().second;
    if (!lead.is_unit()) fail(ErrorKind::NotAUnit, "leading coefficient " + lead.to_string() + " is not a unit");
    int prec = lead.prec();
    for (const auto& [m, t] : left_form) prec = std::min(prec, t.prec());
    const TruncSeries inv = lead.truncated(prec).inverse();
    SeriesMatrix mat(k, k, prec);
    for (int m = 0; m + 1 < k; ++m) mat(m + 1, m) = TruncSeries::constant(1, prec);
    for (const auto& [m, t] : left_form)
        if (m < k) mat(m, k - 1) = -series_mul(inv, t.truncated(prec));
    return module_from_matrix(mat);
}

Fresco fresco_from_presentation(const FrescoPresentation& p, int prec) {
    const AbOperator op = presentation_operator(p, prec);
    Fresco f;
    f.left_form = op_to_left_form(op);
    f.module = companion_module(*f.left_form);
    f.generator = ModuleElement::basis(f.module, 0);
    f.presentation = p;
    return f;
}

std::vector<Rational> formula_roots(const FrescoPresentation& p) {
    const int k = p.rank();
    std::vector<Rational> roots;
    for (int j = 1; j <= k; ++j) roots.push_back(-(p.factors[static_cast<std::size_t>(j - 1)].lambda + j - k));
    return roots;
}

FormulaBernstein bernstein_via_formula(const FrescoPresentation& p) {
    FormulaBernstein out;
    std::vector<Rational> coeffs{1};
    for (const Rational& r : formula_roots(p)) {
        coeffs = poly_mul(coeffs, {-r, 1});
        if (r >= 0) out.non_negative_roots.push_back(r);
    }
    out.poly = RationalPolynomial(coeffs, formula_roots(p));
    return out;
}

RationalPolynomial fresco_bernstein(const Fresco& f, int max_iter) {
    if (!f.module) return RationalPolynomial();
    std::vector<Rational> hints;
    if (f.presentation) hints = formula_roots(*f.presentation);
    return bernstein_polynomial(f.module, BernsteinMode::Characteristic, hints, max_iter);
}

ModuleElement right_factor_element(const Fresco& f) {
    if (!f.presentation) fail(ErrorKind::InvalidArgument, "fresco has no presentation");
    const FrescoFactor& last = f.presentation->factors.back();
    const int prec = f.module->prec();
    const int bound = default_a_degree_bound(f.rank());
    AbOperator op = AbOperator::generator_a(prec, bound);
    op -= AbOperator::scalar(last.lambda, prec, bound).left_mul_b_power(1);
    if (last.unit) op = op * AbOperator::from_series(last.unit->truncated(std::min(prec, last.unit->prec())), bound);
    return act(op, f.generator);
}

Fresco generated_submodule(const ModulePtr& e, const ModuleElement& x) {
    if (x.host != e) fail(ErrorKind::HostMismatch, "element from a different module");
    if (vector_is_zero(x.coords)) fail(ErrorKind::InvalidArgument, "the zero element generates nothing");
    std::vector<SeriesVector> powers{truncate_vector(x.coords, std::min(x.prec(), e->prec()))};
    for (int m = 1; m <= e->rank(); ++m) {
        powers.push_back(e->apply_a(powers.back()));
        const auto rels = syzygies(e, powers);
        if (rels.empty()) continue;
        const SeriesVector& rel = rels.front();
        const TruncSeries& lead = rel[static_cast<std::size_t>(m)];
        Fresco f;
        f.host = e;
        f.inclusion.assign(powers.begin(), powers.end() - 1);
        if (!lead.is_unit()) {
            // not free on x, ..., a^{m-1} x: keep the span without a relation
            const Lattice l = lattice_reduce(e, f.inclusion);
            f.module = lattice_as_module(l);
            f.inclusion = l.basis();
            f.generator = ModuleElement::basis(f.module, 0);
            return f;
        }
        const TruncSeries inv = lead.inverse();
        LeftForm lf;
        for (int i = m; i >= 0; --i) lf.emplace_back(i, series_mul(inv, rel[static_cast<std::size_t>(i)]));
        f.left_form = lf;
        f.module = companion_module(lf);
        f.generator = ModuleElement::basis(f.module, 0);
        return f;
    }
    fail(ErrorKind::PrecisionExhausted, "no relation among x, ax, ... found at this precision");
}

Lattice fresco_lattice(const Fresco& f) {
    if (!f.host) fail(ErrorKind::InvalidArgument, "fresco is not attached to a host");
    return lattice_reduce(f.host, f.inclusion);
}

namespace {

// A cyclic generator of an a-stable lattice, tried among simple combinations of its basis.
Fresco lattice_fresco(const Lattice& l) {
    const int r = l.rank();
    std::vector<SeriesVector> candidates;
    const int p = l.host()->prec();
    for (int shape = 0; shape < 3; ++shape) {
        SeriesVector v = zero_vector(l.host()->rank(), p);
        for (int i = 0; i < r; ++i) {
            Rational c = shape == 0 ? Rational(1) : shape == 1 ? Rational(i + 1) : Rational((i + 1) * (i + 1) + 1);
            SeriesVector g = l.basis()[static_cast<std::size_t>(i)];
            for (auto& s : g) s *= c;
            v = v + g;
        }
        candidates.push_back(v);
    }
    for (const auto& g : l.basis()) candidates.push_back(g);
    for (const auto& c : candidates) {
        try {
            Fresco f = generated_submodule(l.host(), ModuleElement{l.host(), c});
            if (f.rank() == r && f.left_form && lattice_equal(fresco_lattice(f), l)) return f;
        } catch (const Error&) {
        }
    }
    Fresco f;
    f.host = l.host();
    f.module = lattice_as_module(l);
    f.inclusion = l.basis();
    f.generator = ModuleElement::basis(f.module, 0);
    return f;
}

}  // namespace

JhSplit jh_split(const Fresco& f, const ModuleElement& x, int max_iter) {
    if (x.host != f.module) fail(ErrorKind::HostMismatch, "element is not in the fresco");
    const Fresco gen = generated_submodule(f.module, x);
    const Lattice hull = normal_hull(fresco_lattice(gen));
    JhSplit out{lattice_fresco(hull), hull, std::nullopt, {}};
    const QuotientModule qm = quotient_module(f.module, hull);
    if (qm.module) {
        Fresco quot;
        quot.module = qm.module;
        quot.generator = ModuleElement{qm.module, qm.project(f.generator.coords)};
        out.quot = quot;
    }
    JhReport& rep = out.report;
    rep.b_total = fresco_bernstein(f, max_iter);
    rep.b_sub = fresco_bernstein(out.sub, max_iter);
    rep.b_quot = out.quot ? fresco_bernstein(*out.quot, max_iter) : RationalPolynomial();
    rep.q = out.quot ? out.quot->rank() : 0;
    rep.shifted_minus_holds = rep.b_sub.shifted(-rep.q) * rep.b_quot == rep.b_total;
    rep.shifted_plus_holds = rep.b_sub.shifted(rep.q) * rep.b_quot == rep.b_total;
    return out;
}

}  // namespace abmod

#include "abmod/decomposition.hpp"

#include "abmod/errors.hpp"
#include "abmod/recursion.hpp"

#include <algorithm>
#include <set>

namespace abmod {

namespace {

struct PoleData {
    ModulePtr module;
    std::vector<QMatrix> r;  // r[j]: coefficient of b^{j+1} in the a-matrix
    RationalPolynomial charpoly;
    std::vector<Rational> spectrum;  // distinct rational eigenvalues of r[0]
};

PoleData pole_data(const ModulePtr& m) {
    PoleData d;
    d.module = m;
    for (int j = 0; j + 1 < m->prec(); ++j) d.r.push_back(m->a_matrix().coefficient(j + 1));
    d.charpoly = RationalPolynomial(characteristic_polynomial(d.r[0]));
    if (!d.charpoly.splits()) fail(ErrorKind::NotGeometric, "residue has eigenvalues outside Q");
    for (const auto& root : d.charpoly.roots()) d.spectrum.push_back(root.value);
    return d;
}

struct Context {
    ModulePtr e;
    Saturation sat;
    PoleData pole;
};

Context context(const ModulePtr& e, int max_iter) {
    Context c{e, saturate(e, max_iter), {}};
    c.pole = pole_data(c.sat.module);
    return c;
}

SeriesVector column_series(const ParametricSolution& sol, int param, int dim) {
    const int n = static_cast<int>(sol.coeffs.size());
    SeriesVector v = zero_vector(dim, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < dim; ++r) v[static_cast<std::size_t>(r)][i] = sol.coeffs[static_cast<std::size_t>(i)](r, param);
    return v;
}

// Q-basis of the eigen elements of a simple-pole module, coordinates in that module.
std::vector<SeriesVector> eigen_on_pole(const PoleData& d, const Rational& lambda) {
    const int k = d.module->rank();
    const int steps = static_cast<int>(d.r.size());
    for (const Rational& rho : d.spectrum) {
        const Rational n = lambda - rho;
        if (is_integer(n) && n >= steps)
            fail(ErrorKind::PrecisionExhausted, "eigen recursion for " + to_string(lambda) + " is singular at order " +
                                                    to_string(n) + ", beyond precision");
    }
    auto lhs = [&](int n) {
        QMatrix m = d.r[0];
        for (int i = 0; i < k; ++i) m(i, i) += n - lambda;
        return m;
    };
    auto rhs = [&](int n, const std::vector<QMatrix>& prev) {
        QMatrix acc(k, prev.empty() ? 0 : prev[0].cols());
        for (int j = 1; j <= n; ++j) acc -= d.r[static_cast<std::size_t>(j)] * prev[static_cast<std::size_t>(n - j)];
        return acc;
    };
    const ParametricSolution sol = solve_recursion(k, steps, lhs, rhs);
    std::vector<SeriesVector> out;
    for (int p = 0; p < sol.params; ++p) out.push_back(column_series(sol, p, k));
    return out;
}

// Vectors of E# mapped to E, up to the factor b^{-shift}.
std::vector<SeriesVector> to_e_scaled(const Context& c, const std::vector<SeriesVector>& ys) {
    std::vector<SeriesVector> out;
    for (const auto& y : ys) out.push_back(c.sat.basis * y);
    return out;
}

std::vector<SeriesVector> eigen_in_e(const Context& c, const Rational& lambda) {
    const std::vector<SeriesVector> ys = to_e_scaled(c, eigen_on_pole(c.pole, lambda));
    const int s = c.sat.shift;
    if (s == 0 || ys.empty()) return ys;
    const int k = c.e->rank();
    QMatrix cons(k * s, static_cast<int>(ys.size()));
    for (int i = 0; i < static_cast<int>(ys.size()); ++i) {
        const auto& y = ys[static_cast<std::size_t>(i)];
        if (vector_prec(y) <= s) fail(ErrorKind::PrecisionExhausted, "eigen elements too short to pull back");
        for (int n = 0; n < s; ++n)
            for (int r = 0; r < k; ++r) cons(n * k + r, i) = y[static_cast<std::size_t>(r)][n];
    }
    const QMatrix z = nullspace(cons);
    std::vector<SeriesVector> out;
    for (int j = 0; j < z.cols(); ++j) {
        SeriesVector v = zero_vector(k, vector_prec(ys[0]));
        for (int i = 0; i < static_cast<int>(ys.size()); ++i)
            if (z(i, j) != 0) v = v + scale(TruncSeries::constant(z(i, j), vector_prec(ys[static_cast<std::size_t>(i)])), ys[static_cast<std::size_t>(i)]);
        out.push_back(shift_down(v, s));
    }
    return out;
}

Lattice semisimple_in(const Context& c) {
    // b Eig_lambda(E#) = Eig_{lambda+1}(E#) up to eigen elements of valuation 0, whose
    // eigenvalue lies in the residue spectrum; so those eigenvalues span everything over K.
    std::vector<SeriesVector> gens;
    for (const Rational& rho : c.pole.spectrum)
        for (auto& v : to_e_scaled(c, eigen_on_pole(c.pole, rho))) gens.push_back(std::move(v));
    return normal_hull(lattice_reduce(c.e, gens));
}

QMatrix poly_at(const std::vector<Rational>& coeffs, const QMatrix& m) {
    QMatrix acc(m.rows(), m.cols());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc(i, i) += *it;
    }
    return acc;
}

QMatrix block(const QMatrix& m, int r0, int c0, int rows, int cols) {
    QMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
    return out;
}

void set_block(QMatrix& m, int r0, int c0, const QMatrix& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

// X with (A + n) X - X B = rhs.
QMatrix sylvester(const QMatrix& a, const QMatrix& b, int n, const QMatrix& rhs) {
    const int p = a.rows(), q = b.rows();
    QMatrix an = a;
    for (int i = 0; i < p; ++i) an(i, i) += n;
    QMatrix op = kron(QMatrix::identity(q), an) - kron(b.transpose(), QMatrix::identity(p));
    QMatrix v(p * q, 1);
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < p; ++i) v(j * p + i, 0) = rhs(i, j);
    auto x = solve(op, v);
    if (!x || rank(op) < p * q) fail(ErrorKind::ValidationFailed, "Sylvester equation is singular");
    QMatrix out(p, q);
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < p; ++i) out(i, j) = (*x)(j * p + i, 0);
    return out;
}

bool in_classes(const Rational& root, const std::vector<Rational>& classes) {
    return std::find(classes.begin(), classes.end(), class_representative(root)) != classes.end();
}

}  // namespace

EigenSpace eigen_elements(const ModulePtr& e, const Rational& lambda, int max_iter) {
    const Context c = context(e, max_iter);
    EigenSpace out{eigen_in_e(c, lambda), Lattice(e)};
    out.lattice = lattice_reduce(e, out.vectors);
    return out;
}

Lattice semisimple_part(const ModulePtr& e, int max_iter) { return semisimple_in(context(e, max_iter)); }

bool is_semisimple(const ModulePtr& e, int max_iter) { return semisimple_part(e, max_iter).full_rank(); }

Filtration semisimple_filtration(const ModulePtr& e, int max_iter) {
    Filtration f;
    Lattice current = semisimple_part(e, max_iter);
    if (current.rank() == 0) fail(ErrorKind::ValidationFailed, "no eigen elements found");
    f.steps.push_back(current);
    while (!current.full_rank()) {
        const QuotientModule q = quotient_module(e, current);
        const Lattice s1 = semisimple_part(q.module, max_iter);
        if (s1.rank() == 0) fail(ErrorKind::ValidationFailed, "quotient without eigen elements");
        const Lattice next = preimage(q, s1);
        if (next.rank() <= current.rank()) fail(ErrorKind::ValidationFailed, "filtration stopped increasing");
        current = next;
        f.steps.push_back(current);
    }
    f.nilpotent_order = static_cast<int>(f.steps.size());
    for (std::size_t j = 0; j < f.steps.size(); ++j) {
        const Lattice& s = f.steps[j];
        if (!is_normal(s) || !is_a_stable(s)) f.diagnostics.push_back("step " + std::to_string(j + 1) + " is not a normal a-stable sub-module");
        ModulePtr piece;
        if (j == 0) {
            piece = lattice_as_module(s);
        } else {
            const QuotientModule q = quotient_module(e, f.steps[j - 1]);
            piece = lattice_as_module(project_lattice(q, s));
        }
        if (!is_semisimple(piece, max_iter)) f.diagnostics.push_back("quotient at step " + std::to_string(j + 1) + " is not semi-simple");
    }
    return f;
}

Rational normalize_class(const Rational& alpha) { return class_representative(-alpha); }

std::vector<Rational> root_classes(const RationalPolynomial& p) {
    std::set<Rational> seen;
    for (const auto& r : p.roots()) seen.insert(class_representative(r.value));
    return {seen.begin(), seen.end()};
}

PrimitiveSplit primitive_split(const ModulePtr& e, const std::vector<Rational>& classes_in, int max_iter) {
    std::vector<Rational> classes;
    for (const auto& a : classes_in) classes.push_back(normalize_class(a));
    const Context c = context(e, max_iter);
    const int k = e->rank();
    // residue eigenvalues are the negated Bernstein roots
    std::vector<Rational> p_in{1}, p_out{1};
    int k1 = 0;
    for (const auto& root : c.pole.charpoly.roots()) {
        std::vector<Rational> factor{-root.value, 1};
        for (int m = 0; m < root.mult; ++m) {
            if (in_classes(-root.value, classes)) {
                p_in = poly_mul(p_in, factor);
                ++k1;
            } else {
                p_out = poly_mul(p_out, factor);
            }
        }
    }
    const std::vector<QMatrix>& r = c.pole.r;
    const QMatrix v_in = nullspace(poly_at(p_in, r[0]));
    const QMatrix v_out = nullspace(poly_at(p_out, r[0]));
    if (v_in.cols() != k1 || v_out.cols() != k - k1) fail(ErrorKind::ValidationFailed, "generalized eigenspaces do not fill the module");
    const int k2 = k - k1;
    PrimitiveSplit out{classes, Lattice(e), QuotientModule{nullptr, Lattice(e), {}}};
    if (k2 == 0) {
        out.e_part = quotient_module(e, out.e_not);
        return out;
    }
    if (k1 == 0) {
        out.e_not = whole_module(e);
        out.e_part = QuotientModule{nullptr, out.e_not, {}};
        return out;
    }
    const QMatrix t = hstack(v_in, v_out);
    const QMatrix tinv = inverse(t);
    std::vector<QMatrix> rt;
    for (const auto& rj : r) rt.push_back(tinv * rj * t);
    const int steps = static_cast<int>(rt.size());
    const QMatrix a = block(rt[0], 0, 0, k1, k1), bm = block(rt[0], k1, k1, k2, k2);
    std::vector<QMatrix> g{QMatrix::identity(k)}, rp{rt[0]};
    for (int n = 1; n < steps; ++n) {
        QMatrix cn = rt[static_cast<std::size_t>(n)];
        for (int j = 1; j < n; ++j)
            cn += rt[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(n - j)] - g[static_cast<std::size_t>(n - j)] * rp[static_cast<std::size_t>(j)];
        QMatrix gn(k, k);
        set_block(gn, 0, k1, sylvester(a, bm, n, block(cn, 0, k1, k1, k2) * Rational(-1)));
        set_block(gn, k1, 0, sylvester(bm, a, n, block(cn, k1, 0, k2, k1) * Rational(-1)));
        QMatrix rn(k, k);
        set_block(rn, 0, 0, block(cn, 0, 0, k1, k1));
        set_block(rn, k1, k1, block(cn, k1, k1, k2, k2));
        g.push_back(gn);
        rp.push_back(rn);
    }
    // new basis of E#: columns of T G
    std::vector<QMatrix> tg;
    for (const auto& gn : g) tg.push_back(t * gn);
    const SeriesMatrix basis = SeriesMatrix::from_coefficients(tg, k, k, steps);
    std::vector<SeriesVector> outs;
    for (int j = k1; j < k; ++j) outs.push_back(basis.column(j));
    out.e_not = normal_hull(lattice_reduce(e, to_e_scaled(c, outs)));
    out.e_part = quotient_module(e, out.e_not);
    return out;
}

HigherBernstein higher_bernstein(const Fresco& f, int max_iter) {
    HigherBernstein hb;
    hb.bernstein = fresco_bernstein(f, max_iter);
    if (!hb.bernstein.splits()) fail(ErrorKind::NotGeometric, "Bernstein polynomial does not split over Q");
    for (const auto& r : hb.bernstein.roots())
        if (r.value >= 0) fail(ErrorKind::NotGeometric, "Bernstein root " + to_string(r.value) + " is not negative");
    for (const Rational& alpha : root_classes(hb.bernstein)) {
        const PrimitiveSplit split = primitive_split(f.module, {alpha}, max_iter);
        const ModulePtr& part = split.e_part.module;
        ClassBernstein cb;
        cb.alpha = alpha;
        cb.rank = part->rank();
        const Filtration filt = semisimple_filtration(part, max_iter);
        for (const auto& d : filt.diagnostics) hb.diagnostics.push_back("class " + to_string(alpha) + ": " + d);
        cb.nilpotent_order = filt.nilpotent_order;
        RationalPolynomial product;
        for (int j = 0; j < filt.nilpotent_order; ++j) {
            HigherLevel lvl;
            lvl.j = j + 1;
            const Lattice& s = filt.steps[static_cast<std::size_t>(j)];
            lvl.delta = cb.rank - s.rank();
            ModulePtr piece;
            if (j == 0) {
                piece = lattice_as_module(s);
            } else {
                const QuotientModule q = quotient_module(part, filt.steps[static_cast<std::size_t>(j - 1)]);
                piece = lattice_as_module(project_lattice(q, s));
            }
            lvl.tilde = bernstein_polynomial(piece, BernsteinMode::Characteristic, {}, max_iter);
            lvl.poly = lvl.tilde.shifted(-lvl.delta);
            product = product * lvl.poly;
            cb.levels.push_back(lvl);
        }
        if (!(product == hb.bernstein.class_part(alpha)))
            hb.diagnostics.push_back("class " + to_string(alpha) + ": product of levels differs from the class part");
        hb.classes.push_back(cb);
    }
    int d = 0;
    for (const auto& cb : hb.classes) d = std::max(d, cb.nilpotent_order);
    for (int j = 0; j < d; ++j) {
        RationalPolynomial bj;
        for (const auto& cb : hb.classes)
            if (j < cb.nilpotent_order) bj = bj * cb.levels[static_cast<std::size_t>(j)].poly;
        hb.levels.push_back(bj);
    }
    RationalPolynomial total;
    for (const auto& bj : hb.levels) total = total * bj;
    hb.product_check = total == hb.bernstein;
    hb.simple_roots_check = true;
    for (const auto& bj : hb.levels)
        for (const auto& r : bj.roots())
            if (r.mult != 1) hb.simple_roots_check = false;
    hb.degrees_check = true;
    for (std::size_t j = 1; j < hb.levels.size(); ++j)
        if (hb.levels[j].degree() > hb.levels[j - 1].degree()) hb.degrees_check = false;
    if (!hb.product_check) hb.diagnostics.push_back("product of B_j differs from B_F");
    if (!hb.simple_roots_check) hb.diagnostics.push_back("some B_j has a multiple root");
    if (!hb.degrees_check) hb.diagnostics.push_back("degrees of B_j increase");
    return hb;
}

}  // namespace abmod

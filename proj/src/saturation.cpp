#include "abmod/saturation.hpp"

#include "abmod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace abmod {

namespace {

SeriesMatrix columns_as_matrix(const std::vector<SeriesVector>& cols, int rows) { return SeriesMatrix::from_columns(cols, rows); }

}  // namespace

Saturation saturate(const ModulePtr& e, int max_iter) {
    const int k = e->rank();
    if (max_iter < 0) max_iter = k * e->prec();
    Saturation sat;
    sat.module = e;
    sat.basis = SeriesMatrix::identity(k, e->prec());
    sat.inclusion = SeriesMatrix::identity(k, e->prec());
    while (!sat.module->is_simple_pole()) {
        if (sat.steps >= max_iter) {
            std::ostringstream msg;
            msg << "saturation did not reach a simple pole after " << sat.steps
                << " steps (cap rank*prec is heuristic)";
            fail(ErrorKind::NotRegular, msg.str());
        }
        const ModulePtr& cur = sat.module;
        std::vector<SeriesVector> gens;
        for (int j = 0; j < k; ++j) {
            gens.push_back(shift_up(unit_vector(k, j, cur->prec()), 1));
            gens.push_back(cur->a_matrix().column(j));
        }
        const Lattice l = lattice_reduce(cur, gens);
        if (!l.full_rank()) fail(ErrorKind::PrecisionExhausted, "saturation lattice lost rank");
        // new basis ordered by pivot column
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int x, int y) {
            return l.pivots()[static_cast<std::size_t>(x)].column < l.pivots()[static_cast<std::size_t>(y)].column;
        });
        auto coords = [&](const SeriesVector& v) -> std::optional<SeriesVector> {
            auto c = lattice_coordinates(l, v);
            if (!c) return c;
            SeriesVector out;
            for (int i : perm) out.push_back((*c)[static_cast<std::size_t>(i)]);
            return out;
        };
        std::vector<SeriesVector> cols, incl, gens_sorted;
        for (int i : perm) gens_sorted.push_back(l.basis()[static_cast<std::size_t>(i)]);
        for (const auto& g : gens_sorted) {
            auto c = coords(cur->apply_a(g) - shift_up(g, 1));
            if (!c) fail(ErrorKind::NotRegular, "b^-1 a does not preserve the saturation candidate");
            cols.push_back(std::move(*c));
        }
        for (int j = 0; j < k; ++j) {
            auto c = coords(shift_up(sat.inclusion.column(j), 1));
            if (!c) fail(ErrorKind::PrecisionExhausted, "lost track of the original module");
            incl.push_back(std::move(*c));
        }
        const SeriesMatrix c0 = columns_as_matrix(gens_sorted, k);
        sat.basis = sat.basis * c0;
        sat.shift += 1;
        sat.inclusion = columns_as_matrix(incl, k);
        sat.module = module_from_matrix(columns_as_matrix(cols, k));
        sat.steps += 1;
        if (sat.module->prec() < 2) fail(ErrorKind::PrecisionExhausted, "precision exhausted during saturation");
    }
    if (sat.module->prec() < 2) fail(ErrorKind::PrecisionExhausted, "precision too small for a residue");
    return sat;
}

QMatrix residue_matrix(const AbModule& e) {
    if (!e.is_simple_pole()) fail(ErrorKind::InvalidArgument, "residue requested for a module without simple pole");
    return e.a_matrix().coefficient(1);
}

RationalPolynomial bernstein_from_saturation(const Saturation& sat, BernsteinMode mode, const std::vector<Rational>& hints) {
    QMatrix r = residue_matrix(*sat.module);
    r *= Rational(-1);
    return RationalPolynomial(mode == BernsteinMode::Minimal ? minimal_polynomial(r) : characteristic_polynomial(r), hints);
}

RationalPolynomial bernstein_polynomial(const ModulePtr& e, BernsteinMode mode, const std::vector<Rational>& hints, int max_iter) {
    return bernstein_from_saturation(saturate(e, max_iter), mode, hints);
}

GeometricCertificate is_geometric(const ModulePtr& e, BernsteinMode mode, int max_iter) {
    GeometricCertificate cert;
    cert.bernstein = bernstein_polynomial(e, mode, {}, max_iter);
    if (!cert.bernstein.splits()) {
        cert.reason = "factor without rational roots remains";
        return cert;
    }
    for (const auto& r : cert.bernstein.roots())
        if (r.value >= 0) {
            cert.reason = "root " + to_string(r.value) + " is not negative";
            return cert;
        }
    cert.geometric = true;
    return cert;
}

}  // namespace abmod

#include "abmod/lattice.hpp"

#include "abmod/errors.hpp"

#include <algorithm>
#include <climits>

namespace abmod {

namespace {

struct Row {
    SeriesVector v;
    SeriesVector tag;
};

int row_prec(const Row& r) { return vector_prec(r.v); }

void uniformize(Row& r) {
    const int p = row_prec(r);
    r.v = truncate_vector(r.v, p);
    r.tag = truncate_vector(r.tag, p);
}

// Coefficients of b^v and above, divided by b^v.
TruncSeries high_part(const TruncSeries& s, int v) {
    TruncSeries q(std::max(s.prec() - v, 0));
    for (int n = 0; n < q.prec(); ++n) q[n] = s[n + v];
    return q;
}

TruncSeries low_part(const TruncSeries& s, int v, int prec) {
    TruncSeries r(prec);
    for (int n = 0; n < std::min({v, s.prec(), prec}); ++n) r[n] = s[n];
    return r;
}

void subtract_multiple(SeriesVector& x, const TruncSeries& q, const SeriesVector& g, int cap) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (g[j].is_zero() && g[j].prec() >= cap) continue;
        x[j] -= mul_tracked(q, g[j], cap);
    }
}

struct Echelon {
    std::vector<Row> basis;
    std::vector<Pivot> pivots;
    std::vector<Row> zeros;
};

Echelon echelonize(std::vector<Row> rows) {
    Echelon out;
    for (auto& r : rows) uniformize(r);
    while (true) {
        // move vanished rows out
        for (auto it = rows.begin(); it != rows.end();) {
            if (vector_is_zero(it->v)) {
                out.zeros.push_back(std::move(*it));
                it = rows.erase(it);
            } else {
                ++it;
            }
        }
        if (rows.empty()) break;
        int best_r = -1, best_c = -1, best_v = INT_MAX;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            for (int c = 0; c < static_cast<int>(rows[static_cast<std::size_t>(r)].v.size()); ++c) {
                const auto& s = rows[static_cast<std::size_t>(r)].v[static_cast<std::size_t>(c)];
                const int val = s.valuation();
                if (val >= s.prec()) continue;
                if (val < best_v || (val == best_v && c < best_c)) {
                    best_r = r;
                    best_c = c;
                    best_v = val;
                }
            }
        Row g = std::move(rows[static_cast<std::size_t>(best_r)]);
        rows.erase(rows.begin() + best_r);
        const int pg = row_prec(g);
        const TruncSeries uinv = high_part(g.v[static_cast<std::size_t>(best_c)], best_v).inverse();
        for (auto& s : g.v) s = mul_tracked(uinv, s, pg);
        for (auto& s : g.tag) s = mul_tracked(uinv, s, pg);
        g.v[static_cast<std::size_t>(best_c)] = TruncSeries::monomial(1, best_v, pg);
        for (auto& h : rows) {
            const TruncSeries q = high_part(h.v[static_cast<std::size_t>(best_c)], best_v);
            const int cap = std::min(row_prec(h), pg);
            subtract_multiple(h.v, q, g.v, cap);
            subtract_multiple(h.tag, q, g.tag, cap);
            h.v[static_cast<std::size_t>(best_c)] = TruncSeries(cap);
            uniformize(h);
        }
        // Hermite reduction of the earlier basis vectors in the new pivot column.
        for (auto& e : out.basis) {
            const TruncSeries& entry = e.v[static_cast<std::size_t>(best_c)];
            const TruncSeries q = high_part(entry, best_v);
            if (q.is_zero()) continue;
            const int cap = std::min(row_prec(e), pg);
            const TruncSeries low = low_part(entry, best_v, cap);
            subtract_multiple(e.v, q, g.v, cap);
            subtract_multiple(e.tag, q, g.tag, cap);
            e.v[static_cast<std::size_t>(best_c)] = low;
            uniformize(e);
        }
        out.basis.push_back(std::move(g));
        out.pivots.push_back({best_c, best_v});
    }
    return out;
}

int max_valuation(const std::vector<Pivot>& pivots) {
    int m = 0;
    for (const auto& p : pivots) m = std::max(m, p.valuation);
    return m;
}

struct ReductionResult {
    SeriesVector coeffs;
    SeriesVector residual;
};

ReductionResult reduce(const Lattice& lattice, const SeriesVector& x) {
    ReductionResult out;
    out.residual = truncate_vector(x, vector_prec(x));
    for (int i = 0; i < lattice.rank(); ++i) {
        const Pivot& piv = lattice.pivots()[static_cast<std::size_t>(i)];
        const SeriesVector& g = lattice.basis()[static_cast<std::size_t>(i)];
        const int p = std::min(vector_prec(out.residual), vector_prec(g));
        const TruncSeries entry = out.residual[static_cast<std::size_t>(piv.column)];
        const TruncSeries q = high_part(entry, piv.valuation);
        subtract_multiple(out.residual, q, g, p);
        out.residual[static_cast<std::size_t>(piv.column)] = low_part(entry, piv.valuation, p);
        out.residual = truncate_vector(out.residual, vector_prec(out.residual));
        out.coeffs.push_back(q);
    }
    return out;
}

void check_host(const ModulePtr& host, const SeriesVector& v) {
    if (static_cast<int>(v.size()) != host->rank()) fail(ErrorKind::HostMismatch, "vector length differs from module rank");
}

}  // namespace

int Lattice::max_pivot_valuation() const { return max_valuation(pivots_); }

int Lattice::index_valuation() const {
    int s = 0;
    for (const auto& p : pivots_) s += p.valuation;
    return s;
}

std::vector<ModuleElement> Lattice::elements() const {
    std::vector<ModuleElement> out;
    for (const auto& g : basis_) out.push_back({host_, g});
    return out;
}

Lattice lattice_reduce(const ModulePtr& host, const std::vector<SeriesVector>& gens) {
    std::vector<Row> rows;
    for (const auto& g : gens) {
        check_host(host, g);
        rows.push_back({truncate_vector(g, std::min(vector_prec(g), host->prec())), {}});
    }
    Echelon ech = echelonize(std::move(rows));
    Lattice lattice(host);
    const int vmax = max_valuation(ech.pivots);
    for (const auto& z : ech.zeros)
        if (!ech.pivots.empty() && row_prec(z) <= vmax)
            fail(ErrorKind::PrecisionExhausted,
                 "a generator vanishes only to precision " + std::to_string(row_prec(z)) + " against pivots of valuation " +
                     std::to_string(vmax));
    for (auto& r : ech.basis) lattice.basis_.push_back(std::move(r.v));
    lattice.pivots_ = std::move(ech.pivots);
    return lattice;
}

Lattice lattice_reduce(const ModulePtr& host, const std::vector<ModuleElement>& gens) {
    std::vector<SeriesVector> vs;
    for (const auto& g : gens) {
        if (g.host != host) fail(ErrorKind::HostMismatch, "generator from a different module");
        vs.push_back(g.coords);
    }
    return lattice_reduce(host, vs);
}

Lattice whole_module(const ModulePtr& host) {
    std::vector<SeriesVector> gens;
    for (int j = 0; j < host->rank(); ++j) gens.push_back(unit_vector(host->rank(), j, host->prec()));
    return lattice_reduce(host, gens);
}

std::optional<SeriesVector> lattice_coordinates(const Lattice& lattice, const SeriesVector& x) {
    check_host(lattice.host(), x);
    ReductionResult red = reduce(lattice, x);
    if (!vector_is_zero(red.residual)) return std::nullopt;
    const int p = vector_prec(red.residual);
    const bool resolved = lattice.full_rank() ? lattice.index_valuation() <= p : lattice.max_pivot_valuation() < p;
    if (!resolved)
        fail(ErrorKind::PrecisionExhausted,
             "membership residual vanishes only to precision " + std::to_string(p) + ", lattice not resolved there");
    return red.coeffs;
}

bool lattice_member(const SeriesVector& x, const Lattice& lattice) { return lattice_coordinates(lattice, x).has_value(); }

bool lattice_member(const ModuleElement& x, const Lattice& lattice) {
    if (x.host != lattice.host()) fail(ErrorKind::HostMismatch, "element and lattice live in different modules");
    return lattice_member(x.coords, lattice);
}

bool lattice_contains(const Lattice& outer, const Lattice& inner) {
    for (const auto& g : inner.basis())
        if (!lattice_member(g, outer)) return false;
    return true;
}

bool lattice_equal(const Lattice& x, const Lattice& y) {
    return x.rank() == y.rank() && lattice_contains(x, y) && lattice_contains(y, x);
}

namespace {

QMatrix constant_terms(const Lattice& lattice) {
    QMatrix c(lattice.host()->rank(), lattice.rank());
    for (int j = 0; j < lattice.rank(); ++j)
        for (int i = 0; i < lattice.host()->rank(); ++i) {
            const auto& s = lattice.basis()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (s.prec() > 0) c(i, j) = s[0];
        }
    return c;
}

}  // namespace

bool is_normal(const Lattice& lattice) { return rank(constant_terms(lattice)) == lattice.rank(); }

Lattice normal_hull(const Lattice& lattice) {
    Lattice current = lattice;
    const int limit = lattice.index_valuation() + 1;
    for (int step = 0; step <= limit; ++step) {
        const QMatrix kernel = nullspace(constant_terms(current));
        if (kernel.cols() == 0) return current;
        // Replace the generator with the largest pivot valuation among those involved.
        int pick = -1;
        for (int i = 0; i < current.rank(); ++i)
            if (kernel(i, 0) != 0 &&
                (pick < 0 || current.pivots()[static_cast<std::size_t>(i)].valuation >=
                                 current.pivots()[static_cast<std::size_t>(pick)].valuation))
                pick = i;
        const int k = current.host()->rank();
        SeriesVector w = zero_vector(k, current.host()->prec());
        for (int i = 0; i < current.rank(); ++i)
            if (kernel(i, 0) != 0) {
                SeriesVector term = current.basis()[static_cast<std::size_t>(i)];
                for (auto& s : term) s *= kernel(i, 0);
                w = w + term;
            }
        if (vector_prec(w) <= 1) fail(ErrorKind::PrecisionExhausted, "normal hull ran out of precision");
        std::vector<SeriesVector> gens = current.basis();
        gens[static_cast<std::size_t>(pick)] = shift_down(w, 1);
        current = lattice_reduce(current.host(), gens);
    }
    fail(ErrorKind::PrecisionExhausted, "normal hull did not stabilize");
}

bool is_a_stable(const Lattice& lattice) {
    for (const auto& g : lattice.basis())
        if (!lattice_member(lattice.host()->apply_a(g), lattice)) return false;
    return true;
}

Lattice lattice_sum(const Lattice& x, const Lattice& y) {
    if (x.host() != y.host()) fail(ErrorKind::HostMismatch, "lattices live in different modules");
    std::vector<SeriesVector> gens = x.basis();
    gens.insert(gens.end(), y.basis().begin(), y.basis().end());
    return lattice_reduce(x.host(), gens);
}

std::vector<SeriesVector> syzygies(const ModulePtr& host, const std::vector<SeriesVector>& gens) {
    std::vector<Row> rows;
    const int n = static_cast<int>(gens.size());
    for (int i = 0; i < n; ++i) {
        check_host(host, gens[static_cast<std::size_t>(i)]);
        const int p = std::min(vector_prec(gens[static_cast<std::size_t>(i)]), host->prec());
        rows.push_back({truncate_vector(gens[static_cast<std::size_t>(i)], p), unit_vector(n, i, p)});
    }
    Echelon ech = echelonize(std::move(rows));
    std::vector<SeriesVector> out;
    for (auto& z : ech.zeros) out.push_back(std::move(z.tag));
    return out;
}

Lattice lattice_intersection(const Lattice& x, const Lattice& y) {
    if (x.host() != y.host()) fail(ErrorKind::HostMismatch, "lattices live in different modules");
    std::vector<SeriesVector> gens = x.basis();
    gens.insert(gens.end(), y.basis().begin(), y.basis().end());
    std::vector<SeriesVector> common;
    for (const auto& rel : syzygies(x.host(), gens)) {
        SeriesVector v = zero_vector(x.host()->rank(), vector_prec(rel));
        for (int i = 0; i < x.rank(); ++i) v = v + scale(rel[static_cast<std::size_t>(i)], x.basis()[static_cast<std::size_t>(i)]);
        common.push_back(std::move(v));
    }
    return lattice_reduce(x.host(), common);
}

ModulePtr lattice_as_module(const Lattice& lattice) {
    const int r = lattice.rank();
    if (r == 0) fail(ErrorKind::InvalidArgument, "zero lattice is not a module of positive rank");
    std::vector<SeriesVector> cols;
    for (const auto& g : lattice.basis()) {
        auto coords = lattice_coordinates(lattice, lattice.host()->apply_a(g));
        if (!coords) fail(ErrorKind::NotAStable, "lattice is not stable under a");
        cols.push_back(std::move(*coords));
    }
    return module_from_matrix(SeriesMatrix::from_columns(cols, r));
}

SeriesVector QuotientModule::project(const SeriesVector& x) const {
    const ReductionResult red = reduce(kernel, x);
    SeriesVector y;
    for (int c : complement) y.push_back(red.residual[static_cast<std::size_t>(c)]);
    return y;
}

SeriesVector QuotientModule::lift(const SeriesVector& y) const {
    SeriesVector x = zero_vector(kernel.host()->rank(), vector_prec(y));
    for (std::size_t i = 0; i < complement.size(); ++i) x[static_cast<std::size_t>(complement[i])] = y[i];
    return x;
}

QuotientModule quotient_module(const ModulePtr& e, const Lattice& lattice) {
    if (lattice.host() != e) fail(ErrorKind::HostMismatch, "lattice lives in a different module");
    if (!is_normal(lattice)) fail(ErrorKind::NotNormal, "quotient by a non-normal lattice would have b-torsion");
    if (!is_a_stable(lattice)) fail(ErrorKind::NotAStable, "quotient by a lattice that is not stable under a");
    QuotientModule q{nullptr, lattice, {}};
    std::vector<bool> pivot(static_cast<std::size_t>(e->rank()), false);
    for (const auto& p : lattice.pivots()) pivot[static_cast<std::size_t>(p.column)] = true;
    for (int c = 0; c < e->rank(); ++c)
        if (!pivot[static_cast<std::size_t>(c)]) q.complement.push_back(c);
    if (q.complement.empty()) return q;
    std::vector<SeriesVector> cols;
    for (int c : q.complement) cols.push_back(q.project(e->a_matrix().column(c)));
    q.module = module_from_matrix(SeriesMatrix::from_columns(cols, static_cast<int>(q.complement.size())));
    return q;
}

Lattice preimage(const QuotientModule& q, const Lattice& in_quotient) {
    std::vector<SeriesVector> gens = q.kernel.basis();
    for (const auto& g : in_quotient.basis()) gens.push_back(q.lift(g));
    return lattice_reduce(q.kernel.host(), gens);
}

Lattice project_lattice(const QuotientModule& q, const Lattice& lattice) {
    std::vector<SeriesVector> gens;
    for (const auto& g : lattice.basis()) gens.push_back(q.project(g));
    return lattice_reduce(q.module, gens);
}

}  // namespace abmod

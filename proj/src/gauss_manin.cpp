#include "abmod/gauss_manin.hpp"

#include "abmod/errors.hpp"
#include "abmod/recursion.hpp"

#include <map>
#include <random>
#include <sstream>
#include <tuple>

namespace abmod {

ModulePtr from_differential_system(const DiffSystem& sys, int prec) {
    const int k = sys.size;
    if (k < 1 || static_cast<int>(sys.entries.size()) != k) fail(ErrorKind::NonSquare, "system matrix is not square");
    for (const auto& row : sys.entries)
        if (static_cast<int>(row.size()) != k) fail(ErrorKind::NonSquare, "system matrix is not square");
    SeriesMatrix m(k, k, prec);
    for (int iter = 0; iter <= prec + 2; ++iter) {
        const ModulePtr cur = module_from_matrix(m);
        SeriesMatrix next(k, k, prec);
        for (int j = 0; j < k; ++j) {
            SeriesVector col = zero_vector(k, prec);
            for (int i = 0; i < k; ++i) {
                const auto& poly = sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                SeriesVector v = shift_up(unit_vector(k, i, prec), 1);
                for (std::size_t n = 0; n < poly.size(); ++n) {
                    if (n > 0) v = cur->apply_a(v);
                    if (poly[n] != 0) col = col + scale(TruncSeries::constant(poly[n], prec), v);
                }
            }
            next.set_column(j, col);
        }
        if (next.agrees_with(m) && iter > 0) return cur;
        m = next;
    }
    fail(ErrorKind::PrecisionExhausted, "fixed point for the system did not stabilize");
}

ModulePtr build_xi(const XiShape& shape, int prec) { return build_xi_tensor(shape.alphas, shape.n, shape.dim_v, prec); }

namespace {

// Equivariant maps E# -> Xi (one copy of V), each as a K x k series matrix.
std::vector<SeriesMatrix> hom_to_xi(const ModulePtr& pole, const XiShape& shape) {
    const int k = pole->rank();
    const XiShape single{shape.alphas, shape.n, 1};
    const int big = single.rank();
    const int prec = pole->prec();
    const ModulePtr xi = build_xi(single, prec);
    const QMatrix rxi = xi->a_matrix().coefficient(1);
    std::vector<QMatrix> r;
    for (int j = 0; j + 1 < prec; ++j) r.push_back(pole->a_matrix().coefficient(j + 1));
    const int steps = static_cast<int>(r.size());
    const RationalPolynomial cp(characteristic_polynomial(r[0]));
    for (const auto& root : cp.roots())
        for (const auto& alpha : shape.alphas) {
            const Rational t = root.value - alpha;
            if (is_integer(t) && t >= steps) fail(ErrorKind::PrecisionExhausted, "equivariance recursion resonates beyond precision");
        }
    const QMatrix ik = QMatrix::identity(big);
    std::vector<QMatrix> kr;
    for (const auto& rj : r) kr.push_back(kron(rj.transpose(), ik));
    auto lhs = [&](int t) {
        QMatrix s = rxi;
        for (int i = 0; i < big; ++i) s(i, i) += t;
        return kr[0] - kron(QMatrix::identity(k), s);
    };
    auto rhs = [&](int t, const std::vector<QMatrix>& prev) {
        QMatrix acc(big * k, prev[0].cols());
        for (int s = 0; s < t; ++s) acc -= kr[static_cast<std::size_t>(t - s)] * prev[static_cast<std::size_t>(s)];
        return acc;
    };
    const ParametricSolution sol = solve_recursion(big * k, steps, lhs, rhs);
    std::vector<SeriesMatrix> maps;
    for (int p = 0; p < sol.params; ++p) {
        SeriesMatrix phi(big, k, steps);
        for (int t = 0; t < steps; ++t)
            for (int j = 0; j < k; ++j)
                for (int i = 0; i < big; ++i) phi(i, j)[t] = sol.coeffs[static_cast<std::size_t>(t)](j * big + i, p);
        maps.push_back(phi);
    }
    return maps;
}

SeriesMatrix combine(const std::vector<SeriesMatrix>& maps, const std::vector<Rational>& c) {
    SeriesMatrix out = Rational(0) * maps[0];
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (c[i] != 0) out = out + c[i] * maps[i];
    return out;
}

// Stack of maps into Xi (x) V with V spanned by the maps.
SeriesMatrix stack(const std::vector<SeriesMatrix>& chosen, const XiShape& shape) {
    const int d = static_cast<int>(chosen.size());
    const int k = chosen[0].cols();
    const int na = static_cast<int>(shape.alphas.size());
    SeriesMatrix out(na * (shape.n + 1) * d, k, chosen[0].prec());
    for (int v = 0; v < d; ++v)
        for (int ai = 0; ai < na; ++ai)
            for (int j = 0; j <= shape.n; ++j)
                for (int c = 0; c < k; ++c)
                    out(xi_index(ai, v, j, shape.n, d), c) = chosen[static_cast<std::size_t>(v)](ai * (shape.n + 1) + j, c);
    return out;
}

int k_rank(const std::vector<SeriesMatrix>& chosen, const XiShape& shape) {
    const SeriesMatrix s = stack(chosen, shape);
    XiShape sh = shape;
    sh.dim_v = static_cast<int>(chosen.size());
    const ModulePtr target = build_xi(sh, s.prec());
    std::vector<SeriesVector> cols;
    for (int j = 0; j < s.cols(); ++j) cols.push_back(s.column(j));
    return lattice_reduce(target, cols).rank();
}

}  // namespace

Embedding embed_into_xi(const ModulePtr& e, std::uint64_t seed, int max_iter) {
    const Saturation sat = saturate(e, max_iter);
    const RationalPolynomial b = bernstein_from_saturation(sat, BernsteinMode::Minimal);
    if (!b.splits()) fail(ErrorKind::NotGeometric, "Bernstein polynomial does not split over Q");
    for (const auto& r : b.roots())
        if (r.value >= 0) fail(ErrorKind::NotGeometric, "Bernstein root " + to_string(r.value) + " is not negative");
    const int k = e->rank();
    const std::vector<Rational> classes = root_classes(b);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    int searched = 0;
    for (int n = 0; n < k; ++n) {
        const XiShape shape{classes, n, 1};
        std::vector<SeriesMatrix> homs;
        for (const auto& phi : hom_to_xi(sat.module, shape)) homs.push_back(phi * sat.inclusion);
        searched += static_cast<int>(homs.size());
        if (homs.empty()) continue;
        std::vector<SeriesMatrix> chosen;
        int current = 0;
        for (int attempt = 0; attempt < 3 * k + 3 && current < k; ++attempt) {
            std::vector<Rational> c(homs.size(), Rational(1));
            if (attempt > 0)
                for (auto& x : c) x = dist(rng);
            SeriesMatrix candidate = combine(homs, c);
            chosen.push_back(candidate);
            const int r = k_rank(chosen, shape);
            if (r > current) {
                current = r;
            } else {
                chosen.pop_back();
            }
        }
        if (current < k) continue;
        Embedding emb;
        emb.shape = XiShape{classes, n, static_cast<int>(chosen.size())};
        emb.map = stack(chosen, shape);
        emb.target = build_xi(emb.shape, emb.map.prec());
        emb.maps_searched = searched;
        emb.equivariant = true;
        for (int j = 0; j < k; ++j) {
            const SeriesVector img = emb.map.column(j);
            const SeriesVector lhs = emb.map * e->a_matrix().column(j);
            if (!vectors_agree(lhs, emb.target->apply_a(img))) emb.equivariant = false;
            const SeriesVector bimg = emb.map * shift_up(unit_vector(k, j, e->prec()), 1);
            if (!vectors_agree(bimg, shift_up(img, 1))) emb.equivariant = false;
        }
        emb.injective = k_rank(chosen, shape) == k;
        if (!emb.equivariant) fail(ErrorKind::ValidationFailed, "computed embedding is not a-equivariant");
        return emb;
    }
    fail(ErrorKind::NoEmbeddingFound, "no injective map into Xi^(N) (x) V for N in [0, " + std::to_string(k - 1) + "]");
}

namespace {

using TermKey = std::tuple<int, Rational, int, int>;  // component, alpha, m, j

Expansion from_map(const std::map<TermKey, Rational>& acc) {
    Expansion out;
    for (const auto& [key, c] : acc)
        if (c != 0) out.push_back({std::get<1>(key), std::get<2>(key), std::get<3>(key), c, std::get<0>(key)});
    return out;
}

void accumulate(std::map<TermKey, Rational>& acc, const ExpansionTerm& t, const Rational& scale = 1) {
    acc[{t.component, t.alpha, t.m, t.j}] += scale * t.coeff;
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Expansion expansion_times_s(const Expansion& x, int order) {
    std::map<TermKey, Rational> acc;
    for (auto t : x) {
        t.m += 1;
        if (t.m <= order) accumulate(acc, t);
    }
    return from_map(acc);
}

Expansion expansion_integrate(const Expansion& x, int order) {
    std::map<TermKey, Rational> acc;
    for (const auto& t : x) {
        if (t.m + 1 > order) continue;
        const Rational beta = t.alpha + t.m;
        Rational pw = 1 / beta;
        Rational fall = 1;  // j!/(j-i)!
        for (int i = 0; i <= t.j; ++i) {
            if (i > 0) {
                fall *= t.j - i + 1;
                pw /= beta;
            }
            const Rational c = (i % 2 == 0 ? 1 : -1) * fall * pw;
            accumulate(acc, {t.alpha, t.m + 1, t.j - i, t.coeff, t.component}, c);
        }
    }
    return from_map(acc);
}

Expansion expansion_add(const Expansion& x, const Expansion& y, const Rational& c) {
    std::map<TermKey, Rational> acc;
    for (const auto& t : x) accumulate(acc, t);
    for (const auto& t : y) accumulate(acc, t, c);
    return from_map(acc);
}

Expansion realize_expansion(const XiShape& shape, const SeriesVector& x, int order) {
    if (static_cast<int>(x.size()) != shape.rank()) fail(ErrorKind::HostMismatch, "vector does not match the Xi module");
    Expansion total;
    for (int ai = 0; ai < static_cast<int>(shape.alphas.size()); ++ai)
        for (int v = 0; v < shape.dim_v; ++v)
            for (int j = 0; j <= shape.n; ++j) {
                const Rational& alpha = shape.alphas[static_cast<std::size_t>(ai)];
                const TruncSeries& s = x[static_cast<std::size_t>(xi_index(ai, v, j, shape.n, shape.dim_v))];
                Rational aj = 1;
                for (int i = 0; i < j; ++i) aj *= alpha;
                Expansion base{{alpha, 0, j, aj / factorial(j), v}};
                for (int q = 0; q < s.prec() && q <= order; ++q) {
                    if (s[q] != 0) total = expansion_add(total, base, s[q]);
                    base = expansion_integrate(base, order);
                }
            }
    return total;
}

std::string expansion_to_string(const Expansion& x, int dim_v) {
    if (x.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : x) {
        const Rational e = t.alpha + t.m - 1;
        Rational c = t.coeff;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        if (c < 0) c = -c;
        first = false;
        std::vector<std::string> factors;
        if (e != 0) factors.push_back(e == 1 ? std::string("s") : "s^(" + to_string(e) + ")");
        if (t.j == 1) factors.push_back("log(s)");
        if (t.j > 1) factors.push_back("log(s)^" + std::to_string(t.j));
        if (dim_v > 1) factors.push_back("v" + std::to_string(t.component + 1));
        std::string body;
        for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
        if (c != 1 || body.empty()) {
            const std::string cs = to_string(c);
            out << (is_integer(c) ? cs : "(" + cs + ")");
            if (!body.empty()) out << "*";
        }
        out << body;
    }
    return out.str();
}

SingularReport singular_term_report(const Fresco& f, int max_iter) {
    const HigherBernstein hb = higher_bernstein(f, max_iter);
    SingularReport rep;
    rep.diagnostics = hb.diagnostics;
    for (const auto& cb : hb.classes) {
        SingularTerm t;
        t.alpha = cb.alpha;
        t.nilpotent_order = cb.nilpotent_order;
        for (const auto& r : cb.levels.back().poly.roots()) {
            t.roots.push_back(r.value);
            const Rational m = -r.value - cb.alpha;
            if (!is_integer(m) || m < 0) rep.diagnostics.push_back("root " + to_string(r.value) + " outside -alpha - N");
            t.m.push_back(static_cast<int>(m.get_num().get_si()));
        }
        t.log_power = cb.alpha == 1 ? t.nilpotent_order : t.nilpotent_order - 1;
        t.exponent = 2 * cb.alpha - 2;
        std::string term = "|s|^(" + to_string(t.exponent) + ")";
        if (t.log_power > 0) term += "*(Log|s|^2)^" + std::to_string(t.log_power);
        t.term = term;
        rep.classes.push_back(t);
    }
    return rep;
}

}  // namespace abmod

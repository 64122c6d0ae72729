#include "abmod/ab_module.hpp"

#include "abmod/errors.hpp"

namespace abmod {

AbModule::AbModule(SeriesMatrix a_matrix) : a_matrix_(std::move(a_matrix)), prec_(a_matrix_.prec()) {
    if (a_matrix_.rows() != a_matrix_.cols()) fail(ErrorKind::NonSquare, "a-matrix must be square");
    if (a_matrix_.rows() < 1) fail(ErrorKind::InvalidArgument, "module rank must be at least 1");
    a_matrix_ = a_matrix_.truncated(prec_);
}

SeriesVector AbModule::apply_a(const SeriesVector& x) const {
    if (static_cast<int>(x.size()) != rank()) fail(ErrorKind::HostMismatch, "element length differs from module rank");
    SeriesVector r = a_matrix_ * x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b2_derivative(x[i]);
    return r;
}

SeriesVector AbModule::apply(const AbOperator& op, const SeriesVector& x) const {
    // sum_q b^q Pi_q(a) x: apply the powers of a once and recombine.
    const int deg = op.a_degree();
    const int p = std::min(op.prec(), vector_prec(x));
    SeriesVector result = zero_vector(rank(), p);
    SeriesVector am_x = truncate_vector(x, p);
    for (int m = 0; m <= deg; ++m) {
        TruncSeries coeff(p);
        for (int q = 0; q < p; ++q) coeff[q] = op.coefficient(q, m);
        if (!coeff.is_zero()) result = result + scale(coeff, am_x);
        if (m < deg) am_x = apply_a(am_x);
    }
    return result;
}

bool AbModule::is_simple_pole() const {
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            if (a_matrix_(i, j).prec() > 0 && a_matrix_(i, j)[0] != 0) return false;
    return true;
}

ModulePtr module_from_matrix(SeriesMatrix mat) { return std::make_shared<const AbModule>(std::move(mat)); }

ModuleElement ModuleElement::basis(const ModulePtr& host, int j) { return {host, unit_vector(host->rank(), j, host->prec())}; }

ModuleElement ModuleElement::zero(const ModulePtr& host) { return {host, zero_vector(host->rank(), host->prec())}; }

namespace {

void same_host(const ModuleElement& x, const ModuleElement& y) {
    if (x.host != y.host) fail(ErrorKind::HostMismatch, "elements live in different modules");
}

}  // namespace

ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) {
    same_host(x, y);
    return {x.host, x.coords + y.coords};
}

ModuleElement operator-(const ModuleElement& x, const ModuleElement& y) {
    same_host(x, y);
    return {x.host, x.coords - y.coords};
}

ModuleElement operator*(const TruncSeries& s, const ModuleElement& x) { return {x.host, scale(s, x.coords)}; }

ModuleElement act(const AbOperator& op, const ModuleElement& x) {
    if (!x.host) fail(ErrorKind::HostMismatch, "element without host module");
    return {x.host, x.host->apply(op, x.coords)};
}

bool is_simple_pole(const AbModule& e) { return e.is_simple_pole(); }

ModulePtr build_xi_tensor(const std::vector<Rational>& alphas, int n, int dim_v, int prec) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "log depth N must be non-negative");
    if (dim_v < 1) fail(ErrorKind::InvalidArgument, "dim V must be at least 1");
    if (alphas.empty()) fail(ErrorKind::BadAlpha, "empty alpha list");
    for (const auto& a : alphas)
        if (a <= 0 || a > 1) fail(ErrorKind::BadAlpha, "alpha " + to_string(a) + " is not in (0,1]");
    const int rank = static_cast<int>(alphas.size()) * dim_v * (n + 1);
    SeriesMatrix m(rank, rank, prec);
    for (int ai = 0; ai < static_cast<int>(alphas.size()); ++ai)
        for (int v = 0; v < dim_v; ++v)
            for (int j = 0; j <= n; ++j) {
                const int col = xi_index(ai, v, j, n, dim_v);
                m(col, col) = TruncSeries::monomial(alphas[static_cast<std::size_t>(ai)], 1, prec);
                if (j > 0) m(xi_index(ai, v, j - 1, n, dim_v), col) = TruncSeries::monomial(alphas[static_cast<std::size_t>(ai)], 1, prec);
            }
    return module_from_matrix(std::move(m));
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
    int rank = 0;
    int prec = kDefaultPrecision * 1000;
    for (const auto& p : parts) {
        rank += p->rank();
        prec = std::min(prec, p->prec());
    }
    SeriesMatrix m(rank, rank, prec);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p->rank(); ++i)
            for (int j = 0; j < p->rank(); ++j) m(off + i, off + j) = p->a_matrix()(i, j).truncated(prec);
        off += p->rank();
    }
    return module_from_matrix(std::move(m));
}

}  // namespace abmod

#include "abmod/linalg.hpp"

#include "abmod/errors.hpp"

#include <utility>

namespace abmod {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::column(int j) const {
    QMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    QMatrix r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int l = 0; l < x.cols(); ++l) {
            const Rational& xil = x(i, l);
            if (xil == 0) continue;
            for (int j = 0; j < y.cols(); ++j)
                if (y(l, j) != 0) r(i, j) += xil * y(l, j);
        }
    return r;
}

QMatrix operator+(QMatrix x, const QMatrix& y) { return x += y; }
QMatrix operator-(QMatrix x, const QMatrix& y) { return x -= y; }
QMatrix operator*(QMatrix x, const Rational& c) { return x *= c; }

QMatrix hstack(const QMatrix& x, const QMatrix& y) {
    QMatrix r(x.rows(), x.cols() + y.cols());
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
        for (int j = 0; j < y.cols(); ++j) r(i, x.cols() + j) = y(i, j);
    }
    return r;
}

QMatrix vstack(const QMatrix& x, const QMatrix& y) {
    const int cols = x.rows() ? x.cols() : y.cols();
    QMatrix r(x.rows() + y.rows(), cols);
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < cols; ++j) r(i, j) = x(i, j);
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < cols; ++j) r(x.rows() + i, j) = y(i, j);
    return r;
}

QMatrix kron(const QMatrix& x, const QMatrix& y) {
    QMatrix r(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            if (x(i, j) == 0) continue;
            for (int k = 0; k < y.rows(); ++k)
                for (int l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
        }
    return r;
}

Rref rref(QMatrix m) {
    Rref out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (m(row, j) != 0) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

QMatrix nullspace(const QMatrix& m) {
    const Rref r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    const int nfree = m.cols() - static_cast<int>(r.pivots.size());
    QMatrix basis(m.cols(), nfree);
    int k = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis(f, k) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) basis(r.pivots[i], k) = -r.reduced(static_cast<int>(i), f);
        ++k;
    }
    return basis;
}

QMatrix left_nullspace(const QMatrix& m) { return nullspace(m.transpose()).transpose(); }

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& rhs) {
    const Rref r = rref(hstack(a, rhs));
    QMatrix x(a.cols(), rhs.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        const int p = r.pivots[i];
        if (p >= a.cols()) return std::nullopt;
        for (int j = 0; j < rhs.cols(); ++j) x(p, j) = r.reduced(static_cast<int>(i), a.cols() + j);
    }
    return x;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::NonSquare, "inverse of a non-square matrix");
    auto x = solve(m, QMatrix::identity(m.rows()));
    if (!x || rank(m) < m.rows()) fail(ErrorKind::InvalidArgument, "singular matrix");
    return *x;
}

std::vector<Rational> characteristic_polynomial(const QMatrix& a) {
    // Faddeev-LeVerrier: exact over Q since the divisions are by integers.
    const int n = a.rows();
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1;
    QMatrix mk(n, n);
    for (int k = 1; k <= n; ++k) {
        QMatrix next = a * mk;
        for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        mk = std::move(next);
        const QMatrix am = a * mk;
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += am(i, i);
        c[static_cast<std::size_t>(n - k)] = -tr / k;
    }
    return c;
}

std::vector<Rational> minimal_polynomial(const QMatrix& a) {
    const int n = a.rows();
    if (n == 0) return {Rational(1)};
    // Krylov sequence of vec(A^i) until the first linear dependency.
    std::vector<QMatrix> powers{QMatrix::identity(n)};
    for (int d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * a);
        QMatrix krylov(n * n, d);
        QMatrix target(n * n, 1);
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) krylov(r * n + s, i) = powers[static_cast<std::size_t>(i)](r, s);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) target(r * n + s, 0) = powers.back()(r, s);
        if (auto x = solve(krylov, target)) {
            std::vector<Rational> c(static_cast<std::size_t>(d + 1));
            for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = -(*x)(i, 0);
            c[static_cast<std::size_t>(d)] = 1;
            return c;
        }
    }
    return characteristic_polynomial(a);
}

}  // namespace abmod

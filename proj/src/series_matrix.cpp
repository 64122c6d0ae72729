#include "abmod/series_matrix.hpp"

#include <algorithm>
#include <climits>

namespace abmod {

SeriesMatrix::SeriesMatrix(int rows, int cols, int prec)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), TruncSeries(prec)) {}

SeriesMatrix SeriesMatrix::identity(int n, int prec) {
    SeriesMatrix m(n, n, prec);
    for (int i = 0; i < n; ++i) m(i, i) = TruncSeries::constant(1, prec);
    return m;
}

SeriesMatrix SeriesMatrix::from_coefficients(const std::vector<QMatrix>& coeffs, int rows, int cols, int prec) {
    SeriesMatrix m(rows, cols, prec);
    for (int n = 0; n < prec && n < static_cast<int>(coeffs.size()); ++n)
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j)[n] = coeffs[static_cast<std::size_t>(n)](i, j);
    return m;
}

SeriesMatrix SeriesMatrix::from_columns(const std::vector<SeriesVector>& cols, int rows) {
    SeriesMatrix m;
    m.rows_ = rows;
    m.cols_ = static_cast<int>(cols.size());
    m.data_.resize(static_cast<std::size_t>(m.rows_ * m.cols_));
    for (int j = 0; j < m.cols_; ++j) m.set_column(j, cols[static_cast<std::size_t>(j)]);
    return m;
}

int SeriesMatrix::prec() const {
    int p = INT_MAX;
    for (const auto& s : data_) p = std::min(p, s.prec());
    return data_.empty() ? 0 : p;
}

SeriesVector SeriesMatrix::column(int j) const {
    SeriesVector v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

void SeriesMatrix::set_column(int j, const SeriesVector& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[static_cast<std::size_t>(i)];
}

QMatrix SeriesMatrix::coefficient(int n) const {
    QMatrix q(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const auto& s = (*this)(i, j);
            if (n < s.prec()) q(i, j) = s[n];
        }
    return q;
}

SeriesMatrix SeriesMatrix::truncated(int prec) const {
    SeriesMatrix m = *this;
    for (auto& s : m.data_) s = s.truncated(prec);
    return m;
}

SeriesMatrix SeriesMatrix::derivative() const {
    SeriesMatrix m = *this;
    for (auto& s : m.data_) s = s.derivative();
    return m;
}

SeriesMatrix SeriesMatrix::transpose() const {
    SeriesMatrix m(cols_, rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool SeriesMatrix::agrees_with(const SeriesMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!data_[i].agrees_with(other.data_[i])) return false;
    return true;
}

SeriesMatrix operator*(const SeriesMatrix& x, const SeriesMatrix& y) {
    const int p = std::min(x.prec(), y.prec());
    SeriesMatrix r(x.rows(), y.cols(), p);
    for (int i = 0; i < x.rows(); ++i)
        for (int l = 0; l < x.cols(); ++l) {
            if (x(i, l).is_zero()) continue;
            for (int j = 0; j < y.cols(); ++j)
                if (!y(l, j).is_zero()) r(i, j) += x(i, l) * y(l, j);
        }
    return r;
}

SeriesVector operator*(const SeriesMatrix& m, const SeriesVector& v) {
    const int p = std::min(m.prec(), vector_prec(v));
    SeriesVector r(static_cast<std::size_t>(m.rows()), TruncSeries(p));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const auto& vj = v[static_cast<std::size_t>(j)];
            if (!m(i, j).is_zero() && !vj.is_zero()) r[static_cast<std::size_t>(i)] += m(i, j) * vj;
        }
    return r;
}

SeriesMatrix operator+(const SeriesMatrix& x, const SeriesMatrix& y) {
    SeriesMatrix r = x;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r(i, j) += y(i, j);
    return r;
}

SeriesMatrix operator-(const SeriesMatrix& x, const SeriesMatrix& y) {
    SeriesMatrix r = x;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r(i, j) -= y(i, j);
    return r;
}

SeriesMatrix operator*(const Rational& c, const SeriesMatrix& m) {
    SeriesMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) *= c;
    return r;
}

SeriesVector operator+(const SeriesVector& x, const SeriesVector& y) {
    SeriesVector r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

SeriesVector operator-(const SeriesVector& x, const SeriesVector& y) {
    SeriesVector r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

SeriesVector scale(const TruncSeries& s, const SeriesVector& v) {
    SeriesVector r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(s * x);
    return r;
}

SeriesVector zero_vector(int n, int prec) { return SeriesVector(static_cast<std::size_t>(n), TruncSeries(prec)); }

SeriesVector unit_vector(int n, int j, int prec) {
    SeriesVector v = zero_vector(n, prec);
    v[static_cast<std::size_t>(j)] = TruncSeries::constant(1, prec);
    return v;
}

int vector_prec(const SeriesVector& v) {
    int p = INT_MAX;
    for (const auto& s : v) p = std::min(p, s.prec());
    return v.empty() ? INT_MAX : p;
}

bool vector_is_zero(const SeriesVector& v) {
    return std::all_of(v.begin(), v.end(), [](const TruncSeries& s) { return s.is_zero(); });
}

bool vectors_agree(const SeriesVector& x, const SeriesVector& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].agrees_with(y[i])) return false;
    return true;
}

SeriesVector truncate_vector(const SeriesVector& v, int prec) {
    SeriesVector r;
    r.reserve(v.size());
    for (const auto& s : v) r.push_back(s.truncated(prec));
    return r;
}

SeriesVector shift_up(const SeriesVector& v, int n) {
    SeriesVector r;
    r.reserve(v.size());
    for (const auto& s : v) r.push_back(s.shifted_up(n));
    return r;
}

SeriesVector shift_down(const SeriesVector& v, int n) {
    SeriesVector r;
    r.reserve(v.size());
    for (const auto& s : v) r.push_back(s.shifted_down(n));
    return r;
}

TruncSeries b2_derivative(const TruncSeries& s) {
    TruncSeries r(s.prec());
    for (int n = 2; n < s.prec(); ++n) r[n] = (n - 1) * s[n - 1];
    return r;
}

}  // namespace abmod

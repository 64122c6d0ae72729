#pragma once

#include "abmod/rational.hpp"

#include <optional>
#include <vector>

namespace abmod {

// Dense matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    QMatrix transpose() const;
    QMatrix column(int j) const;
    bool is_zero() const;

    QMatrix& operator+=(const QMatrix& other);
    QMatrix& operator-=(const QMatrix& other);
    QMatrix& operator*=(const Rational& c);

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);
QMatrix operator+(QMatrix x, const QMatrix& y);
QMatrix operator-(QMatrix x, const QMatrix& y);
QMatrix operator*(QMatrix x, const Rational& c);

QMatrix hstack(const QMatrix& x, const QMatrix& y);
QMatrix vstack(const QMatrix& x, const QMatrix& y);
QMatrix kron(const QMatrix& x, const QMatrix& y);

struct Rref {
    QMatrix reduced;
    std::vector<int> pivots;  // pivot column of each nonzero row
};

Rref rref(QMatrix m);
int rank(const QMatrix& m);
// Columns span the right kernel {v : m v = 0}.
QMatrix nullspace(const QMatrix& m);
// Rows span the left kernel {w : w m = 0}.
QMatrix left_nullspace(const QMatrix& m);
// Some X with a X = rhs, or nullopt when inconsistent.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& rhs);
QMatrix inverse(const QMatrix& m);

// Ascending, monic coefficient lists.
std::vector<Rational> characteristic_polynomial(const QMatrix& m);
std::vector<Rational> minimal_polynomial(const QMatrix& m);

}  // namespace abmod

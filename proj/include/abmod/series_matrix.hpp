#pragma once

#include "abmod/linalg.hpp"
#include "abmod/series.hpp"

#include <vector>

namespace abmod {

using SeriesVector = std::vector<TruncSeries>;

// Matrix of truncated series (row-major). Column j of an a-matrix holds the
// coordinates of a*e_j.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(int rows, int cols, int prec);

    static SeriesMatrix identity(int n, int prec);
    // sum_n coeffs[n] b^n
    static SeriesMatrix from_coefficients(const std::vector<QMatrix>& coeffs, int rows, int cols, int prec);
    static SeriesMatrix from_columns(const std::vector<SeriesVector>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // Smallest precision among the entries.
    int prec() const;

    TruncSeries& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const TruncSeries& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    SeriesVector column(int j) const;
    void set_column(int j, const SeriesVector& v);
    // Coefficient matrix of b^n.
    QMatrix coefficient(int n) const;
    SeriesMatrix truncated(int prec) const;
    SeriesMatrix derivative() const;
    SeriesMatrix transpose() const;
    bool agrees_with(const SeriesMatrix& other) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<TruncSeries> data_;
};

SeriesMatrix operator*(const SeriesMatrix& x, const SeriesMatrix& y);
SeriesVector operator*(const SeriesMatrix& m, const SeriesVector& v);
SeriesMatrix operator+(const SeriesMatrix& x, const SeriesMatrix& y);
SeriesMatrix operator-(const SeriesMatrix& x, const SeriesMatrix& y);
SeriesMatrix operator*(const Rational& c, const SeriesMatrix& m);

SeriesVector operator+(const SeriesVector& x, const SeriesVector& y);
SeriesVector operator-(const SeriesVector& x, const SeriesVector& y);
SeriesVector scale(const TruncSeries& s, const SeriesVector& v);
SeriesVector zero_vector(int n, int prec);
SeriesVector unit_vector(int n, int j, int prec);
int vector_prec(const SeriesVector& v);
bool vector_is_zero(const SeriesVector& v);
bool vectors_agree(const SeriesVector& x, const SeriesVector& y);
SeriesVector truncate_vector(const SeriesVector& v, int prec);
// b^n * v keeping precision
SeriesVector shift_up(const SeriesVector& v, int n);
// exact division by b^n
SeriesVector shift_down(const SeriesVector& v, int n);
// b^2 * d/db, coefficientwise; keeps the input precision (the result is in fact known one order further).
TruncSeries b2_derivative(const TruncSeries& s);

}  // namespace abmod

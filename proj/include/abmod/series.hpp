#pragma once

#include "abmod/rational.hpp"

#include <string>
#include <vector>

namespace abmod {

inline constexpr int kDefaultPrecision = 32;

/// Truncated formal power series in b over Q: the coefficients of b^0..b^{prec-1}
/// are known exactly, everything from b^prec on is unknown.
///
/// Arithmetic follows the absolute-precision rule: the result of a binary
/// operation is known to the smaller of the two precisions, differentiation
/// loses one order and division by b^n loses n orders. Equality is agreement
/// up to the shared precision.
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int prec);
    TruncSeries(std::vector<Rational> coeffs, int prec);

    static TruncSeries constant(const Rational& c, int prec);
    static TruncSeries monomial(const Rational& c, int power, int prec);

    int prec() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of b^i; zero for i >= prec is NOT implied, callers must stay below prec().
    const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    // Index of the first nonzero coefficient, prec() if none is known.
    int valuation() const;
    bool is_zero() const { return valuation() == prec(); }
    bool is_unit() const { return prec() > 0 && coeffs_[0] != 0; }

    TruncSeries truncated(int prec) const;
    TruncSeries derivative() const;
    TruncSeries inverse() const;
    // Multiplication by b^n; the precision is kept (the top n known orders are dropped).
    TruncSeries shifted_up(int n) const;
    // Exact division by b^n; throws PrecisionExhausted if a low coefficient is nonzero.
    TruncSeries shifted_down(int n) const;

    bool agrees_with(const TruncSeries& other) const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const Rational& c);

    std::string to_string(char var = 'b') const;

private:
    std::vector<Rational> coeffs_;
};

TruncSeries operator+(TruncSeries x, const TruncSeries& y);
TruncSeries operator-(TruncSeries x, const TruncSeries& y);
TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);
TruncSeries operator*(TruncSeries x, const Rational& c);
TruncSeries operator*(const Rational& c, TruncSeries x);
inline bool operator==(const TruncSeries& x, const TruncSeries& y) { return x.agrees_with(y); }

// Cauchy product truncated at min(x.prec, y.prec).
TruncSeries series_mul(const TruncSeries& x, const TruncSeries& y);
TruncSeries series_invert(const TruncSeries& x);
TruncSeries series_derivative(const TruncSeries& x);

// Product whose precision is what is actually determined by the inputs,
// min(px + val(y), py + val(x)), capped at `cap`.
TruncSeries mul_tracked(const TruncSeries& x, const TruncSeries& y, int cap);

// Polynomial (exact) coefficient list -> series at precision prec.
TruncSeries from_polynomial(const std::vector<Rational>& coeffs, int prec);

}  // namespace abmod

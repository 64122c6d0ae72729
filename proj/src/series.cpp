#include "abmod/series.hpp"

#include "abmod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace abmod {

TruncSeries::TruncSeries(int prec) : coeffs_(static_cast<std::size_t>(std::max(prec, 0))) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int prec) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(std::max(prec, 0)));
}

TruncSeries TruncSeries::constant(const Rational& c, int prec) {
    TruncSeries s(prec);
    if (prec > 0) s.coeffs_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(const Rational& c, int power, int prec) {
    TruncSeries s(prec);
    if (power >= 0 && power < prec) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
}

int TruncSeries::valuation() const {
    for (int i = 0; i < prec(); ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    return prec();
}

TruncSeries TruncSeries::truncated(int p) const {
    TruncSeries s = *this;
    if (p < prec()) s.coeffs_.resize(static_cast<std::size_t>(std::max(p, 0)));
    return s;
}

TruncSeries TruncSeries::derivative() const {
    TruncSeries d(prec() - 1);
    for (int k = 0; k + 1 < prec(); ++k) d.coeffs_[static_cast<std::size_t>(k)] = (k + 1) * coeffs_[static_cast<std::size_t>(k + 1)];
    return d;
}

TruncSeries TruncSeries::inverse() const {
    if (!is_unit()) fail(ErrorKind::NotAUnit, "series " + to_string() + " has zero constant term");
    const int p = prec();
    TruncSeries inv(p);
    const Rational c0inv = 1 / coeffs_[0];
    inv.coeffs_[0] = c0inv;
    for (int n = 1; n < p; ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * inv.coeffs_[static_cast<std::size_t>(n - j)];
        inv.coeffs_[static_cast<std::size_t>(n)] = -acc * c0inv;
    }
    return inv;
}

TruncSeries TruncSeries::shifted_up(int n) const {
    TruncSeries s(prec());
    for (int i = 0; i + n < prec(); ++i) s.coeffs_[static_cast<std::size_t>(i + n)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
}

TruncSeries TruncSeries::shifted_down(int n) const {
    for (int i = 0; i < std::min(n, prec()); ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0)
            fail(ErrorKind::PrecisionExhausted, "series " + to_string() + " is not divisible by b^" + std::to_string(n));
    TruncSeries s(prec() - n);
    for (int i = 0; i < s.prec(); ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i + n)];
    return s;
}

bool TruncSeries::agrees_with(const TruncSeries& other) const {
    const int p = std::min(prec(), other.prec());
    for (int i = 0; i < p; ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != other.coeffs_[static_cast<std::size_t>(i)]) return false;
    return true;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    if (other.prec() < prec()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
    if (other.prec() < prec()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string TruncSeries::to_string(char var) const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < prec(); ++i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << var;
        if (i > 1) out << "^" << i;
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << prec() << ")";
    return out.str();
}

TruncSeries operator+(TruncSeries x, const TruncSeries& y) { return x += y; }
TruncSeries operator-(TruncSeries x, const TruncSeries& y) { return x -= y; }
TruncSeries operator*(TruncSeries x, const Rational& c) { return x *= c; }
TruncSeries operator*(const Rational& c, TruncSeries x) { return x *= c; }

namespace {

TruncSeries cauchy(const TruncSeries& x, const TruncSeries& y, int p) {
    TruncSeries r(p);
    const int vx = x.valuation();
    const int vy = y.valuation();
    for (int i = vx; i < std::min(p, x.prec()); ++i) {
        const Rational& xi = x[i];
        if (xi == 0) continue;
        for (int j = vy; i + j < p && j < y.prec(); ++j)
            if (y[j] != 0) r[i + j] += xi * y[j];
    }
    return r;
}

}  // namespace

TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) { return cauchy(x, y, std::min(x.prec(), y.prec())); }

TruncSeries series_mul(const TruncSeries& x, const TruncSeries& y) { return x * y; }
TruncSeries series_invert(const TruncSeries& x) { return x.inverse(); }
TruncSeries series_derivative(const TruncSeries& x) { return x.derivative(); }

TruncSeries mul_tracked(const TruncSeries& x, const TruncSeries& y, int cap) {
    const int p = std::min({x.prec() + y.valuation(), y.prec() + x.valuation(), cap});
    return cauchy(x, y, p);
}

TruncSeries from_polynomial(const std::vector<Rational>& coeffs, int prec) {
    TruncSeries s(prec);
    for (int i = 0; i < prec && i < static_cast<int>(coeffs.size()); ++i) s[i] = coeffs[static_cast<std::size_t>(i)];
    return s;
}

}  // namespace abmod

#include "abmod/polynomial.hpp"

#include "abmod/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace abmod {

namespace {

void trim(std::vector<Rational>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(0);
}

void make_monic(std::vector<Rational>& c) {
    trim(c);
    if (c.back() == 0) fail(ErrorKind::InvalidArgument, "zero polynomial has no monic form");
    const Rational lead = c.back();
    for (auto& x : c) x /= lead;
}

// Divides by (x - r) if r is a root; returns true on success.
bool divide_root(std::vector<Rational>& c, const Rational& r) {
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) return false;
    std::vector<Rational> q(static_cast<std::size_t>(n));
    Rational acc = 0;
    for (int i = n; i >= 1; --i) {
        acc = acc * r + c[static_cast<std::size_t>(i)];
        q[static_cast<std::size_t>(i - 1)] = acc;
    }
    if (acc * r + c[0] != 0) return false;
    c = std::move(q);
    return true;
}

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    if (n == 0 || n > Integer("1000000000000")) return out;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    out.insert(out.end(), large.rbegin(), large.rend());
    return out;
}

std::string linear_factor(const Rational& root) {
    if (root == 0) return "x";
    const Rational c = -root;
    return c > 0 ? "x + " + to_string(c) : "x - " + to_string(-c);
}

}  // namespace

std::vector<Rational> poly_mul(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (x.empty() || y.empty()) return {};
    std::vector<Rational> r(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

RationalPolynomial::RationalPolynomial() : coeffs_{Rational(1)}, unsplit_{Rational(1)} {}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs, const std::vector<Rational>& hints)
    : coeffs_(std::move(coeffs)) {
    make_monic(coeffs_);
    std::vector<Rational> rest = coeffs_;
    std::map<Rational, int> found;
    auto strip = [&](const Rational& r) {
        while (divide_root(rest, r)) ++found[r];
    };
    strip(0);
    for (const auto& h : hints) strip(h);
    if (rest.size() > 1) {
        // Rational root theorem on the integer-normalized remainder.
        Integer lcm = 1;
        for (const auto& c : rest) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Integer> ints;
        for (const auto& c : rest) ints.push_back(Integer(c * lcm));
        const auto num_div = divisors(ints.front());
        const auto den_div = divisors(ints.back());
        std::set<Rational> candidates;
        for (const auto& p : num_div)
            for (const auto& q : den_div) {
                Rational r(p, q);
                r.canonicalize();
                candidates.insert(r);
                candidates.insert(-r);
            }
        for (const auto& r : candidates) strip(r);
    }
    for (const auto& [value, mult] : found) roots_.push_back({value, mult});
    make_monic(rest);
    unsplit_ = std::move(rest);
}

RationalPolynomial RationalPolynomial::from_roots(const std::vector<PolynomialRoot>& roots) {
    std::vector<Rational> c{Rational(1)};
    std::vector<Rational> hints;
    for (const auto& r : roots)
        for (int i = 0; i < r.mult; ++i) c = poly_mul(c, {-r.value, Rational(1)});
    for (const auto& r : roots) hints.push_back(r.value);
    return RationalPolynomial(std::move(c), hints);
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& shift) const {
    // Horner in the polynomial ring: p(x + s).
    std::vector<Rational> acc{Rational(0)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = poly_mul(acc, {shift, Rational(1)});
        acc[0] += *it;
    }
    std::vector<Rational> hints;
    for (const auto& r : roots_) hints.push_back(r.value - shift);
    return RationalPolynomial(std::move(acc), hints);
}

RationalPolynomial RationalPolynomial::class_part(const Rational& alpha) const {
    std::vector<PolynomialRoot> keep;
    for (const auto& r : roots_)
        if (class_representative(r.value) == alpha) keep.push_back(r);
    return from_roots(keep);
}

std::string RationalPolynomial::to_string() const {
    if (degree() == 0) return "1";
    std::vector<std::string> parts;
    const bool single = roots_.size() == 1 && splits() && roots_[0].mult == 1;
    for (const auto& r : roots_) {
        std::string f = linear_factor(r.value);
        if (!single && r.value != 0) f = "(" + f + ")";
        if (r.mult > 1) f += "^" + std::to_string(r.mult);
        parts.push_back(f);
    }
    if (!splits()) {
        RationalPolynomial u;
        u.coeffs_ = unsplit_;
        parts.push_back("(" + u.expanded_string() + ")");
    }
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

std::string RationalPolynomial::expanded_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) out << mag.get_str() << (i > 0 ? "*" : "");
        if (i > 0) out << "x";
        if (i > 1) out << "^" << i;
    }
    if (first) out << "0";
    return out.str();
}

RationalPolynomial operator*(const RationalPolynomial& x, const RationalPolynomial& y) {
    std::vector<Rational> hints;
    for (const auto& r : x.roots()) hints.push_back(r.value);
    for (const auto& r : y.roots()) hints.push_back(r.value);
    return RationalPolynomial(poly_mul(x.coeffs(), y.coeffs()), hints);
}

}  // namespace abmod

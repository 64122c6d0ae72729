#pragma once

#include "abmod/rational.hpp"

#include <string>
#include <vector>

namespace abmod {

struct PolynomialRoot {
    Rational value;
    int mult = 1;
    friend bool operator==(const PolynomialRoot&, const PolynomialRoot&) = default;
};

/// Monic polynomial in x over Q together with its rational roots. Whatever does
/// not split over Q is kept as a monic unsplit factor rather than approximated.
class RationalPolynomial {
public:
    RationalPolynomial();  // the constant 1
    // Ascending coefficients; normalized to monic. Roots are searched with the
    // rational root theorem plus the optional hint values.
    explicit RationalPolynomial(std::vector<Rational> coeffs, const std::vector<Rational>& hints = {});

    static RationalPolynomial from_roots(const std::vector<PolynomialRoot>& roots);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Sorted by increasing value.
    const std::vector<PolynomialRoot>& roots() const { return roots_; }
    // Monic cofactor without rational roots; {1} when the polynomial splits.
    const std::vector<Rational>& unsplit() const { return unsplit_; }
    bool splits() const { return unsplit_.size() == 1; }

    Rational evaluate(const Rational& x) const;
    // x -> p(x + shift)
    RationalPolynomial shifted(const Rational& shift) const;
    // Product of the (x - r)^m factors whose root lies in the given class
    // (roots in -alpha - Z).
    RationalPolynomial class_part(const Rational& alpha) const;

    // Factored rendering in the usual notation: "(x + 1/2)^2", "x + 1/3".
    std::string to_string() const;
    std::string expanded_string() const;

    friend bool operator==(const RationalPolynomial& x, const RationalPolynomial& y) { return x.coeffs_ == y.coeffs_; }

private:
    std::vector<Rational> coeffs_;
    std::vector<PolynomialRoot> roots_;
    std::vector<Rational> unsplit_;
};

RationalPolynomial operator*(const RationalPolynomial& x, const RationalPolynomial& y);

// Raw helpers on ascending coefficient vectors.
std::vector<Rational> poly_mul(const std::vector<Rational>& x, const std::vector<Rational>& y);

}  // namespace abmod

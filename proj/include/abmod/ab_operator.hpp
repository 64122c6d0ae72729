#pragma once

#include "abmod/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace abmod {

/// Element of the operator algebra generated by a and b with ab - ba = b^2,
/// completed in b. Stored in right-normal form  sum_q b^q Pi_q(a): the b-powers
/// stand to the left of polynomials in a. Terms with q >= prec are dropped;
/// the a-degree is exact and bounded by a_degree_bound (exceeding it throws).
class AbOperator {
public:
    AbOperator(int prec, int a_degree_bound);

    static AbOperator scalar(const Rational& c, int prec, int a_degree_bound);
    static AbOperator generator_a(int prec, int a_degree_bound);
    static AbOperator generator_b(int prec, int a_degree_bound);
    static AbOperator from_series(const TruncSeries& s, int a_degree_bound);

    int prec() const { return static_cast<int>(terms_.size()); }
    int a_degree_bound() const { return a_degree_bound_; }
    int a_degree() const;
    // Polynomial in a multiplying b^q (ascending coefficients, possibly empty).
    const std::vector<Rational>& poly(int q) const { return terms_[static_cast<std::size_t>(q)]; }
    Rational coefficient(int q, int m) const;
    void add_term(int q, int m, const Rational& c);

    bool is_zero() const;

    // a * this and b^n * this, both in normal form.
    AbOperator left_mul_a() const;
    AbOperator left_mul_b_power(int n) const;

    AbOperator& operator+=(const AbOperator& other);
    AbOperator& operator-=(const AbOperator& other);
    AbOperator& operator*=(const Rational& c);

    // sum_m T_m(b) a^m: with b-powers already on the left this is a regrouping.
    std::vector<std::pair<int, TruncSeries>> to_left_form() const;

    // "b^2*a + 2*b^3"
    std::string to_string() const;

    friend bool operator==(const AbOperator& x, const AbOperator& y);

private:
    void check_degree(int q) const;

    std::vector<std::vector<Rational>> terms_;
    int a_degree_bound_;
};

AbOperator operator+(AbOperator x, const AbOperator& y);
AbOperator operator-(AbOperator x, const AbOperator& y);
AbOperator op_mul(const AbOperator& x, const AbOperator& y);
inline AbOperator operator*(const AbOperator& x, const AbOperator& y) { return op_mul(x, y); }

// One letter of a word in the generators: a, b, or a series S(b) (scalars are
// constant series).
struct Letter {
    enum class Kind { A, B, Series };
    Kind kind = Kind::A;
    TruncSeries series;

    static Letter a() { return {Kind::A, {}}; }
    static Letter b() { return {Kind::B, {}}; }
    static Letter of_series(TruncSeries s) { return {Kind::Series, std::move(s)}; }
};

// Right-normal form of the product of the letters, read left to right.
AbOperator op_normalize(const std::vector<Letter>& word, int prec, int a_degree_bound);

std::vector<std::pair<int, TruncSeries>> op_to_left_form(const AbOperator& x);

inline int default_a_degree_bound(int rank) { return 2 * rank + 4; }

}  // namespace abmod

#include "abmod/ab_operator.hpp"

#include "abmod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace abmod {

namespace {

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

AbOperator::AbOperator(int prec, int a_degree_bound)
    : terms_(static_cast<std::size_t>(std::max(prec, 0))), a_degree_bound_(a_degree_bound) {}

AbOperator AbOperator::scalar(const Rational& c, int prec, int bound) {
    AbOperator x(prec, bound);
    x.add_term(0, 0, c);
    return x;
}

AbOperator AbOperator::generator_a(int prec, int bound) {
    AbOperator x(prec, bound);
    x.add_term(0, 1, 1);
    return x;
}

AbOperator AbOperator::generator_b(int prec, int bound) {
    AbOperator x(prec, bound);
    x.add_term(1, 0, 1);
    return x;
}

AbOperator AbOperator::from_series(const TruncSeries& s, int bound) {
    AbOperator x(s.prec(), bound);
    for (int q = 0; q < s.prec(); ++q) x.add_term(q, 0, s[q]);
    return x;
}

int AbOperator::a_degree() const {
    int d = -1;
    for (const auto& p : terms_) d = std::max(d, static_cast<int>(p.size()) - 1);
    return d;
}

Rational AbOperator::coefficient(int q, int m) const {
    const auto& p = terms_[static_cast<std::size_t>(q)];
    return m < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(m)] : Rational(0);
}

void AbOperator::check_degree(int q) const {
    const int deg = static_cast<int>(terms_[static_cast<std::size_t>(q)].size()) - 1;
    if (deg > a_degree_bound_)
        fail(ErrorKind::DegreeBoundExceeded,
             "a-degree " + std::to_string(deg) + " exceeds bound " + std::to_string(a_degree_bound_));
}

void AbOperator::add_term(int q, int m, const Rational& c) {
    if (q < 0 || q >= prec() || c == 0) return;
    auto& p = terms_[static_cast<std::size_t>(q)];
    if (static_cast<int>(p.size()) <= m) p.resize(static_cast<std::size_t>(m + 1));
    p[static_cast<std::size_t>(m)] += c;
    trim(p);
    check_degree(q);
}

bool AbOperator::is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& p) { return p.empty(); });
}

AbOperator AbOperator::left_mul_a() const {
    // a b^q = b^q (a + q b)
    AbOperator r(prec(), a_degree_bound_);
    for (int q = 0; q < prec(); ++q) {
        const auto& p = terms_[static_cast<std::size_t>(q)];
        for (int m = 0; m < static_cast<int>(p.size()); ++m) {
            if (p[static_cast<std::size_t>(m)] == 0) continue;
            r.add_term(q, m + 1, p[static_cast<std::size_t>(m)]);
            r.add_term(q + 1, m, q * p[static_cast<std::size_t>(m)]);
        }
    }
    return r;
}

AbOperator AbOperator::left_mul_b_power(int n) const {
    AbOperator r(prec(), a_degree_bound_);
    for (int q = 0; q + n < prec(); ++q) r.terms_[static_cast<std::size_t>(q + n)] = terms_[static_cast<std::size_t>(q)];
    return r;
}

AbOperator& AbOperator::operator+=(const AbOperator& other) {
    if (other.prec() < prec()) terms_.resize(other.terms_.size());
    for (int q = 0; q < prec(); ++q) {
        const auto& p = other.terms_[static_cast<std::size_t>(q)];
        for (int m = 0; m < static_cast<int>(p.size()); ++m) add_term(q, m, p[static_cast<std::size_t>(m)]);
    }
    return *this;
}

AbOperator& AbOperator::operator-=(const AbOperator& other) {
    AbOperator neg = other;
    neg *= -1;
    return *this += neg;
}

AbOperator& AbOperator::operator*=(const Rational& c) {
    for (auto& p : terms_) {
        for (auto& x : p) x *= c;
        trim(p);
    }
    return *this;
}

std::vector<std::pair<int, TruncSeries>> AbOperator::to_left_form() const {
    std::vector<std::pair<int, TruncSeries>> out;
    for (int m = a_degree(); m >= 0; --m) {
        TruncSeries t(prec());
        for (int q = 0; q < prec(); ++q) t[q] = coefficient(q, m);
        out.emplace_back(m, std::move(t));
    }
    return out;
}

std::string AbOperator::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int q = 0; q < prec(); ++q) {
        const auto& p = terms_[static_cast<std::size_t>(q)];
        for (int m = static_cast<int>(p.size()) - 1; m >= 0; --m) {
            const Rational& c = p[static_cast<std::size_t>(m)];
            if (c == 0) continue;
            const Rational mag = abs(c);
            if (first)
                out << (c < 0 ? "-" : "");
            else
                out << (c < 0 ? " - " : " + ");
            first = false;
            std::vector<std::string> factors;
            if (mag != 1 || (q == 0 && m == 0)) factors.push_back(mag.get_str());
            if (q == 1) factors.emplace_back("b");
            if (q > 1) factors.push_back("b^" + std::to_string(q));
            if (m == 1) factors.emplace_back("a");
            if (m > 1) factors.push_back("a^" + std::to_string(m));
            for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
        }
    }
    if (first) out << "0";
    return out.str();
}

bool operator==(const AbOperator& x, const AbOperator& y) {
    const int p = std::min(x.prec(), y.prec());
    for (int q = 0; q < p; ++q)
        if (x.poly(q) != y.poly(q)) return false;
    return true;
}

AbOperator operator+(AbOperator x, const AbOperator& y) { return x += y; }
AbOperator operator-(AbOperator x, const AbOperator& y) { return x -= y; }

AbOperator op_mul(const AbOperator& x, const AbOperator& y) {
    const int prec = std::min(x.prec(), y.prec());
    const int bound = std::max(x.a_degree_bound(), y.a_degree_bound());
    AbOperator yy(prec, bound);
    yy += y;
    AbOperator result(prec, bound);
    // x y = sum_q b^q sum_m pi_{q,m} a^m y
    AbOperator am_y = yy;
    const int deg = x.a_degree();
    for (int m = 0; m <= deg; ++m) {
        for (int q = 0; q < prec; ++q) {
            const Rational c = x.coefficient(q, m);
            if (c == 0) continue;
            AbOperator term = am_y.left_mul_b_power(q);
            term *= c;
            result += term;
        }
        if (m < deg) am_y = am_y.left_mul_a();
    }
    return result;
}

AbOperator op_normalize(const std::vector<Letter>& word, int prec, int bound) {
    AbOperator result = AbOperator::scalar(1, prec, bound);
    // Multiply from the right end so that every step is a left multiplication.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
        case Letter::Kind::A: result = result.left_mul_a(); break;
        case Letter::Kind::B: result = result.left_mul_b_power(1); break;
        case Letter::Kind::Series: {
            const TruncSeries& s = it->series;
            AbOperator acc(std::min(prec, s.prec()), bound);
            for (int q = 0; q < s.prec(); ++q) {
                if (s[q] == 0) continue;
                AbOperator term = result.left_mul_b_power(q);
                term *= s[q];
                acc += term;
            }
            result = std::move(acc);
            break;
        }
        }
    }
    return result;
}

std::vector<std::pair<int, TruncSeries>> op_to_left_form(const AbOperator& x) { return x.to_left_form(); }

}  // namespace abmod

#pragma once

#include "abmod/ab_module.hpp"
#include "abmod/rational.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace abmod;

inline Rational q(const std::string& s) { return parse_rational(s); }

inline TruncSeries ser(std::initializer_list<const char*> coeffs, int prec) {
    std::vector<Rational> c;
    for (const char* x : coeffs) c.push_back(parse_rational(x));
    return from_polynomial(c, prec);
}

inline ModulePtr module_of(const std::vector<std::vector<TruncSeries>>& rows) {
    const int k = static_cast<int>(rows.size());
    SeriesMatrix m(k, static_cast<int>(rows[0].size()), rows[0][0].prec());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < static_cast<int>(rows[static_cast<std::size_t>(i)].size()); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return module_from_matrix(m);
}

inline Rational random_rational(std::mt19937& rng, int range = 5, int den = 4) {
    std::uniform_int_distribution<int> n(-range * den, range * den), d(1, den);
    Rational r(n(rng), d(rng));
    r.canonicalize();
    return r;
}

inline TruncSeries random_series(std::mt19937& rng, int prec, int terms = 4) {
    TruncSeries s(prec);
    for (int i = 0; i < std::min(terms, prec); ++i) s[i] = random_rational(rng);
    return s;
}

}  // namespace testing

#include "abmod/rational.hpp"

#include "abmod/errors.hpp"

#include <cctype>

namespace abmod {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto ok = !s.empty();
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
        const char c = s[i];
        ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0) || (c == '+' && i == 0);
    }
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    Rational r;
    if (!ok || r.set_str(s, 10) != 0 || r.get_den() == 0) fail(ErrorKind::ParseError, "bad rational literal '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational class_representative(const Rational& root) {
    Rational v = -root;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    Rational alpha = v - Rational(fl);
    if (alpha == 0) alpha = 1;
    return alpha;
}

}  // namespace abmod

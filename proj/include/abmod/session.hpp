#pragma once

#include "abmod/errors.hpp"
#include "abmod/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abmod {

// Exact polynomial (ascending coefficients, no trailing zeros) in b or z.
using PolyLiteral = std::vector<Rational>;

struct FactorLiteral {
    Rational lambda;
    std::optional<PolyLiteral> unit;
    friend bool operator==(const FactorLiteral&, const FactorLiteral&) = default;
};

struct Binding {
    enum class Kind { Fresco, Xi, Module, System };
    Kind kind = Kind::Module;
    std::string name;
    std::vector<FactorLiteral> factors;          // fresco
    std::vector<Rational> alphas;                // xi
    bool alpha_list = false;                     // xi written as [a, b]
    int xi_n = 0;
    std::optional<int> xi_dim;
    std::vector<std::vector<PolyLiteral>> matrix;  // module (in b) / system (in z)
    std::optional<int> precision;
    friend bool operator==(const Binding&, const Binding&) = default;
};

struct Command {
    enum class Kind { Precision, Let, Show };
    Kind kind = Kind::Show;
    int line = 0;
    int precision = 0;
    Binding binding;
    std::string what;  // show target kind
    std::string name;
    std::vector<std::string> args;
    friend bool operator==(const Command& x, const Command& y) {
        return x.kind == y.kind && x.precision == y.precision && x.binding == y.binding && x.what == y.what &&
               x.name == y.name && x.args == y.args;
    }
};

struct Session {
    std::vector<Command> commands;
};

struct SessionError {
    int line = 0;
    int column = 0;
    ErrorKind kind = ErrorKind::ParseError;
    std::string message;
    std::string text;  // the offending line
};

const std::vector<std::string>& show_kinds();

// Strict: throws Error (ParseError / UnknownName / DuplicateName) with line and column.
Session parse_session(const std::string& text);
// Keeps going after a bad line; each bad line yields an entry in errors.
Session parse_session(const std::string& text, std::vector<SessionError>& errors);

std::string render_poly(const PolyLiteral& p, char var);
std::string render_command(const Command& c);
std::string render_session(const Session& s);

}  // namespace abmod

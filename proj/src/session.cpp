#include "abmod/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace abmod {

const std::vector<std::string>& show_kinds() {
    static const std::vector<std::string> kinds{"bernstein", "formula",          "geometric", "simple_pole",
                                                "saturate",  "filtration",       "primitive", "higher_bernstein",
                                                "jh",        "embed",            "expansion", "report"};
    return kinds;
}

namespace {

struct LineError {
    int column;
    ErrorKind kind;
    std::string message;
};

class Cursor {
public:
    explicit Cursor(std::string text) : s_(std::move(text)) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }
    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void error(const std::string& msg, ErrorKind kind = ErrorKind::ParseError) {
        skip_ws();
        throw LineError{column(), kind, msg};
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    std::string identifier() {
        skip_ws();
        if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) error("expected a name");
        return word();
    }
    bool peek_word(const std::string& w) {
        skip_ws();
        std::size_t p = pos_;
        while (p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_')) ++p;
        return s_.compare(pos_, p - pos_, w) == 0 && p - pos_ == w.size();
    }
    Integer digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected a number");
        return Integer(s_.substr(start, pos_ - start));
    }
    int small_int() {
        const Integer v = digits();
        if (!v.fits_sint_p() || v > 100000) error("number out of range");
        return static_cast<int>(v.get_si());
    }
    Rational unsigned_rational() {
        Rational r(digits());
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            const Integer d = digits();
            if (d == 0) error("zero denominator");
            r /= Rational(d);
        }
        return r;
    }
    Rational rational() {
        const bool neg = accept('-');
        if (!neg) accept('+');
        Rational r = unsigned_rational();
        return neg ? Rational(-r) : r;
    }
    std::size_t pos() const { return pos_; }
    const std::string& text() const { return s_; }

private:
    std::string s_;
    std::size_t pos_ = 0;
};

void trim(PolyLiteral& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// coefficient * var^power
std::pair<Rational, int> parse_term(Cursor& c, char var) {
    Rational coeff = 1;
    int power = 0;
    bool any = false;
    do {
        const char ch = c.peek();
        if (ch == '(') {
            c.expect('(');
            coeff *= c.rational();
            c.expect(')');
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff *= c.unsigned_rational();
        } else if (ch == var) {
            c.accept(var);
            int p = 1;
            if (c.accept('^')) p = c.small_int();
            power += p;
        } else {
            c.error(any ? "expected a factor after '*'" : std::string("expected a term in ") + var);
        }
        any = true;
    } while (c.accept('*'));
    return {coeff, power};
}

PolyLiteral parse_poly(Cursor& c, char var) {
    PolyLiteral p;
    bool first = true;
    while (true) {
        Rational sign = 1;
        if (c.accept('-')) {
            sign = -1;
        } else if (!c.accept('+') && !first) {
            break;
        }
        auto [coeff, power] = parse_term(c, var);
        if (power > 4096) c.error("power too large");
        if (static_cast<int>(p.size()) <= power) p.resize(static_cast<std::size_t>(power) + 1);
        p[static_cast<std::size_t>(power)] += sign * coeff;
        first = false;
    }
    trim(p);
    return p;
}

std::vector<std::vector<PolyLiteral>> parse_matrix(Cursor& c, char var) {
    std::vector<std::vector<PolyLiteral>> rows;
    c.expect('[');
    do {
        c.expect('[');
        std::vector<PolyLiteral> row;
        do {
            row.push_back(parse_poly(c, var));
        } while (c.accept(','));
        c.expect(']');
        rows.push_back(row);
    } while (c.accept(','));
    c.expect(']');
    for (const auto& r : rows)
        if (r.size() != rows.size()) c.error("matrix must be square", ErrorKind::NonSquare);
    return rows;
}

Binding parse_binding(Cursor& c, const std::string& name) {
    Binding b;
    b.name = name;
    const std::string kind = c.identifier();
    if (kind == "fresco") {
        b.kind = Binding::Kind::Fresco;
        c.expect('[');
        do {
            c.expect('(');
            FactorLiteral f{c.rational(), std::nullopt};
            if (c.accept(',')) f.unit = parse_poly(c, 'b');
            c.expect(')');
            b.factors.push_back(f);
        } while (c.accept(','));
        c.expect(']');
    } else if (kind == "xi") {
        b.kind = Binding::Kind::Xi;
        if (c.accept('[')) {
            b.alpha_list = true;
            do {
                b.alphas.push_back(c.rational());
            } while (c.accept(','));
            c.expect(']');
        } else {
            b.alphas.push_back(c.rational());
        }
        b.xi_n = c.small_int();
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) b.xi_dim = c.small_int();
    } else if (kind == "module") {
        b.kind = Binding::Kind::Module;
        b.matrix = parse_matrix(c, 'b');
    } else if (kind == "system") {
        b.kind = Binding::Kind::System;
        b.matrix = parse_matrix(c, 'z');
    } else {
        c.error("unknown binding kind '" + kind + "' (fresco, xi, module, system)");
    }
    if (c.peek_word("precision")) {
        c.word();
        b.precision = c.small_int();
        if (*b.precision < 2) c.error("precision must be at least 2");
    }
    return b;
}

Command parse_line(Cursor& c, std::set<std::string>& names) {
    Command cmd;
    const std::string head = c.identifier();
    if (head == "precision") {
        cmd.kind = Command::Kind::Precision;
        cmd.precision = c.small_int();
        if (cmd.precision < 2) c.error("precision must be at least 2");
    } else if (head == "let") {
        cmd.kind = Command::Kind::Let;
        const int col = c.column();
        const std::string name = c.identifier();
        if (name == "let" || name == "show" || name == "precision") c.error("reserved word used as a name");
        c.expect('=');
        cmd.binding = parse_binding(c, name);
        cmd.name = name;
        if (!c.at_end()) c.error("unexpected trailing text");
        if (names.count(name)) throw LineError{col, ErrorKind::DuplicateName, "name '" + name + "' is already bound"};
        names.insert(name);
        return cmd;
    } else if (head == "show") {
        cmd.kind = Command::Kind::Show;
        const int kcol = c.column();
        cmd.what = c.identifier();
        const auto& kinds = show_kinds();
        if (std::find(kinds.begin(), kinds.end(), cmd.what) == kinds.end())
            throw LineError{kcol, ErrorKind::ParseError, "unknown show target '" + cmd.what + "'"};
        const int ncol = c.column();
        cmd.name = c.identifier();
        if (cmd.what == "expansion") {
            if (!c.at_end()) cmd.args.push_back(std::to_string(c.small_int()));
        } else if (cmd.what == "primitive") {
            do {
                cmd.args.push_back(to_string(c.rational()));
            } while (c.accept(','));
        }
        if (!c.at_end()) c.error("unexpected trailing text");
        if (!names.count(cmd.name)) throw LineError{ncol, ErrorKind::UnknownName, "name '" + cmd.name + "' is not bound"};
        return cmd;
    } else {
        c.error("expected 'precision', 'let' or 'show'");
    }
    if (!c.at_end()) c.error("unexpected trailing text");
    return cmd;
}

}  // namespace

Session parse_session(const std::string& text, std::vector<SessionError>& errors) {
    Session s;
    std::set<std::string> names;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string body = line;
        if (const auto hash = body.find('#'); hash != std::string::npos) body = body.substr(0, hash);
        Cursor c(body);
        if (c.at_end()) continue;
        try {
            Command cmd = parse_line(c, names);
            cmd.line = lineno;
            s.commands.push_back(std::move(cmd));
        } catch (const LineError& e) {
            errors.push_back({lineno, e.column, e.kind, e.message, line});
        } catch (const Error& e) {
            errors.push_back({lineno, c.column(), ErrorKind::ParseError, e.what(), line});
        }
    }
    return s;
}

Session parse_session(const std::string& text) {
    std::vector<SessionError> errors;
    Session s = parse_session(text, errors);
    if (!errors.empty()) {
        const auto& e = errors.front();
        fail(e.kind, "line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ": " + e.message);
    }
    return s;
}

std::string render_poly(const PolyLiteral& p, char var) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        Rational c = p[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (c < 0) c = -c;
        first = false;
        if (k == 0) {
            out << to_string(c);
            continue;
        }
        if (c != 1) out << to_string(c) << "*";
        out << var;
        if (k > 1) out << "^" << k;
    }
    if (first) return "0";
    return out.str();
}

namespace {

std::string render_matrix(const std::vector<std::vector<PolyLiteral>>& m, char var) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + render_poly(m[i][j], var);
        out += "]";
    }
    return out + "]";
}

std::string render_binding(const Binding& b) {
    std::string out;
    switch (b.kind) {
        case Binding::Kind::Fresco:
            out = "fresco [";
            for (std::size_t i = 0; i < b.factors.size(); ++i) {
                out += (i ? ", (" : "(") + to_string(b.factors[i].lambda);
                if (b.factors[i].unit) out += ", " + render_poly(*b.factors[i].unit, 'b');
                out += ")";
            }
            out += "]";
            break;
        case Binding::Kind::Xi:
            out = "xi ";
            if (b.alpha_list) {
                out += "[";
                for (std::size_t i = 0; i < b.alphas.size(); ++i) out += (i ? ", " : "") + to_string(b.alphas[i]);
                out += "]";
            } else {
                out += to_string(b.alphas.at(0));
            }
            out += " " + std::to_string(b.xi_n);
            if (b.xi_dim) out += " " + std::to_string(*b.xi_dim);
            break;
        case Binding::Kind::Module:
            out = "module " + render_matrix(b.matrix, 'b');
            break;
        case Binding::Kind::System:
            out = "system " + render_matrix(b.matrix, 'z');
            break;
    }
    if (b.precision) out += " precision " + std::to_string(*b.precision);
    return out;
}

}  // namespace

std::string render_command(const Command& c) {
    switch (c.kind) {
        case Command::Kind::Precision:
            return "precision " + std::to_string(c.precision);
        case Command::Kind::Let:
            return "let " + c.binding.name + " = " + render_binding(c.binding);
        case Command::Kind::Show: {
            std::string out = "show " + c.what + " " + c.name;
            for (std::size_t i = 0; i < c.args.size(); ++i) out += (c.what == "primitive" && i ? ", " : " ") + c.args[i];
            return out;
        }
    }
    return {};
}

std::string render_session(const Session& s) {
    std::string out;
    for (const auto& c : s.commands) out += render_command(c) + "\n";
    return out;
}

}  // namespace abmod

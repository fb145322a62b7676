#include "squint/textio.hpp"

#include <cctype>
#include <sstream>

namespace squint {

namespace {

std::string print_monomial(const RingContext& ctx, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors) {
        if (!first) os << "*";
        os << ctx.var(v).name;
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

} // namespace

std::string print_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const RingContext& ctx = *f.context();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.empty())
            os << a.get_str();
        else if (a == 1)
            os << print_monomial(ctx, m);
        else
            os << a.get_str() << "*" << print_monomial(ctx, m);
        first = false;
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos == s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' in polynomial");
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a number in polynomial");
        return Integer(s.substr(start, pos - start));
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' ||
               c == '@';
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && ident_char(s[pos])) ++pos;
        if (start == pos) throw ParseError("expected an identifier in polynomial");
        return s.substr(start, pos - start);
    }
};

Polynomial parse_factor(const RingPtr& ctx, Lexer& lx) {
    if (lx.peek_digit()) {
        Integer num = lx.integer();
        Rational c(num);
        if (lx.accept('/')) {
            Integer den = lx.integer();
            if (den == 0) throw ParseError("zero denominator in coefficient");
            c = Rational(num) / Rational(den);
        }
        return Polynomial::constant(ctx, c);
    }
    std::string name = lx.ident();
    int var = -1;
    if (name == "x" && lx.accept('[')) {
        std::string edge = lx.ident();
        lx.expect(',');
        Integer i = lx.integer();
        lx.expect(',');
        Integer j = lx.integer();
        lx.expect(']');
        int e = ctx->quiver().edge_index(edge);
        var = ctx->var_index(e, static_cast<int>(i.get_si()), static_cast<int>(j.get_si()));
    } else {
        for (int k = 0; k < ctx->param_count(); ++k)
            if (ctx->var(ctx->param_index(k)).name == name) {
                var = ctx->param_index(k);
                break;
            }
        if (var < 0) throw ParseError("unknown variable '" + name + "'");
    }
    Polynomial p = Polynomial::variable(ctx, var);
    if (lx.accept('^')) {
        Integer e = lx.integer();
        p = p.pow(static_cast<int>(e.get_si()));
    }
    return p;
}

} // namespace

Polynomial parse_polynomial(const RingPtr& ctx, const std::string& text) {
    Lexer lx{text};
    Polynomial out = Polynomial::zero(ctx);
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('-'))
            sign = -1;
        else if (lx.accept('+'))
            sign = 1;
        else if (!first)
            throw ParseError("expected + or - between terms");
        Polynomial term = parse_factor(ctx, lx);
        while (lx.accept('*')) term = term * parse_factor(ctx, lx);
        if (sign < 0) term = -term;
        out += term;
        first = false;
    }
    if (first) throw ParseError("empty polynomial");
    return out;
}

std::string print_fraction(const EvenFraction& f) {
    std::ostringstream os;
    os << "( " << print_polynomial(f.numerator()) << " )";
    for (const auto& [id, pow] : f.denominator()) {
        os << " / ( " << print_polynomial(f.table()->poly(id)) << " )";
        if (pow > 1) os << "^" << pow;
    }
    return os.str();
}

std::string print_matrix(const SuperMatrix<Polynomial>& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << print_polynomial(m.at(i, j));
        }
    }
    os << "]";
    return os.str();
}

std::string print_multidegree(const Quiver& q, const MultiDegree& n) {
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e < q.edge_count(); ++e) {
        if (n[e] == 0) continue;
        if (!first) os << " ";
        os << q.edge_id(e) << "=" << n[e];
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace squint

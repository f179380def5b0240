#include "qloop/expr.hpp"

#include <cctype>

namespace qloop {

namespace {

// Shared lexer-style cursor; the two grammars differ only in their atoms.
struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected ") + what, pos);
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '\''))
            ++pos;
        if (pos == start) throw ParseError("expected vertex name", pos);
        return std::string(text.substr(start, pos - start));
    }
    mpz_class big_integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", pos);
        mpz_class v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    }
};

struct FreeParser {
    const QuiverSpec& q;
    Cursor c;

    FreeElem expr() {
        FreeElem acc = term();
        while (true) {
            if (c.eat('+'))
                acc = acc + term();
            else if (c.eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    FreeElem term() {
        FreeElem acc = unary();
        while (true) {
            if (c.eat('*')) {
                acc = fa_mul(acc, unary());
            } else if (c.eat('/')) {
                FreeElem d = unary();
                acc = acc.scaled(Scalar(1) / as_scalar(d));
            } else {
                return acc;
            }
        }
    }
    FreeElem unary() {
        if (c.eat('-')) return -unary();
        if (c.eat('+')) return unary();
        return power();
    }
    FreeElem power() {
        FreeElem base = atom();
        if (c.eat('^')) {
            long e = c.integer();
            if (e < 0) return FreeElem::unit().scaled(as_scalar(base).pow(e));
            FreeElem acc = FreeElem::unit();
            for (long k = 0; k < e; ++k) acc = fa_mul(acc, base);
            return acc;
        }
        return base;
    }
    FreeElem atom() {
        char ch = c.peek();
        if (ch == '(') {
            c.expect('(', "'('");
            FreeElem inner = expr();
            c.expect(')', "')'");
            return inner;
        }
        if (ch == 'E') {
            ++c.pos;
            c.expect('[', "'['");
            std::string v = c.name();
            c.expect(',', "','");
            long level = c.integer();
            c.expect(']', "']'");
            if (level < 1) throw ParseError("generator level must be positive", c.pos);
            const VertexId vid = q.vertex_index(v);
            if (q.is_real(vid) && level != 1)
                throw ParseError("real vertex '" + v + "' only carries level 1", c.pos);
            return FreeElem::generator({vid, static_cast<int>(level)});
        }
        if (ch == 'v') {
            ++c.pos;
            return FreeElem::unit().scaled(Scalar::v_power(1));
        }
        if (std::isdigit(static_cast<unsigned char>(ch)))
            return FreeElem::unit().scaled(Scalar(c.big_integer()));
        throw ParseError("unexpected character", c.pos);
    }
    Scalar as_scalar(const FreeElem& x) {
        if (x.is_zero()) return Scalar();
        if (x.terms().size() == 1 && x.terms().begin()->first.empty())
            return x.terms().begin()->second;
        throw ParseError("expected a scalar subexpression", c.pos);
    }
};

struct DoubleParser {
    const Session& s;
    Cursor c;

    DoubleElem expr() {
        DoubleElem acc = term();
        while (true) {
            if (c.eat('+'))
                acc = acc + term();
            else if (c.eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    DoubleElem term() {
        DoubleElem acc = unary();
        while (true) {
            if (c.eat('*')) {
                acc = dd_mul(s, acc, unary());
            } else if (c.eat('/')) {
                DoubleElem d = unary();
                acc = acc.scaled(Scalar(1) / as_scalar(d));
            } else {
                return acc;
            }
        }
    }
    DoubleElem unary() {
        if (c.eat('-')) return DoubleElem() - unary();
        if (c.eat('+')) return unary();
        return power();
    }
    DoubleElem power() {
        DoubleElem base = atom();
        if (c.eat('^')) {
            long e = c.integer();
            if (e < 0) {
                // Negative powers exist for scalars and pure K monomials.
                if (base.terms().size() == 1) {
                    const auto& [key, coef] = *base.terms().begin();
                    if (key.f_word.empty() && key.e_word.empty() && coef.is_one()) {
                        return DoubleElem::k_power(key.k_exp.scaled(static_cast<int>(e)));
                    }
                }
                return DoubleElem::unit(s.quiver()).scaled(as_scalar(base).pow(e));
            }
            DoubleElem acc = DoubleElem::unit(s.quiver());
            for (long k = 0; k < e; ++k) acc = dd_mul(s, acc, base);
            return acc;
        }
        return base;
    }
    DoubleElem atom() {
        const QuiverSpec& q = s.quiver();
        char ch = c.peek();
        if (ch == '(') {
            c.expect('(', "'('");
            DoubleElem inner = expr();
            c.expect(')', "')'");
            return inner;
        }
        if (ch == 'E' || ch == 'F') {
            ++c.pos;
            c.expect('[', "'['");
            std::string v = c.name();
            c.expect(',', "','");
            long level = c.integer();
            c.expect(']', "']'");
            if (level < 1) throw ParseError("generator level must be positive", c.pos);
            const VertexId vid = q.vertex_index(v);
            if (q.is_real(vid) && level != 1)
                throw ParseError("real vertex '" + v + "' only carries level 1", c.pos);
            s.check_height(static_cast<int>(level));
            GenIndex iota{vid, static_cast<int>(level)};
            return ch == 'E' ? DoubleElem::e_gen(q, iota) : DoubleElem::f_gen(q, iota);
        }
        if (ch == 'K') {
            ++c.pos;
            c.expect('[', "'['");
            std::string v = c.name();
            c.expect(']', "']'");
            return DoubleElem::k_power(q.unit_vector(q.vertex_index(v)));
        }
        if (ch == 'v') {
            ++c.pos;
            return DoubleElem::unit(q).scaled(Scalar::v_power(1));
        }
        if (std::isdigit(static_cast<unsigned char>(ch)))
            return DoubleElem::unit(q).scaled(Scalar(c.big_integer()));
        throw ParseError("unexpected character", c.pos);
    }
    Scalar as_scalar(const DoubleElem& x) {
        if (x.is_empty()) return Scalar();
        if (x.terms().size() == 1) {
            const auto& [key, coef] = *x.terms().begin();
            if (key.f_word.empty() && key.e_word.empty() && key.k_exp.is_zero()) return coef;
        }
        throw ParseError("expected a scalar subexpression", c.pos);
    }
};

}  // namespace

FreeElem parse_free_elem(const QuiverSpec& q, std::string_view text) {
    FreeParser p{q, Cursor{text}};
    FreeElem x = p.expr();
    if (!p.c.done()) throw ParseError("trailing input", p.c.pos);
    return x;
}

DoubleElem parse_double_elem(const Session& s, std::string_view text) {
    DoubleParser p{s, Cursor{text}};
    DoubleElem x = p.expr();
    if (!p.c.done()) throw ParseError("trailing input", p.c.pos);
    return x;
}

}  // namespace qloop

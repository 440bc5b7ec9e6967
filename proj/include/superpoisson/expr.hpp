/*
 * expr.hpp -- text syntax for algebra elements and superforms.
 *
 * Grammar (LL(1), whitespace insignificant):
 *   expr   := term (('+'|'-') term)*
 *   term   := unary ('*' unary)*
 *   unary  := '-' unary | power
 *   power  := atom ('^' INT)?
 *   atom   := INT ('/' INT)? | GEN | '(' expr ')'
 *   GEN    := x<i> | th<j> | dx<i> | dth<j>      (1-based indices)
 *
 * '*' is the product of Omega(A); on degree-0 operands it is the algebra
 * product.  The printer emits the same tokens with terms in canonical
 * order (polynomials by descending graded-lex, algebra and form terms by
 * ascending monomial order) and coefficients on the left, so printed text
 * parses back to an equal value.
 */
#pragma once

#include "forms.hpp"

#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superpoisson {

// ---------------------------------------------------------------- printing

inline std::string print_polynomial(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const ExpVec& exp = it->first;
        const Rational& c = it->second;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (exp[i] > 1)
                mono += "^" + std::to_string(exp[i]);
        }
        std::string piece;
        if (mono.empty())
            piece = to_string(mag);
        else if (mag == 1)
            piece = mono;
        else
            piece = to_string(mag) + "*" + mono;
        if (out.empty())
            out = neg ? "-" + piece : piece;
        else
            out += neg ? " - " + piece : " + " + piece;
    }
    return out;
}

namespace detail {

inline std::string theta_text(OddMono mono)
{
    std::string out;
    for (OddMono s = mono; s; s &= s - 1) {
        if (!out.empty())
            out += '*';
        out += "th" + std::to_string(std::countr_zero(s) + 1);
    }
    return out;
}

inline std::string join_terms(std::string out, const std::string& piece)
{
    if (out.empty())
        return piece;
    if (!piece.empty() && piece[0] == '-')
        return out + " - " + piece.substr(1);
    return out + " + " + piece;
}

// one poly monomial with optional theta and form-monomial tails, inline
inline std::string inline_term(const ExpVec& exp, const Rational& c, const std::string& tail)
{
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string body;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0)
            continue;
        if (!body.empty())
            body += '*';
        body += "x" + std::to_string(i + 1);
        if (exp[i] > 1)
            body += "^" + std::to_string(exp[i]);
    }
    if (!tail.empty()) {
        if (!body.empty())
            body += '*';
        body += tail;
    }
    std::string piece;
    if (body.empty())
        piece = to_string(mag);
    else if (mag == 1)
        piece = body;
    else
        piece = to_string(mag) + "*" + body;
    return neg ? "-" + piece : piece;
}

} // namespace detail

inline std::string print_element(const AlgebraElement& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [mono, p] : a.terms) {
        const std::string theta = detail::theta_text(mono);
        std::string piece;
        if (theta.empty())
            piece = print_polynomial(p);
        else if (p.terms.size() == 1)
            piece = detail::inline_term(p.terms.begin()->first, p.terms.begin()->second, theta);
        else
            piece = "(" + print_polynomial(p) + ")*" + theta;
        out = detail::join_terms(std::move(out), piece);
    }
    return out;
}

inline std::string form_monomial_text(const FormMonomial& m)
{
    std::string out;
    for (OddMono s = m.dx_mask; s; s &= s - 1) {
        if (!out.empty())
            out += '*';
        out += "dx" + std::to_string(std::countr_zero(s) + 1);
    }
    for (std::size_t j = 0; j < m.dtheta.size(); ++j) {
        if (m.dtheta[j] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "dth" + std::to_string(j + 1);
        if (m.dtheta[j] > 1)
            out += "^" + std::to_string(m.dtheta[j]);
    }
    return out;
}

inline std::string print_form(const SuperForm& w)
{
    if (w.is_zero())
        return "0";
    std::string out;
    for (const auto& [mono, a] : w.terms) {
        const std::string mtext = form_monomial_text(mono);
        std::string piece;
        if (mtext.empty()) {
            piece = print_element(a);
        } else if (a.terms.size() == 1 && a.terms.begin()->second.terms.size() == 1) {
            const std::string theta = detail::theta_text(a.terms.begin()->first);
            const auto& pt = *a.terms.begin()->second.terms.begin();
            piece = detail::inline_term(pt.first, pt.second,
                                        theta.empty() ? mtext : theta + "*" + mtext);
        } else {
            piece = "(" + print_element(a) + ")*" + mtext;
        }
        out = detail::join_terms(std::move(out), piece);
    }
    return out;
}

inline std::string describe_derivation(const Derivation& d)
{
    std::string out;
    auto emit = [&](const std::string& name, const AlgebraElement& v) {
        if (v.is_zero())
            return;
        if (!out.empty())
            out += ", ";
        out += name + " -> " + print_element(v);
    };
    for (std::uint32_t i = 0; i < d.sig.m; ++i)
        emit(gen_name(even_gen(i)), d.even_values[i]);
    for (std::uint32_t j = 0; j < d.sig.n; ++j)
        emit(gen_name(odd_gen(j)), d.odd_values[j]);
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- parsing

class ParseError : public std::runtime_error {
public:
    std::uint32_t line;
    std::uint32_t column;

    ParseError(const std::string& msg, std::uint32_t l, std::uint32_t c)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c)
                             + ": " + msg),
          line(l), column(c)
    {
    }
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Literal, Generator, DeltaGenerator, Sum, Product, Power, Negate };

    Kind kind;
    Rational value;                 // Literal
    GenId gen{false, 0};            // Generator / DeltaGenerator
    std::vector<ExprPtr> children;  // Sum / Product / Power / Negate
    std::uint32_t exponent = 0;     // Power
};

namespace detail {

struct Token {
    enum class Kind { Int, Gen, DGen, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    BigInt int_value;
    GenId gen{false, 0};
    std::uint32_t line = 1;
    std::uint32_t column = 1;
};

inline std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> out;
    std::uint32_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            ++col;
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            t.kind = Token::Kind::Int;
            t.text = std::string(text.substr(i, j - i));
            t.int_value = BigInt(t.text);
            col += static_cast<std::uint32_t>(j - i);
            i = j;
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j])))
                ++j;
            const std::string_view word = text.substr(i, j - i);
            std::size_t k = j;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                ++k;
            const std::string_view digits = text.substr(j, k - j);
            bool odd = false, dgen = false, known = true;
            if (word == "x")
                odd = false;
            else if (word == "th")
                odd = true;
            else if (word == "dx")
                dgen = true;
            else if (word == "dth")
                dgen = odd = true;
            else
                known = false;
            if (!known || digits.empty())
                throw ParseError("unknown token '" + std::string(word) + std::string(digits)
                                     + "'",
                                 line, col);
            if (digits.size() > 6)
                throw ParseError("index out of range: '" + std::string(word)
                                     + std::string(digits) + "'",
                                 line, col);
            const unsigned long idx = std::stoul(std::string(digits));
            t.kind = dgen ? Token::Kind::DGen : Token::Kind::Gen;
            t.text = std::string(word) + std::string(digits);
            t.gen = GenId{odd, static_cast<std::uint32_t>(idx == 0 ? 0 : idx - 1)};
            if (idx == 0)
                throw ParseError("index out of range: '" + t.text + "'", line, col);
            col += static_cast<std::uint32_t>(k - i);
            i = k;
            out.push_back(std::move(t));
            continue;
        }
        switch (ch) {
        case '+': t.kind = Token::Kind::Plus; break;
        case '-': t.kind = Token::Kind::Minus; break;
        case '*': t.kind = Token::Kind::Star; break;
        case '^': t.kind = Token::Kind::Caret; break;
        case '/': t.kind = Token::Kind::Slash; break;
        case '(': t.kind = Token::Kind::LParen; break;
        case ')': t.kind = Token::Kind::RParen; break;
        default:
            throw ParseError(std::string("unknown token '") + ch + "'", line, col);
        }
        t.text = std::string(1, ch);
        ++i;
        ++col;
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.column = col;
    out.push_back(std::move(end));
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const Signature& s) : sig(s), tokens(std::move(toks)) {}

    ExprPtr run()
    {
        ExprPtr e = parse_expr();
        if (peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + peek().text + "'", peek().line,
                             peek().column);
        return e;
    }

private:
    const Signature& sig;
    std::vector<Token> tokens;
    std::size_t pos = 0;

    const Token& peek() const { return tokens[pos]; }
    const Token& get() { return tokens[pos++]; }

    static ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprPtr parse_expr()
    {
        ExprNode sum;
        sum.kind = ExprNode::Kind::Sum;
        sum.children.push_back(parse_term());
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            const bool minus = get().kind == Token::Kind::Minus;
            ExprPtr t = parse_term();
            if (minus) {
                ExprNode neg;
                neg.kind = ExprNode::Kind::Negate;
                neg.children.push_back(std::move(t));
                t = make(std::move(neg));
            }
            sum.children.push_back(std::move(t));
        }
        if (sum.children.size() == 1)
            return sum.children.front();
        return make(std::move(sum));
    }

    ExprPtr parse_term()
    {
        ExprNode prod;
        prod.kind = ExprNode::Kind::Product;
        prod.children.push_back(parse_unary());
        while (peek().kind == Token::Kind::Star) {
            get();
            prod.children.push_back(parse_unary());
        }
        if (prod.children.size() == 1)
            return prod.children.front();
        return make(std::move(prod));
    }

    ExprPtr parse_unary()
    {
        if (peek().kind == Token::Kind::Minus) {
            const Token& t = get();
            (void)t;
            ExprNode neg;
            neg.kind = ExprNode::Kind::Negate;
            neg.children.push_back(parse_unary());
            return make(std::move(neg));
        }
        return parse_power();
    }

    ExprPtr parse_power()
    {
        ExprPtr base = parse_atom();
        if (peek().kind != Token::Kind::Caret)
            return base;
        get();
        if (peek().kind != Token::Kind::Int)
            throw ParseError("expected a nonnegative integer exponent", peek().line,
                             peek().column);
        const Token t = get();
        if (t.int_value > 9999)
            throw ParseError("exponent too large", t.line, t.column);
        ExprNode pw;
        pw.kind = ExprNode::Kind::Power;
        pw.children.push_back(std::move(base));
        pw.exponent = static_cast<std::uint32_t>(t.int_value);
        return make(std::move(pw));
    }

    ExprPtr parse_atom()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::Int: {
            const Token num = get();
            Rational v(num.int_value);
            if (peek().kind == Token::Kind::Slash) {
                get();
                if (peek().kind != Token::Kind::Int)
                    throw ParseError("malformed rational", peek().line, peek().column);
                const Token den = get();
                if (den.int_value == 0)
                    throw ParseError("malformed rational: zero denominator", den.line,
                                     den.column);
                v = Rational(num.int_value) / Rational(den.int_value);
            }
            ExprNode lit;
            lit.kind = ExprNode::Kind::Literal;
            lit.value = std::move(v);
            return make(std::move(lit));
        }
        case Token::Kind::Gen:
        case Token::Kind::DGen: {
            const Token g = get();
            const std::uint32_t bound = g.gen.odd ? sig.n : sig.m;
            if (g.gen.index >= bound)
                throw ParseError("index out of range: '" + g.text + "'", g.line, g.column);
            ExprNode node;
            node.kind = g.kind == Token::Kind::Gen ? ExprNode::Kind::Generator
                                                   : ExprNode::Kind::DeltaGenerator;
            node.gen = g.gen;
            return make(std::move(node));
        }
        case Token::Kind::LParen: {
            get();
            ExprPtr inner = parse_expr();
            if (peek().kind != Token::Kind::RParen)
                throw ParseError("expected ')'", peek().line, peek().column);
            get();
            return inner;
        }
        default:
            throw ParseError("expected a number, generator, or '('", t.line, t.column);
        }
    }
};

} // namespace detail

inline ExprPtr parse(std::string_view text, const Signature& sig)
{
    return detail::Parser(detail::lex(text), sig).run();
}

inline SuperForm eval(const ExprNode& node, const Signature& sig)
{
    switch (node.kind) {
    case ExprNode::Kind::Literal:
        return SuperForm::from_algebra(AlgebraElement::constant(sig, node.value));
    case ExprNode::Kind::Generator:
        return SuperForm::from_algebra(AlgebraElement::generator(sig, node.gen));
    case ExprNode::Kind::DeltaGenerator:
        return SuperForm::d_generator(sig, node.gen);
    case ExprNode::Kind::Negate:
        return -eval(*node.children.front(), sig);
    case ExprNode::Kind::Sum: {
        SuperForm r = SuperForm::zero(sig);
        for (const auto& c : node.children)
            r += eval(*c, sig);
        return r;
    }
    case ExprNode::Kind::Product: {
        SuperForm r = eval(*node.children.front(), sig);
        for (std::size_t i = 1; i < node.children.size(); ++i)
            r = wedge(r, eval(*node.children[i], sig));
        return r;
    }
    case ExprNode::Kind::Power: {
        SuperForm base = eval(*node.children.front(), sig);
        SuperForm r = SuperForm::from_algebra(AlgebraElement::one(sig));
        for (std::uint32_t i = 0; i < node.exponent; ++i)
            r = wedge(r, base);
        return r;
    }
    }
    throw std::logic_error("unreachable expression node");
}

inline SuperForm eval(const ExprPtr& node, const Signature& sig) { return eval(*node, sig); }

inline SuperForm parse_form(std::string_view text, const Signature& sig)
{
    return eval(parse(text, sig), sig);
}

// parse text that must evaluate to a plain algebra element
inline AlgebraElement parse_element(std::string_view text, const Signature& sig)
{
    SuperForm w = parse_form(text, sig);
    for (const auto& [mono, c] : w.terms)
        if (mono.form_degree() != 0)
            throw ParseError("expression is not an algebra element: '" + std::string(text)
                                 + "'",
                             1, 1);
    return to_algebra(w);
}

} // namespace superpoisson

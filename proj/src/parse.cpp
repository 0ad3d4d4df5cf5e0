/*
 * parse.cpp
 * ---------
 * Recursive-descent parser for polynomial expressions. Errors carry the
 * 1-based character position of the offending token.
 */

#include "cga/parse.hpp"

#include <cctype>

namespace cga {

namespace {

enum class TokKind { Number, Name, Plus, Minus, Star, Caret, Slash, End };

struct Token {
    TokKind kind;
    std::string text;
    size_t pos = 0;  // 0-based offset into the input
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_ = {TokKind::End, "", i_};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            tok_ = {TokKind::Number, text_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
                ++j;
            }
            tok_ = {TokKind::Name, text_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Star; break;
            case '^': kind = TokKind::Caret; break;
            case '/': kind = TokKind::Slash; break;
            default:
                throw parse_error("unexpected character '" + std::string(1, c) +
                                  "' at position " + std::to_string(i_ + 1));
        }
        tok_ = {kind, std::string(1, c), i_};
        ++i_;
    }

    const std::string& text_;
    size_t i_ = 0;
    Token tok_;
};

[[noreturn]] void fail(const Token& tok, const std::string& expected) {
    std::string found = tok.kind == TokKind::End ? "end of input" : "'" + tok.text + "'";
    throw parse_error("expected " + expected + " but found " + found + " at position " +
                      std::to_string(tok.pos + 1));
}

class Parser {
public:
    Parser(AlgebraPtr algebra, const std::string& text)
        : alg_(std::move(algebra)), lex_(text) {}

    Polynomial parse() {
        Polynomial result(alg_);
        bool negate = false;
        if (lex_.peek().kind == TokKind::Minus) {
            lex_.take();
            negate = true;
        }
        result += term(negate);
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            bool minus = lex_.take().kind == TokKind::Minus;
            result += term(minus);
        }
        if (lex_.peek().kind != TokKind::End) fail(lex_.peek(), "'+', '-', or end of input");
        return result;
    }

private:
    Polynomial term(bool negate) {
        Rational coeff(1);
        bool saw_coeff = false;
        if (lex_.peek().kind == TokKind::Number) {
            coeff = rational();
            saw_coeff = true;
        }
        if (negate) coeff = -coeff;

        // After a leading coefficient the first '*' is optional ("2*x" or
        // "2 x"); later factors need explicit stars. A lone rational is a
        // constant term.
        bool explicit_star = false;
        if (saw_coeff && lex_.peek().kind == TokKind::Star) {
            lex_.take();
            explicit_star = true;
        }
        if (saw_coeff && !explicit_star && lex_.peek().kind != TokKind::Name) {
            return Polynomial::constant(alg_, coeff);
        }
        // Multiply the factors in written order so reordering odd generators
        // picks up its Koszul sign (z*y == -y*z) and odd squares vanish.
        Polynomial product = Polynomial::constant(alg_, coeff);
        factor(product);
        while (lex_.peek().kind == TokKind::Star) {
            lex_.take();
            factor(product);
        }
        return product;
    }

    void factor(Polynomial& product) {
        if (lex_.peek().kind != TokKind::Name) fail(lex_.peek(), "a generator name");
        Token name = lex_.take();
        int gen = alg_->find(name.text);
        if (gen < 0) {
            throw parse_error("unknown generator '" + name.text + "' at position " +
                              std::to_string(name.pos + 1));
        }
        int exp = 1;
        if (lex_.peek().kind == TokKind::Caret) {
            lex_.take();
            if (lex_.peek().kind != TokKind::Number) fail(lex_.peek(), "an exponent");
            exp = parse_int(lex_.take());
        }
        Polynomial g = Polynomial::generator(alg_, gen);
        for (int k = 0; k < exp; ++k) product *= g;
    }

    Rational rational() {
        Token num = lex_.take();
        mpz_class numerator(num.text);
        if (lex_.peek().kind != TokKind::Slash) return Rational(numerator);
        lex_.take();
        if (lex_.peek().kind != TokKind::Number) fail(lex_.peek(), "a denominator");
        Token den = lex_.take();
        mpz_class denominator(den.text);
        if (denominator == 0) {
            throw parse_error("zero denominator at position " + std::to_string(den.pos + 1));
        }
        Rational r(numerator, denominator);
        r.canonicalize();
        return r;
    }

    int parse_int(const Token& tok) {
        try {
            size_t used = 0;
            int value = std::stoi(tok.text, &used);
            if (used != tok.text.size()) throw std::invalid_argument(tok.text);
            return value;
        } catch (const std::exception&) {
            throw parse_error("exponent '" + tok.text + "' out of range at position " +
                              std::to_string(tok.pos + 1));
        }
    }

    AlgebraPtr alg_;
    Lexer lex_;
};

}  // namespace

Polynomial parse_polynomial(AlgebraPtr algebra, const std::string& text) {
    return Parser(std::move(algebra), text).parse();
}

DegreeWindow parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw parse_error("window must have the form LO:HI, got '" + text + "'");
    }
    auto to_int = [&](const std::string& part) {
        try {
            size_t used = 0;
            int value = std::stoi(part, &used);
            if (used != part.size() || part.empty()) throw std::invalid_argument(part);
            return value;
        } catch (const std::exception&) {
            throw parse_error("window bound '" + part + "' is not an integer");
        }
    };
    DegreeWindow w;
    w.lo = to_int(text.substr(0, colon));
    w.hi = to_int(text.substr(colon + 1));
    if (w.lo < 1) throw parse_error("window lower bound must be at least 1");
    if (w.lo > w.hi) throw parse_error("window lower bound exceeds upper bound");
    return w;
}

}  // namespace cga

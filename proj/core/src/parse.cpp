#include "ncwitt/parse.hpp"

#include <cctype>
#include <limits>

#include "ncwitt/error.hpp"

namespace ncwitt {

namespace {

// Precedence, loosest to tightest: binary + -, then *, then unary minus,
// then ^ (whose exponent is a literal, not an expression).
class Parser {
public:
    Parser(std::string_view text, GeneratorSetPtr gens, CoefficientRing ring)
        : text_(text), gens_(std::move(gens)), ring_(std::move(ring)) {}

    FreePoly run() {
        FreePoly f = expr();
        skip_ws();
        if (!eof()) {
            throw ParseError("unexpected character '" + std::string(1, peek()) + "'",
                             pos_);
        }
        return f;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FreePoly expr() {
        FreePoly acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    FreePoly term() {
        FreePoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    FreePoly factor() {
        if (accept('-')) return -factor();
        FreePoly base = primary();
        while (accept('^')) base = pow(base, exponent());
        return base;
    }

    FreePoly primary() {
        skip_ws();
        if (eof()) throw ParseError("unexpected end of input", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            FreePoly inner = expr();
            skip_ws();
            if (eof() || peek() != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return FreePoly::constant(gens_, ring_, integer_literal());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = identifier();
            auto idx = gens_->index_of(name);
            if (!idx) {
                throw ParseError("unknown generator '" + name + "'", start);
            }
            return FreePoly::generator(gens_, ring_, *idx);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    unsigned long exponent() {
        skip_ws();
        if (!eof() && peek() == '-') {
            throw ParseError("negative exponent", pos_);
        }
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected a nonnegative integer exponent", pos_);
        }
        mpz_class e = integer_literal();
        if (!e.fits_ulong_p()) {
            throw ParseError("exponent too large", pos_);
        }
        return e.get_ui();
    }

    mpz_class integer_literal() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string identifier() {
        std::size_t start = pos_;
        ++pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    GeneratorSetPtr gens_;
    CoefficientRing ring_;
};

} // namespace

FreePoly parse(std::string_view text, GeneratorSetPtr gens, CoefficientRing ring) {
    return Parser(text, std::move(gens), std::move(ring)).run();
}

} // namespace ncwitt

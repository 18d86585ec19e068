#include "ncwitt/free_poly.hpp"

#include <sstream>
#include <utility>

#include "ncwitt/error.hpp"

namespace ncwitt {

namespace {

void require_compatible(const FreePoly& a, const FreePoly& b) {
    if (!same_generators(a.generators(), b.generators())) {
        throw MismatchError("operands use different generator sets");
    }
    if (a.ring() != b.ring()) {
        throw MismatchError("operands use different coefficient rings: " +
                            a.ring().to_string() + " vs " + b.ring().to_string());
    }
}

} // namespace

FreePoly::FreePoly(GeneratorSetPtr gens, CoefficientRing ring)
    : gens_(std::move(gens)), ring_(std::move(ring)) {
    if (!gens_) throw DomainError("null generator set");
}

FreePoly FreePoly::zero(GeneratorSetPtr gens, CoefficientRing ring) {
    return FreePoly(std::move(gens), std::move(ring));
}

FreePoly FreePoly::constant(GeneratorSetPtr gens, CoefficientRing ring,
                            const mpz_class& c) {
    FreePoly f(std::move(gens), std::move(ring));
    mpz_class v = f.ring_.normalize(c);
    if (v != 0) f.terms_.emplace(Word(), std::move(v));
    return f;
}

FreePoly FreePoly::one(GeneratorSetPtr gens, CoefficientRing ring) {
    return constant(std::move(gens), std::move(ring), 1);
}

FreePoly FreePoly::generator(GeneratorSetPtr gens, CoefficientRing ring,
                             std::size_t index) {
    return monomial(std::move(gens), std::move(ring), Word::generator(index));
}

FreePoly FreePoly::monomial(GeneratorSetPtr gens, CoefficientRing ring, Word w,
                            const mpz_class& c) {
    TermMap terms;
    terms.emplace(std::move(w), c);
    return from_terms(std::move(gens), std::move(ring), std::move(terms));
}

FreePoly FreePoly::from_terms(GeneratorSetPtr gens, CoefficientRing ring,
                              TermMap terms) {
    FreePoly f(std::move(gens), std::move(ring));
    for (auto& [w, c] : terms) {
        if (w.min_alphabet_size() > f.gens_->size()) {
            throw DomainError("word uses a generator index outside the set");
        }
        mpz_class v = f.ring_.normalize(c);
        if (v != 0) f.terms_.emplace(w, std::move(v));
    }
    return f;
}

std::size_t FreePoly::degree() const {
    // map order is degree-then-lex, so the last key is longest
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

mpz_class FreePoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

FreePoly FreePoly::operator+(const FreePoly& rhs) const {
    require_compatible(*this, rhs);
    TermMap acc = terms_;
    for (const auto& [w, c] : rhs.terms_) {
        acc[w] += c;
    }
    return from_terms(gens_, ring_, std::move(acc));
}

FreePoly FreePoly::operator-(const FreePoly& rhs) const {
    require_compatible(*this, rhs);
    TermMap acc = terms_;
    for (const auto& [w, c] : rhs.terms_) {
        acc[w] -= c;
    }
    return from_terms(gens_, ring_, std::move(acc));
}

FreePoly FreePoly::operator*(const FreePoly& rhs) const {
    require_compatible(*this, rhs);
    TermMap acc;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : rhs.terms_) {
            acc[wa * wb] += ca * cb;
        }
    }
    return from_terms(gens_, ring_, std::move(acc));
}

FreePoly FreePoly::operator-() const {
    TermMap acc;
    for (const auto& [w, c] : terms_) acc.emplace(w, -c);
    return from_terms(gens_, ring_, std::move(acc));
}

FreePoly FreePoly::scaled(const mpz_class& c) const {
    TermMap acc;
    for (const auto& [w, t] : terms_) acc.emplace(w, t * c);
    return from_terms(gens_, ring_, std::move(acc));
}

bool FreePoly::operator==(const FreePoly& rhs) const {
    return same_generators(gens_, rhs.gens_) && ring_ == rhs.ring_ &&
           terms_ == rhs.terms_;
}

FreePoly pow(const FreePoly& f, unsigned long k) {
    FreePoly result = FreePoly::one(f.generators(), f.ring());
    if (k == 0) return result;
    FreePoly base = f;
    while (true) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k == 0) break;
        base = base * base;
    }
    return result;
}

FreePoly commutator(const FreePoly& f, const FreePoly& g) {
    return f * g - g * f;
}

FreePoly reduce_mod(const FreePoly& f, const mpz_class& m) {
    if (!f.ring().is_integers()) {
        throw DomainError("reduce_mod expects integer coefficients");
    }
    return FreePoly::from_terms(f.generators(), CoefficientRing::modular(m),
                                f.terms());
}

std::string format(const FreePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        mpz_class a = c;
        bool negative = a < 0;
        if (negative) a = -a;
        std::string body;
        if (w.empty()) {
            body = a.get_str();
        } else if (a == 1) {
            body = w.to_string(f.generator_set());
        } else {
            body = a.get_str() + "*" + w.to_string(f.generator_set());
        }
        if (first) {
            out << (negative ? "-" : "") << body;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

int compare(const FreePoly& a, const FreePoly& b) {
    if (!same_generators(a.generators(), b.generators())) {
        const auto& an = a.generator_set().names();
        const auto& bn = b.generator_set().names();
        return an < bn ? -1 : 1;
    }
    if (int c = cmp(a.ring().modulus(), b.ring().modulus()); c != 0) return c;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) {
            return c < 0 ? -1 : 1;
        }
        if (int c = cmp(ia->second, ib->second); c != 0) return c;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

} // namespace ncwitt

#include "ncwitt/cuntz_deninger.hpp"

#include <utility>

#include "ncwitt/error.hpp"
#include "pow_util.hpp"

namespace ncwitt {

namespace {

void require_same_algebra(const std::vector<FreePoly>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!same_generators(v[0].generators(), v[i].generators()) ||
            !(v[0].ring() == v[i].ring())) {
            throw MismatchError("factors live over different algebras");
        }
    }
}

std::map<TeichWitness, mpz_class> drop_zeros(std::map<TeichWitness, mpz_class> combo) {
    for (auto it = combo.begin(); it != combo.end();) {
        it = it->second == 0 ? combo.erase(it) : std::next(it);
    }
    return combo;
}

GeneratorSetPtr combo_generators(const std::map<TeichWitness, mpz_class>& combo) {
    if (combo.empty()) {
        throw DomainError("an element needs at least one witness");
    }
    return combo.begin()->first.factors()[0].generators();
}

std::map<TeichWitness, mpz_class> merge(const std::map<TeichWitness, mpz_class>& a,
                                        const std::map<TeichWitness, mpz_class>& b) {
    auto combo = a;
    for (const auto& [w, c] : b) {
        combo[w] += c;
    }
    return drop_zeros(std::move(combo));
}

} // namespace

TeichWitness::TeichWitness(unsigned long shift, std::vector<FreePoly> factors)
    : shift_(shift), factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw DomainError("a witness needs at least one factor");
    }
    require_same_algebra(factors_);
}

bool TeichWitness::operator==(const TeichWitness& rhs) const {
    return shift_ == rhs.shift_ && factors_ == rhs.factors_;
}

bool TeichWitness::operator<(const TeichWitness& rhs) const {
    if (shift_ != rhs.shift_) {
        return shift_ < rhs.shift_;
    }
    if (factors_.size() != rhs.factors_.size()) {
        return factors_.size() < rhs.factors_.size();
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const int c = compare(factors_[i], rhs.factors_[i]);
        if (c != 0) {
            return c < 0;
        }
    }
    return false;
}

std::vector<FreePoly> cd_teichmuller(const FreePoly& a, std::size_t n, const mpz_class& p) {
    require_prime(p);
    if (n == 0) {
        throw DomainError("truncation length must be positive");
    }
    const unsigned long pe = detail::pow_exponent(p, 1);
    std::vector<FreePoly> out;
    out.reserve(n);
    out.push_back(a);
    for (std::size_t k = 1; k < n; ++k) {
        out.push_back(pow(out.back(), pe));
    }
    return out;
}

std::vector<FreePoly> cd_verschiebung(const std::vector<FreePoly>& v, const mpz_class& p) {
    require_prime(p);
    if (v.empty()) {
        throw DomainError("cannot shift an empty coordinate vector");
    }
    std::vector<FreePoly> out;
    out.reserve(v.size());
    out.push_back(FreePoly::zero(v[0].generators(), v[0].ring()));
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        out.push_back(v[k].scaled(p));
    }
    return out;
}

std::vector<FreePoly> realize(const TeichWitness& w, std::size_t n, const mpz_class& p) {
    require_prime(p);
    if (n == 0) {
        throw DomainError("truncation length must be positive");
    }
    const GeneratorSetPtr& gens = w.factors()[0].generators();
    const CoefficientRing& ring = w.factors()[0].ring();
    if (!ring.is_integers()) {
        throw DomainError("realization is defined over Z coefficients");
    }
    const mpz_class scale = detail::mpz_pow(p, w.shift());
    std::vector<FreePoly> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k < w.shift()) {
            out.push_back(FreePoly::zero(gens, ring));
            continue;
        }
        const unsigned long e =
            detail::pow_exponent(p, static_cast<unsigned long>(k - w.shift()));
        FreePoly prod = FreePoly::one(gens, ring);
        for (const FreePoly& a : w.factors()) {
            prod = prod * pow(a, e);
        }
        out.push_back(prod.scaled(scale));
    }
    return out;
}

XElement::XElement(mpz_class prime, std::size_t trunc, Combo combo)
    : XElement(prime, trunc, drop_zeros(std::move(combo)), GeneratorSetPtr()) {}

XElement::XElement(mpz_class prime, std::size_t trunc, Combo combo, GeneratorSetPtr gens)
    : prime_(std::move(prime)),
      trunc_(trunc),
      gens_(gens ? std::move(gens) : combo_generators(combo)),
      combo_(std::move(combo)) {
    require_prime(prime_);
    if (trunc_ == 0) {
        throw DomainError("truncation length must be positive");
    }
    realized_.reserve(trunc_);
    for (std::size_t k = 0; k < trunc_; ++k) {
        realized_.push_back(FreePoly::zero(gens_, CoefficientRing::integers()));
    }
    for (const auto& [w, c] : combo_) {
        const std::vector<FreePoly> r = realize(w, trunc_, prime_);
        for (std::size_t k = 0; k < trunc_; ++k) {
            realized_[k] = realized_[k] + r[k].scaled(c);
        }
    }
}

XElement XElement::operator+(const XElement& rhs) const {
    if (prime_ != rhs.prime_ || trunc_ != rhs.trunc_) {
        throw MismatchError("elements have different prime or truncation");
    }
    if (!same_generators(gens_, rhs.gens_)) {
        throw MismatchError("elements live over different algebras");
    }
    return XElement(prime_, trunc_, merge(combo_, rhs.combo_), gens_);
}

XElement XElement::scaled(const mpz_class& c) const {
    Combo combo;
    if (c != 0) {
        combo = combo_;
        for (auto& [w, coeff] : combo) {
            coeff *= c;
        }
    }
    return XElement(prime_, trunc_, std::move(combo), gens_);
}

bool XElement::certificate_ok() const {
    return XElement(prime_, trunc_, combo_, gens_).realized_ == realized_;
}

XElement omega_embed(const std::vector<FreePoly>& coords, const mpz_class& p) {
    if (coords.empty()) {
        throw DomainError("omega needs at least one coordinate");
    }
    for (const FreePoly& a : coords) {
        if (!a.ring().is_integers()) {
            throw DomainError("omega is defined over Z coefficients");
        }
    }
    XElement::Combo combo;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_zero()) {
            combo[TeichWitness(static_cast<unsigned long>(i), {coords[i]})] += 1;
        }
    }
    XElement x(p, coords.size(), std::move(combo), coords[0].generators());
    if (x.realized() != ghost_components(coords, p)) {
        throw InternalError("omega certificate failed to reproduce the ghost components");
    }
    return x;
}

GhostVector gamma_bar(const std::vector<FreePoly>& v, const mpz_class& p) {
    if (v.empty()) {
        throw DomainError("gamma needs at least one coordinate");
    }
    std::vector<NecklacePoly> projected;
    projected.reserve(v.size());
    for (const FreePoly& a : v) {
        projected.push_back(project(a));
    }
    return GhostVector(p, std::move(projected));
}

ESymbol::ESymbol(mpz_class prime, std::size_t trunc, Combo combo)
    : ESymbol(prime, trunc, drop_zeros(std::move(combo)), GeneratorSetPtr()) {}

ESymbol::ESymbol(mpz_class prime, std::size_t trunc, Combo combo, GeneratorSetPtr gens)
    : prime_(std::move(prime)),
      trunc_(trunc),
      gens_(gens ? std::move(gens) : combo_generators(combo)),
      combo_(std::move(combo)) {
    require_prime(prime_);
    if (trunc_ == 0) {
        throw DomainError("truncation length must be positive");
    }
}

ESymbol ESymbol::teichmuller_product(mpz_class prime, std::size_t trunc,
                                     std::vector<FreePoly> brackets) {
    Combo combo;
    combo[TeichWitness(0, std::move(brackets))] = 1;
    return ESymbol(std::move(prime), trunc, std::move(combo));
}

ESymbol ESymbol::operator+(const ESymbol& rhs) const {
    if (prime_ != rhs.prime_ || trunc_ != rhs.trunc_) {
        throw MismatchError("elements have different prime or truncation");
    }
    if (!same_generators(gens_, rhs.gens_)) {
        throw MismatchError("elements live over different algebras");
    }
    return ESymbol(prime_, trunc_, merge(combo_, rhs.combo_), gens_);
}

ESymbol verschiebung(const ESymbol& e) {
    ESymbol::Combo combo;
    for (const auto& [w, c] : e.combo_) {
        combo[TeichWitness(w.shift() + 1, w.factors())] = c;
    }
    return ESymbol(e.prime_, e.trunc_, std::move(combo), e.gens_);
}

GhostVector eta_bar(const ESymbol& e) {
    // The bracket-erasing projection [r] -> r is the identity on our stored
    // factor polynomials, so realization reuses the X-side machinery.
    std::vector<FreePoly> total;
    total.reserve(e.trunc());
    for (std::size_t k = 0; k < e.trunc(); ++k) {
        total.push_back(FreePoly::zero(e.gens_, CoefficientRing::integers()));
    }
    for (const auto& [w, c] : e.combo_) {
        const std::vector<FreePoly> r = realize(w, e.trunc(), e.prime());
        for (std::size_t k = 0; k < e.trunc(); ++k) {
            total[k] = total[k] + r[k].scaled(c);
        }
    }
    return gamma_bar(total, e.prime());
}

} // namespace ncwitt

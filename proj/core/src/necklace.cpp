#include "ncwitt/necklace.hpp"

#include <cstddef>
#include <vector>

#include "ncwitt/error.hpp"
#include "pow_util.hpp"

namespace ncwitt {

namespace {

// Booth's least-rotation scan over the doubled word. Returns the start index
// of the minimal rotation; failure links are over prefixes of the rotation.
std::size_t booth_start(const Word& w) {
    const std::size_t n = w.length();
    std::vector<unsigned char> s(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = w.letter(i);
        s[i + n] = w.letter(i);
    }
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const unsigned char sj = s[j];
        std::ptrdiff_t i = fail[j - k - 1];
        while (i != -1 && sj != s[k + static_cast<std::size_t>(i) + 1]) {
            if (sj < s[k + static_cast<std::size_t>(i) + 1]) {
                k = j - static_cast<std::size_t>(i) - 1;
            }
            i = fail[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[k]) {
            if (sj < s[k]) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k;
}

} // namespace

Word min_rotation(const Word& w) {
    if (w.length() < 2) {
        return w;
    }
    return w.rotated_left(booth_start(w));
}

NecklacePoly::NecklacePoly(GeneratorSetPtr gens, CoefficientRing ring)
    : poly_(FreePoly::zero(std::move(gens), std::move(ring))) {}

NecklacePoly NecklacePoly::zero(GeneratorSetPtr gens, CoefficientRing ring) {
    return NecklacePoly(std::move(gens), std::move(ring));
}

NecklacePoly NecklacePoly::operator+(const NecklacePoly& rhs) const {
    // Canonical keys are closed under addition, so no re-projection is needed.
    return NecklacePoly(poly_ + rhs.poly_);
}

NecklacePoly NecklacePoly::operator-(const NecklacePoly& rhs) const {
    return NecklacePoly(poly_ - rhs.poly_);
}

NecklacePoly NecklacePoly::operator-() const {
    return NecklacePoly(-poly_);
}

NecklacePoly NecklacePoly::scaled(const mpz_class& c) const {
    return NecklacePoly(poly_.scaled(c));
}

NecklacePoly project(const FreePoly& f) {
    FreePoly::TermMap canonical;
    for (const auto& [word, coeff] : f.terms()) {
        canonical[min_rotation(word)] += coeff;
    }
    return NecklacePoly(
        FreePoly::from_terms(f.generators(), f.ring(), std::move(canonical)));
}

bool necklace_eq(const FreePoly& f, const FreePoly& g) {
    return project(f - g).is_zero();
}

NecklacePoly reduce_mod(const NecklacePoly& f, const mpz_class& m) {
    // Canonical keys survive reduction (only coefficients change or vanish).
    return NecklacePoly(reduce_mod(f.poly_, m));
}

NecklacePoly frobenius_p(const NecklacePoly& f, const mpz_class& p) {
    require_prime(p);
    if (!f.ring().is_modular() || f.ring().modulus() != p) {
        throw DomainError("frobenius_p requires coefficients in Z/" + p.get_str());
    }
    const unsigned long e = detail::pow_exponent(p, 1);
    return project(pow(f.representative(), e));
}

std::string format(const NecklacePoly& f) {
    return format(f.representative());
}

} // namespace ncwitt

#include "ncwitt/witt.hpp"

#include <utility>

#include "ncwitt/error.hpp"

namespace ncwitt {

WittVector::WittVector(mpz_class prime, std::vector<FreePoly> coords)
    : prime_(std::move(prime)), coords_(std::move(coords)) {
    require_prime(prime_);
    if (coords_.empty()) {
        throw DomainError("a Witt vector needs at least one coordinate");
    }
    for (const FreePoly& a : coords_) {
        if (!a.ring().is_integers()) {
            throw DomainError("Witt coordinates must have Z coefficients");
        }
        if (!same_generators(a.generators(), coords_[0].generators())) {
            throw MismatchError("Witt coordinates live over different algebras");
        }
    }
}

WittVector teichmuller(const FreePoly& a, std::size_t n, const mpz_class& p) {
    if (n == 0) {
        throw DomainError("truncation length must be positive");
    }
    std::vector<FreePoly> coords;
    coords.reserve(n);
    coords.push_back(a);
    for (std::size_t i = 1; i < n; ++i) {
        coords.push_back(FreePoly::zero(a.generators(), a.ring()));
    }
    return WittVector(p, std::move(coords));
}

WittVector verschiebung(const WittVector& w) {
    std::vector<FreePoly> coords;
    coords.reserve(w.size());
    coords.push_back(FreePoly::zero(w[0].generators(), w[0].ring()));
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        coords.push_back(w[i]);
    }
    return WittVector(w.prime(), std::move(coords));
}

GhostVector ghost_image(const WittVector& w) {
    return ghost_map(w.coords(), w.prime());
}

bool witt_eq(const WittVector& a, const WittVector& b) {
    if (a.prime() != b.prime() || a.size() != b.size()) {
        throw MismatchError("Witt vectors have different prime or length");
    }
    return ghost_image(a) == ghost_image(b);
}

} // namespace ncwitt

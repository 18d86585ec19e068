#include "ncwitt/ghost.hpp"

#include <utility>

#include "ncwitt/error.hpp"
#include "pow_util.hpp"

namespace ncwitt {

GhostVector::GhostVector(mpz_class prime, std::vector<NecklacePoly> coords)
    : prime_(std::move(prime)), coords_(std::move(coords)) {
    require_prime(prime_);
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (!same_generators(coords_[0].generators(), coords_[i].generators()) ||
            !(coords_[0].ring() == coords_[i].ring())) {
            throw MismatchError("ghost coordinates live over different algebras");
        }
    }
}

GhostVector GhostVector::operator+(const GhostVector& rhs) const {
    if (prime_ != rhs.prime_ || size() != rhs.size()) {
        throw MismatchError("ghost vectors have different prime or length");
    }
    std::vector<NecklacePoly> sum;
    sum.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        sum.push_back(coords_[i] + rhs.coords_[i]);
    }
    return GhostVector(prime_, std::move(sum));
}

GhostVector GhostVector::operator-(const GhostVector& rhs) const {
    if (prime_ != rhs.prime_ || size() != rhs.size()) {
        throw MismatchError("ghost vectors have different prime or length");
    }
    std::vector<NecklacePoly> diff;
    diff.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        diff.push_back(coords_[i] - rhs.coords_[i]);
    }
    return GhostVector(prime_, std::move(diff));
}

bool GhostVector::operator==(const GhostVector& rhs) const {
    return prime_ == rhs.prime_ && coords_ == rhs.coords_;
}

std::vector<FreePoly> ghost_components(const std::vector<FreePoly>& coords,
                                       const mpz_class& p) {
    require_prime(p);
    if (coords.empty()) {
        throw DomainError("ghost components need at least one coordinate");
    }
    for (const FreePoly& a : coords) {
        if (!a.ring().is_integers()) {
            throw DomainError("ghost components are defined over Z coefficients");
        }
    }
    std::vector<FreePoly> out;
    out.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        FreePoly w = FreePoly::zero(coords[0].generators(), coords[0].ring());
        for (std::size_t j = 0; j <= i; ++j) {
            const unsigned long e = detail::pow_exponent(p, static_cast<unsigned long>(i - j));
            w = w + pow(coords[j], e).scaled(detail::mpz_pow(p, static_cast<unsigned long>(j)));
        }
        out.push_back(std::move(w));
    }
    return out;
}

GhostVector ghost_map(const std::vector<FreePoly>& coords, const mpz_class& p) {
    std::vector<FreePoly> raw = ghost_components(coords, p);
    std::vector<NecklacePoly> projected;
    projected.reserve(raw.size());
    for (const FreePoly& w : raw) {
        projected.push_back(project(w));
    }
    return GhostVector(p, std::move(projected));
}

IntWittVector::IntWittVector(mpz_class prime, std::vector<mpz_class> coords)
    : prime_(std::move(prime)), coords_(std::move(coords)) {
    require_prime(prime_);
    if (coords_.empty()) {
        throw DomainError("a Witt vector needs at least one coordinate");
    }
}

std::vector<mpz_class> ghost_components_int(const IntWittVector& a) {
    std::vector<mpz_class> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class w = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            mpz_class term;
            mpz_pow_ui(term.get_mpz_t(), a[j].get_mpz_t(),
                       detail::pow_exponent(a.prime(), static_cast<unsigned long>(i - j)));
            w += detail::mpz_pow(a.prime(), static_cast<unsigned long>(j)) * term;
        }
        out.push_back(std::move(w));
    }
    return out;
}

IntWittVector ghost_inverse_int(const std::vector<mpz_class>& w, const mpz_class& p) {
    require_prime(p);
    if (w.empty()) {
        throw DomainError("ghost inverse needs at least one component");
    }
    std::vector<mpz_class> a;
    a.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        mpz_class rest = 0;
        for (std::size_t j = 0; j < i; ++j) {
            mpz_class term;
            mpz_pow_ui(term.get_mpz_t(), a[j].get_mpz_t(),
                       detail::pow_exponent(p, static_cast<unsigned long>(i - j)));
            rest += detail::mpz_pow(p, static_cast<unsigned long>(j)) * term;
        }
        const mpz_class num = w[i] - rest;
        const mpz_class den = detail::mpz_pow(p, static_cast<unsigned long>(i));
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
            throw NotInImageError("ghost component " + std::to_string(i) +
                                      " is not in the image of the ghost map",
                                  i);
        }
        a.push_back(num / den);
    }
    return IntWittVector(p, std::move(a));
}

namespace {

IntWittVector from_ghost_sum(const IntWittVector& a, const IntWittVector& b, bool multiply) {
    if (a.prime() != b.prime() || a.size() != b.size()) {
        throw MismatchError("Witt vectors have different prime or length");
    }
    std::vector<mpz_class> wa = ghost_components_int(a);
    std::vector<mpz_class> wb = ghost_components_int(b);
    std::vector<mpz_class> w;
    w.reserve(wa.size());
    for (std::size_t i = 0; i < wa.size(); ++i) {
        w.push_back(multiply ? mpz_class(wa[i] * wb[i]) : mpz_class(wa[i] + wb[i]));
    }
    // The ring operations land in the image of the ghost map over Z, so a
    // failed exact division can only mean a bug on our side.
    try {
        return ghost_inverse_int(w, a.prime());
    } catch (const NotInImageError& e) {
        throw InternalError(std::string("Witt ring operation left the ghost image: ") +
                            e.what());
    }
}

} // namespace

IntWittVector witt_add_int(const IntWittVector& a, const IntWittVector& b) {
    return from_ghost_sum(a, b, /*multiply=*/false);
}

IntWittVector witt_mul_int(const IntWittVector& a, const IntWittVector& b) {
    return from_ghost_sum(a, b, /*multiply=*/true);
}

} // namespace ncwitt

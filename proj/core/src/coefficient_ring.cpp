#include "ncwitt/coefficient_ring.hpp"

#include "ncwitt/error.hpp"

namespace ncwitt {

CoefficientRing CoefficientRing::modular(mpz_class m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    return CoefficientRing(std::move(m));
}

mpz_class CoefficientRing::normalize(mpz_class c) const {
    if (is_integers()) return c;
    mpz_class r;
    mpz_mod(r.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
    return r;
}

std::string CoefficientRing::to_string() const {
    return is_integers() ? "Z" : "Z/" + modulus_.get_str();
}

bool is_prime(const mpz_class& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

void require_prime(const mpz_class& p) {
    if (!is_prime(p)) {
        throw DomainError(p.get_str() + " is not prime");
    }
}

} // namespace ncwitt

#pragma once

#include <gmpxx.h>

#include "ncwitt/error.hpp"

namespace ncwitt::detail {

inline mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), e);
    return v;
}

// p^e as a machine exponent for square-and-multiply; rejects requests that
// could never fit in memory anyway.
inline unsigned long pow_exponent(const mpz_class& p, unsigned long e) {
    mpz_class v = mpz_pow(p, e);
    if (!v.fits_ulong_p()) {
        throw DomainError("prime power " + p.get_str() + "^" + std::to_string(e) +
                          " is too large for an exponent");
    }
    return v.get_ui();
}

} // namespace ncwitt::detail

#pragma once

#include <gmpxx.h>

#include <string>

namespace ncwitt {

/// The coefficient domain: ℤ, or ℤ/m for a fixed m ≥ 2.
///
/// Integer coefficients are arbitrary precision; modular residues are kept
/// normalized to [0, m). Mixed-ring arithmetic is an error, never a coercion
/// (the one documented exception is evaluating an integer polynomial into a
/// modular matrix ring).
class CoefficientRing {
public:
    static CoefficientRing integers() { return CoefficientRing(0); }
    static CoefficientRing modular(mpz_class m); // throws DomainError if m < 2

    bool is_integers() const { return modulus_ == 0; }
    bool is_modular() const { return modulus_ != 0; }

    /// 0 denotes ℤ.
    const mpz_class& modulus() const { return modulus_; }

    /// Identity over ℤ; reduction into [0, m) otherwise.
    mpz_class normalize(mpz_class c) const;

    bool operator==(const CoefficientRing&) const = default;

    std::string to_string() const; // "Z" or "Z/m"

private:
    explicit CoefficientRing(mpz_class m) : modulus_(std::move(m)) {}

    mpz_class modulus_;
};

/// Exact for small values, BPSW + Miller-Rabin above word size.
bool is_prime(const mpz_class& p);

/// Throws DomainError when p is not prime.
void require_prime(const mpz_class& p);

} // namespace ncwitt

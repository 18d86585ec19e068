#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ncwitt/free_poly.hpp"
#include "ncwitt/necklace.hpp"

namespace ncwitt {

/// An element of (A/[A,A])^n at a fixed prime: the common target of the
/// ghost maps. Componentwise addition makes these an additive group.
class GhostVector {
public:
    GhostVector(mpz_class prime, std::vector<NecklacePoly> coords);

    const mpz_class& prime() const { return prime_; }
    std::size_t size() const { return coords_.size(); }
    const std::vector<NecklacePoly>& coords() const { return coords_; }
    const NecklacePoly& operator[](std::size_t i) const { return coords_.at(i); }

    GhostVector operator+(const GhostVector& rhs) const;
    GhostVector operator-(const GhostVector& rhs) const;

    bool operator==(const GhostVector& rhs) const;

private:
    mpz_class prime_;
    std::vector<NecklacePoly> coords_;
};

/// The ghost polynomials of a coordinate tuple, before any quotient:
///   w_i = a_0^{p^i} + p a_1^{p^{i-1}} + p^2 a_2^{p^{i-2}} + ... + p^i a_i.
/// Exact, over ℤ only (the p^i scalars need torsion-free coefficients).
std::vector<FreePoly> ghost_components(const std::vector<FreePoly>& coords,
                                       const mpz_class& p);

/// Ghost components followed by the necklace projection.
GhostVector ghost_map(const std::vector<FreePoly>& coords, const mpz_class& p);

/// A p-typical Witt vector over ℤ: exact integer coordinates.
class IntWittVector {
public:
    IntWittVector(mpz_class prime, std::vector<mpz_class> coords);

    const mpz_class& prime() const { return prime_; }
    std::size_t size() const { return coords_.size(); }
    const std::vector<mpz_class>& coords() const { return coords_; }
    const mpz_class& operator[](std::size_t i) const { return coords_.at(i); }

    bool operator==(const IntWittVector& rhs) const = default;

private:
    mpz_class prime_;
    std::vector<mpz_class> coords_;
};

/// Integer ghost components of a.
std::vector<mpz_class> ghost_components_int(const IntWittVector& a);

/// Exact inverse of the integer ghost map on its image, by successive exact
/// division a_i = (w_i - sum_{j<i} p^j a_j^{p^{i-j}}) / p^i.
/// Throws NotInImageError (with the failing index) when a division is inexact.
IntWittVector ghost_inverse_int(const std::vector<mpz_class>& w, const mpz_class& p);

/// Classical Witt-vector sum over ℤ: invert the componentwise ghost sum.
/// Total on integer inputs; an inexact division here is a library bug and
/// surfaces as InternalError, never NotInImageError.
IntWittVector witt_add_int(const IntWittVector& a, const IntWittVector& b);

/// Classical Witt-vector product over ℤ, via the componentwise ghost product.
IntWittVector witt_mul_int(const IntWittVector& a, const IntWittVector& b);

} // namespace ncwitt

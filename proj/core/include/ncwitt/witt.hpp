#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ncwitt/free_poly.hpp"
#include "ncwitt/ghost.hpp"

namespace ncwitt {

/// A truncated Witt vector of a (possibly non-commutative) ring, represented
/// by a coordinate tuple over ℤ.
///
/// Coordinates are one chosen preimage; every semantic operation goes through
/// the ghost image. Ghost-based equality is genuine equality exactly when
/// A/[A,A] is p-torsion free, which holds for free algebras (the quotient is
/// a free module on necklaces) - hence the integer-coefficient restriction.
class WittVector {
public:
    WittVector(mpz_class prime, std::vector<FreePoly> coords);

    const mpz_class& prime() const { return prime_; }
    std::size_t size() const { return coords_.size(); }
    const std::vector<FreePoly>& coords() const { return coords_; }
    const FreePoly& operator[](std::size_t i) const { return coords_.at(i); }

private:
    mpz_class prime_;
    std::vector<FreePoly> coords_;
};

/// (a, 0, ..., 0) of length n.
WittVector teichmuller(const FreePoly& a, std::size_t n, const mpz_class& p);

/// Coordinate right-shift (0, a_0, ..., a_{n-2}); the last coordinate drops
/// at fixed truncation, consistent with the restriction W_{n+1} -> W_n.
WittVector verschiebung(const WittVector& w);

/// The ghost map of the coordinates.
GhostVector ghost_image(const WittVector& w);

/// Equality in W_n(A): equality of ghost images.
bool witt_eq(const WittVector& a, const WittVector& b);

} // namespace ncwitt
